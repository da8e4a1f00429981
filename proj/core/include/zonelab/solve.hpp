#pragma once

#include <optional>
#include <span>
#include <vector>

#include "zonelab/linear.hpp"

namespace zonelab {

// Solution set of a system of EQ constraints in R^dim, described as
// x = point + span(basis). basis has exactly `dim` independent vectors.
struct AffineSubspace {
  int dim = 0;
  RatVec point;
  std::vector<RatVec> basis;
};

// Exact Gaussian elimination over the rationals. Returns std::nullopt when
// the system is inconsistent. Only EQ constraints are accepted.
std::optional<AffineSubspace> solve_affine_system(
    std::span<const LinearConstraint> equalities, int dim);

// Rank of a family of vectors in R^dim.
int rank(std::span<const RatVec> vectors, int dim);

// Rewrites a constraint on x under the substitution x = point + B y.
LinearConstraint substitute_affine(const LinearConstraint& c,
                                   std::span<const Rat> point,
                                   std::span<const RatVec> basis);

struct Feasibility {
  bool ok = false;
  RatVec witness;  // satisfies every constraint, including strict ones

  explicit operator bool() const { return ok; }
};

// Exact feasibility for mixed EQ / GE / GT systems. Equalities are
// eliminated first; strict inequalities are handled by the max-t
// homogenization (a.x > b becomes a.x - t >= b, t <= 1, maximize t;
// the system is feasible iff the optimum t is positive). No epsilons,
// no floating point.
Feasibility feasible(std::span<const LinearConstraint> constraints, int dim);

}  // namespace zonelab
