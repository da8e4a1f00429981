#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zonelab/rational.hpp"

namespace zonelab {

struct MalformedInputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Relation of a linear constraint a.x REL b.
enum class Rel { EQ, GE, GT };

// a.x = b / a.x >= b / a.x > b over exact rationals. An all-zero
// coefficient vector is legal; such a constraint is trivially decidable
// and the solvers treat it as a TRUE/FALSE sentinel instead of feeding
// it through elimination.
struct LinearConstraint {
  RatVec coeffs;
  Rat rhs;
  Rel rel = Rel::GE;

  LinearConstraint() = default;
  LinearConstraint(RatVec c, Rat b, Rel r)
      : coeffs(std::move(c)), rhs(std::move(b)), rel(r) {}

  int dim() const { return static_cast<int>(coeffs.size()); }
  bool trivial() const { return is_zero_vec(coeffs); }

  // For a trivial (all-zero) constraint: whether it holds.
  bool trivially_true() const {
    switch (rel) {
      case Rel::EQ: return rhs == 0;
      case Rel::GE: return rhs <= 0;
      case Rel::GT: return rhs < 0;
    }
    return false;
  }

  bool satisfied_by(std::span<const Rat> point) const {
    if (static_cast<int>(point.size()) != dim())
      throw MalformedInputError("constraint/point dimension mismatch");
    Rat lhs = dot(coeffs, point);
    switch (rel) {
      case Rel::EQ: return lhs == rhs;
      case Rel::GE: return lhs >= rhs;
      case Rel::GT: return lhs > rhs;
    }
    return false;
  }

  // a.x >= b scaled by a positive rational keeps the same solution set.
  LinearConstraint scaled(const Rat& factor) const;

  std::string to_string() const;
};

bool all_satisfied(std::span<const LinearConstraint> cs,
                   std::span<const Rat> point);

inline LinearConstraint eq(RatVec c, Rat b) {
  return {std::move(c), std::move(b), Rel::EQ};
}
inline LinearConstraint ge(RatVec c, Rat b) {
  return {std::move(c), std::move(b), Rel::GE};
}
inline LinearConstraint gt(RatVec c, Rat b) {
  return {std::move(c), std::move(b), Rel::GT};
}

// a.x < b and a.x <= b, stored in the >=/> normal form.
LinearConstraint lt(RatVec c, const Rat& b);
LinearConstraint le(RatVec c, const Rat& b);

}  // namespace zonelab
