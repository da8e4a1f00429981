#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "zonelab/chart.hpp"
#include "zonelab/hyperplane.hpp"
#include "zonelab/sign_vector.hpp"

namespace zonelab {

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A relatively open face of the arrangement, identified by its sign
// vector. The witness is an exact point in the relative interior; dim is
// the ambient dimension minus the rank of the normals at ZERO positions.
struct Face {
  SignVector signs;
  int dim = 0;
  RatVec witness;
};

// The full face lattice of A(H), faces keyed by sign vector. Incidence is
// combinatorial: f is a subface of g iff their sign vectors conform.
class Arrangement {
 public:
  Arrangement(std::vector<Hyperplane> hyperplanes, int dim,
              std::vector<Face> faces);

  int dim() const { return dim_; }
  int hyperplane_count() const { return static_cast<int>(hyperplanes_.size()); }
  std::span<const Hyperplane> hyperplanes() const { return hyperplanes_; }

  // Sorted by (dim, sign vector); stable across runs.
  std::span<const Face> faces() const { return faces_; }
  const Face* find(const SignVector& signs) const;
  bool is_cell(const Face& f) const { return f.dim == dim_; }

  std::vector<long> face_counts() const;  // indexed by dimension 0..d
  std::vector<int> faces_of_dim(int k) const;  // indices into faces()

  // EQ constraints of the ZERO positions of f.
  std::vector<LinearConstraint> flat_equations(const Face& f) const;
  // Full open-face description: EQ at zeros, strict halfspaces elsewhere.
  std::vector<LinearConstraint> face_constraints(const Face& f) const;

  // Indices of the cells whose closure contains f.
  std::vector<int> incident_cells(const Face& f) const;

  // f is contained in the closure of g. Throws if either face does not
  // belong to this arrangement.
  bool is_subface(const Face& f, const Face& g) const;

  // One face per line, "dim;signs;witness", lexicographically sorted;
  // byte-stable for golden-file comparisons.
  std::string canonical_dump() const;

 private:
  void require_member(const Face& f) const;

  std::vector<Hyperplane> hyperplanes_;
  int dim_;
  std::vector<Face> faces_;
  std::map<std::string, int> index_;  // sign chars -> index in faces_
};

// Constructs every nonempty face of A(H) by recursing into each
// hyperplane's induced (d-1)-arrangement and extending facet sign vectors
// to the cells on both sides. Works for degenerate inputs too; duplicate
// hyperplanes (canonical-form equality) are rejected.
Arrangement build_arrangement(std::vector<Hyperplane> hyperplanes, int dim);

struct OracleResult {
  std::vector<SignVector> realizable;  // sorted
  std::vector<long> counts;            // per dimension 0..d
};

// Exhaustive 3^n sweep deciding realizability of every sign vector with
// the feasibility solver alone. Independent of build_arrangement by
// construction; refuses n > 8.
OracleResult enumerate_faces_oracle(std::span<const Hyperplane> hyperplanes,
                                    int dim);

}  // namespace zonelab
