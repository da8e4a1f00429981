#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "zonelab/hyperplane.hpp"
#include "zonelab/solve.hpp"

namespace zonelab {

struct DegenerateRestrictionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact affine parametrization of a hyperplane h in R^d:
// x = origin + basis * y with y in R^{d-1}. Maps points both ways with
// no rounding, so restricted instances can be lifted back.
struct Chart {
  RatVec origin;
  std::vector<RatVec> basis;  // d-1 independent direction vectors

  int ambient_dim() const { return static_cast<int>(origin.size()); }
  int local_dim() const { return static_cast<int>(basis.size()); }

  RatVec to_ambient(std::span<const Rat> local) const;
  RatVec to_local(std::span<const Rat> ambient) const;  // requires x on h
};

Chart chart_of(const Hyperplane& h);

struct Restriction {
  std::vector<Hyperplane> induced;  // in d-1 local coordinates
  Chart chart;
};

// Views H minus h inside h, as a (d-1)-dimensional instance. Requires every
// other hyperplane to meet h transversally; a parallel or coincident
// hyperplane raises DegenerateRestrictionError.
Restriction restrict_to_hyperplane(std::span<const Hyperplane> hyperplanes,
                                   const Hyperplane& h);

}  // namespace zonelab
