#pragma once

// Shared fixtures and independent oracles for the test suite. The count
// formula below is computed from binomials only, on purpose: it must not
// share anything with the arrangement builder it cross-checks.

#include <initializer_list>
#include <vector>

#include "zonelab/arrangement.hpp"
#include "zonelab/convex_body.hpp"

namespace zonelab::testsupport {

inline RatVec v(std::initializer_list<long> xs) {
  RatVec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

inline Hyperplane h(std::initializer_list<long> normal, long offset) {
  return Hyperplane(v(normal), Rat(offset));
}

// Expected number of k-faces of a simple arrangement of n hyperplanes in
// R^d: C(n, d-k) * sum_{j<=k} C(n-d+k, j).
inline Int simple_face_count(int n, int d, int k) {
  auto binom = [](long a, long b) {
    Int r;
    if (b < 0 || a < 0 || b > a) return Int(0);
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
                 static_cast<unsigned long>(b));
    return r;
  };
  Int sum = 0;
  for (int j = 0; j <= k; ++j) sum += binom(n - d + k, j);
  return Int(binom(n, d - k) * sum);
}

// The two coordinate axes in the plane.
inline std::vector<Hyperplane> axes2() {
  return {h({1, 0}, 0), h({0, 1}, 0)};
}

// The worked planar instance used across the suite:
// H = {x=0, y=0}, K = [1,2] x [-3,3].
inline ConvexBody side_box() {
  return ConvexBody::axis_box(v({1, -3}), v({2, 3}));
}

}  // namespace zonelab::testsupport
