#include "zonelab/chart.hpp"

#include <algorithm>
#include <cassert>

namespace zonelab {

RatVec Chart::to_ambient(std::span<const Rat> local) const {
  assert(static_cast<int>(local.size()) == local_dim());
  RatVec x = origin;
  for (size_t j = 0; j < basis.size(); ++j)
    for (size_t i = 0; i < x.size(); ++i) x[i] += local[j] * basis[j][i];
  return x;
}

RatVec Chart::to_local(std::span<const Rat> ambient) const {
  // Solve basis * y = ambient - origin; consistent whenever the point
  // lies on the charted hyperplane.
  const int d = ambient_dim();
  const int k = local_dim();
  std::vector<LinearConstraint> rows;
  rows.reserve(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    RatVec coeff(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) coeff[static_cast<size_t>(j)] = basis[j][i];
    rows.push_back(eq(std::move(coeff), ambient[i] - origin[i]));
  }
  auto sol = solve_affine_system(rows, k);
  if (!sol || sol->dim != 0)
    throw MalformedInputError("point is not on the charted hyperplane");
  return sol->point;
}

Chart chart_of(const Hyperplane& h) {
  const int d = h.dim();
  int pivot = 0;
  while (h.normal()[pivot] == 0) ++pivot;
  const Rat& np = h.normal()[pivot];

  Chart chart;
  chart.origin = zero_vec(d);
  chart.origin[pivot] = h.offset() / np;
  for (int i = 0; i < d; ++i) {
    if (i == pivot) continue;
    RatVec v = zero_vec(d);
    v[i] = 1;
    v[pivot] = -h.normal()[i] / np;
    chart.basis.push_back(std::move(v));
  }
  return chart;
}

Restriction restrict_to_hyperplane(std::span<const Hyperplane> hyperplanes,
                                   const Hyperplane& h) {
  if (std::find(hyperplanes.begin(), hyperplanes.end(), h) ==
      hyperplanes.end())
    throw MalformedInputError("hyperplane is not part of the instance");

  Restriction out;
  out.chart = chart_of(h);
  for (const auto& other : hyperplanes) {
    if (other == h) continue;
    LinearConstraint induced =
        substitute_affine(other.as_equation(), out.chart.origin,
                          out.chart.basis);
    if (is_zero_vec(induced.coeffs))
      throw DegenerateRestrictionError(
          "hyperplane parallel or equal to the restriction hyperplane: " +
          other.to_string());
    out.induced.emplace_back(std::move(induced.coeffs),
                             std::move(induced.rhs));
  }
  return out;
}

}  // namespace zonelab
