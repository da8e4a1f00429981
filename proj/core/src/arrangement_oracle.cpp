#include <algorithm>

#include "zonelab/arrangement.hpp"
#include "zonelab/solve.hpp"

// Brute-force realizability sweep used to cross-check the recursive
// builder. Deliberately shares nothing with it beyond the solver layer.

namespace zonelab {

OracleResult enumerate_faces_oracle(std::span<const Hyperplane> hyperplanes,
                                    int dim) {
  const int n = static_cast<int>(hyperplanes.size());
  if (n > 8)
    throw BudgetError("oracle sweep refuses n > 8 (3^n candidates)");
  for (const auto& h : hyperplanes)
    if (h.dim() != dim)
      throw MalformedInputError("hyperplane dimension mismatch");

  OracleResult out;
  out.counts.assign(static_cast<size_t>(dim) + 1, 0);

  std::string sv(static_cast<size_t>(n), '-');
  const char symbols[3] = {'-', '0', '+'};
  std::vector<int> odometer(static_cast<size_t>(n), 0);
  while (true) {
    for (int i = 0; i < n; ++i)
      sv[static_cast<size_t>(i)] = symbols[odometer[static_cast<size_t>(i)]];

    SignVector signs(sv);
    std::vector<LinearConstraint> cs;
    cs.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      cs.push_back(hyperplanes[static_cast<size_t>(i)].side_constraint(
          signs.at(i)));
    if (feasible(cs, dim)) {
      std::vector<RatVec> normals;
      for (int i : signs.zero_positions())
        normals.push_back(hyperplanes[static_cast<size_t>(i)].normal());
      ++out.counts[static_cast<size_t>(dim - rank(normals, dim))];
      out.realizable.push_back(std::move(signs));
    }

    int pos = 0;
    while (pos < n && ++odometer[static_cast<size_t>(pos)] == 3)
      odometer[static_cast<size_t>(pos++)] = 0;
    if (pos == n) break;
  }
  std::sort(out.realizable.begin(), out.realizable.end());
  return out;
}

}  // namespace zonelab
