#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zonelab {

// Exact arbitrary-precision rational. GMP keeps values in lowest terms
// with a positive denominator once canonicalized; every constructor in
// this project goes through rat_from_string / Rat(long) so that holds
// everywhere.
using Rat = mpq_class;
using Int = mpz_class;

using RatVec = std::vector<Rat>;

// Parses "p/q" or "p" (optional leading '-'). Throws std::invalid_argument
// on anything else, including a zero denominator.
Rat rat_from_string(std::string_view text);

// num/den in canonical form. Prefer this over the raw two-argument
// mpq_class constructor, which does not canonicalize and whose results
// break GMP comparisons.
Rat frac(long num, long den);

// Renders integers as "5", other values as "p/q" with q > 0.
std::string rat_to_string(const Rat& value);

std::string vec_to_string(std::span<const Rat> v, char sep = ',');
RatVec vec_from_string(std::string_view text, char sep = ',');

Rat dot(std::span<const Rat> a, std::span<const Rat> b);
bool is_zero_vec(std::span<const Rat> v);
RatVec zero_vec(int dim);

}  // namespace zonelab
