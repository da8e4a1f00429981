#include "zonelab/rational.hpp"

#include <cassert>
#include <stdexcept>

namespace zonelab {

Rat rat_from_string(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  for (char c : text) {
    if (c != '-' && c != '/' && (c < '0' || c > '9'))
      throw std::invalid_argument("bad rational literal: " + std::string(text));
  }
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), std::string(text).c_str(), 10) != 0)
    throw std::invalid_argument("bad rational literal: " + std::string(text));
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator: " + std::string(text));
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& value) { return value.get_str(); }

Rat frac(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string vec_to_string(std::span<const Rat> v, char sep) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out.push_back(sep);
    out += rat_to_string(v[i]);
  }
  return out;
}

RatVec vec_from_string(std::string_view text, char sep) {
  RatVec out;
  if (text.empty()) return out;
  size_t start = 0;
  while (true) {
    size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(rat_from_string(text.substr(start)));
      break;
    }
    out.push_back(rat_from_string(text.substr(start, pos - start)));
    start = pos + 1;
  }
  return out;
}

Rat dot(std::span<const Rat> a, std::span<const Rat> b) {
  assert(a.size() == b.size());
  Rat acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

bool is_zero_vec(std::span<const Rat> v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

RatVec zero_vec(int dim) { return RatVec(static_cast<size_t>(dim), Rat(0)); }

}  // namespace zonelab
