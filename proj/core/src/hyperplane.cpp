#include "zonelab/hyperplane.hpp"

namespace zonelab {

Hyperplane::Hyperplane(RatVec normal, Rat offset)
    : normal_(std::move(normal)), offset_(std::move(offset)) {
  if (is_zero_vec(normal_))
    throw MalformedInputError("hyperplane normal must be nonzero");

  // Scale so all entries are coprime integers.
  Int lcm = 1;
  for (const Rat& x : normal_) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                                       x.get_den().get_mpz_t());
  mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), offset_.get_den().get_mpz_t());
  Rat scale(lcm);
  Int gcd = 0;
  for (const Rat& x : normal_) {
    Int v = Rat(x * scale).get_num();
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), v.get_mpz_t());
  }
  Int voff = Rat(offset_ * scale).get_num();
  mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), voff.get_mpz_t());
  scale /= Rat(gcd);

  for (const Rat& x : normal_) {
    if (x != 0) {
      if (x < 0) scale = -scale;
      break;
    }
  }
  for (Rat& x : normal_) x *= scale;
  offset_ *= scale;
}

Rat Hyperplane::evaluate(std::span<const Rat> point) const {
  return dot(normal_, point) - offset_;
}

Sign Hyperplane::side_of(std::span<const Rat> point) const {
  Rat v = evaluate(point);
  if (v == 0) return Sign::Zero;
  return v > 0 ? Sign::Plus : Sign::Minus;
}

LinearConstraint Hyperplane::side_constraint(Sign side) const {
  switch (side) {
    case Sign::Zero: return as_equation();
    case Sign::Plus: return gt(normal_, offset_);
    case Sign::Minus: {
      RatVec neg = normal_;
      for (Rat& x : neg) x = -x;
      return gt(std::move(neg), -offset_);
    }
  }
  throw MalformedInputError("bad sign");
}

std::strong_ordering Hyperplane::operator<=>(const Hyperplane& other) const {
  for (size_t i = 0; i < std::min(normal_.size(), other.normal_.size()); ++i) {
    int c = cmp(normal_[i], other.normal_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less
                             : std::strong_ordering::greater;
  }
  if (normal_.size() != other.normal_.size())
    return normal_.size() < other.normal_.size()
               ? std::strong_ordering::less
               : std::strong_ordering::greater;
  int c = cmp(offset_, other.offset_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Hyperplane::to_string() const {
  return "(" + vec_to_string(normal_) + ")=" + rat_to_string(offset_);
}

}  // namespace zonelab
