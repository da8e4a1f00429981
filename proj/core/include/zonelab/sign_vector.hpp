#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "zonelab/hyperplane.hpp"

namespace zonelab {

// One entry per hyperplane, recording a point's side. Stored as the
// characters '-', '0', '+' so a sign vector is directly printable and
// lexicographically comparable.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::string chars);
  static SignVector of_point(std::span<const Hyperplane> hyperplanes,
                             std::span<const Rat> point);

  int size() const { return static_cast<int>(chars_.size()); }
  Sign at(int i) const;
  void set(int i, Sign s);

  std::vector<int> zero_positions() const;
  int zero_count() const;

  const std::string& str() const { return chars_; }

  auto operator<=>(const SignVector&) const = default;

 private:
  std::string chars_;
};

// f lies in the closure of g iff f agrees with g wherever f is nonzero.
bool conforms(const SignVector& f, const SignVector& g);

inline SignVector::SignVector(std::string chars) : chars_(std::move(chars)) {
  for (char c : chars_)
    if (c != '-' && c != '0' && c != '+')
      throw MalformedInputError("bad sign character");
}

inline SignVector SignVector::of_point(std::span<const Hyperplane> hyperplanes,
                                       std::span<const Rat> point) {
  std::string s;
  s.reserve(hyperplanes.size());
  for (const auto& h : hyperplanes) s.push_back(sign_char(h.side_of(point)));
  return SignVector(std::move(s));
}

inline Sign SignVector::at(int i) const {
  char c = chars_.at(static_cast<size_t>(i));
  return c == '-' ? Sign::Minus : (c == '0' ? Sign::Zero : Sign::Plus);
}

inline void SignVector::set(int i, Sign s) {
  chars_.at(static_cast<size_t>(i)) = sign_char(s);
}

inline std::vector<int> SignVector::zero_positions() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (chars_[static_cast<size_t>(i)] == '0') out.push_back(i);
  return out;
}

inline int SignVector::zero_count() const {
  return static_cast<int>(zero_positions().size());
}

inline bool conforms(const SignVector& f, const SignVector& g) {
  if (f.size() != g.size())
    throw MalformedInputError("sign vectors from different arrangements");
  const std::string& a = f.str();
  const std::string& b = g.str();
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != '0' && a[i] != b[i]) return false;
  return true;
}

}  // namespace zonelab
