#pragma once

#include <compare>
#include <span>
#include <string>

#include "zonelab/linear.hpp"

namespace zonelab {

enum class Sign : signed char { Minus = -1, Zero = 0, Plus = 1 };

inline char sign_char(Sign s) {
  return s == Sign::Minus ? '-' : (s == Sign::Zero ? '0' : '+');
}

// The set {x : normal.x = offset}. Stored canonically: coefficients are
// scaled to coprime integers and the first nonzero normal entry is
// positive, so equal hyperplanes compare equal.
class Hyperplane {
 public:
  Hyperplane(RatVec normal, Rat offset);

  const RatVec& normal() const { return normal_; }
  const Rat& offset() const { return offset_; }
  int dim() const { return static_cast<int>(normal_.size()); }

  Rat evaluate(std::span<const Rat> point) const;  // normal.x - offset
  Sign side_of(std::span<const Rat> point) const;

  LinearConstraint as_equation() const {
    return eq(normal_, offset_);
  }
  // The constraint selecting one side (strict for open halfspaces).
  LinearConstraint side_constraint(Sign side) const;

  bool operator==(const Hyperplane& other) const = default;
  // Lexicographic on (normal, offset); used only for deterministic ordering.
  std::strong_ordering operator<=>(const Hyperplane& other) const;

  std::string to_string() const;

 private:
  RatVec normal_;
  Rat offset_;
};

}  // namespace zonelab
