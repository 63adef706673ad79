#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "uniserial/rational.hpp"

namespace uniserial {

/// A half-integer j, stored as 2j so that arithmetic stays in the integers.
class HalfInt {
public:
  constexpr HalfInt() = default;
  constexpr HalfInt(int integer) : twice_(2 * integer) {}  // NOLINT(google-explicit-constructor)

  static constexpr HalfInt from_twice(int twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  /// Accepts "k" or "k/2"; no decimals.
  static HalfInt parse(std::string_view text);

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr bool is_negative() const { return twice_ < 0; }

  Rational to_rational() const { return Rational(Integer(twice_), Integer(2)); }
  double to_double() const { return twice_ / 2.0; }

  /// "k" or "k/2" with k odd.
  std::string str() const;

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
  friend constexpr bool operator==(HalfInt a, HalfInt b) = default;
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

private:
  int twice_ = 0;
};

constexpr HalfInt half(int numerator_over_two) { return HalfInt::from_twice(numerator_over_two); }

std::ostream& operator<<(std::ostream& os, HalfInt h);

}  // namespace uniserial
