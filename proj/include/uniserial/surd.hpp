#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "uniserial/rational.hpp"

namespace uniserial {

/// Exact value c * sqrt(q) with c rational and q a squarefree positive
/// integer. Zero is 0 * sqrt(1). Equality is field-wise.
class Surd {
public:
  Surd() = default;
  Surd(const Rational& c) : coefficient_(c) {}  // NOLINT(google-explicit-constructor)

  /// c * sqrt(q) for any rational q >= 0; sqrt(p/r) becomes sqrt(pr)/r.
  static Surd normalize(const Rational& c, const Rational& q);

  /// Parses "c", "c*sqrt(q)" or "sqrt(q)".
  static Surd parse(std::string_view text);

  const Rational& coefficient() const { return coefficient_; }
  const Integer& radicand() const { return radicand_; }

  bool is_zero() const { return coefficient_.is_zero(); }
  bool is_rational() const { return radicand_ == 1; }
  int sign() const { return coefficient_.sign(); }

  /// Exact c^2 q.
  Rational square() const;
  double to_double() const;

  /// "c*sqrt(q)", or just "c" when q = 1.
  std::string str() const;

  Surd operator-() const;

  friend bool operator==(const Surd& a, const Surd& b) = default;

private:
  Surd(Rational c, Integer q) : coefficient_(std::move(c)), radicand_(std::move(q)) {}

  Rational coefficient_;
  Integer radicand_ = 1;
};

/// Sum of surds with equal radicands (either side may be zero).
/// Throws ArithmeticError("incompatible radicands") otherwise.
Surd operator+(const Surd& x, const Surd& y);
Surd operator-(const Surd& x, const Surd& y);
Surd operator*(const Surd& x, const Surd& y);

std::ostream& operator<<(std::ostream& os, const Surd& x);

/// A linear combination of surds grouped by squarefree radicand. Distinct
/// square roots of squarefree integers are linearly independent over Q, so
/// the sum is zero exactly when every group is.
class SurdSum {
public:
  SurdSum& operator+=(const Surd& term);
  SurdSum& operator-=(const Surd& term) { return *this += -term; }

  bool is_zero() const { return terms_.empty(); }
  /// Nonzero groups keyed by radicand.
  const std::map<Integer, Rational>& terms() const { return terms_; }
  /// Collapses to a single Surd; throws if more than one radicand survives.
  Surd to_surd() const;
  double to_double() const;
  std::string str() const;

private:
  std::map<Integer, Rational> terms_;
};

}  // namespace uniserial
