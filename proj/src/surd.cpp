#include "uniserial/surd.hpp"

#include <cmath>
#include <ostream>

#include "uniserial/error.hpp"
#include "uniserial/factorial.hpp"

namespace uniserial {

Surd Surd::normalize(const Rational& c, const Rational& q) {
  if (q.sign() < 0) throw ArithmeticError("negative radicand " + q.str());
  if (c.is_zero() || q.is_zero()) return Surd();
  // sqrt(p/r) = sqrt(p r) / r
  const Integer den = q.denominator();
  const auto [root, squarefree] = split_square(q.numerator() * den);
  return Surd(c * Rational(root, den), squarefree);
}

Surd Surd::parse(std::string_view text) {
  const auto pos = text.find("sqrt(");
  if (pos == std::string_view::npos) return Surd(Rational::parse(text));
  if (text.empty() || text.back() != ')') throw ParseError("malformed surd: '" + std::string(text) + "'");
  const auto radicand = Rational::parse(text.substr(pos + 5, text.size() - pos - 6));
  Rational coefficient = 1;
  if (pos > 0) {
    if (text[pos - 1] != '*') throw ParseError("malformed surd: '" + std::string(text) + "'");
    coefficient = Rational::parse(text.substr(0, pos - 1));
  }
  return normalize(coefficient, radicand);
}

Rational Surd::square() const { return coefficient_ * coefficient_ * Rational(radicand_); }

double Surd::to_double() const { return coefficient_.to_double() * std::sqrt(radicand_.get_d()); }

std::string Surd::str() const {
  if (radicand_ == 1) return coefficient_.str();
  return coefficient_.str() + "*sqrt(" + radicand_.get_str() + ")";
}

Surd Surd::operator-() const { return Surd(-coefficient_, radicand_); }

Surd operator+(const Surd& x, const Surd& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.radicand() != y.radicand())
    throw ArithmeticError("incompatible radicands: " + x.str() + " + " + y.str());
  return Surd::normalize(x.coefficient() + y.coefficient(), Rational(x.radicand()));
}

Surd operator-(const Surd& x, const Surd& y) { return x + (-y); }

Surd operator*(const Surd& x, const Surd& y) {
  if (x.is_zero() || y.is_zero()) return Surd();
  const Integer g = gcd(x.radicand(), y.radicand());
  // sqrt(q1) sqrt(q2) = g sqrt(q1 q2 / g^2), and q1 q2 / g^2 stays squarefree.
  const Integer q = (x.radicand() / g) * (y.radicand() / g);
  return Surd::normalize(x.coefficient() * y.coefficient() * Rational(g), Rational(q));
}

std::ostream& operator<<(std::ostream& os, const Surd& x) { return os << x.str(); }

SurdSum& SurdSum::operator+=(const Surd& term) {
  if (term.is_zero()) return *this;
  auto [it, inserted] = terms_.try_emplace(term.radicand(), term.coefficient());
  if (!inserted) {
    it->second += term.coefficient();
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

Surd SurdSum::to_surd() const {
  if (terms_.empty()) return Surd();
  if (terms_.size() > 1) throw ArithmeticError("incompatible radicands in " + str());
  const auto& [q, c] = *terms_.begin();
  return Surd::normalize(c, Rational(q));
}

double SurdSum::to_double() const {
  double out = 0;
  for (const auto& [q, c] : terms_) out += c.to_double() * std::sqrt(q.get_d());
  return out;
}

std::string SurdSum::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [q, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += Surd::normalize(c, Rational(q)).str();
  }
  return out;
}

}  // namespace uniserial
