#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "uniserial/rat_matrix.hpp"

namespace uniserial {

/// g = sl(2) |x h_n with h_n = V(m) + z, m = 2n - 1. Basis order is fixed as
/// (e, h, f, v_0, ..., v_m, z).
class AlgebraSpec {
public:
  /// Requires n >= 1.
  explicit AlgebraSpec(int n);
  /// Requires m odd and >= 1.
  static AlgebraSpec from_m(int m);

  int n() const { return n_; }
  int m() const { return 2 * n_ - 1; }
  std::size_t dim() const { return static_cast<std::size_t>(2 * n_ + 4); }
  std::size_t heisenberg_dim() const { return static_cast<std::size_t>(2 * n_ + 1); }

  static constexpr std::size_t e = 0;
  static constexpr std::size_t h = 1;
  static constexpr std::size_t f = 2;
  std::size_t v(int i) const { return 3 + static_cast<std::size_t>(i); }
  std::size_t z() const { return dim() - 1; }

  std::string basis_name(std::size_t index) const;

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;

private:
  int n_;
};

/// Element of g as a coefficient vector in the fixed basis order.
class GalileiElement {
public:
  explicit GalileiElement(const AlgebraSpec& spec) : coeffs_(spec.dim()) {}
  GalileiElement(const AlgebraSpec& spec, std::vector<Rational> coeffs);
  static GalileiElement basis(const AlgebraSpec& spec, std::size_t index);

  std::size_t size() const { return coeffs_.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  Rational& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  GalileiElement& operator+=(const GalileiElement& o);
  friend GalileiElement operator+(GalileiElement a, const GalileiElement& b) { return a += b; }
  friend bool operator==(const GalileiElement&, const GalileiElement&) = default;

private:
  std::vector<Rational> coeffs_;
};

/// Lie bracket of g: sl(2) brackets, the standard sl(2) action on V(m),
/// [v_i, v_{m-i}] = (-1)^i C(m, i) z, z central.
GalileiElement bracket(const AlgebraSpec& spec, const GalileiElement& x, const GalileiElement& y);

/// [b_i, b_j] on basis elements (cached per spec).
const GalileiElement& basis_bracket(const AlgebraSpec& spec, std::size_t i, std::size_t j);

struct JacobiViolation {
  std::size_t x, y, w;
};

/// Every basis triple whose Jacobi sum is nonzero (empty for a Lie algebra).
std::vector<JacobiViolation> verify_jacobi(const AlgebraSpec& spec);

/// omega(v_i, v_j) as an (m+1)x(m+1) matrix, read off the z-coefficient of [v_i, v_j].
RatMatrix heisenberg_form(const AlgebraSpec& spec);

/// omega(s.u, w) + omega(u, s.w) == 0 for s in {e, h, f} and basis u, w of V(m).
bool form_is_sl2_invariant(int m, const RatMatrix& omega);

bool sl2_invariant_form_check(const AlgebraSpec& spec);

/// Structure-constant table: [[i, j, ["c_0", ...]], ...] over i < j with [b_i, b_j] != 0.
nlohmann::json structure_constants_json(const AlgebraSpec& spec);

}  // namespace uniserial
