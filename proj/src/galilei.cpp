#include "uniserial/galilei.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "uniserial/error.hpp"
#include "uniserial/sl2.hpp"

namespace uniserial {

namespace {

Integer binomial(int n, int k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

using Table = std::vector<std::vector<GalileiElement>>;

Table build_table(const AlgebraSpec& spec) {
  const std::size_t d = spec.dim();
  const int m = spec.m();
  Table t(d, std::vector<GalileiElement>(d, GalileiElement(spec)));
  const auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
    t[i][j][k] += c;
    t[j][i][k] -= c;
  };
  const std::size_t e = AlgebraSpec::e, h = AlgebraSpec::h, f = AlgebraSpec::f;
  set(e, f, h, 1);
  set(h, e, e, 2);
  set(h, f, f, -2);
  for (int i = 0; i <= m; ++i) {
    set(h, spec.v(i), spec.v(i), m - 2 * i);
    if (i >= 1) set(e, spec.v(i), spec.v(i - 1), m - i + 1);
    if (i < m) set(f, spec.v(i), spec.v(i + 1), i + 1);
  }
  for (int i = 0; i <= m; ++i) {
    const int j = m - i;
    if (i < j) set(spec.v(i), spec.v(j), spec.z(), Rational(Integer((i % 2 ? -1 : 1) * binomial(m, i))));
  }
  return t;
}

const Table& table_for(const AlgebraSpec& spec) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const Table>> cache;
  const std::lock_guard lock(mutex);
  auto& slot = cache[spec.n()];
  if (!slot) slot = std::make_unique<const Table>(build_table(spec));
  return *slot;
}

}  // namespace

AlgebraSpec::AlgebraSpec(int n) : n_(n) {
  if (n < 1) throw PreconditionError("h_n requires n >= 1");
}

AlgebraSpec AlgebraSpec::from_m(int m) {
  if (m < 1 || m % 2 == 0) throw PreconditionError("h_n requires odd m = 2n-1");
  return AlgebraSpec((m + 1) / 2);
}

std::string AlgebraSpec::basis_name(std::size_t index) const {
  if (index == e) return "e";
  if (index == h) return "h";
  if (index == f) return "f";
  if (index == z()) return "z";
  if (index < dim()) return "v" + std::to_string(index - 3);
  throw PreconditionError("basis index out of range");
}

GalileiElement::GalileiElement(const AlgebraSpec& spec, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != spec.dim()) throw PreconditionError("dimension mismatch for algebra element");
}

GalileiElement GalileiElement::basis(const AlgebraSpec& spec, std::size_t index) {
  GalileiElement out(spec);
  out.coeffs_.at(index) = 1;
  return out;
}

bool GalileiElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

GalileiElement& GalileiElement::operator+=(const GalileiElement& o) {
  if (o.size() != size()) throw PreconditionError("dimension mismatch for algebra element");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

const GalileiElement& basis_bracket(const AlgebraSpec& spec, std::size_t i, std::size_t j) {
  return table_for(spec).at(i).at(j);
}

GalileiElement bracket(const AlgebraSpec& spec, const GalileiElement& x, const GalileiElement& y) {
  if (x.size() != spec.dim() || y.size() != spec.dim())
    throw PreconditionError("dimension mismatch for algebra element");
  const Table& t = table_for(spec);
  GalileiElement out(spec);
  for (std::size_t i = 0; i < spec.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < spec.dim(); ++j) {
      if (y[j].is_zero()) continue;
      const Rational c = x[i] * y[j];
      for (std::size_t k = 0; k < spec.dim(); ++k)
        if (!t[i][j][k].is_zero()) out[k] += c * t[i][j][k];
    }
  }
  return out;
}

std::vector<JacobiViolation> verify_jacobi(const AlgebraSpec& spec) {
  const std::size_t d = spec.dim();
  std::vector<JacobiViolation> out;
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t w = 0; w < d; ++w) {
        const auto bx = GalileiElement::basis(spec, x);
        const auto by = GalileiElement::basis(spec, y);
        const auto bw = GalileiElement::basis(spec, w);
        const GalileiElement sum = bracket(spec, basis_bracket(spec, x, y), bw) +
                                   bracket(spec, basis_bracket(spec, y, w), bx) +
                                   bracket(spec, basis_bracket(spec, w, x), by);
        if (!sum.is_zero()) out.push_back({x, y, w});
      }
  return out;
}

RatMatrix heisenberg_form(const AlgebraSpec& spec) {
  const int m = spec.m();
  const auto n = static_cast<std::size_t>(m + 1);
  RatMatrix omega(n, n);
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m; ++j)
      omega(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          basis_bracket(spec, spec.v(i), spec.v(j))[spec.z()];
  return omega;
}

bool form_is_sl2_invariant(int m, const RatMatrix& omega) {
  const auto n = static_cast<std::size_t>(m + 1);
  if (omega.rows() != n || omega.cols() != n) throw PreconditionError("form must be (m+1)x(m+1)");
  const Sl2Triple r = rep_matrices(m);
  // omega(s u, w) + omega(u, s w) = (R^T omega + omega R)(u, w)
  for (Sl2Generator s : kSl2Generators)
    if (!(r[s].transpose() * omega + omega * r[s]).is_zero()) return false;
  return true;
}

bool sl2_invariant_form_check(const AlgebraSpec& spec) {
  return form_is_sl2_invariant(spec.m(), heisenberg_form(spec));
}

nlohmann::json structure_constants_json(const AlgebraSpec& spec) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < spec.dim(); ++i)
    for (std::size_t j = i + 1; j < spec.dim(); ++j) {
      const auto& c = basis_bracket(spec, i, j);
      if (c.is_zero()) continue;
      nlohmann::json coeffs = nlohmann::json::array();
      for (const auto& x : c.coeffs()) coeffs.push_back(x.str());
      out.push_back({i, j, std::move(coeffs)});
    }
  return out;
}

}  // namespace uniserial
