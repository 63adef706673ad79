#include "uniserial/sl2.hpp"

#include <cstdlib>

#include "uniserial/error.hpp"

namespace uniserial {

const RatMatrix& Sl2Triple::operator[](Sl2Generator s) const {
  switch (s) {
    case Sl2Generator::e: return e;
    case Sl2Generator::h: return h;
    case Sl2Generator::f: return f;
  }
  return h;
}

Sl2Triple rep_matrices(int a) {
  if (a < 0) throw PreconditionError("highest weight must be non-negative");
  const auto n = static_cast<std::size_t>(a + 1);
  Sl2Triple out{RatMatrix(n, n), RatMatrix(n, n), RatMatrix(n, n)};
  for (int i = 0; i <= a; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out.h(k, k) = a - 2 * i;
    if (i >= 1) out.e(k - 1, k) = a - i + 1;
    if (i < a) out.f(k + 1, k) = i + 1;
  }
  return out;
}

int cg_multiplicity(int a, int b, int k) {
  if (a < 0 || b < 0 || k < 0) return 0;
  if ((a + b + k) % 2 != 0) return 0;
  return (std::abs(a - b) <= k && k <= a + b) ? 1 : 0;
}

HomModule::HomModule(int a, int b) : a_(a), b_(b), ra_(rep_matrices(a)), rb_(rep_matrices(b)) {}

RatMatrix HomModule::act(Sl2Generator s, const RatMatrix& t) const { return ra_[s] * t - t * rb_[s]; }

std::optional<EquivariantFamily> equivariant_family(int m, int b, int a) {
  if (cg_multiplicity(a, b, m) == 0) return std::nullopt;

  const HomModule hom(a, b);
  const auto rows = static_cast<std::size_t>(a + 1);
  const auto cols = static_cast<std::size_t>(b + 1);

  // Coordinates of the weight-m subspace.
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (hom.weight(i, j) == m) slots.emplace_back(i, j);

  // Matrix of e restricted to the weight-m subspace, one column per slot.
  const std::size_t full = rows * cols;
  RatMatrix raise(full, slots.size());
  for (std::size_t s = 0; s < slots.size(); ++s) {
    RatMatrix unit(rows, cols);
    unit(slots[s].first, slots[s].second) = 1;
    const RatMatrix image = hom.act(Sl2Generator::e, unit);
    for (std::size_t k = 0; k < full; ++k) raise(k, s) = image.entries()[k];
  }

  const auto kernel = kernel_basis(raise);
  if (kernel.size() != 1) throw ArithmeticError("highest-weight space is not one-dimensional");

  RatMatrix top(rows, cols);
  for (std::size_t s = 0; s < slots.size(); ++s) top(slots[s].first, slots[s].second) = kernel[0](s, 0);
  for (const auto& x : top.entries())
    if (!x.is_zero()) {
      top *= Rational(1) / x;
      break;
    }

  EquivariantFamily family{m, b, a, {std::move(top)}};
  for (int i = 0; i < m; ++i)
    family.mats.push_back(hom.act(Sl2Generator::f, family.mats.back()) * Rational(Integer(1), Integer(i + 1)));
  return family;
}

bool is_equivariant(const EquivariantFamily& family) {
  const HomModule hom(family.a, family.b);
  const int m = family.m;
  if (family.mats.size() != static_cast<std::size_t>(m + 1)) return false;
  const RatMatrix zero(static_cast<std::size_t>(family.a + 1), static_cast<std::size_t>(family.b + 1));
  for (int i = 0; i <= m; ++i) {
    const auto& x = family.mats[static_cast<std::size_t>(i)];
    // Images of v_i under e, h, f in V(m), pushed through X.
    const RatMatrix x_e = i >= 1 ? family.mats[static_cast<std::size_t>(i - 1)] * Rational(m - i + 1) : zero;
    const RatMatrix x_h = x * Rational(m - 2 * i);
    const RatMatrix x_f = i < m ? family.mats[static_cast<std::size_t>(i + 1)] * Rational(i + 1) : zero;
    if (hom.act(Sl2Generator::e, x) != x_e) return false;
    if (hom.act(Sl2Generator::h, x) != x_h) return false;
    if (hom.act(Sl2Generator::f, x) != x_f) return false;
  }
  return true;
}

WeightMultiset decompose_span(const std::vector<RatMatrix>& mats, int a, int b) {
  const HomModule hom(a, b);
  const auto rows = static_cast<std::size_t>(a + 1);
  const auto cols = static_cast<std::size_t>(b + 1);
  const std::size_t dim = rows * cols;

  // The generated submodule is h-stable, so it is spanned by the weight
  // components of its vectors; track one span per weight.
  std::map<int, SpanBuilder> by_weight;
  std::vector<RatMatrix> queue;

  const auto push_components = [&](const RatMatrix& t) {
    std::map<int, std::vector<Rational>> parts;
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        const Rational& x = t(i, j);
        if (x.is_zero()) continue;
        auto [it, fresh] = parts.try_emplace(hom.weight(i, j), dim);
        it->second[i * cols + j] = x;
      }
    for (auto& [w, v] : parts) {
      auto& span = by_weight.try_emplace(w, dim).first->second;
      RatMatrix component(rows, cols, v);
      if (span.add(std::move(v))) queue.push_back(std::move(component));
    }
  };

  for (const auto& t : mats) {
    if (t.rows() != rows || t.cols() != cols) throw PreconditionError("matrix shape does not match Hom(V(b), V(a))");
    push_components(t);
  }
  while (!queue.empty()) {
    const RatMatrix t = std::move(queue.back());
    queue.pop_back();
    push_components(hom.act(Sl2Generator::e, t));
    push_components(hom.act(Sl2Generator::f, t));
  }

  // Multiplicity of V(k) is dim W_k - dim W_{k+2}.
  WeightMultiset out;
  for (const auto& [w, span] : by_weight) {
    if (w < 0) continue;
    const auto above = by_weight.find(w + 2);
    const std::size_t upper = above == by_weight.end() ? 0 : above->second.dimension();
    const auto mult = static_cast<int>(span.dimension()) - static_cast<int>(upper);
    if (mult > 0) out[w] = mult;
  }
  return out;
}

}  // namespace uniserial
