#include "uniserial/classifier.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>

#include "uniserial/error.hpp"
#include "uniserial/sixj.hpp"

namespace uniserial {

namespace {

Rational binomial(int n, int k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(out);
}

bool is_progression(std::span<const int> seq, int step) {
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (seq[i] - seq[i - 1] != step) return false;
  return true;
}

bool has_repeat(std::span<const int> seq) {
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] == seq[j]) return true;
  return false;
}

// Admissible in the given order (no reversal).
bool admissible_forward(int m, std::span<const int> s) {
  for (int x : s)
    if (x < 0) return false;
  switch (s.size()) {
    case 0: return false;
    case 1: return true;
    case 2: return (s[0] + s[1] - m) % 2 == 0 && 0 <= s[1] - s[0] && s[1] - s[0] <= m && m <= s[0] + s[1];
    case 3: return is_progression(s, m) || (s[0] == 0 && s[1] == m && (s[2] - 2 * m) % 4 == 0 && s[2] <= 2 * m);
    case 4: return is_progression(s, m) || (s[0] == 0 && s[1] == m && s[2] == m && s[3] == 0 && m % 4 == 0);
    default: return is_progression(s, m);
  }
}

}  // namespace

std::string reason_str(RejectReason r) {
  switch (r) {
    case RejectReason::c_ne_a: return "c!=a";
    case RejectReason::no_hom_space: return "no-Hom-space";
    case RejectReason::nonscalar_commutator: return "nonscalar-commutator";
    case RejectReason::lambda_zero: return "lambda-zero";
  }
  return "unknown";
}

std::vector<RatMatrix> commutator_blocks(const EquivariantFamily& x, const EquivariantFamily& y) {
  std::vector<RatMatrix> out;
  const std::size_t n = x.mats.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.push_back(x.mats[i] * y.mats[j] - x.mats[j] * y.mats[i]);
  return out;
}

Length3Outcome solve_length3_detailed(const AlgebraSpec& spec, int a, int b, int c) {
  Length3Outcome out;
  const int m = spec.m();
  if (c != a) {
    out.reason = RejectReason::c_ne_a;
    return out;
  }
  const auto x = equivariant_family(m, b, a);
  const auto y = equivariant_family(m, c, b);
  if (!x || !y) {
    out.reason = RejectReason::no_hom_space;
    return out;
  }

  const auto k = commutator_blocks(*x, *y);
  const auto at = [&](int i, int j) -> const RatMatrix& { return k[static_cast<std::size_t>(i * (m + 1) + j)]; };

  // [v_0, v_m] = z, so K_{0,m} = Z(z) = lambda I.
  Rational lambda;
  if (!at(0, m).is_scalar(&lambda)) {
    out.reason = RejectReason::nonscalar_commutator;
    return out;
  }
  const auto n = static_cast<std::size_t>(a + 1);
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m; ++j) {
      const RatMatrix expected =
          i + j == m ? RatMatrix::scalar(n, lambda * binomial(m, i) * (i % 2 ? -1 : 1)) : RatMatrix(n, n);
      if (at(i, j) != expected) {
        out.reason = RejectReason::nonscalar_commutator;
        return out;
      }
    }
  if (lambda.is_zero()) {
    out.reason = RejectReason::lambda_zero;
    return out;
  }
  out.lambda = lambda;
  out.rep = make_length3(spec, a, b, c, x->mats, y->mats, RatMatrix::scalar(n, lambda));
  return out;
}

std::optional<BlockRep> solve_length3(const AlgebraSpec& spec, int a, int b, int c) {
  return solve_length3_detailed(spec, a, b, c).rep;
}

int prediction_r(int m, int a) { return a % 2 == 0 ? std::min(2 * m - 2, 2 * a) : std::min(2 * m - 2, 2 * a - 2); }

CommutatorImage commutator_image(const AlgebraSpec& spec, int a, int b, int c) {
  const int m = spec.m();
  const auto x = equivariant_family(m, b, a);
  if (!x) throw PreconditionError("V(" + std::to_string(m) + ") does not enter Hom(V(" + std::to_string(b) + "),V(" +
                                  std::to_string(a) + "))");
  const auto y = equivariant_family(m, c, b);
  if (!y) throw PreconditionError("V(" + std::to_string(m) + ") does not enter Hom(V(" + std::to_string(c) + "),V(" +
                                  std::to_string(b) + "))");
  CommutatorImage out;
  out.actual = decompose_span(commutator_blocks(*x, *y), a, c);
  auto& p = out.prediction;
  p.r = prediction_r(m, a);
  p.sixj_value = eval(SixJArgs(half(m), half(p.r), half(m), half(a), half(b), half(a)));
  if (!p.sixj_value.is_zero()) p.predicted_components[p.r] = 1;
  return out;
}

std::vector<SocleSequence> ClassificationReport::found_sequences() const {
  std::vector<SocleSequence> out;
  for (const auto& [seq, rep] : found) out.push_back(seq);
  return out;
}

ClassificationReport search_length3(const AlgebraSpec& spec, int bound) {
  if (bound < spec.m() + 1) throw PreconditionError("search bound must be at least m + 1");
  ClassificationReport report;
  report.m = spec.m();
  report.bound = bound;
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; b <= bound; ++b)
      for (int c = 0; c <= bound; ++c) {
        auto outcome = solve_length3_detailed(spec, a, b, c);
        if (outcome.rep) report.found.emplace_back(SocleSequence{a, b, c}, std::move(*outcome.rep));
        else report.rejected.emplace_back(SocleSequence{a, b, c}, *outcome.reason);
      }
  return report;
}

std::vector<SocleSequence> expected_length3(int m, int bound) {
  std::vector<SocleSequence> all;
  if (m == 1) {
    for (int a = 0; a <= bound; ++a) {
      all.push_back({a, a + 1, a});
      all.push_back({a + 1, a, a + 1});
    }
  } else {
    all = {{0, m, 0}, {1, m + 1, 1}, {1, m - 1, 1}};
    if (m == 3) all.push_back({4, 3, 4});
  }
  std::vector<SocleSequence> out;
  for (auto& s : all)
    if (std::all_of(s.begin(), s.end(), [&](int x) { return x <= bound; })) out.push_back(std::move(s));
  std::sort(out.begin(), out.end());
  return out;
}

bool cs_admissible(int m, std::span<const int> seq) {
  if (admissible_forward(m, seq)) return true;
  std::array<int, 16> buffer{};
  std::vector<int> heap;
  int* reversed = buffer.data();
  if (seq.size() > buffer.size()) {
    heap.resize(seq.size());
    reversed = heap.data();
  }
  std::reverse_copy(seq.begin(), seq.end(), reversed);
  return admissible_forward(m, std::span<const int>(reversed, seq.size()));
}

Length4Obstruction length4_obstruction(const AlgebraSpec& spec, const SocleSequence& seq) {
  if (spec.m() != 1) throw PreconditionError("length4_obstruction requires m = 1");
  if (seq.size() != 4) throw PreconditionError("length4_obstruction requires a length-4 sequence");
  const int a = seq[0], b = seq[1], c = seq[2], d = seq[3];
  const bool up_up = b == a + 1 && c == a && d == a + 1;         // (a, a+1, a, a+1)
  const bool down_down = b == a - 1 && c == a && d == a - 1;     // (b+1, b, b+1, b)
  const bool up_down = b == a + 1 && c == a && d == a - 1;       // (a, a+1, a, a-1)
  const bool down_up = b == a - 1 && c == a && d == a + 1;       // (b+1, b, b+1, b+2)
  if (!(up_up || down_down || up_down || down_up) || std::any_of(seq.begin(), seq.end(), [](int x) { return x < 0; }))
    throw PreconditionError("unsupported length-4 shape " + socle_str(seq));

  // Superdiagonal map V(y) -> V(x), |x - y| = 1, from the explicit modules.
  const auto superdiagonal = [&](int x, int y) {
    return y == x + 1 ? radical_blocks(build_construction(4, 1, x), 0, 1)
                      : radical_blocks(build_construction(5, 1, y), 0, 1);
  };
  // Z(z) of the window (x, y, w): forced by [v_0, v_1] = z when faithful (w = x), else 0.
  const auto corner = [&](int x, int y, int w) {
    const auto n = static_cast<std::size_t>(x + 1);
    if (w != x) return RatMatrix(n, static_cast<std::size_t>(w + 1));
    const BlockRep window = y == x + 1 ? build_construction(4, 1, x) : build_construction(5, 1, y);
    return window.block(spec.z(), 0, 2);
  };

  std::vector<BlockMap> radical(spec.heisenberg_dim());
  for (std::size_t i = 0; i < 3; ++i) {
    const auto maps = superdiagonal(seq[i], seq[i + 1]);
    for (std::size_t k = 0; k < maps.size(); ++k) radical[k][{i, i + 1}] = maps[k];
  }
  radical.back()[{0, 2}] = corner(a, b, c);
  radical.back()[{1, 3}] = corner(b, c, d);
  const BlockRep candidate = BlockRep::from_blocks(spec, seq, radical);

  Length4Obstruction out;
  out.seq = seq;
  const RatMatrix& rz = candidate.generator(spec.z());
  for (int k = 0; k <= spec.m(); ++k) {
    const RatMatrix bracket_matrix = commutator(candidate.generator(spec.v(k)), rz);
    out.corner_blocks.push_back(
        bracket_matrix.block(candidate.offset(0), candidate.offset(3), candidate.block_size(0), candidate.block_size(3)));
    out.nonzero = out.nonzero || !out.corner_blocks.back().is_zero();
  }
  return out;
}

Length4Report length4_search(const AlgebraSpec& spec, int bound) {
  const int m = spec.m();
  Length4Report report;
  report.m = m;
  report.bound = bound;

  // Faithful length-3 windows, keyed by sequence.
  std::map<SocleSequence, bool> faithful;
  const auto is_faithful_window = [&](const SocleSequence& w) {
    auto it = faithful.find(w);
    if (it == faithful.end()) it = faithful.emplace(w, solve_length3(spec, w[0], w[1], w[2]).has_value()).first;
    return it->second;
  };

  for (int a = 0; a <= bound; ++a)
    for (int b = 0; b <= bound; ++b)
      for (int c = 0; c <= bound; ++c)
        for (int d = 0; d <= bound; ++d) {
          ++report.examined;
          const SocleSequence seq{a, b, c, d};
          const SocleSequence w1{a, b, c}, w2{b, c, d};
          const bool f1 = is_faithful_window(w1), n1 = cs_admissible(m, w1);
          const bool f2 = is_faithful_window(w2), n2 = cs_admissible(m, w2);
          if (!(f1 || n1) || !(f2 || n2)) {
            ++report.not_uniserial;
            continue;
          }
          if (!f1 && !f2) {
            // z can only act through block (1,4), which needs V(0) in Hom(V(d), V(a)).
            if (d != a) {
              ++report.z_trivial;
              continue;
            }
            ++report.case3;
            report.survivors.push_back(seq);
            continue;
          }
          if (m >= 3) {
            ++report.case1;
            report.survivors.push_back(seq);
            continue;
          }
          ++report.case2;
          // Only W2 faithful: the dual module has W1 faithful.
          const SocleSequence oriented = f1 ? seq : SocleSequence(seq.rbegin(), seq.rend());
          auto obstruction = length4_obstruction(spec, oriented);
          if (!obstruction.nonzero) report.survivors.push_back(seq);
          report.obstructions.push_back(std::move(obstruction));
        }
  return report;
}

LengthGe5Report length_ge5_check(const AlgebraSpec& spec, int ell, int bound) {
  if (ell < 5) throw PreconditionError("length_ge5_check requires ell >= 5");
  if (bound < 0) throw PreconditionError("bound must be non-negative");
  const int m = spec.m();
  LengthGe5Report report;
  report.m = m;
  report.ell = ell;
  report.bound = bound;

  const auto len = static_cast<std::size_t>(ell);
  std::vector<int> seq(len, 0);
  while (true) {
    ++report.examined;
    const std::span<const int> s(seq);
    if (cs_admissible(m, s.first(len - 1)) && cs_admissible(m, s.last(len - 1))) {
      ++report.window_admissible;
      if (!is_progression(s, m) && !is_progression(s, -m)) report.non_progressions.push_back(seq);
      if (has_repeat(s)) report.faithful_candidates.push_back(seq);
    }
    std::size_t k = len;
    while (k > 0 && seq[k - 1] == bound) seq[--k] = 0;
    if (k == 0) break;
    ++seq[k - 1];
  }
  return report;
}

std::vector<std::pair<int, int>> eq_ab_solutions(int bound) {
  if (bound < 0) throw PreconditionError("bound must be non-negative");
  std::vector<std::pair<int, int>> out;
  for (long a = 0; a <= bound; ++a)
    for (long b = 0; b <= bound; ++b)
      if (a * (a + 2) == b * (b + 2) + 9) out.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return out;
}

}  // namespace uniserial
