#include <array>
#include <cctype>
#include <string>

#include "uniserial/block_rep.hpp"
#include "uniserial/error.hpp"

namespace uniserial {

namespace {

Rational binomial(int n, int k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(out);
}

int sign(int i) { return i % 2 ? -1 : 1; }

std::size_t sz(int x) { return static_cast<std::size_t>(x); }

// V(0), V(m), V(0); Z(z) = (2).
BlockRep case_0m0(const AlgebraSpec& spec) {
  const int m = spec.m();
  std::vector<RatMatrix> x, y;
  for (int i = 0; i <= m; ++i) {
    RatMatrix xi(1, sz(m + 1));
    xi(0, sz(m - i)) = binomial(m, i) * sign(i);
    x.push_back(xi);
    RatMatrix yi(sz(m + 1), 1);
    yi(sz(i), 0) = 1;
    y.push_back(yi);
  }
  return make_length3(spec, 0, m, 0, x, y, RatMatrix::scalar(1, 2));
}

// V(1), V(m+1), V(1); Z(z) = (m+2) I_2.
BlockRep case_1m1(const AlgebraSpec& spec) {
  const int m = spec.m();
  std::vector<RatMatrix> x, y;
  for (int i = 0; i <= m; ++i) {
    RatMatrix xi(2, sz(m + 2));
    xi(0, sz(m - i)) = binomial(m, i) * sign(i);
    xi(1, sz(m - i + 1)) = binomial(m, i) * sign(i);
    x.push_back(xi);
    // Displayed transposed: rows ((m+1)a_0, m a_1, ..., a_m, 0) and (0, a_0, 2a_1, ..., (m+1)a_m).
    RatMatrix yi(sz(m + 2), 2);
    yi(sz(i), 0) = m + 1 - i;
    yi(sz(i + 1), 1) = i + 1;
    y.push_back(yi);
  }
  return make_length3(spec, 1, m + 1, 1, x, y, RatMatrix::scalar(2, m + 2));
}

// V(1), V(m-1), V(1); Z(z) = I_2.
BlockRep case_1m_minus_1(const AlgebraSpec& spec) {
  const int m = spec.m();
  std::vector<RatMatrix> x, y;
  for (int i = 0; i <= m; ++i) {
    RatMatrix xi(2, sz(m));
    if (i <= m - 1) xi(0, sz(m - 1 - i)) = binomial(m - 1, i) * sign(i);
    if (i >= 1) xi(1, sz(m - i)) = binomial(m - 1, i - 1) * sign(i - 1);
    x.push_back(xi);
    // Displayed transposed: rows (a_1, ..., a_m) and (-a_0, ..., -a_{m-1}).
    RatMatrix yi(sz(m), 2);
    if (i >= 1) yi(sz(i - 1), 0) = 1;
    if (i <= m - 1) yi(sz(i), 1) = -1;
    y.push_back(yi);
  }
  return make_length3(spec, 1, m - 1, 1, x, y, RatMatrix::identity(2));
}

// (0_{k} | I_{k}) and (-I_{k} | 0_{k}): k x (k+1).
std::array<RatMatrix, 2> shift_pair(int k) {
  RatMatrix v0(sz(k), sz(k + 1)), v1(sz(k), sz(k + 1));
  for (int r = 0; r < k; ++r) {
    v0(sz(r), sz(r + 1)) = 1;
    v1(sz(r), sz(r)) = -1;
  }
  return {v0, v1};
}

// (J+_k ; 0') and (0' ; J-_k): (k+1) x k.
std::array<RatMatrix, 2> weighted_pair(int k) {
  RatMatrix v0(sz(k + 1), sz(k)), v1(sz(k + 1), sz(k));
  for (int r = 0; r < k; ++r) {
    v0(sz(r), sz(r)) = k - r;
    v1(sz(r + 1), sz(r)) = r + 1;
  }
  return {v0, v1};
}

// m = 1: V(a), V(a+1), V(a); Z(z) = (a+2) I_{a+1}.
BlockRep case_a_up(const AlgebraSpec& spec, int a) {
  const auto x = shift_pair(a + 1);
  const auto y = weighted_pair(a + 1);
  return make_length3(spec, a, a + 1, a, {x[0], x[1]}, {y[0], y[1]}, RatMatrix::scalar(sz(a + 1), a + 2));
}

// m = 1: V(a+1), V(a), V(a+1); Z(z) = -(a+1) I_{a+2}.
BlockRep case_a_down(const AlgebraSpec& spec, int a) {
  const auto x = weighted_pair(a + 1);
  const auto y = shift_pair(a + 1);
  return make_length3(spec, a + 1, a, a + 1, {x[0], x[1]}, {y[0], y[1]}, RatMatrix::scalar(sz(a + 2), -(a + 1)));
}

// m = 3: V(4), V(3), V(4); Z(z) = 6 I_5.
BlockRep case_434(const AlgebraSpec& spec) {
  const std::vector<RatMatrix> x{
      {{0, 6, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}},
      {{-6, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 3}, {0, 0, 0, 0}},
      {{0, 0, 0, 0}, {-3, 0, 0, 0}, {0, -3, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 6}},
      {{0, 0, 0, 0}, {0, 0, 0, 0}, {-1, 0, 0, 0}, {0, -3, 0, 0}, {0, 0, -6, 0}},
  };
  const std::vector<RatMatrix> y{
      {{0, 0, 3, 0, 0}, {0, 0, 0, 2, 0}, {0, 0, 0, 0, 1}, {0, 0, 0, 0, 0}},
      {{0, -6, 0, 0, 0}, {0, 0, -3, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 3}},
      {{3, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, -3, 0, 0}, {0, 0, 0, -6, 0}},
      {{0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 2, 0, 0, 0}, {0, 0, 3, 0, 0}},
  };
  return make_length3(spec, 4, 3, 4, x, y, RatMatrix::scalar(5, 6));
}

// Parses a linear form such as "-6a1", "a0", "0" into coefficients of a_0..a_3.
std::array<Rational, 4> parse_form(const std::string& text) {
  std::array<Rational, 4> out{};
  if (text == "0") return out;
  const auto pos = text.find('a');
  if (pos == std::string::npos || pos + 2 != text.size() || !std::isdigit(static_cast<unsigned char>(text[pos + 1])))
    throw ParseError("malformed linear form '" + text + "'");
  std::string coeff = text.substr(0, pos);
  if (coeff.empty() || coeff == "-") coeff += "1";
  out.at(sz(text[pos + 1] - '0')) = Rational::parse(coeff);
  return out;
}

template <std::size_t R, std::size_t C>
std::vector<RatMatrix> split_by_variable(const std::array<std::array<const char*, C>, R>& display) {
  std::vector<RatMatrix> out(4, RatMatrix(R, C));
  for (std::size_t r = 0; r < R; ++r)
    for (std::size_t c = 0; c < C; ++c) {
      const auto coeffs = parse_form(display[r][c]);
      for (std::size_t k = 0; k < 4; ++k) out[k](r, c) = coeffs[k];
    }
  return out;
}

}  // namespace

BlockRep build_construction(int case_number, int m, int a) {
  const auto bad = [&](const std::string& why) {
    return PreconditionError("construction (" + std::to_string(case_number) + "): " + why);
  };
  if (m < 1 || m % 2 == 0) throw bad("h_n requires odd m = 2n-1");
  if (a < 0) throw bad("a must be non-negative");
  const AlgebraSpec spec = AlgebraSpec::from_m(m);
  switch (case_number) {
    case 1: return case_0m0(spec);
    case 2: return case_1m1(spec);
    case 3: return case_1m_minus_1(spec);
    case 4:
      if (m != 1) throw bad("requires m = 1");
      return case_a_up(spec, a);
    case 5:
      if (m != 1) throw bad("requires m = 1");
      return case_a_down(spec, a);
    case 6:
      if (m != 3) throw bad("requires m = 3");
      return case_434(spec);
    default: throw bad("case must be 1..6");
  }
}

BlockRep assemble_intro_example() {
  // Block (1,2): 5x4, block (2,3): 4x5, as linear forms in a_0..a_3.
  constexpr std::array<std::array<const char*, 4>, 5> upper{{
      {"-6a1", "6a0", "0", "0"},
      {"-3a2", "0", "3a0", "0"},
      {"-a3", "-3a2", "3a1", "a0"},
      {"0", "-3a3", "0", "3a1"},
      {"0", "0", "-6a3", "6a2"},
  }};
  constexpr std::array<std::array<const char*, 5>, 4> lower{{
      {"3a2", "-6a1", "3a0", "0", "0"},
      {"a3", "0", "-3a1", "2a0", "0"},
      {"0", "2a3", "-3a2", "0", "a0"},
      {"0", "0", "3a3", "-6a2", "3a1"},
  }};
  const AlgebraSpec spec(2);
  const auto x = split_by_variable(upper);
  const auto y = split_by_variable(lower);
  // [v_0, v_3] = z.
  const RatMatrix z_of_z = x[0] * y[3] - x[3] * y[0];
  return make_length3(spec, 4, 3, 4, x, y, z_of_z);
}

}  // namespace uniserial
