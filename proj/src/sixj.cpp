#include "uniserial/sixj.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <vector>

#include "uniserial/error.hpp"
#include "uniserial/factorial.hpp"

namespace uniserial {

namespace {

// x(x+1) for a half-integer x.
Rational casimir(HalfInt x) { return x.to_rational() * (x.to_rational() + 1); }

Rational sq(const Rational& x) { return x * x; }

}  // namespace

SixJArgs SixJArgs::parse(std::string_view text) {
  std::string cleaned;
  for (char c : text) cleaned += (c == '{' || c == '}' || c == ';' || c == ',') ? ' ' : c;
  std::istringstream in(cleaned);
  SixJArgs out;
  std::string token;
  std::size_t k = 0;
  while (in >> token) {
    if (k == 6) throw ParseError("6j-symbol takes six arguments: '" + std::string(text) + "'");
    out.j[k++] = HalfInt::parse(token);
  }
  if (k != 6) throw ParseError("6j-symbol takes six arguments: '" + std::string(text) + "'");
  return out;
}

std::string SixJArgs::str() const {
  return "{" + j[0].str() + " " + j[1].str() + " " + j[2].str() + "; " + j[3].str() + " " + j[4].str() + " " +
         j[5].str() + "}";
}

bool triangle(const TriangleTriple& t) {
  const int a = t.a.twice(), b = t.b.twice(), c = t.c.twice();
  if (a < 0 || b < 0 || c < 0) return false;
  if ((a + b + c) % 2 != 0) return false;  // j1 + j2 + j3 must be an integer
  return std::abs(a - b) <= c && c <= a + b;
}

bool is_degenerate(const TriangleTriple& t) {
  if (!triangle(t)) throw PreconditionError("is_degenerate requires a triangle");
  const int a = t.a.twice(), b = t.b.twice(), c = t.c.twice();
  return std::abs(a - b) == c || c == a + b;
}

std::array<TriangleTriple, 4> triads(const SixJArgs& s) {
  const auto& j = s.j;
  return {{{j[0], j[1], j[2]}, {j[0], j[4], j[5]}, {j[3], j[1], j[5]}, {j[3], j[4], j[2]}}};
}

Surd eval(const SixJArgs& args) {
  const auto tri = triads(args);
  for (const auto& t : tri)
    if (!triangle(t)) return Surd();

  // Product of the four triangle coefficients Delta(abc)^2.
  Rational radicand = 1;
  for (const auto& t : tri) {
    const long a = t.a.twice(), b = t.b.twice(), c = t.c.twice();
    radicand *= Rational(factorial((a + b - c) / 2) * factorial((a - b + c) / 2) * factorial((-a + b + c) / 2),
                         factorial((a + b + c) / 2 + 1));
  }

  const auto& j = args.j;
  const auto tw = [&](int k) { return static_cast<long>(j[static_cast<std::size_t>(k)].twice()); };
  const std::array<long, 4> alpha{(tw(0) + tw(1) + tw(2)) / 2, (tw(0) + tw(4) + tw(5)) / 2,
                                  (tw(3) + tw(1) + tw(5)) / 2, (tw(3) + tw(4) + tw(2)) / 2};
  const std::array<long, 3> beta{(tw(0) + tw(1) + tw(3) + tw(4)) / 2, (tw(1) + tw(2) + tw(4) + tw(5)) / 2,
                                 (tw(2) + tw(0) + tw(5) + tw(3)) / 2};
  const long t_min = *std::max_element(alpha.begin(), alpha.end());
  const long t_max = *std::min_element(beta.begin(), beta.end());

  Rational sum;
  for (long t = t_min; t <= t_max; ++t) {
    Integer den = 1;
    for (long a : alpha) den *= factorial(t - a);
    for (long b : beta) den *= factorial(b - t);
    const Rational term(factorial(t + 1), den);
    if (t % 2) sum -= term;
    else sum += term;
  }
  return Surd::normalize(sum, radicand);
}

Rational e_radicand(HalfInt i1, HalfInt i2, HalfInt i3, HalfInt i5, HalfInt i6) {
  const Rational x = i1.to_rational();
  return (sq(x) - sq((i2 - i3).to_rational())) * (sq((i2 + i3).to_rational() + 1) - sq(x)) *
         (sq(x) - sq((i5 - i6).to_rational())) * (sq((i5 + i6).to_rational() + 1) - sq(x));
}

Surd e_coeff(HalfInt i1, HalfInt i2, HalfInt i3, HalfInt i5, HalfInt i6) {
  const Rational r = e_radicand(i1, i2, i3, i5, i6);
  if (r.sign() < 0)
    throw PreconditionError("E(" + i1.str() + ") has negative radicand " + r.str() +
                            "; outside the recurrence range");
  return Surd::normalize(1, r);
}

Rational f_coeff(HalfInt i1, HalfInt i2, HalfInt i3, HalfInt i4, HalfInt i5, HalfInt i6) {
  const Rational c1 = casimir(i1), c2 = casimir(i2), c3 = casimir(i3);
  const Rational c4 = casimir(i4), c5 = casimir(i5), c6 = casimir(i6);
  const Rational inner = c1 * (-c1 + c2 + c3) + c5 * (c1 + c2 - c3) + c6 * (c1 - c2 + c3) - Rational(2) * c1 * c4;
  return (Rational(2) * i1.to_rational() + 1) * inner;
}

bool recurrence_defined(const SixJArgs& args) {
  const auto& j = args.j;
  return e_radicand(j[0], j[1], j[2], j[4], j[5]).sign() >= 0 &&
         e_radicand(j[0] + 1, j[1], j[2], j[4], j[5]).sign() >= 0;
}

SurdSum recurrence_residual(const SixJArgs& args) {
  const auto& j = args.j;
  const HalfInt i1 = j[0];
  const Surd e_up = e_coeff(i1 + 1, j[1], j[2], j[4], j[5]);
  const Surd e_here = e_coeff(i1, j[1], j[2], j[4], j[5]);
  const Rational f = f_coeff(i1, j[1], j[2], j[3], j[4], j[5]);

  SurdSum out;
  out += Surd(i1.to_rational()) * e_up * eval(args.with_j1(i1 + 1));
  out += Surd(f) * eval(args);
  out += Surd(i1.to_rational() + 1) * e_here * eval(args.with_j1(i1 - 1));
  return out;
}

std::set<SixJArgs> symmetry_orbit(const SixJArgs& args) {
  std::set<SixJArgs> out;
  std::array<int, 3> perm{0, 1, 2};
  // Flip patterns: none, or upper/lower swapped in exactly two columns.
  constexpr std::array<std::array<bool, 3>, 4> flips{{{false, false, false},
                                                       {true, true, false},
                                                       {true, false, true},
                                                       {false, true, true}}};
  do {
    for (const auto& flip : flips) {
      SixJArgs s;
      for (std::size_t c = 0; c < 3; ++c) {
        const auto src = static_cast<std::size_t>(perm[c]);
        HalfInt upper = args.j[src], lower = args.j[src + 3];
        if (flip[c]) std::swap(upper, lower);
        s.j[c] = upper;
        s.j[c + 3] = lower;
      }
      out.insert(s);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::string Prop25Report::str() const {
  std::ostringstream os;
  os << args.str() << ": at j1-1 = " << at_minus_1 << ", at j1-2 = " << at_minus_2 << ", at j1-3 = " << at_minus_3
     << (conclusion_holds ? " (conclusion holds)" : " (CONCLUSION VIOLATED)");
  return os.str();
}

Prop25Report verify_prop25(const SixJArgs& args) {
  const auto& j = args.j;
  const auto fail = [&](const std::string& clause) {
    return PreconditionError("hypothesis fails for " + args.str() + ": " + clause);
  };
  for (const auto& x : j)
    if (x.is_negative()) throw fail("arguments must be non-negative");
  if (j[0] != j[4] + j[5]) throw fail("j1 = j5 + j6");
  if (j[0] < HalfInt(3)) throw fail("j1 >= 3");
  if (j[1] != j[2]) throw fail("j2 = j3");
  for (HalfInt h : {j[0], j[0] - 1}) {
    const SixJArgs shifted = args.with_j1(h);
    for (const auto& t : triads(shifted))
      if (!triangle(t))
        throw fail("triangle condition for h = " + h.str() + " at (" + t.a.str() + ", " + t.b.str() + ", " +
                   t.c.str() + ")");
  }
  Prop25Report report;
  report.args = args;
  report.at_minus_1 = eval(args.with_j1(j[0] - 1));
  if (!report.at_minus_1.is_zero()) throw fail("symbol at j1 - 1 must vanish");
  report.at_minus_2 = eval(args.with_j1(j[0] - 2));
  report.at_minus_3 = eval(args.with_j1(j[0] - 3));
  report.conclusion_holds = !report.at_minus_2.is_zero() && !report.at_minus_3.is_zero();
  return report;
}

}  // namespace uniserial
