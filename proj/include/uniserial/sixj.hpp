#pragma once

#include <array>
#include <compare>
#include <set>
#include <string>
#include <string_view>

#include "uniserial/half_int.hpp"
#include "uniserial/surd.hpp"

namespace uniserial {

/// Arguments {j1 j2 j3; j4 j5 j6} of a 6j-symbol, upper row first.
struct SixJArgs {
  std::array<HalfInt, 6> j{};

  SixJArgs() = default;
  SixJArgs(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5, HalfInt j6) : j{j1, j2, j3, j4, j5, j6} {}

  /// Same arguments with j1 replaced.
  SixJArgs with_j1(HalfInt value) const {
    SixJArgs out = *this;
    out.j[0] = value;
    return out;
  }

  /// Parses "{j1 j2 j3; j4 j5 j6}" (braces and semicolon optional).
  static SixJArgs parse(std::string_view text);
  /// "{j1 j2 j3; j4 j5 j6}" with half-integers as "k/2".
  std::string str() const;

  friend bool operator==(const SixJArgs&, const SixJArgs&) = default;
  friend auto operator<=>(const SixJArgs&, const SixJArgs&) = default;
};

struct TriangleTriple {
  HalfInt a, b, c;
};

/// Integer sum, all entries non-negative, |a-b| <= c <= a+b.
bool triangle(const TriangleTriple& t);

/// One of the triangle inequalities is tight. Throws PreconditionError if
/// the triple is not a triangle.
bool is_degenerate(const TriangleTriple& t);

/// The four triples (j1,j2,j3), (j1,j5,j6), (j4,j2,j6), (j4,j5,j3).
std::array<TriangleTriple, 4> triads(const SixJArgs& args);

/// Exact Racah-Wigner 6j-symbol (standard Racah phase). Zero whenever one of
/// the four triads fails the triangle condition.
Surd eval(const SixJArgs& args);

/// The quantity under the square root in E(i1).
Rational e_radicand(HalfInt i1, HalfInt i2, HalfInt i3, HalfInt i5, HalfInt i6);

/// E(i1) = sqrt((i1^2-(i2-i3)^2)((i2+i3+1)^2-i1^2)(i1^2-(i5-i6)^2)((i5+i6+1)^2-i1^2)).
/// Throws PreconditionError when the radicand is negative.
Surd e_coeff(HalfInt i1, HalfInt i2, HalfInt i3, HalfInt i5, HalfInt i6);

/// F(i1) of the three-term recurrence in j1.
Rational f_coeff(HalfInt i1, HalfInt i2, HalfInt i3, HalfInt i4, HalfInt i5, HalfInt i6);

/// i1 E(i1+1) {i1+1 ...} + F(i1) {i1 ...} + (i1+1) E(i1) {i1-1 ...},
/// grouped by radicand. Zero for every argument with valid E radicands.
SurdSum recurrence_residual(const SixJArgs& args);

/// True iff both E(i1) and E(i1+1) have non-negative radicands.
bool recurrence_defined(const SixJArgs& args);

/// Orbit under column permutations and upper/lower swaps in two columns
/// (at most 24 elements).
std::set<SixJArgs> symmetry_orbit(const SixJArgs& args);

/// Outcome of checking the zero-propagation statement: if j1 = j5 + j6 >= 3,
/// j2 = j3, the four triads hold for h = j1 and h = j1 - 1, and the symbol at
/// j1 - 1 vanishes, then the symbols at j1 - 2 and j1 - 3 do not.
struct Prop25Report {
  SixJArgs args;
  Surd at_minus_1;
  Surd at_minus_2;
  Surd at_minus_3;
  bool conclusion_holds = false;
  std::string str() const;
};

/// Throws PreconditionError naming the first failing hypothesis.
Prop25Report verify_prop25(const SixJArgs& args);

}  // namespace uniserial
