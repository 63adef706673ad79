#include "uniserial/acceptance.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <random>
#include <sstream>

#include "uniserial/classifier.hpp"
#include "uniserial/error.hpp"
#include "uniserial/galilei.hpp"

namespace uniserial {

namespace {

using BigFloat = boost::multiprecision::cpp_bin_float_50;

BigFloat float_factorial(long n) {
  BigFloat out = 1;
  for (long k = 2; k <= n; ++k) out *= k;
  return out;
}

// Calls fn on every tuple with 0 <= 2 j_i <= max_twice.
template <class Fn>
void for_each_tuple(int max_twice, Fn fn) {
  std::array<int, 6> t{};
  while (true) {
    fn(SixJArgs(HalfInt::from_twice(t[0]), HalfInt::from_twice(t[1]), HalfInt::from_twice(t[2]),
                HalfInt::from_twice(t[3]), HalfInt::from_twice(t[4]), HalfInt::from_twice(t[5])));
    std::size_t k = 6;
    while (k > 0 && t[k - 1] == max_twice) t[--k] = 0;
    if (k == 0) return;
    ++t[k - 1];
  }
}

bool all_triangles(const SixJArgs& s) {
  for (const auto& t : triads(s))
    if (!triangle(t)) return false;
  return true;
}

SixJArgs args_of(std::initializer_list<const char*> parts) {
  std::array<HalfInt, 6> j{};
  std::size_t k = 0;
  for (const char* p : parts) j[k++] = HalfInt::parse(p);
  return SixJArgs(j[0], j[1], j[2], j[3], j[4], j[5]);
}

CriterionResult criterion_1() {
  CriterionResult r{1, "6j exceptional zero", false, ""};
  const SixJArgs displayed = SixJArgs::parse("{2 3/2 3/2; 3/2 2 3/2}");
  const SixJArgs exceptional = SixJArgs::parse("{2 3/2 3/2; 3/2 2 2}");
  const SixJArgs companion = SixJArgs::parse("{2 2 2; 3/2 3/2 3/2}");
  const bool displayed_zero = eval(displayed).is_zero();
  const bool exceptional_zero = all_triangles(exceptional) && eval(exceptional).is_zero();
  const bool companion_zero = all_triangles(companion) && eval(companion).is_zero();
  const bool same_orbit = symmetry_orbit(exceptional).count(companion) == 1;
  r.passed = displayed_zero && exceptional_zero && companion_zero && same_orbit;
  std::ostringstream os;
  os << displayed.str() << " = " << eval(displayed).str() << (all_triangles(displayed) ? "" : " (parity)") << "; "
     << exceptional.str() << " = " << eval(exceptional).str() << " with all triads valid; " << companion.str()
     << " = " << eval(companion).str() << (same_orbit ? ", same orbit" : ", NOT in orbit");
  r.detail = os.str();
  return r;
}

CriterionResult criterion_2() {
  CriterionResult r{2, "zero-propagation counterexamples", true, ""};
  const std::vector<SixJArgs> tuples{args_of({"3", "3", "2", "2", "1", "2"}),
                                     args_of({"4", "3/2", "7/2", "3/2", "3", "1"}),
                                     args_of({"6", "5/2", "13/2", "3", "9/2", "3/2"})};
  std::ostringstream os;
  for (const auto& s : tuples) {
    const HalfInt j1 = s.j[0];
    const Surd at1 = eval(s.with_j1(j1 - half(2)));
    const bool breaks = !triangle({j1 - half(6), s.j[1], s.j[2]});
    r.passed = r.passed && at1.is_zero() && all_triangles(s.with_j1(j1 - half(2))) && breaks;
    os << s.with_j1(j1 - half(2)).str() << " = " << at1.str() << (breaks ? ", " : ", triad holds at j1-3 ");
  }
  r.detail = os.str() + "(j1-3, j2, j3) not a triad in each case";
  return r;
}

CriterionResult criterion_3() {
  CriterionResult r{3, "three-term recurrence", true, ""};
  long checked = 0, failures = 0;
  for_each_tuple(6, [&](const SixJArgs& s) {
    if (!recurrence_defined(s)) return;
    ++checked;
    if (!recurrence_residual(s).is_zero()) {
      if (failures++ == 0) r.detail = "nonzero at " + s.str() + "; ";
    }
  });
  r.passed = failures == 0 && checked > 0;
  r.detail += std::to_string(checked) + " tuples, " + std::to_string(failures) + " nonzero residuals";
  return r;
}

CriterionResult criterion_4() {
  CriterionResult r{4, "symmetry orbit invariance", true, ""};
  long orbits = 0, failures = 0;
  for_each_tuple(7, [&](const SixJArgs& s) {
    const auto orbit = symmetry_orbit(s);
    if (*orbit.begin() != s) return;  // one representative per orbit
    ++orbits;
    const Surd value = eval(s);
    for (const auto& t : orbit)
      if (eval(t) != value) {
        if (failures++ == 0) r.detail = s.str() + " differs from " + t.str() + "; ";
      }
  });
  r.passed = failures == 0;
  r.detail += std::to_string(orbits) + " orbits, " + std::to_string(failures) + " mismatches";
  return r;
}

CriterionResult criterion_5() {
  CriterionResult r{5, "degenerate non-vanishing", true, ""};
  long checked = 0, failures = 0;
  for_each_tuple(8, [&](const SixJArgs& s) {
    if (!all_triangles(s)) return;
    const auto tri = triads(s);
    if (std::none_of(tri.begin(), tri.end(), [](const TriangleTriple& t) { return is_degenerate(t); })) return;
    ++checked;
    if (eval(s).is_zero()) {
      if (failures++ == 0) r.detail = "zero at " + s.str() + "; ";
    }
  });
  r.passed = failures == 0 && checked > 0;
  r.detail += std::to_string(checked) + " degenerate tuples, " + std::to_string(failures) + " zeros";
  return r;
}

CriterionResult criterion_6() {
  CriterionResult r{6, "explicit constructions", true, ""};
  long built = 0;
  std::string first_failure;
  const auto check = [&](int case_number, int m, int a) {
    const BlockRep rep = build_construction(case_number, m, a);
    ++built;
    const bool ok = verify_funca(rep).empty() && verify_homomorphism(rep).empty() && is_uniserial(rep) &&
                    is_faithful(rep);
    if (!ok && first_failure.empty())
      first_failure = "case " + std::to_string(case_number) + " m=" + std::to_string(m) + " a=" + std::to_string(a);
    r.passed = r.passed && ok;
  };
  for (int m = 1; m <= 9; m += 2)
    for (int c = 1; c <= 3; ++c) check(c, m, 0);
  for (int a = 0; a <= 8; ++a) {
    check(4, 1, a);
    check(5, 1, a);
  }
  check(6, 3, 0);
  r.detail = std::to_string(built) + " modules" + (first_failure.empty() ? ", all checks pass" : ", failed at " + first_failure);
  return r;
}

CriterionResult criterion_7() {
  CriterionResult r{7, "n = 2 example", false, ""};
  const BlockRep rep = assemble_intro_example();
  const bool hom = verify_homomorphism(rep).empty();
  const int a = rep.socle()[0], b = rep.socle()[1], c = rep.socle()[2];
  const EquivariantFamily x{rep.spec().m(), b, a, radical_blocks(rep, 0, 1)};
  const EquivariantFamily y{rep.spec().m(), c, b, radical_blocks(rep, 1, 2)};
  const WeightMultiset span = decompose_span(commutator_blocks(x, y), a, c);
  r.passed = hom && span == WeightMultiset{{0, 1}};
  std::ostringstream os;
  os << "homomorphism " << (hom ? "ok" : "FAILED") << ", commutator span";
  for (const auto& [k, mult] : span) os << " V(" << k << ")x" << mult;
  r.detail = os.str();
  return r;
}

CriterionResult criterion_8() {
  CriterionResult r{8, "length-3 classification", true, ""};
  std::ostringstream os;
  for (const auto& [m, bound] : std::vector<std::pair<int, int>>{{1, 10}, {3, 12}, {5, 12}, {7, 12}}) {
    const auto found = search_length3(AlgebraSpec::from_m(m), bound).found_sequences();
    const bool match = found == expected_length3(m, bound);
    r.passed = r.passed && match;
    os << "m=" << m << ": " << found.size() << (match ? " classes" : " classes (MISMATCH)") << "; ";
  }
  r.detail = os.str();
  r.detail.resize(r.detail.size() - 2);
  return r;
}

CriterionResult criterion_9() {
  CriterionResult r{9, "zero-propagation verifier", false, ""};
  const Prop25Report ok = verify_prop25(args_of({"3", "2", "2", "3/2", "3/2", "3/2"}));
  int rejected = 0;
  for (const auto& s : {args_of({"3", "3", "2", "2", "1", "2"}), args_of({"4", "3/2", "7/2", "3/2", "3", "1"}),
                        args_of({"6", "5/2", "13/2", "3", "9/2", "3/2"})}) {
    try {
      verify_prop25(s);
    } catch (const PreconditionError& e) {
      if (std::string(e.what()).find("j2") != std::string::npos) ++rejected;
    }
  }
  r.passed = ok.conclusion_holds && rejected == 3;
  r.detail = ok.str() + "; " + std::to_string(rejected) + "/3 tuples rejected on j2 != j3";
  return r;
}

CriterionResult criterion_10() {
  CriterionResult r{10, "a(a+2) = b(b+2) + 9", false, ""};
  const auto solutions = eq_ab_solutions(1000);
  r.passed = solutions == std::vector<std::pair<int, int>>{{4, 3}};
  std::ostringstream os;
  os << solutions.size() << " solution(s) up to 1000:";
  for (const auto& [a, b] : solutions) os << " (" << a << "," << b << ")";
  r.detail = os.str();
  return r;
}

// c (0 | I): n x (n+1)
RatMatrix shifted_identity(std::size_t n, const Rational& c) {
  RatMatrix out(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) out(i, i + 1) = c;
  return out;
}

// c (diag(k, ..., 1) ; 0): (k+1) x k
RatMatrix weighted_column(std::size_t k, const Rational& c) {
  RatMatrix out(k + 1, k);
  for (std::size_t i = 0; i < k; ++i) out(i, i) = c * Rational(static_cast<long>(k - i));
  return out;
}

CriterionResult criterion_11() {
  CriterionResult r{11, "length-4 nonexistence", true, ""};
  const AlgebraSpec spec1 = AlgebraSpec::from_m(1);
  long shapes = 0;
  std::string first_failure;
  const auto check = [&](const SocleSequence& seq, const RatMatrix& expected) {
    ++shapes;
    const auto o = length4_obstruction(spec1, seq);
    const bool ok = o.nonzero && o.corner_blocks.at(0) == expected;
    if (!ok && first_failure.empty()) first_failure = socle_str(seq);
    r.passed = r.passed && ok;
  };
  for (int a = 0; a <= 10; ++a) {
    const auto n = static_cast<std::size_t>(a);
    check({a, a + 1, a, a + 1}, shifted_identity(n + 1, -(2 * a + 3)));
    if (a >= 1) check({a, a + 1, a, a - 1}, weighted_column(n, -(a + 2)));
    check({a + 1, a, a + 1, a + 2}, shifted_identity(n + 2, a + 1));
    check({a + 1, a, a + 1, a}, weighted_column(n + 1, 2 * a + 3));
  }
  std::ostringstream os;
  os << shapes << " obstruction blocks " << (first_failure.empty() ? "match" : "differ at " + first_failure) << "; ";
  for (int m : {1, 3, 5}) {
    const auto report = length4_search(AlgebraSpec::from_m(m), 10);
    r.passed = r.passed && report.survivors.empty();
    os << "m=" << m << " survivors " << report.survivors.size() << (m == 5 ? "" : ", ");
  }
  r.detail = os.str();
  return r;
}

CriterionResult criterion_12() {
  CriterionResult r{12, "length >= 5 nonexistence", true, ""};
  std::ostringstream os;
  for (int m : {1, 3})
    for (int ell : {5, 6}) {
      const auto report = length_ge5_check(AlgebraSpec::from_m(m), ell, 15);
      const bool ok = report.faithful_candidates.empty() && report.non_progressions.empty();
      r.passed = r.passed && ok;
      os << "m=" << m << " l=" << ell << ": " << report.window_admissible << " admissible, "
         << report.faithful_candidates.size() << " candidates; ";
    }
  r.detail = os.str();
  r.detail.resize(r.detail.size() - 2);
  return r;
}

CriterionResult criterion_13() {
  CriterionResult r{13, "floating-point oracle", true, ""};
  std::mt19937_64 rng(20241017);
  std::uniform_int_distribution<int> twice(0, 12);
  int sampled = 0, zeros = 0;
  double worst = 0;
  while (sampled < 500) {
    const SixJArgs s(HalfInt::from_twice(twice(rng)), HalfInt::from_twice(twice(rng)), HalfInt::from_twice(twice(rng)),
                     HalfInt::from_twice(twice(rng)), HalfInt::from_twice(twice(rng)), HalfInt::from_twice(twice(rng)));
    if (!all_triangles(s)) continue;
    ++sampled;
    const double exact_sq = eval(s).square().to_double();
    const double oracle = sixj_float(s);
    const double oracle_sq = oracle * oracle;
    if (exact_sq == 0) {
      ++zeros;
      if (std::abs(oracle) > 1e-12) r.passed = false;
      continue;
    }
    const double rel = std::abs(exact_sq - oracle_sq) / exact_sq;
    worst = std::max(worst, rel);
    if (rel > 1e-9) r.passed = false;
  }
  std::ostringstream os;
  os << sampled << " tuples (" << zeros << " zeros), max relative error " << worst;
  r.detail = os.str();
  return r;
}

}  // namespace

double sixj_float(const SixJArgs& args) {
  std::array<long, 6> t{};
  for (std::size_t k = 0; k < 6; ++k) t[k] = args.j[k].twice();
  const std::array<std::array<long, 3>, 4> tri{{{t[0], t[1], t[2]}, {t[0], t[4], t[5]}, {t[3], t[1], t[5]}, {t[3], t[4], t[2]}}};
  BigFloat delta = 1;
  for (const auto& [a, b, c] : tri) {
    if (a < 0 || b < 0 || c < 0 || (a + b + c) % 2 || c < std::abs(a - b) || c > a + b) return 0;
    delta *= float_factorial((a + b - c) / 2) * float_factorial((a - b + c) / 2) * float_factorial((b + c - a) / 2) /
             float_factorial((a + b + c) / 2 + 1);
  }
  long lo = 0, hi = -1;
  std::array<long, 4> sums{};
  for (std::size_t k = 0; k < 4; ++k) sums[k] = (tri[k][0] + tri[k][1] + tri[k][2]) / 2;
  const std::array<long, 3> pairs{(t[0] + t[1] + t[3] + t[4]) / 2, (t[1] + t[2] + t[4] + t[5]) / 2,
                                  (t[2] + t[0] + t[5] + t[3]) / 2};
  lo = *std::max_element(sums.begin(), sums.end());
  hi = *std::min_element(pairs.begin(), pairs.end());
  BigFloat total = 0;
  for (long z = lo; z <= hi; ++z) {
    BigFloat term = float_factorial(z + 1);
    for (long s : sums) term /= float_factorial(z - s);
    for (long p : pairs) term /= float_factorial(p - z);
    total += (z % 2 ? -term : term);
  }
  return static_cast<double>(total * sqrt(delta));
}

CriterionResult run_criterion(int id) {
  switch (id) {
    case 1: return criterion_1();
    case 2: return criterion_2();
    case 3: return criterion_3();
    case 4: return criterion_4();
    case 5: return criterion_5();
    case 6: return criterion_6();
    case 7: return criterion_7();
    case 8: return criterion_8();
    case 9: return criterion_9();
    case 10: return criterion_10();
    case 11: return criterion_11();
    case 12: return criterion_12();
    case 13: return criterion_13();
    default: throw PreconditionError("no criterion " + std::to_string(id));
  }
}

std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    CriterionResult r;
    try {
      r = run_criterion(id);
    } catch (const std::exception& e) {
      r = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what()};
    }
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  return std::string(r.passed ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.title + ": " + r.detail;
}

}  // namespace uniserial
