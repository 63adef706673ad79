#include <doctest.h>

#include <set>

#include "uniserial/classifier.hpp"
#include "uniserial/error.hpp"
#include "uniserial/galilei.hpp"
#include "uniserial/sixj.hpp"

using namespace uniserial;

namespace {

const std::vector<int>& odd_m() {
  static const std::vector<int> ms{1, 3, 5, 7};
  return ms;
}

}  // namespace

TEST_SUITE("classifier") {

TEST_CASE("length-3 solver examples") {
  const AlgebraSpec m3 = AlgebraSpec::from_m(3), m5 = AlgebraSpec::from_m(5), m1 = AlgebraSpec::from_m(1);
  const auto found = solve_length3_detailed(m3, 4, 3, 4);
  REQUIRE(found.rep.has_value());
  CHECK(!found.lambda.is_zero());
  CHECK(found.rep->block(m3.z(), 0, 2) == RatMatrix::scalar(5, found.lambda));

  CHECK_FALSE(solve_length3(m5, 4, 3, 4));
  CHECK(solve_length3_detailed(m5, 4, 3, 4).reason == RejectReason::nonscalar_commutator);
  CHECK(solve_length3_detailed(m5, 0, 3, 0).reason == RejectReason::no_hom_space);
  CHECK_FALSE(solve_length3(m3, 2, 3, 2));
  CHECK(solve_length3_detailed(m3, 2, 3, 2).reason == RejectReason::nonscalar_commutator);
  CHECK(solve_length3_detailed(m3, 0, 3, 1).reason == RejectReason::c_ne_a);
  for (int a = 0; a <= 8; ++a) CHECK(solve_length3(m1, a, a + 1, a).has_value());
}

TEST_CASE("rescaling the superdiagonal relates the solver to construction 6") {
  // block-diagonal conjugation scales X by s, Y by t, Z by s t
  const auto found = solve_length3_detailed(AlgebraSpec::from_m(3), 4, 3, 4);
  const BlockRep six = build_construction(6, 3);
  const auto x = radical_blocks(*found.rep, 0, 1), x6 = radical_blocks(six, 0, 1);
  const auto y = radical_blocks(*found.rep, 1, 2), y6 = radical_blocks(six, 1, 2);
  Rational s, t;
  for (std::size_t k = 0; k < x.size(); ++k)
    for (std::size_t i = 0; i < x[k].rows(); ++i)
      for (std::size_t j = 0; j < x[k].cols(); ++j)
        if (!x[k](i, j).is_zero()) s = x6[k](i, j) / x[k](i, j);
  for (std::size_t k = 0; k < y.size(); ++k)
    for (std::size_t i = 0; i < y[k].rows(); ++i)
      for (std::size_t j = 0; j < y[k].cols(); ++j)
        if (!y[k](i, j).is_zero()) t = y6[k](i, j) / y[k](i, j);
  for (std::size_t k = 0; k < x.size(); ++k) {
    CHECK(s * x[k] == x6[k]);
    CHECK(t * y[k] == y6[k]);
  }
  CHECK(s * t * found.lambda == Rational(6));
}

TEST_CASE("reason strings") {
  CHECK(reason_str(RejectReason::c_ne_a) == "c!=a");
  CHECK(reason_str(RejectReason::no_hom_space) == "no-Hom-space");
  CHECK(reason_str(RejectReason::nonscalar_commutator) == "nonscalar-commutator");
  CHECK(reason_str(RejectReason::lambda_zero) == "lambda-zero");
}

TEST_CASE("prediction index r") {
  CHECK(prediction_r(3, 4) == 4);
  CHECK(prediction_r(3, 2) == 4);
  CHECK(prediction_r(3, 1) == 0);
  CHECK(prediction_r(5, 3) == 4);
  CHECK(prediction_r(7, 10) == 12);
  for (int m = 1; m <= 9; m += 2)
    for (int a = 0; a <= 12; ++a) CHECK(prediction_r(m, a) % 2 == 0);
}

TEST_CASE("commutator image examples") {
  const AlgebraSpec spec = AlgebraSpec::from_m(3);
  const auto exceptional = commutator_image(spec, 4, 3, 4);
  CHECK(exceptional.actual == WeightMultiset{{0, 1}});
  CHECK(exceptional.prediction.r == 4);
  CHECK(exceptional.prediction.sixj_value.is_zero());
  CHECK(exceptional.prediction.predicted_components.empty());
  CHECK(eval(SixJArgs::parse("{3/2 2 3/2; 2 3/2 2}")).is_zero());

  CHECK(commutator_image(spec, 0, 3, 0).actual == WeightMultiset{{0, 1}});

  const auto generic = commutator_image(spec, 2, 3, 2);
  CHECK(generic.actual.count(4) == 1);
  CHECK(!generic.prediction.sixj_value.is_zero());
  CHECK(generic.prediction.predicted_components == WeightMultiset{{4, 1}});

  CHECK_THROWS_WITH_AS(commutator_image(spec, 0, 1, 0), doctest::Contains("Hom(V(1),V(0))"), PreconditionError);
}

TEST_CASE("solver and commutator image agree") {
  // found iff the commutator span is exactly one trivial summand
  for (int m : odd_m()) {
    const AlgebraSpec spec = AlgebraSpec::from_m(m);
    for (int a = 0; a <= 10; ++a)
      for (int b = 0; b <= 10; ++b)
        for (int c = 0; c <= 10; ++c) {
          if (!equivariant_family(m, b, a) || !equivariant_family(m, c, b)) continue;
          const auto outcome = solve_length3_detailed(spec, a, b, c);
          const auto image = commutator_image(spec, a, b, c);
          const bool only_trivial = image.actual == WeightMultiset{{0, 1}};
          CAPTURE(m);
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(c);
          CHECK(outcome.rep.has_value() == only_trivial);
        }
  }
}

TEST_CASE("nonzero 6j forces V(r) into the commutator image") {
  long predicted = 0;
  for (int m : odd_m()) {
    const AlgebraSpec spec = AlgebraSpec::from_m(m);
    for (int a = 0; a <= 10; ++a)
      for (int b = 0; b <= 10; ++b) {
        if (!equivariant_family(m, b, a)) continue;
        const auto image = commutator_image(spec, a, b, a);
        if (image.prediction.sixj_value.is_zero()) continue;
        ++predicted;
        CAPTURE(m);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(image.actual.count(image.prediction.r) == 1);
      }
  }
  CHECK(predicted > 50);
}

TEST_CASE("length-3 searches") {
  CHECK(search_length3(AlgebraSpec::from_m(3), 12).found_sequences() ==
        std::vector<SocleSequence>{{0, 3, 0}, {1, 2, 1}, {1, 4, 1}, {4, 3, 4}});
  CHECK(search_length3(AlgebraSpec::from_m(5), 12).found_sequences() ==
        std::vector<SocleSequence>{{0, 5, 0}, {1, 4, 1}, {1, 6, 1}});
  std::vector<SocleSequence> m1;
  for (int a = 0; a <= 4; ++a) {
    m1.push_back({a, a + 1, a});
    m1.push_back({a + 1, a, a + 1});
  }
  std::sort(m1.begin(), m1.end());
  CHECK(search_length3(AlgebraSpec::from_m(1), 5).found_sequences() == m1);
  CHECK_THROWS_AS(search_length3(AlgebraSpec::from_m(5), 5), PreconditionError);
}

TEST_CASE("search reports are complete, valid and closed under reversal") {
  for (int m : {1, 3, 5}) {
    const auto report = search_length3(AlgebraSpec::from_m(m), 8);
    CHECK(report.found.size() + report.rejected.size() == 9u * 9u * 9u);
    CHECK(report.found_sequences() == expected_length3(m, 8));
    std::set<SocleSequence> found;
    for (const auto& [seq, rep] : report.found) {
      found.insert(seq);
      CHECK(verify_homomorphism(rep).empty());
      CHECK(is_uniserial(rep));
      CHECK(is_faithful(rep));
    }
    for (const auto& seq : found) CHECK(found.count(SocleSequence(seq.rbegin(), seq.rend())) == 1);
    CHECK(std::is_sorted(report.rejected.begin(), report.rejected.end(),
                         [](const auto& x, const auto& y) { return x.first < y.first; }));
  }
}

TEST_CASE("admissible socle sequences of non-faithful modules") {
  const auto adm = [](int m, SocleSequence s) { return cs_admissible(m, s); };
  CHECK(adm(3, {1, 2}));
  CHECK(adm(3, {2, 1}));
  CHECK_FALSE(adm(3, {1, 1}));
  CHECK_FALSE(adm(3, {0, 5}));
  CHECK(adm(3, {0, 3, 2}));
  CHECK(adm(3, {2, 3, 0}));
  CHECK(adm(3, {0, 3, 6}));
  CHECK_FALSE(adm(3, {0, 3, 4}));
  CHECK_FALSE(adm(3, {0, 3, 10}));
  CHECK_FALSE(adm(3, {0, 3, 3, 0}));
  CHECK(adm(4, {0, 4, 4, 0}));
  CHECK(adm(1, {5, 4, 3, 2, 1, 0}));
  CHECK_FALSE(adm(1, {0, 1, 0, 1, 0}));
  CHECK(adm(7, {3}));
  CHECK_FALSE(adm(3, {}));
  CHECK_FALSE(adm(3, {-3, 0, 3}));
  for (int m = 1; m <= 5; m += 2)
    for (int a = 0; a <= 6; ++a) CHECK_FALSE(adm(m, {a, a + m, a}));
}

TEST_CASE("length-4 obstruction blocks") {
  const AlgebraSpec spec = AlgebraSpec::from_m(1);
  for (int a = 0; a <= 6; ++a) {
    const auto n = static_cast<std::size_t>(a + 1);
    RatMatrix shift(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) shift(i, i + 1) = 1;
    CHECK(length4_obstruction(spec, {a, a + 1, a, a + 1}).corner_blocks[0] == Rational(-(2 * a + 3)) * shift);

    RatMatrix shift2(n + 1, n + 2);
    for (std::size_t i = 0; i <= n; ++i) shift2(i, i + 1) = 1;
    CHECK(length4_obstruction(spec, {a + 1, a, a + 1, a + 2}).corner_blocks[0] == Rational(a + 1) * shift2);

    if (a >= 1) {
      RatMatrix plus(n, n - 1);
      for (std::size_t i = 0; i + 1 < n; ++i) plus(i, i) = Rational(static_cast<long>(n - 1 - i));
      CHECK(length4_obstruction(spec, {a, a + 1, a, a - 1}).corner_blocks[0] == Rational(-(a + 2)) * plus);
    }
    for (const SocleSequence& s : std::vector<SocleSequence>{{a, a + 1, a, a + 1}, {a + 1, a, a + 1, a}}) {
      const auto o = length4_obstruction(spec, s);
      CHECK(o.nonzero);
      CHECK(o.corner_blocks.size() == 2);
    }
  }
  CHECK_THROWS_AS(length4_obstruction(spec, {0, 1, 2, 3}), PreconditionError);
  CHECK_THROWS_AS(length4_obstruction(spec, {0, 1, 0}), PreconditionError);
  CHECK_THROWS_AS(length4_obstruction(AlgebraSpec::from_m(3), {0, 3, 0, 3}), PreconditionError);
}

TEST_CASE("length-4 searches leave nothing") {
  const auto m1 = length4_search(AlgebraSpec::from_m(1), 8);
  CHECK(m1.survivors.empty());
  CHECK(m1.case2 > 0);
  CHECK(m1.obstructions.size() == m1.case2);
  for (const auto& o : m1.obstructions) CHECK(o.nonzero);
  CHECK(m1.examined == m1.not_uniserial + m1.z_trivial + m1.case1 + m1.case2 + m1.case3);
  for (int m : {3, 5}) {
    const auto r = length4_search(AlgebraSpec::from_m(m), 10);
    CHECK(r.survivors.empty());
    CHECK(r.examined == 11u * 11u * 11u * 11u);
  }
}

TEST_CASE("length >= 5 checks") {
  for (const auto& [m, ell, bound] : std::vector<std::tuple<int, int, int>>{{1, 5, 10}, {3, 5, 15}, {3, 6, 18}}) {
    const auto r = length_ge5_check(AlgebraSpec::from_m(m), ell, bound);
    CHECK(r.faithful_candidates.empty());
    CHECK(r.non_progressions.empty());
    CHECK(r.window_admissible > 0);
  }
  const auto small = length_ge5_check(AlgebraSpec::from_m(1), 5, 4);
  // exactly the two monotone runs through 0..4
  CHECK(small.window_admissible == 2);
  CHECK_THROWS_AS(length_ge5_check(AlgebraSpec::from_m(1), 4, 3), PreconditionError);
}

TEST_CASE("a(a+2) = b(b+2) + 9") {
  CHECK(eq_ab_solutions(1000) == std::vector<std::pair<int, int>>{{4, 3}});
  CHECK(eq_ab_solutions(3).empty());
  CHECK(4 * 6 == 3 * 5 + 9);
  CHECK_THROWS_AS(eq_ab_solutions(-1), PreconditionError);
}

}  // TEST_SUITE
