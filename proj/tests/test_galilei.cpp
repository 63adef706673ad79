#include <doctest.h>

#include "uniserial/error.hpp"
#include "uniserial/galilei.hpp"

using namespace uniserial;

TEST_SUITE("galilei") {

TEST_CASE("dimensions and basis names") {
  for (int n = 1; n <= 6; ++n) {
    const AlgebraSpec spec(n);
    CHECK(spec.m() == 2 * n - 1);
    CHECK(spec.dim() == static_cast<std::size_t>(2 * n + 4));
    CHECK(spec.heisenberg_dim() == static_cast<std::size_t>(2 * n + 1));
    CHECK(spec.z() == spec.dim() - 1);
  }
  const AlgebraSpec spec = AlgebraSpec::from_m(3);
  CHECK(spec.basis_name(0) == "e");
  CHECK(spec.basis_name(spec.v(2)) == "v2");
  CHECK(spec.basis_name(spec.z()) == "z");
}

TEST_CASE("even m is rejected") {
  CHECK_THROWS_WITH_AS(AlgebraSpec::from_m(2), "h_n requires odd m = 2n-1", PreconditionError);
  CHECK_THROWS_AS(AlgebraSpec::from_m(0), PreconditionError);
  CHECK_THROWS_AS(AlgebraSpec(0), PreconditionError);
}

TEST_CASE("bracket values") {
  const AlgebraSpec spec = AlgebraSpec::from_m(3);
  const auto basis = [&](std::size_t i) { return GalileiElement::basis(spec, i); };
  CHECK(bracket(spec, basis(spec.v(0)), basis(spec.v(3))) == basis(spec.z()));
  // [v_1, v_2] = -3 z
  GalileiElement expected(spec);
  expected[spec.z()] = -3;
  CHECK(bracket(spec, basis(spec.v(1)), basis(spec.v(2))) == expected);
  CHECK(bracket(spec, basis(spec.v(0)), basis(spec.v(1))).is_zero());
  CHECK(bracket(spec, basis(spec.v(1)), basis(spec.z())).is_zero());
  CHECK(bracket(spec, basis(spec.z()), basis(0)).is_zero());
  for (int i = 0; i <= 3; ++i) {
    GalileiElement hv(spec);
    hv[spec.v(i)] = 3 - 2 * i;
    CHECK(bracket(spec, basis(1), basis(spec.v(i))) == hv);
  }
  GalileiElement h(spec);
  h[1] = 1;
  CHECK(bracket(spec, basis(0), basis(2)) == h);
}

TEST_CASE("bracket is antisymmetric and bilinear") {
  const AlgebraSpec spec = AlgebraSpec::from_m(5);
  for (std::size_t i = 0; i < spec.dim(); ++i)
    for (std::size_t j = 0; j < spec.dim(); ++j) {
      GalileiElement neg(spec);
      for (std::size_t k = 0; k < spec.dim(); ++k) neg[k] = -basis_bracket(spec, j, i)[k];
      CHECK(basis_bracket(spec, i, j) == neg);
    }
  GalileiElement x(spec), y(spec);
  x[spec.v(0)] = 2;
  x[0] = 1;
  y[spec.v(5)] = 3;
  y[2] = -1;
  GalileiElement sum(spec);
  for (std::size_t i = 0; i < spec.dim(); ++i)
    for (std::size_t j = 0; j < spec.dim(); ++j) {
      if (x[i].is_zero() || y[j].is_zero()) continue;
      const auto& b = basis_bracket(spec, i, j);
      for (std::size_t k = 0; k < spec.dim(); ++k) sum[k] += x[i] * y[j] * b[k];
    }
  CHECK(bracket(spec, x, y) == sum);
}

TEST_CASE("Jacobi identity") {
  for (int n = 1; n <= 5; ++n) CHECK(verify_jacobi(AlgebraSpec(n)).empty());
}

TEST_CASE("Heisenberg form is sl(2)-invariant") {
  for (int n = 1; n <= 5; ++n) {
    const AlgebraSpec spec(n);
    CHECK(sl2_invariant_form_check(spec));
    const RatMatrix omega = heisenberg_form(spec);
    CHECK(omega.transpose() == -omega);
    CHECK(rank(omega) == static_cast<std::size_t>(2 * n));
  }
  // a symmetric form on V(3) is not invariant
  CHECK_FALSE(form_is_sl2_invariant(3, RatMatrix::identity(4)));
}

TEST_CASE("structure constants export") {
  const auto j = structure_constants_json(AlgebraSpec::from_m(1));
  CHECK(j.dump() == structure_constants_json(AlgebraSpec::from_m(1)).dump());
  CHECK(!j.empty());
}

}  // TEST_SUITE
