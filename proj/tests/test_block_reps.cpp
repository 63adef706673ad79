#include <doctest.h>

#include "uniserial/block_rep.hpp"
#include "uniserial/error.hpp"
#include "uniserial/sl2.hpp"

using namespace uniserial;

namespace {

Rational binom(int n, int k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(out);
}

int sign(int i) { return i % 2 ? -1 : 1; }

RatMatrix scaled_identity_block(const BlockRep& rep) { return rep.block(rep.spec().z(), 0, 2); }

std::vector<BlockMap> radical_of(const BlockRep& rep) {
  std::vector<BlockMap> out(rep.spec().heisenberg_dim());
  for (std::size_t i = 0; i < rep.length(); ++i)
    for (std::size_t j = i + 1; j < rep.length(); ++j)
      for (std::size_t k = 0; k < out.size(); ++k) {
        const RatMatrix& b = rep.block(rep.spec().v(0) + k, i, j);
        if (!b.is_zero()) out[k][{i, j}] = b;
      }
  return out;
}

void check_all(const BlockRep& rep) {
  CHECK(verify_funca(rep).empty());
  CHECK(verify_homomorphism(rep).empty());
  CHECK(is_uniserial(rep));
  CHECK(is_faithful(rep));
}

}  // namespace

TEST_SUITE("block_reps") {

TEST_CASE("construction 1 entries") {
  for (int m = 1; m <= 9; m += 2) {
    const BlockRep rep = build_construction(1, m);
    CHECK(rep.socle() == SocleSequence{0, m, 0});
    CHECK(scaled_identity_block(rep) == RatMatrix{{2}});
    const auto x = radical_blocks(rep, 0, 1), y = radical_blocks(rep, 1, 2);
    for (int i = 0; i <= m; ++i) {
      RatMatrix xi(1, static_cast<std::size_t>(m + 1)), yi(static_cast<std::size_t>(m + 1), 1);
      xi(0, static_cast<std::size_t>(m - i)) = sign(i) * binom(m, i);
      yi(static_cast<std::size_t>(i), 0) = 1;
      CHECK(x[static_cast<std::size_t>(i)] == xi);
      CHECK(y[static_cast<std::size_t>(i)] == yi);
    }
  }
  // m = 3 row: (-a3, 3a2, -3a1, a0)
  const auto x = radical_blocks(build_construction(1, 3), 0, 1);
  CHECK(x[3] == RatMatrix{{-1, 0, 0, 0}});
  CHECK(x[2] == RatMatrix{{0, 3, 0, 0}});
  CHECK(x[1] == RatMatrix{{0, 0, -3, 0}});
  CHECK(x[0] == RatMatrix{{0, 0, 0, 1}});
}

TEST_CASE("construction 2 entries") {
  for (int m = 1; m <= 9; m += 2) {
    const BlockRep rep = build_construction(2, m);
    CHECK(rep.socle() == SocleSequence{1, m + 1, 1});
    CHECK(scaled_identity_block(rep) == RatMatrix::scalar(2, m + 2));
    const auto x = radical_blocks(rep, 0, 1), y = radical_blocks(rep, 1, 2);
    for (int i = 0; i <= m; ++i) {
      const auto col = static_cast<std::size_t>(m - i), row = static_cast<std::size_t>(i);
      RatMatrix xi(2, static_cast<std::size_t>(m + 2)), yi(static_cast<std::size_t>(m + 2), 2);
      xi(0, col) = sign(i) * binom(m, i);
      xi(1, col + 1) = sign(i) * binom(m, i);
      yi(row, 0) = m + 1 - i;
      yi(row + 1, 1) = i + 1;
      CHECK(x[row] == xi);
      CHECK(y[row] == yi);
    }
  }
}

TEST_CASE("construction 3 entries") {
  for (int m = 1; m <= 9; m += 2) {
    const BlockRep rep = build_construction(3, m);
    CHECK(rep.socle() == SocleSequence{1, m - 1, 1});
    CHECK(scaled_identity_block(rep) == RatMatrix::identity(2));
    const auto x = radical_blocks(rep, 0, 1), y = radical_blocks(rep, 1, 2);
    for (int i = 0; i <= m; ++i) {
      const auto row = static_cast<std::size_t>(i);
      RatMatrix xi(2, static_cast<std::size_t>(m)), yi(static_cast<std::size_t>(m), 2);
      if (i <= m - 1) xi(0, static_cast<std::size_t>(m - 1 - i)) = sign(i) * binom(m - 1, i);
      if (i >= 1) xi(1, static_cast<std::size_t>(m - i)) = sign(i - 1) * binom(m - 1, i - 1);
      if (i >= 1) yi(row - 1, 0) = 1;
      if (i <= m - 1) yi(row, 1) = -1;
      CHECK(x[row] == xi);
      CHECK(y[row] == yi);
    }
  }
}

TEST_CASE("constructions 4 and 5 entries") {
  for (int a = 0; a <= 6; ++a) {
    const auto n = static_cast<std::size_t>(a + 1);
    RatMatrix shift0(n, n + 1), shift1(n, n + 1), plus(n + 1, n), minus(n + 1, n);
    for (std::size_t i = 0; i < n; ++i) {
      shift0(i, i + 1) = 1;
      shift1(i, i) = -1;
      plus(i, i) = Rational(static_cast<long>(n - i));
      minus(i + 1, i) = Rational(static_cast<long>(i + 1));
    }
    const BlockRep four = build_construction(4, 1, a);
    CHECK(four.socle() == SocleSequence{a, a + 1, a});
    CHECK(scaled_identity_block(four) == RatMatrix::scalar(n, a + 2));
    CHECK(radical_blocks(four, 0, 1) == std::vector<RatMatrix>{shift0, shift1});
    CHECK(radical_blocks(four, 1, 2) == std::vector<RatMatrix>{plus, minus});

    const BlockRep five = build_construction(5, 1, a);
    CHECK(five.socle() == SocleSequence{a + 1, a, a + 1});
    CHECK(scaled_identity_block(five) == RatMatrix::scalar(n + 1, -(a + 1)));
    CHECK(radical_blocks(five, 0, 1) == std::vector<RatMatrix>{plus, minus});
    CHECK(radical_blocks(five, 1, 2) == std::vector<RatMatrix>{shift0, shift1});
  }
  // a = 0 gives the same socle as construction 1 at m = 1, and the same Z(z)
  CHECK(build_construction(4, 1, 0).socle() == build_construction(1, 1).socle());
  CHECK(scaled_identity_block(build_construction(4, 1, 0)) == scaled_identity_block(build_construction(1, 1)));
}

TEST_CASE("construction 6 entries") {
  const BlockRep rep = build_construction(6, 3);
  CHECK(rep.socle() == SocleSequence{4, 3, 4});
  CHECK(scaled_identity_block(rep) == RatMatrix::scalar(5, 6));
  const std::vector<RatMatrix> x{
      {{0, 6, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}},
      {{-6, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 3}, {0, 0, 0, 0}},
      {{0, 0, 0, 0}, {-3, 0, 0, 0}, {0, -3, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 6}},
      {{0, 0, 0, 0}, {0, 0, 0, 0}, {-1, 0, 0, 0}, {0, -3, 0, 0}, {0, 0, -6, 0}}};
  const std::vector<RatMatrix> y{
      {{0, 0, 3, 0, 0}, {0, 0, 0, 2, 0}, {0, 0, 0, 0, 1}, {0, 0, 0, 0, 0}},
      {{0, -6, 0, 0, 0}, {0, 0, -3, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 3}},
      {{3, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, -3, 0, 0}, {0, 0, 0, -6, 0}},
      {{0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 2, 0, 0, 0}, {0, 0, 3, 0, 0}}};
  CHECK(radical_blocks(rep, 0, 1) == x);
  CHECK(radical_blocks(rep, 1, 2) == y);
}

TEST_CASE("every construction is a faithful uniserial representation") {
  for (int m = 1; m <= 9; m += 2)
    for (int c = 1; c <= 3; ++c) {
      CAPTURE(c);
      CAPTURE(m);
      check_all(build_construction(c, m));
    }
  for (int a = 0; a <= 8; ++a) {
    CAPTURE(a);
    check_all(build_construction(4, 1, a));
    check_all(build_construction(5, 1, a));
  }
  check_all(build_construction(6, 3));
}

TEST_CASE("out-of-range parameters") {
  CHECK_THROWS_AS(build_construction(6, 5), PreconditionError);
  CHECK_THROWS_AS(build_construction(4, 3, 1), PreconditionError);
  CHECK_THROWS_AS(build_construction(5, 3, 1), PreconditionError);
  CHECK_THROWS_AS(build_construction(1, 2), PreconditionError);
  CHECK_THROWS_AS(build_construction(7, 1), PreconditionError);
  CHECK_THROWS_AS(build_construction(0, 1), PreconditionError);
  CHECK_THROWS_AS(build_construction(4, 1, -1), PreconditionError);
}

TEST_CASE("wrong corner scalar breaks the commutator identity") {
  const BlockRep rep = build_construction(6, 3);
  auto radical = radical_of(rep);
  radical.back()[{0, 2}] = RatMatrix::scalar(5, 5);
  const BlockRep bad = BlockRep::from_blocks(rep.spec(), rep.socle(), radical);
  const auto violations = verify_funca(bad);
  CHECK(std::any_of(violations.begin(), violations.end(), [](const FuncaViolation& v) { return v.i == 0 && v.j == 3; }));
  CHECK_FALSE(verify_homomorphism(bad).empty());
}

TEST_CASE("negating one superdiagonal map breaks the homomorphism") {
  const BlockRep rep = build_construction(4, 1, 2);
  auto radical = radical_of(rep);
  radical[1][{0, 1}] = -radical[1][{0, 1}];
  CHECK_FALSE(verify_homomorphism(BlockRep::from_blocks(rep.spec(), rep.socle(), radical)).empty());
}

TEST_CASE("uniseriality and faithfulness detect zero blocks") {
  const AlgebraSpec spec = AlgebraSpec::from_m(3);
  const std::vector<BlockMap> empty(spec.heisenberg_dim());
  const BlockRep split = BlockRep::from_blocks(spec, {0, 3}, empty);
  CHECK(verify_homomorphism(split).empty());
  CHECK_FALSE(is_uniserial(split));
  CHECK_FALSE(is_faithful(split));

  // pullback from sl(2) |x V(3): z acts by 0
  std::vector<BlockMap> pullback(spec.heisenberg_dim());
  const auto family = *equivariant_family(3, 3, 0);
  for (int i = 0; i <= 3; ++i) pullback[static_cast<std::size_t>(i)][{0, 1}] = family.mats[static_cast<std::size_t>(i)];
  const BlockRep nonfaithful = BlockRep::from_blocks(spec, {0, 3}, pullback);
  CHECK(verify_homomorphism(nonfaithful).empty());
  CHECK(is_uniserial(nonfaithful));
  CHECK_FALSE(is_faithful(nonfaithful));

  CHECK_FALSE(is_faithful(BlockRep::from_blocks(spec, {0}, empty)));

  // construction 1 with Y dropped: not uniserial, and no longer a representation
  const BlockRep one = build_construction(1, 3);
  auto radical = radical_of(one);
  for (auto& blocks : radical) blocks.erase({1, 2});
  const BlockRep broken = BlockRep::from_blocks(spec, one.socle(), radical);
  CHECK_FALSE(is_uniserial(broken));
  CHECK_FALSE(verify_homomorphism(broken).empty());
}

TEST_CASE("adapted structure is enforced") {
  const BlockRep rep = build_construction(1, 1);
  auto gens = rep.generators();
  gens[0](0, 0) = 1;  // e gets a diagonal entry
  CHECK_THROWS_AS(BlockRep(rep.spec(), rep.socle(), gens), PreconditionError);
  gens = rep.generators();
  gens[rep.spec().v(0)](1, 0) = 1;  // below the block diagonal
  CHECK_THROWS_AS(BlockRep(rep.spec(), rep.socle(), gens), PreconditionError);
  gens = rep.generators();
  gens[rep.spec().z()](0, 1) = 1;  // z on the first superdiagonal
  CHECK_THROWS_AS(BlockRep(rep.spec(), rep.socle(), gens), PreconditionError);
  gens.pop_back();
  CHECK_THROWS_AS(BlockRep(rep.spec(), rep.socle(), gens), PreconditionError);
}

TEST_CASE("z acts by scalars on the corner of every construction") {
  for (int m = 1; m <= 9; m += 2)
    for (int c = 1; c <= 3; ++c) CHECK(scaled_identity_block(build_construction(c, m)).is_scalar());
  CHECK(scaled_identity_block(build_construction(6, 3)).is_scalar());
}

TEST_CASE("duality") {
  std::vector<BlockRep> reps;
  for (int c = 1; c <= 3; ++c) reps.push_back(build_construction(c, 5));
  for (int a = 0; a <= 3; ++a) reps.push_back(build_construction(4, 1, a));
  reps.push_back(build_construction(5, 1, 2));
  reps.push_back(build_construction(6, 3));
  for (const auto& rep : reps) {
    const BlockRep d = dual(rep);
    CHECK(d.socle() == SocleSequence(rep.socle().rbegin(), rep.socle().rend()));
    CHECK(verify_homomorphism(d).empty());
    CHECK(is_uniserial(d) == is_uniserial(rep));
    CHECK(is_faithful(d));
    CHECK(dual(d).socle() == rep.socle());
  }
  // non-palindromic socle
  const AlgebraSpec spec = AlgebraSpec::from_m(3);
  std::vector<BlockMap> radical(spec.heisenberg_dim());
  const auto family = *equivariant_family(3, 2, 1);
  for (int i = 0; i <= 3; ++i) radical[static_cast<std::size_t>(i)][{0, 1}] = family.mats[static_cast<std::size_t>(i)];
  const BlockRep two = BlockRep::from_blocks(spec, {1, 2}, radical);
  const BlockRep d = dual(two);
  CHECK(d.socle() == SocleSequence{2, 1});
  CHECK(verify_homomorphism(d).empty());
  CHECK(is_uniserial(d));
}

TEST_CASE("n = 2 example") {
  const BlockRep rep = assemble_intro_example();
  CHECK(rep.socle() == SocleSequence{4, 3, 4});
  CHECK(verify_homomorphism(rep).empty());
  CHECK(is_uniserial(rep));
  CHECK(is_faithful(rep));
  const BlockRep six = build_construction(6, 3);
  CHECK(radical_blocks(rep, 0, 1)[0] == radical_blocks(six, 0, 1)[0]);
  CHECK(radical_blocks(rep, 1, 2)[0] == radical_blocks(six, 1, 2)[0]);
  CHECK(radical_blocks(rep, 0, 1) == radical_blocks(six, 0, 1));
  CHECK(radical_blocks(rep, 1, 2) == radical_blocks(six, 1, 2));
  CHECK(scaled_identity_block(rep) == RatMatrix::scalar(5, 6));
  EquivariantFamily x{3, 3, 4, radical_blocks(rep, 0, 1)}, y{3, 4, 3, radical_blocks(rep, 1, 2)};
  CHECK(is_equivariant(x));
  CHECK(is_equivariant(y));
}

TEST_CASE("json and markdown export") {
  const BlockRep rep = build_construction(2, 3);
  const auto j = to_json(rep);
  CHECK(j["m"] == 3);
  CHECK(j["socle"] == nlohmann::json{1, 4, 1});
  CHECK(j["generators"].contains("v3"));
  const BlockRep back = block_rep_from_json(j);
  CHECK(back.socle() == rep.socle());
  CHECK(back.generators() == rep.generators());
  const std::string md = to_markdown(build_construction(1, 1));
  CHECK(md.find("V(0),V(1),V(0)") != std::string::npos);
  CHECK(md.find("R_") != std::string::npos);
  CHECK(to_markdown(rep) == to_markdown(back));
}

}  // TEST_SUITE
