#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "uniserial/block_rep.hpp"
#include "uniserial/sl2.hpp"
#include "uniserial/surd.hpp"

namespace uniserial {

/// Why a length-3 socle sequence carries no faithful uniserial module.
enum class RejectReason {
  c_ne_a,               // V(0) must enter Hom(V(c), V(a))
  no_hom_space,         // V(m) does not enter one superdiagonal Hom space
  nonscalar_commutator, // X(v_i)Y(v_j) - X(v_j)Y(v_i) is not a multiple of [v_i, v_j]
  lambda_zero,          // commutators vanish, so z would act trivially
};

std::string reason_str(RejectReason r);

struct Length3Outcome {
  std::optional<BlockRep> rep;
  std::optional<RejectReason> reason;
  /// Z(z) = lambda I for the canonical superdiagonal maps (set when found).
  Rational lambda;
};

/// Decides whether V(a),V(b),V(c) carries a faithful uniserial g-module. The
/// superdiagonal maps are the canonical equivariant families; any other
/// choice is a block-scalar conjugate. Found modules have Z(z) = lambda I.
Length3Outcome solve_length3_detailed(const AlgebraSpec& spec, int a, int b, int c);
std::optional<BlockRep> solve_length3(const AlgebraSpec& spec, int a, int b, int c);

/// The commutators K_ij = X(v_i)Y(v_j) - X(v_j)Y(v_i) of the canonical families.
std::vector<RatMatrix> commutator_blocks(const EquivariantFamily& x, const EquivariantFamily& y);

/// r = min(2m-2, 2a) for a even, min(2m-2, 2a-2) for a odd.
int prediction_r(int m, int a);

struct CommutatorPrediction {
  int r = 0;
  /// {m/2 r/2 m/2; a/2 b/2 a/2}
  Surd sixj_value;
  /// {r: 1} when the 6j-symbol is nonzero, else empty.
  WeightMultiset predicted_components;
};

struct CommutatorImage {
  WeightMultiset actual;
  CommutatorPrediction prediction;
};

/// Decomposes the sl(2)-module spanned by the commutators K_ij and pairs it
/// with the 6j prediction. Throws PreconditionError naming a missing Hom space.
CommutatorImage commutator_image(const AlgebraSpec& spec, int a, int b, int c);

struct ClassificationReport {
  int m = 0;
  int bound = 0;
  std::vector<std::pair<SocleSequence, BlockRep>> found;
  std::vector<std::pair<SocleSequence, RejectReason>> rejected;

  std::vector<SocleSequence> found_sequences() const;
};

/// Runs solve_length3 over 0 <= a, b, c <= bound (lexicographic order).
/// Requires bound >= m + 1.
ClassificationReport search_length3(const AlgebraSpec& spec, int bound);

/// The known length-3 list for m, restricted to entries <= bound, sorted.
std::vector<SocleSequence> expected_length3(int m, int bound);

/// Socle sequence (or its reverse) of a uniserial sl(2) |x V(m)-module:
///   length 1: any; length 2: a+b = m mod 2, 0 <= b-a <= m <= a+b;
///   length 3: step-m progression, or (0, m, c) with c = 2m mod 4, c <= 2m;
///   length 4: step-m progression, or (0, m, m, 0) with m = 0 mod 4;
///   length >= 5: step-m progression.
bool cs_admissible(int m, std::span<const int> seq);

struct Length4Obstruction {
  SocleSequence seq;
  /// Block (1,4) of [R(v_k), R(z)] for k = 0..m.
  std::vector<RatMatrix> corner_blocks;
  bool nonzero = false;
};

/// For m = 1 and seq one of (a,a+1,a,a+1), (b+1,b,b+1,b), (a,a+1,a,a-1),
/// (b+1,b,b+1,b+2): assembles the only possible candidate from the explicit
/// length-3 modules and returns the corner of [R(v_k), R(z)]. Since
/// [v_k, z] = 0, a nonzero corner rules the sequence out.
///
/// Each corner term is a product of one superdiagonal block and one z-block,
/// hence carries the same monomial in the three free superdiagonal scalars;
/// fixing them to the explicit modules' values does not affect vanishing.
Length4Obstruction length4_obstruction(const AlgebraSpec& spec, const SocleSequence& seq);

struct Length4Report {
  int m = 0;
  int bound = 0;
  std::size_t examined = 0;
  std::size_t not_uniserial = 0;      // some window is neither faithful nor admissible
  std::size_t z_trivial = 0;          // both windows non-faithful and d != a
  std::size_t case1 = 0;              // a window faithful, m >= 3
  std::size_t case2 = 0;              // a window faithful, m = 1 (obstruction run)
  std::size_t case3 = 0;              // both windows non-faithful with d = a
  std::vector<Length4Obstruction> obstructions;
  std::vector<SocleSequence> survivors;
};

Length4Report length4_search(const AlgebraSpec& spec, int bound);

struct LengthGe5Report {
  int m = 0;
  int ell = 0;
  int bound = 0;
  std::size_t examined = 0;
  std::size_t window_admissible = 0;
  std::vector<SocleSequence> non_progressions;
  std::vector<SocleSequence> faithful_candidates;
};

/// Sequences of length ell >= 5 whose every length-(ell-1) window is
/// admissible as a non-faithful module must be step-m progressions with
/// distinct entries, so z acts trivially.
LengthGe5Report length_ge5_check(const AlgebraSpec& spec, int ell, int bound);

/// Non-negative pairs (a, b) <= bound with a(a+2) = b(b+2) + 9.
std::vector<std::pair<int, int>> eq_ab_solutions(int bound);

}  // namespace uniserial
