#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "uniserial/galilei.hpp"
#include "uniserial/rat_matrix.hpp"

namespace uniserial {

/// Highest weights a_1, ..., a_l of the composition factors, bottom first.
using SocleSequence = std::vector<int>;

std::string socle_str(const SocleSequence& seq);

/// Nonzero blocks of one radical generator, keyed by grid position (row, col).
using BlockMap = std::map<std::pair<std::size_t, std::size_t>, RatMatrix>;

/// Matrix representation of g in a basis adapted to a composition series.
/// Each generator's matrix is stored whole and cut into its block grid.
///
/// Construction enforces the adapted shape: sl(2) generators are block
/// diagonal with the standard matrices of V(a_i); v_k is strictly block
/// upper triangular; z is supported on blocks (i, j) with j - i >= 2.
/// Whether the matrices form a representation is a separate check
/// (verify_homomorphism).
class BlockRep {
public:
  /// `generators` holds one full matrix per basis element of g, in basis order.
  BlockRep(AlgebraSpec spec, SocleSequence socle, std::vector<RatMatrix> generators);

  /// Fills in the sl(2) diagonal; `radical` holds the blocks of v_0..v_m, z
  /// (size m + 2).
  static BlockRep from_blocks(const AlgebraSpec& spec, SocleSequence socle, const std::vector<BlockMap>& radical);

  const AlgebraSpec& spec() const { return spec_; }
  const SocleSequence& socle() const { return socle_; }
  std::size_t length() const { return socle_.size(); }
  std::size_t dimension() const { return offsets_.back(); }
  std::size_t offset(std::size_t i) const { return offsets_[i]; }
  std::size_t block_size(std::size_t i) const { return offsets_[i + 1] - offsets_[i]; }

  const RatMatrix& generator(std::size_t index) const { return generators_.at(index); }
  const std::vector<RatMatrix>& generators() const { return generators_; }
  const RatMatrix& block(std::size_t generator, std::size_t i, std::size_t j) const {
    return blocks_.at(generator).at(i * length() + j);
  }

  /// R(x) for an arbitrary element.
  RatMatrix image(const GalileiElement& x) const;

private:
  AlgebraSpec spec_;
  SocleSequence socle_;
  std::vector<std::size_t> offsets_;
  std::vector<RatMatrix> generators_;
  std::vector<std::vector<RatMatrix>> blocks_;
};

/// Length-3 representation with superdiagonal maps X (V(b) -> V(a)) and
/// Y (V(c) -> V(b)) given on v_0..v_m and corner block Z(z).
BlockRep make_length3(const AlgebraSpec& spec, int a, int b, int c, const std::vector<RatMatrix>& x,
                      const std::vector<RatMatrix>& y, const RatMatrix& z_of_z);

/// The explicit faithful uniserial modules, numbered:
///   1: V(0),V(m),V(0)        2: V(1),V(m+1),V(1)     3: V(1),V(m-1),V(1)
///   4: m=1, V(a),V(a+1),V(a) 5: m=1, V(a+1),V(a),V(a+1)
///   6: m=3, V(4),V(3),V(4)
/// `a` is used by cases 4 and 5 only. Throws PreconditionError out of range.
BlockRep build_construction(int case_number, int m, int a = 0);

/// The sl(2) |x h_2 module with factors V(4),V(3),V(4) assembled from its
/// displayed linear forms in a_0..a_3; the corner block is forced by
/// X(v_0)Y(v_3) - X(v_3)Y(v_0) = Z([v_0, v_3]) = Z(z).
BlockRep assemble_intro_example();

struct FuncaViolation {
  int i, j;
};

/// Checks X(v_i)Y(v_j) - X(v_j)Y(v_i) = Z([v_i, v_j]) for all i, j.
/// Requires length 3.
std::vector<FuncaViolation> verify_funca(const BlockRep& rep);

struct HomomorphismViolation {
  std::size_t x, y;
};

/// Ordered basis pairs (x, y) with R([x, y]) != [R(x), R(y)].
std::vector<HomomorphismViolation> verify_homomorphism(const BlockRep& rep);

/// No first-superdiagonal block is zero on every radical generator.
bool is_uniserial(const BlockRep& rep);

/// The generator matrices are linearly independent.
bool is_faithful(const BlockRep& rep);

/// x -> -R(x)^T, rewritten in an adapted standard basis; the socle
/// sequence is reversed.
BlockRep dual(const BlockRep& rep);

/// The matrices X(v_0..v_m) of block (i, j) of the radical generators.
std::vector<RatMatrix> radical_blocks(const BlockRep& rep, std::size_t i, std::size_t j);

nlohmann::json to_json(const BlockRep& rep);
BlockRep block_rep_from_json(const nlohmann::json& j);

/// Markdown rendering of R(sum a_i v_i + t z) in block layout.
std::string to_markdown(const BlockRep& rep);

}  // namespace uniserial
