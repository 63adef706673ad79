#pragma once

#include <map>
#include <optional>
#include <vector>

#include "uniserial/rat_matrix.hpp"

namespace uniserial {

/// Basis element of sl(2).
enum class Sl2Generator { e, h, f };

inline constexpr Sl2Generator kSl2Generators[] = {Sl2Generator::e, Sl2Generator::h, Sl2Generator::f};

/// Matrices of e, h, f on V(a) in the standard basis v_0, ..., v_a.
struct Sl2Triple {
  RatMatrix e;
  RatMatrix h;
  RatMatrix f;

  const RatMatrix& operator[](Sl2Generator s) const;
};

/// Standard-basis matrices: h v_i = (a-2i) v_i, e v_i = (a-i+1) v_{i-1},
/// f v_i = (i+1) v_{i+1}. Requires a >= 0.
Sl2Triple rep_matrices(int a);

/// dim Hom_sl2(V(k), V(a) (x) V(b)): 1 on the Clebsch-Gordan triangle, else 0.
int cg_multiplicity(int a, int b, int k);

/// The sl(2)-module Hom(V(b), V(a)) with s.T = R_a(s) T - T R_b(s).
class HomModule {
public:
  HomModule(int a, int b);

  int codomain() const { return a_; }
  int domain() const { return b_; }
  std::size_t dimension() const { return static_cast<std::size_t>((a_ + 1) * (b_ + 1)); }

  RatMatrix act(Sl2Generator s, const RatMatrix& t) const;

  /// h-weight of the elementary matrix with a 1 at (row, col).
  int weight(std::size_t row, std::size_t col) const {
    return a_ - b_ - 2 * static_cast<int>(row) + 2 * static_cast<int>(col);
  }

private:
  int a_;
  int b_;
  Sl2Triple ra_;
  Sl2Triple rb_;
};

/// X(v_0), ..., X(v_m) for an sl(2)-equivariant map V(m) -> Hom(V(b), V(a)).
struct EquivariantFamily {
  int m = 0;
  int b = 0;
  int a = 0;
  std::vector<RatMatrix> mats;
};

/// The canonical basis element of Hom_sl2(V(m), Hom(V(b), V(a))) when that
/// space is nonzero: X(v_0) is the highest-weight vector of weight m scaled
/// so its first nonzero entry (row-major) is 1, and
/// X(v_{i+1}) = f.X(v_i) / (i+1).
std::optional<EquivariantFamily> equivariant_family(int m, int b, int a);

/// X(s.v_i) == s.X(v_i) for s in {e, h, f} and every i.
bool is_equivariant(const EquivariantFamily& family);

/// Highest weights (with multiplicity) of the sl(2)-submodule of
/// Hom(V(b), V(a)) generated by the span of `mats`.
using WeightMultiset = std::map<int, int>;
WeightMultiset decompose_span(const std::vector<RatMatrix>& mats, int a, int b);

}  // namespace uniserial
