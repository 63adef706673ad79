#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "uniserial/rational.hpp"

namespace uniserial {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  /// Row-wise literal, e.g. {{0, 1}, {0, 0}}.
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix zero(std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols); }
  static RatMatrix identity(std::size_t n);
  static RatMatrix scalar(std::size_t n, const Rational& lambda);
  static RatMatrix column(std::vector<Rational> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return entries_.empty(); }

  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const std::vector<Rational>& entries() const { return entries_; }

  bool is_zero() const;
  /// True iff this is lambda * I for some lambda (possibly zero); sets *lambda.
  bool is_scalar(Rational* lambda = nullptr) const;

  RatMatrix transpose() const;
  RatMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  void set_block(std::size_t row0, std::size_t col0, const RatMatrix& b);

  RatMatrix operator-() const;
  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);
  RatMatrix& operator*=(const Rational& s);

  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(RatMatrix a, const Rational& s) { return a *= s; }
  friend RatMatrix operator*(const Rational& s, RatMatrix a) { return a *= s; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

  std::string str() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// AB - BA. Both must be square of equal size.
RatMatrix commutator(const RatMatrix& a, const RatMatrix& b);

/// Result of reduced row echelon reduction.
struct RowEchelon {
  RatMatrix reduced;                 // RREF, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each kept row
};

/// Fraction-free (Bareiss) elimination followed by back-substitution.
RowEchelon rref(const RatMatrix& a);

std::size_t rank(const RatMatrix& a);

/// Canonical basis of the right null space as column vectors: the rows of
/// the RREF of the kernel, so each vector has leading entry 1.
std::vector<RatMatrix> kernel_basis(const RatMatrix& a);

/// Throws ArithmeticError when singular.
RatMatrix inverse(const RatMatrix& a);

/// Stacks the entries of each matrix (row-major) as the rows of one matrix.
RatMatrix flatten_rows(const std::vector<RatMatrix>& mats);

/// Incrementally maintained span of vectors, kept in reduced echelon form.
class SpanBuilder {
public:
  explicit SpanBuilder(std::size_t dim) : dim_(dim) {}

  /// Adds v (length dim). Returns true iff v was outside the span.
  bool add(std::vector<Rational> v);
  bool contains(std::vector<Rational> v) const;
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<std::vector<Rational>>& basis() const { return basis_; }

private:
  // Eliminates pivots of the current basis from v; returns first nonzero index or dim_.
  std::size_t reduce(std::vector<Rational>& v) const;

  std::size_t dim_;
  std::vector<std::vector<Rational>> basis_;
  std::vector<std::size_t> pivots_;
};

nlohmann::json to_json(const RatMatrix& m);
RatMatrix rat_matrix_from_json(const nlohmann::json& j);

std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

}  // namespace uniserial
