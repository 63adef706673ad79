#include "uniserial/rat_matrix.hpp"

#include <ostream>
#include <sstream>

#include "uniserial/error.hpp"

namespace uniserial {

namespace {

void require_same_shape(const RatMatrix& a, const RatMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw PreconditionError(std::string("dimension mismatch in ") + op);
}

}  // namespace

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) throw PreconditionError("entry count does not match shape");
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw PreconditionError("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) { return scalar(n, 1); }

RatMatrix RatMatrix::scalar(std::size_t n, const Rational& lambda) {
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = lambda;
  return out;
}

RatMatrix RatMatrix::column(std::vector<Rational> entries) {
  const std::size_t n = entries.size();
  return RatMatrix(n, 1, std::move(entries));
}

bool RatMatrix::is_zero() const {
  for (const auto& x : entries_)
    if (!x.is_zero()) return false;
  return true;
}

bool RatMatrix::is_scalar(Rational* lambda) const {
  if (!is_square()) return false;
  const Rational diag = rows_ ? (*this)(0, 0) : Rational();
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? diag : Rational())) return false;
  if (lambda) *lambda = diag;
  return true;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

RatMatrix RatMatrix::block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) throw PreconditionError("block out of range");
  RatMatrix out(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) out(i, j) = (*this)(row0 + i, col0 + j);
  return out;
}

void RatMatrix::set_block(std::size_t row0, std::size_t col0, const RatMatrix& b) {
  if (row0 + b.rows() > rows_ || col0 + b.cols() > cols_) throw PreconditionError("block out of range");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(row0 + i, col0 + j) = b(i, j);
}

RatMatrix RatMatrix::operator-() const {
  RatMatrix out = *this;
  for (auto& x : out.entries_) x = -x;
  return out;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
  require_same_shape(*this, o, "addition");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
  require_same_shape(*this, o, "subtraction");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& s) {
  for (auto& x : entries_) x *= s;
  return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("dimension mismatch in product");
  RatMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
    }
  return out;
}

std::string RatMatrix::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw PreconditionError("dimension mismatch in commutator");
  return a * b - b * a;
}

RowEchelon rref(const RatMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();

  // Scale each row to integers; row scaling preserves the row space.
  std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < cols; ++j) l = lcm(l, a(i, j).denominator());
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a(i, j).numerator() * (l / a(i, j).denominator());
  }

  // Bareiss: every intermediate entry is a minor of the input, so the
  // division by the previous pivot is exact.
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivots.push_back(c);
    ++r;
  }

  RatMatrix reduced(pivots.size(), cols);
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    const Integer& lead = m[k][pivots[k]];
    for (std::size_t j = 0; j < cols; ++j)
      if (m[k][j] != 0) reduced(k, j) = Rational(m[k][j], lead);
  }
  for (std::size_t k = pivots.size(); k-- > 0;) {
    for (std::size_t i = 0; i < k; ++i) {
      const Rational factor = reduced(i, pivots[k]);
      if (factor.is_zero()) continue;
      for (std::size_t j = pivots[k]; j < cols; ++j)
        if (!reduced(k, j).is_zero()) reduced(i, j) -= factor * reduced(k, j);
    }
  }
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const RatMatrix& a) { return rref(a).pivots.size(); }

std::vector<RatMatrix> kernel_basis(const RatMatrix& a) {
  const auto [reduced, pivots] = rref(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<std::vector<Rational>> raw;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(n);
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -reduced(k, f);
    raw.push_back(std::move(v));
  }
  if (raw.empty()) return {};

  std::vector<Rational> flat;
  for (auto& v : raw) flat.insert(flat.end(), v.begin(), v.end());
  const auto canon = rref(RatMatrix(raw.size(), n, std::move(flat))).reduced;

  std::vector<RatMatrix> out;
  for (std::size_t k = 0; k < canon.rows(); ++k) out.push_back(canon.block(k, 0, 1, n).transpose());
  return out;
}

RatMatrix inverse(const RatMatrix& a) {
  if (!a.is_square()) throw PreconditionError("inverse of non-square matrix");
  const std::size_t n = a.rows();
  RatMatrix aug(n, 2 * n);
  aug.set_block(0, 0, a);
  aug.set_block(0, n, RatMatrix::identity(n));
  const auto [reduced, pivots] = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw ArithmeticError("singular matrix");
  return reduced.block(0, n, n, n);
}

RatMatrix flatten_rows(const std::vector<RatMatrix>& mats) {
  if (mats.empty()) return {};
  const std::size_t width = mats.front().rows() * mats.front().cols();
  std::vector<Rational> flat;
  flat.reserve(width * mats.size());
  for (const auto& m : mats) {
    if (m.entries().size() != width) throw PreconditionError("dimension mismatch in flatten_rows");
    flat.insert(flat.end(), m.entries().begin(), m.entries().end());
  }
  return RatMatrix(mats.size(), width, std::move(flat));
}

std::size_t SpanBuilder::reduce(std::vector<Rational>& v) const {
  if (v.size() != dim_) throw PreconditionError("vector length does not match span dimension");
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Rational factor = v[pivots_[k]];
    if (factor.is_zero()) continue;
    const auto& b = basis_[k];
    for (std::size_t j = pivots_[k]; j < dim_; ++j)
      if (!b[j].is_zero()) v[j] -= factor * b[j];
  }
  for (std::size_t j = 0; j < dim_; ++j)
    if (!v[j].is_zero()) return j;
  return dim_;
}

bool SpanBuilder::add(std::vector<Rational> v) {
  const std::size_t lead = reduce(v);
  if (lead == dim_) return false;
  const Rational inv = Rational(1) / v[lead];
  for (auto& x : v) x *= inv;
  basis_.push_back(std::move(v));
  pivots_.push_back(lead);
  return true;
}

bool SpanBuilder::contains(std::vector<Rational> v) const { return reduce(v) == dim_; }

nlohmann::json to_json(const RatMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

RatMatrix rat_matrix_from_json(const nlohmann::json& j) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const auto& entries = j.at("entries");
  if (entries.size() != rows) throw ParseError("matrix JSON row count mismatch");
  RatMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (entries[i].size() != cols) throw ParseError("matrix JSON column count mismatch");
    for (std::size_t c = 0; c < cols; ++c) out(i, c) = Rational::parse(entries[i][c].get<std::string>());
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

}  // namespace uniserial
