#pragma once

#include "signrank/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace signrank {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw std::invalid_argument("RationalMatrix: ragged rows");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
    RationalMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("RationalMatrix: ragged rows");
      std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * cols));
    }
    return m;
  }

  static RationalMatrix from_columns(const std::vector<RationalVector>& cols, std::size_t rows) {
    RationalMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw std::invalid_argument("RationalMatrix: ragged columns");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalVector row(std::size_t i) const {
    return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  RationalVector column(std::size_t j) const {
    RationalVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  RationalMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("RationalMatrix::block");
    RationalMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
  }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

inline RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Rational& x = a(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(l, j).is_zero()) c(i, j) += x * b(l, j);
    }
  return c;
}

inline RationalVector operator*(const RationalMatrix& a, const RationalVector& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
  RationalVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero() && !x[j].is_zero()) y[i] += a(i, j) * x[j];
  return y;
}

inline RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix difference: dimension mismatch");
  RationalMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by Gauss-Jordan elimination. Zero rows sink to the bottom.
inline RowEchelon rref(RationalMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t pivot_row = lead;
    while (pivot_row < m.rows() && m(pivot_row, col).is_zero()) ++pivot_row;
    if (pivot_row == m.rows()) continue;
    if (pivot_row != lead)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot_row, j), m(lead, j));
    const Rational inv = 1 / m(lead, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(lead, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead || m(i, col).is_zero()) continue;
      const Rational factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!m(lead, j).is_zero()) m(i, j) -= factor * m(lead, j);
    }
    pivots.push_back(col);
    ++lead;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const RationalMatrix& m) { return rref(m).pivots.size(); }

/// A subspace of Q^n stored as the column space of a full-column-rank basis.
class RationalSubspace {
 public:
  RationalSubspace() = default;

  /// Throws std::invalid_argument unless `basis` has full column rank.
  explicit RationalSubspace(RationalMatrix basis) : ambient_(basis.rows()), basis_(std::move(basis)) {
    if (rank(basis_) != basis_.cols()) throw std::invalid_argument("RationalSubspace: basis is not full column rank");
  }

  static RationalSubspace zero(std::size_t n) {
    RationalSubspace s;
    s.ambient_ = n;
    s.basis_ = RationalMatrix(n, 0);
    return s;
  }

  static RationalSubspace full(std::size_t n) { return RationalSubspace(RationalMatrix::identity(n)); }

  /// Column space of an arbitrary matrix; keeps the pivot columns as the basis.
  static RationalSubspace column_space(const RationalMatrix& generators) {
    const auto pivots = rref(generators).pivots;
    std::vector<RationalVector> cols;
    cols.reserve(pivots.size());
    for (auto p : pivots) cols.push_back(generators.column(p));
    RationalSubspace s;
    s.ambient_ = generators.rows();
    s.basis_ = RationalMatrix::from_columns(cols, generators.rows());
    return s;
  }

  static RationalSubspace span(std::size_t n, const std::vector<RationalVector>& vectors) {
    return column_space(RationalMatrix::from_columns(vectors, n));
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  const RationalMatrix& basis() const { return basis_; }

  /// Basis-independent canonical form: rref of the transposed basis.
  RationalMatrix canonical_basis() const {
    auto r = rref(basis_.transpose()).reduced;
    return r.block(0, 0, dim(), ambient_);
  }

  bool same_subspace(const RationalSubspace& other) const {
    return ambient_ == other.ambient_ && dim() == other.dim() && canonical_basis() == other.canonical_basis();
  }

 private:
  std::size_t ambient_ = 0;
  RationalMatrix basis_;
};

/// Basis of {x : m x = 0}; dimension is cols(m) - rank(m).
inline RationalSubspace nullspace_basis(const RationalMatrix& m) {
  const auto [reduced, pivots] = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, free);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return RationalSubspace::zero(n);
  return RationalSubspace(RationalMatrix::from_columns(basis, n));
}

inline RationalSubspace orth_complement(const RationalSubspace& l) {
  if (l.dim() == 0) return RationalSubspace::full(l.ambient_dim());
  return nullspace_basis(l.basis().transpose());
}

/// Returns E - B D^{-1} C for the partition [[D, C], [B, E]] with D the leading
/// n x n block. Throws std::domain_error when D is singular.
inline RationalMatrix schur_complement(const RationalMatrix& m, std::size_t n) {
  if (n > m.rows() || n > m.cols()) throw std::invalid_argument("schur_complement: block larger than matrix");
  const std::size_t p = m.rows() - n;
  const std::size_t q = m.cols() - n;
  // Row-reduce [D | C] to [I | D^{-1} C].
  RationalMatrix dc = m.block(0, 0, n, m.cols());
  auto [reduced, pivots] = rref(dc);
  if (n > 0 && (pivots.size() < n || pivots[n - 1] != n - 1))
    throw std::domain_error("schur_complement: leading block is singular");
  RationalMatrix dinv_c = reduced.block(0, n, n, q);
  RationalMatrix b = m.block(n, 0, p, n);
  RationalMatrix e = m.block(n, n, p, q);
  return e - b * dinv_c;
}

}  // namespace signrank
