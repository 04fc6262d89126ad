#pragma once

// Dense linear algebra over the rationals: row reduction, rank, kernels,
// inverses and subspace operations on lists of coordinate vectors.

#include <optional>
#include <utility>
#include <vector>

#include "qrcybe/rational.hpp"

namespace qrcybe {

using QVector = std::vector<Rational>;

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Matrix whose rows are the given vectors (all of length `cols`).
  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols) {
    QMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw invalid_input("row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QVector row(std::size_t i) const {
    return QVector(data_.begin() + static_cast<long>(i * cols_),
                   data_.begin() + static_cast<long>((i + 1) * cols_));
  }

  QMatrix transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw invalid_input("matrix shape mismatch");
    QMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (b(k, j) != 0) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend QMatrix operator+(QMatrix a, const QMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw invalid_input("matrix shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend QVector operator*(const QMatrix& a, const QVector& x) {
    if (a.cols_ != x.size()) throw invalid_input("matrix-vector shape mismatch");
    QVector y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        if (a(i, j) != 0 && x[j] != 0) y[i] += a(i, j) * x[j];
    return y;
  }

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  QMatrix reduced;
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

/// Reduced row echelon form.
inline RowEchelon row_reduce(QMatrix m) {
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

inline std::size_t rank(const QMatrix& m) { return row_reduce(m).pivots.size(); }

inline std::size_t rank(const std::vector<QVector>& vs, std::size_t dim) {
  if (vs.empty()) return 0;
  return rank(QMatrix::from_rows(vs, dim));
}

/// Basis of {x : m x = 0}.
inline std::vector<QVector> nullspace(const QMatrix& m) {
  const RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector x(m.cols());
    x[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

inline Rational determinant(QMatrix m) {
  if (m.rows() != m.cols()) throw invalid_input("determinant of a non-square matrix");
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

inline std::optional<QMatrix> inverse(const QMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw invalid_input("inverse of a non-square matrix");
  if (n == 0) return QMatrix();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const RowEchelon e = row_reduce(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

/// Canonical basis (nonzero RREF rows) of the span of `vs`.
inline std::vector<QVector> span_basis(const std::vector<QVector>& vs, std::size_t dim) {
  if (vs.empty()) return {};
  const RowEchelon e = row_reduce(QMatrix::from_rows(vs, dim));
  std::vector<QVector> out;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) out.push_back(e.reduced.row(r));
  return out;
}

inline bool in_span(const std::vector<QVector>& vs, const QVector& x, std::size_t dim) {
  std::vector<QVector> all = vs;
  all.push_back(x);
  return rank(all, dim) == rank(vs, dim);
}

inline bool span_contains(const std::vector<QVector>& big, const std::vector<QVector>& small,
                          std::size_t dim) {
  std::vector<QVector> all = big;
  all.insert(all.end(), small.begin(), small.end());
  return rank(all, dim) == rank(big, dim);
}

inline bool span_equal(const std::vector<QVector>& a, const std::vector<QVector>& b,
                       std::size_t dim) {
  return span_basis(a, dim) == span_basis(b, dim);
}

/// Reduced basis of a fixed span, for repeated membership tests.
class SpanMembership {
 public:
  SpanMembership(const std::vector<QVector>& vs, std::size_t dim) : dim_(dim) {
    if (vs.empty()) return;
    const RowEchelon e = row_reduce(QMatrix::from_rows(vs, dim));
    pivots_ = e.pivots;
    for (std::size_t r = 0; r < pivots_.size(); ++r) rows_.push_back(e.reduced.row(r));
  }

  std::size_t rank() const noexcept { return rows_.size(); }

  /// x minus its component along the span, in pivot coordinates.
  QVector residual(QVector x) const {
    if (x.size() != dim_) throw invalid_input("vector of wrong dimension");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational f = x[pivots_[r]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        if (rows_[r][j] != 0) x[j] -= f * rows_[r][j];
    }
    return x;
  }

  bool contains(const QVector& x) const {
    for (const auto& c : residual(x))
      if (c != 0) return false;
    return true;
  }

 private:
  std::size_t dim_;
  std::vector<std::size_t> pivots_;
  std::vector<QVector> rows_;
};

/// Basis of span(a) ∩ span(b).
inline std::vector<QVector> intersection(const std::vector<QVector>& a,
                                         const std::vector<QVector>& b, std::size_t dim) {
  const auto ba = span_basis(a, dim);
  const auto bb = span_basis(b, dim);
  if (ba.empty() || bb.empty()) return {};
  // Solve Σ x_i a_i - Σ y_j b_j = 0.
  QMatrix m(dim, ba.size() + bb.size());
  for (std::size_t i = 0; i < ba.size(); ++i)
    for (std::size_t r = 0; r < dim; ++r) m(r, i) = ba[i][r];
  for (std::size_t j = 0; j < bb.size(); ++j)
    for (std::size_t r = 0; r < dim; ++r) m(r, ba.size() + j) = -bb[j][r];
  std::vector<QVector> out;
  for (const auto& k : nullspace(m)) {
    QVector x(dim);
    for (std::size_t i = 0; i < ba.size(); ++i)
      if (k[i] != 0)
        for (std::size_t r = 0; r < dim; ++r) x[r] += k[i] * ba[i][r];
    out.push_back(std::move(x));
  }
  return span_basis(out, dim);
}

}  // namespace qrcybe
