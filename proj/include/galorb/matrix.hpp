#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "galorb/error.hpp"
#include "galorb/rational.hpp"

namespace galorb {

/// Dense row-major matrix of exact rationals. Column vectors are n x 1 matrices.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Row-wise literal, e.g. Mat{{1, 0}, {0, 1}}.
  Mat(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) fail(ErrorCode::DimensionMismatch, "ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Mat zeros(std::size_t r, std::size_t c) { return Mat(r, c); }
  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Mat column(const std::vector<Rational>& v) {
    Mat m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }
  /// i-th standard basis column of length n (0-based).
  static Mat unit(std::size_t n, std::size_t i) {
    Mat m(n, 1);
    m(i, 0) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_column() const { return cols_ == 1; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  /// Entry of a column vector.
  Rational& operator[](std::size_t i) { return data_[i]; }
  const Rational& operator[](std::size_t i) const { return data_[i]; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& r) { return r.is_zero(); });
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Rational trace() const {
    if (!is_square()) fail(ErrorCode::DimensionMismatch, "trace of non-square matrix");
    Rational s;
    for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
    return s;
  }

  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) fail(ErrorCode::DimensionMismatch, "block out of range");
    Mat b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Mat& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
      fail(ErrorCode::DimensionMismatch, "block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  Mat col(std::size_t j) const { return block(0, j, rows_, 1); }
  Mat row(std::size_t i) const { return block(i, 0, 1, cols_); }

  Mat& operator+=(const Mat& o) {
    same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Mat& operator*=(const Rational& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator-(Mat a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }
  friend Mat operator*(Mat a, const Rational& s) { return a *= s; }
  friend Mat operator*(const Rational& s, Mat a) { return a *= s; }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) fail(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    Mat c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Mat& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

 private:
  void same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::DimensionMismatch, "matrix shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Horizontal concatenation [a | b].
inline Mat hcat(const Mat& a, const Mat& b) {
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  if (a.rows() != b.rows()) fail(ErrorCode::DimensionMismatch, "hcat row mismatch");
  Mat m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

/// Vertical concatenation.
inline Mat vcat(const Mat& a, const Mat& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) fail(ErrorCode::DimensionMismatch, "vcat column mismatch");
  Mat m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

/// Block-diagonal sum.
inline Mat direct_sum(const Mat& a, const Mat& b) {
  Mat m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

inline bool is_symmetric(const Mat& m) { return m.is_square() && m == m.transpose(); }

/// Result of Gauss-Jordan elimination.
struct Echelon {
  Mat R;                            ///< reduced row echelon form
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

inline Echelon rref(Mat a) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Rational inv = Rational(1) / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.R = std::move(a);
  return e;
}

inline std::size_t rank(const Mat& a) { return rref(a).pivots.size(); }

/// Basis of the right kernel, one vector per column (cols() == 0 when trivial).
inline Mat nullspace(const Mat& a) {
  Echelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Mat n(a.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    n(free[k], k) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) n(e.pivots[r], k) = -e.R(r, free[k]);
  }
  return n;
}

/// Inverse, or nullopt when singular.
inline std::optional<Mat> try_inverse(const Mat& a) {
  if (!a.is_square()) fail(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  std::size_t n = a.rows();
  if (n == 0) return Mat();
  Echelon e = rref(hcat(a, Mat::identity(n)));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  return e.R.block(0, n, n, n);
}

inline Mat inverse(const Mat& a) {
  auto inv = try_inverse(a);
  if (!inv) fail(ErrorCode::InvalidArgument, "matrix is singular");
  return *inv;
}

inline Rational determinant(Mat a) {
  if (!a.is_square()) fail(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    Rational inv = Rational(1) / a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Rational f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

/// Some solution X of A X = B, or nullopt when inconsistent.
inline std::optional<Mat> solve(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) fail(ErrorCode::DimensionMismatch, "solve row mismatch");
  Echelon e = rref(hcat(a, b));
  std::size_t n = a.cols();
  Mat x(n, b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    std::size_t c = e.pivots[r];
    if (c >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(c, j) = e.R(r, n + j);
  }
  return x;
}

inline Mat power(const Mat& a, unsigned k) {
  Mat r = Mat::identity(a.rows());
  for (unsigned i = 0; i < k; ++i) r = r * a;
  return r;
}

/// Coefficients c_0..c_n (low to high, monic) of det(x I - A), Faddeev-LeVerrier.
inline std::vector<Rational> charpoly(const Mat& a) {
  if (!a.is_square()) fail(ErrorCode::DimensionMismatch, "charpoly of non-square matrix");
  std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Mat m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Mat next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = std::move(next);
    c[n - k] = -(a * m).trace() / Rational(static_cast<long>(k));
  }
  return c;
}

/// Columns of a basis for the column space (a subset of the given columns).
inline Mat column_basis(const Mat& a) {
  Echelon e = rref(a);
  Mat b(a.rows(), 0);
  for (auto c : e.pivots) b = hcat(b, a.col(c));
  return b;
}

/**
 * Coordinates of the columns of v in the basis given by the columns of b.
 * Fails if some column of v is outside the span.
 */
inline Mat coordinates(const Mat& b, const Mat& v) {
  auto x = solve(b, v);
  if (!x || !(b * *x == v)) fail(ErrorCode::InvalidArgument, "vector outside the spanned subspace");
  return *x;
}

}  // namespace galorb
