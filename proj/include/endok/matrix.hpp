#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "endok/field.hpp"

namespace endok {

/// Dense matrix over an exact field, row-major.
class Mat {
 public:
  Mat() = default;
  Mat(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

  static Mat identity(Field field, std::size_t n) {
    Mat m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Mat from_rows(Field field, const std::vector<Vec>& rows, std::size_t cols) {
    Mat m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw DimensionMismatch("row length mismatch");
      std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * cols);
    }
    return m;
  }

  static Mat from_cols(Field field, const std::vector<Vec>& cols, std::size_t rows) {
    Mat m(field, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != rows) throw DimensionMismatch("column length mismatch");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vec row_vec(std::size_t r) const { return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }
  Vec col_vec(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  const std::vector<Scalar>& entries() const { return data_; }

  bool is_zero() const { return endok::is_zero(data_); }

  bool operator==(const Mat& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Mat r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Scalar& a = (*this)(i, k);
        if (endok::is_zero(a)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const Scalar& b = o(k, j);
          if (!endok::is_zero(b)) r(i, j) = field_.add(r(i, j), field_.mul(a, b));
        }
      }
    return r;
  }

  Vec operator*(const Vec& v) const {
    if (cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
    Vec r(rows_, Scalar(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Scalar& a = (*this)(i, k);
        if (!endok::is_zero(a) && !endok::is_zero(v[k])) r[i] = field_.add(r[i], field_.mul(a, v[k]));
      }
    return r;
  }

  Mat operator+(const Mat& o) const {
    check_same_shape(o);
    Mat r(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.add(data_[i], o.data_[i]);
    return r;
  }

  Mat operator-(const Mat& o) const {
    check_same_shape(o);
    Mat r(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.sub(data_[i], o.data_[i]);
    return r;
  }

  Mat scaled(const Scalar& c) const {
    Mat r(*this);
    for (auto& x : r.data_) x = field_.mul(c, x);
    return r;
  }

  /// this += c * o
  void add_scaled(const Scalar& c, const Mat& o) {
    check_same_shape(o);
    if (endok::is_zero(c)) return;
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!endok::is_zero(o.data_[i])) data_[i] = field_.add(data_[i], field_.mul(c, o.data_[i]));
  }

  Mat transpose() const {
    Mat r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  /// Row-major flattening, used to treat matrices as coordinate vectors.
  Vec flatten() const { return data_; }

  static Mat unflatten(Field field, const Vec& v, std::size_t rows, std::size_t cols) {
    if (v.size() != rows * cols) throw DimensionMismatch("unflatten size mismatch");
    Mat m(field, rows, cols);
    m.data_ = v;
    return m;
  }

  /// Block placement: copies `block` with its top-left corner at (r0, c0).
  void set_block(std::size_t r0, std::size_t c0, const Mat& block) {
    for (std::size_t i = 0; i < block.rows(); ++i)
      for (std::size_t j = 0; j < block.cols(); ++j) (*this)(r0 + i, c0 + j) = block(i, j);
  }

  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Mat m(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
  }

 private:
  void check_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shape mismatch");
  }

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Mat reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row echelon form by Gauss-Jordan elimination.
inline RrefResult rref(const Mat& m) {
  const Field& f = m.field();
  Mat a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && is_zero(a(piv, c))) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    Scalar inv = f.inv(a(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = f.mul(a(r, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      Scalar factor = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!is_zero(a(r, j))) f.sub_mul(a(i, j), factor, a(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots), r};
}

inline std::size_t rank(const Mat& m) { return rref(m).rank; }

/// Basis of {x : m x = 0}, one vector per free column.
inline std::vector<Vec> kernel_basis(const Mat& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  const Field& f = m.field();
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), Scalar(0));
    v[free] = 1;
    for (std::size_t i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = f.neg(rr.reduced(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Result of solve_linear: a particular solution X (a.cols x b.cols) and a
/// basis of the kernel of a, or, for inconsistent systems, a certificate y
/// with y^T a = 0 and y^T b != 0.
struct LinearSolution {
  bool solvable = false;
  Mat particular;
  std::vector<Vec> kernel;
  Vec certificate;
};

inline LinearSolution solve_linear(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("solve_linear: row count mismatch");
  const Field& f = a.field();
  const std::size_t n = a.cols();
  Mat aug(f, a.rows(), n + b.cols());
  aug.set_block(0, 0, a);
  aug.set_block(0, n, b);
  RrefResult rr = rref(aug);
  LinearSolution out;
  for (auto p : rr.pivots) {
    if (p >= n) {
      // Inconsistent: find a left-kernel vector of a that pairs nontrivially with b.
      Mat at = a.transpose();
      for (const Vec& y : kernel_basis(at)) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
          if (!is_zero(vdot(f, y, b.col_vec(c)))) {
            out.certificate = y;
            return out;
          }
        }
      }
      throw Error("solve_linear: inconsistent system without certificate");
    }
  }
  out.solvable = true;
  out.particular = Mat(f, n, b.cols());
  for (std::size_t i = 0; i < rr.rank; ++i)
    for (std::size_t c = 0; c < b.cols(); ++c) out.particular(rr.pivots[i], c) = rr.reduced(i, n + c);
  out.kernel = kernel_basis(a);
  return out;
}

inline std::string to_string(const Mat& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + m(i, j).get_str();
    s += "]";
  }
  return s + "]";
}

}  // namespace endok
