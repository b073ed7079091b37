#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "endok/matrix.hpp"

namespace endok {

/// Incrementally maintained reduced row echelon basis. Rows stay fully
/// reduced after every insertion, so membership and reduction are a single
/// pass over the pivots.
class Echelon {
 public:
  Echelon() = default;
  Echelon(Field field, std::size_t ambient) : field_(field), ambient_(ambient) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  const Field& field() const { return field_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Zeroes the pivot entries of v by subtracting basis rows.
  Vec reduce(Vec v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t p = pivots_[r];
      if (is_zero(v[p])) continue;
      Scalar c = v[p];
      const Vec& row = rows_[r];
      for (std::size_t j = p; j < ambient_; ++j)
        if (!is_zero(row[j])) field_.sub_mul(v[j], c, row[j]);
    }
    return v;
  }

  bool contains(const Vec& v) const { return is_zero(reduce(v)); }

  /// Adds v to the span. Returns false when v was already in it.
  bool insert(const Vec& input) {
    if (input.size() != ambient_) throw DimensionMismatch("echelon insert: wrong length");
    Vec v = reduce(input);
    std::size_t p = 0;
    while (p < ambient_ && is_zero(v[p])) ++p;
    if (p == ambient_) return false;
    Scalar inv = field_.inv(v[p]);
    for (std::size_t j = p; j < ambient_; ++j)
      if (!is_zero(v[j])) v[j] = field_.mul(v[j], inv);
    for (auto& row : rows_) {
      if (is_zero(row[p])) continue;
      Scalar c = row[p];
      for (std::size_t j = p; j < ambient_; ++j)
        if (!is_zero(v[j])) field_.sub_mul(row[j], c, v[j]);
    }
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    auto idx = static_cast<std::size_t>(it - pivots_.begin());
    pivots_.insert(it, p);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
    return true;
  }

 private:
  Field field_;
  std::size_t ambient_ = 0;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// A subspace of k^n in canonical form: its basis is the unique reduced row
/// echelon basis, so equal subspaces have identical representations.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(Field field, std::size_t ambient) {
    Subspace s;
    s.ech_ = Echelon(field, ambient);
    return s;
  }

  static Subspace full(Field field, std::size_t ambient) {
    Subspace s = zero(field, ambient);
    for (std::size_t i = 0; i < ambient; ++i) s.ech_.insert(unit_vec(ambient, i));
    return s;
  }

  static Subspace span(Field field, std::size_t ambient, const std::vector<Vec>& vectors) {
    Subspace s = zero(field, ambient);
    for (const auto& v : vectors) s.ech_.insert(v);
    return s;
  }

  static Subspace from_echelon(Echelon e) {
    Subspace s;
    s.ech_ = std::move(e);
    return s;
  }

  const Field& field() const { return ech_.field(); }
  std::size_t dim() const { return ech_.rank(); }
  std::size_t ambient_dim() const { return ech_.ambient_dim(); }
  const std::vector<Vec>& basis() const { return ech_.rows(); }
  const std::vector<std::size_t>& pivots() const { return ech_.pivots(); }
  const Echelon& echelon() const { return ech_; }

  bool contains(const Vec& v) const {
    check_len(v);
    return ech_.contains(v);
  }

  bool contains(const Subspace& o) const {
    check_same(o);
    for (const auto& v : o.basis())
      if (!contains(v)) return false;
    return true;
  }

  /// Canonical coset representative of v modulo this subspace.
  Vec reduce(const Vec& v) const {
    check_len(v);
    return ech_.reduce(v);
  }

  /// Coordinates of a member with respect to the canonical basis.
  Vec coords(const Vec& v) const {
    check_len(v);
    if (!ech_.contains(v)) throw Error("vector is not in the subspace");
    Vec c(dim());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots()[i]];
    return c;
  }

  /// Coordinates read off the pivots, for vectors known to be members.
  Vec pivot_coords(const Vec& v) const {
    check_len(v);
    Vec c(dim());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots()[i]];
    return c;
  }

  Vec from_coords(const Vec& c) const {
    Vec v = zero_vec(ambient_dim());
    for (std::size_t i = 0; i < dim(); ++i) vaxpy(field(), v, c[i], basis()[i]);
    return v;
  }

  /// Standard basis columns not used as pivots; their images span a
  /// complement and index the quotient coordinates.
  std::vector<std::size_t> complement_columns() const {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t c = 0; c < ambient_dim(); ++c) {
      if (k < pivots().size() && pivots()[k] == c) {
        ++k;
        continue;
      }
      out.push_back(c);
    }
    return out;
  }

  /// Coordinates of the class of v in the quotient k^n / this.
  Vec quotient_coords(const Vec& v) const {
    Vec r = reduce(v);
    auto cols = complement_columns();
    Vec out(cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i) out[i] = r[cols[i]];
    return out;
  }

  Subspace sum(const Subspace& o) const {
    check_same(o);
    Subspace s = *this;
    for (const auto& v : o.basis()) s.ech_.insert(v);
    return s;
  }

  Subspace intersect(const Subspace& o) const {
    check_same(o);
    const Field& f = field();
    if (dim() == 0 || o.dim() == 0) return zero(f, ambient_dim());
    // Functionals vanishing on o, then members of this killed by all of them.
    Mat ob = Mat::from_rows(f, o.basis(), ambient_dim());
    std::vector<Vec> annihilator = kernel_basis(ob);
    if (annihilator.empty()) return *this;
    Mat pairing(f, annihilator.size(), dim());
    for (std::size_t i = 0; i < annihilator.size(); ++i)
      for (std::size_t j = 0; j < dim(); ++j) pairing(i, j) = vdot(f, annihilator[i], basis()[j]);
    std::vector<Vec> vs;
    for (const Vec& c : kernel_basis(pairing)) vs.push_back(from_coords(c));
    return span(f, ambient_dim(), vs);
  }

  bool operator==(const Subspace& o) const {
    return field() == o.field() && ambient_dim() == o.ambient_dim() && pivots() == o.pivots() &&
           basis() == o.basis();
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  void check_len(const Vec& v) const {
    if (v.size() != ambient_dim()) throw DimensionMismatch("vector length does not match ambient dimension");
  }
  void check_same(const Subspace& o) const {
    if (o.ambient_dim() != ambient_dim()) throw DimensionMismatch("subspaces live in different ambient spaces");
  }

  Echelon ech_;
};

/// Basis of the solution space of the homogeneous system whose rows span
/// the given echelon form.
inline std::vector<Vec> kernel_basis(const Echelon& e) {
  const Field& f = e.field();
  const std::size_t n = e.ambient_dim();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots()) is_pivot[p] = true;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, Scalar(0));
    v[free] = 1;
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots()[r]] = f.neg(e.rows()[r][free]);
    out.push_back(std::move(v));
  }
  return out;
}

/// Operation selector mirroring the command-level surface of the kernel.
enum class SubspaceOp { Sum, Intersect, Member, QuotientBasis };

/// Image of a matrix as a subspace of its target.
inline Subspace image(const Mat& m) {
  std::vector<Vec> cols;
  cols.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.col_vec(c));
  return Subspace::span(m.field(), m.rows(), cols);
}

inline Subspace kernel(const Mat& m) { return Subspace::span(m.field(), m.cols(), kernel_basis(m)); }

}  // namespace endok
