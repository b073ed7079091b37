#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "endok/matrix.hpp"
#include "endok/subspace.hpp"

namespace endok {

/// One nonzero structure constant: coefficient `value` on basis vector `index`.
struct Term {
  std::size_t index;
  Scalar value;
  bool operator==(const Term& o) const { return index == o.index && value == o.value; }
};

using Product = std::vector<Term>;

/// How an algebra came about. `blocks` records named index sets, e.g. the
/// basis positions of each block of a matrix ring.
struct Provenance {
  std::string kind = "structure-constants";
  std::string detail;
  std::vector<std::pair<std::string, std::vector<std::size_t>>> blocks;
};

/// Finite-dimensional unital associative algebra given by sparse structure
/// constants: b_i b_j = sum over table(i, j) of value * b_index.
class Algebra {
 public:
  Algebra(Field field, std::size_t dim, std::vector<Product> table, Vec unit,
          std::vector<std::string> labels = {}, Provenance provenance = {})
      : field_(field), dim_(dim), table_(std::move(table)), unit_(std::move(unit)),
        labels_(std::move(labels)), provenance_(std::move(provenance)) {
    if (table_.size() != dim_ * dim_) throw DimensionMismatch("structure table has wrong size");
    if (unit_.size() != dim_) throw DimensionMismatch("unit has wrong length");
    if (labels_.empty())
      for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("b" + std::to_string(i));
    if (labels_.size() != dim_) throw DimensionMismatch("label count differs from dimension");
    for (auto& p : table_) normalize(p);
  }

  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Vec& unit() const { return unit_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const Provenance& provenance() const { return provenance_; }
  const Product& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  const std::vector<Product>& table() const { return table_; }

  std::optional<std::size_t> index_of(const std::string& label) const {
    for (std::size_t i = 0; i < dim_; ++i)
      if (labels_[i] == label) return i;
    return std::nullopt;
  }

  Vec basis(std::size_t i) const { return unit_vec(dim_, i); }
  Vec zero() const { return zero_vec(dim_); }

  Vec mul(const Vec& x, const Vec& y) const {
    check(x);
    check(y);
    Vec r = zero_vec(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (is_zero(y[j])) continue;
        const Product& p = product(i, j);
        if (p.empty()) continue;
        Scalar c = field_.mul(x[i], y[j]);
        for (const Term& t : p) r[t.index] = field_.add(r[t.index], field_.mul(c, t.value));
      }
    }
    return r;
  }

  Vec mul_basis(std::size_t i, std::size_t j) const {
    Vec r = zero_vec(dim_);
    for (const Term& t : product(i, j)) r[t.index] = t.value;
    return r;
  }

  Vec add(const Vec& x, const Vec& y) const { return vadd(field_, x, y); }
  Vec sub(const Vec& x, const Vec& y) const { return vsub(field_, x, y); }
  Vec scale(const Scalar& c, const Vec& x) const { return vscale(field_, c, x); }

  /// Matrix of y -> x y; column j holds x b_j.
  Mat left_mult(const Vec& x) const {
    check(x);
    Mat m(field_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        for (const Term& t : product(i, j)) m(t.index, j) = field_.add(m(t.index, j), field_.mul(x[i], t.value));
    }
    return m;
  }

  /// Matrix of y -> y x; column j holds b_j x.
  Mat right_mult(const Vec& x) const {
    check(x);
    Mat m(field_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        for (const Term& t : product(j, i)) m(t.index, j) = field_.add(m(t.index, j), field_.mul(x[i], t.value));
    }
    return m;
  }

  bool is_idempotent(const Vec& e) const { return mul(e, e) == e; }

  bool is_commutative() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        if (!same_product(product(i, j), product(j, i))) return false;
    return true;
  }

  /// Basis elements generating the algebra (together with 1), chosen
  /// greedily. Cached.
  const std::vector<Vec>& generators() const {
    std::call_once(gen_once_, [this] { generators_ = compute_generators(); });
    return generators_;
  }

  /// Supplies a known generating set, skipping the greedy computation.
  void set_generators(std::vector<Vec> gens) const {
    std::call_once(gen_once_, [&] { generators_ = std::move(gens); });
  }

  /// Lazily computed radical; the computation lives with the structure
  /// theory and is passed in.
  template <class F>
  const Subspace& cached_radical(F compute) const {
    std::call_once(rad_once_, [&] { radical_ = compute(*this); });
    return *radical_;
  }

  /// Lazily computed projective/simple data, type-erased so that the
  /// algebra layer does not depend on the module layer.
  template <class T, class F>
  const T& cached_projectives(F compute) const {
    std::call_once(proj_once_, [&] { projectives_ = std::make_shared<const T>(compute(*this)); });
    return *static_cast<const T*>(projectives_.get());
  }

  /// Structural equality: same field, dimension, table and unit.
  bool same_structure(const Algebra& o) const {
    if (this == &o) return true;
    if (field_ != o.field_ || dim_ != o.dim_ || unit_ != o.unit_) return false;
    for (std::size_t i = 0; i < table_.size(); ++i)
      if (!same_product(table_[i], o.table_[i])) return false;
    return true;
  }

  std::string element_to_string(const Vec& x) const {
    std::string s;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (is_zero(x[i])) continue;
      if (!s.empty()) s += " + ";
      if (x[i] != 1) s += x[i].get_str() + "*";
      s += labels_[i];
    }
    return s.empty() ? "0" : s;
  }

 private:
  void check(const Vec& x) const {
    if (x.size() != dim_) throw DimensionMismatch("element length does not match algebra dimension");
  }

  /// Sorted by index, duplicates merged, zeros dropped.
  void normalize(Product& p) const {
    std::sort(p.begin(), p.end(), [](const Term& x, const Term& y) { return x.index < y.index; });
    Product q;
    for (auto& t : p) {
      if (!q.empty() && q.back().index == t.index)
        q.back().value = field_.add(q.back().value, t.value);
      else
        q.push_back(t);
    }
    std::erase_if(q, [](const Term& t) { return is_zero(t.value); });
    p = std::move(q);
  }

  static bool same_product(const Product& a, const Product& b) { return a == b; }

  /// Span of all words in gens (and 1).
  Echelon closure(const std::vector<Vec>& gens) const {
    Echelon e(field_, dim_);
    std::deque<Vec> queue;
    if (e.insert(unit_)) queue.push_back(unit_);
    while (!queue.empty()) {
      Vec w = std::move(queue.front());
      queue.pop_front();
      for (const Vec& g : gens) {
        Vec p = mul(w, g);
        if (e.insert(p)) queue.push_back(std::move(p));
      }
    }
    return e;
  }

  std::vector<Vec> compute_generators() const {
    std::vector<Vec> gens;
    Echelon span = closure(gens);
    for (std::size_t i = 0; i < dim_ && span.rank() < dim_; ++i) {
      Vec b = basis(i);
      if (span.contains(b)) continue;
      gens.push_back(std::move(b));
      span = closure(gens);
    }
    return gens;
  }

  Field field_;
  std::size_t dim_;
  std::vector<Product> table_;
  Vec unit_;
  std::vector<std::string> labels_;
  Provenance provenance_;

  mutable std::once_flag gen_once_;
  mutable std::vector<Vec> generators_;
  mutable std::once_flag rad_once_;
  mutable std::optional<Subspace> radical_;
  mutable std::once_flag proj_once_;
  mutable std::shared_ptr<const void> projectives_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Element of an algebra together with its parent.
struct AlgElement {
  AlgebraPtr parent;
  Vec coords;
};

/// Dense structure constants c[i][j][k] to sparse table.
inline std::vector<Product> sparse_table(const Field& f, std::size_t n,
                                         const std::vector<std::vector<Vec>>& dense) {
  std::vector<Product> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar v = f.from(dense[i][j][k]);
        if (!is_zero(v)) t[i * n + j].push_back({k, v});
      }
  return t;
}

/// Checks associativity on all basis triples and the unit axioms.
inline void validate_algebra(const Algebra& a) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    Vec l = a.mul(a.unit(), a.basis(i));
    Vec r = a.mul(a.basis(i), a.unit());
    if (l != a.basis(i) || r != a.basis(i)) throw UnitViolation(i);
  }
  Vec diff(n);
  std::vector<std::size_t> touched;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Product& ij = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        touched.clear();
        for (const Term& t : ij)
          for (const Term& u : a.product(t.index, k)) {
            diff[u.index] = f.add(diff[u.index], f.mul(t.value, u.value));
            touched.push_back(u.index);
          }
        for (const Term& t : a.product(j, k))
          for (const Term& u : a.product(i, t.index)) {
            diff[u.index] = f.sub(diff[u.index], f.mul(t.value, u.value));
            touched.push_back(u.index);
          }
        bool ok = true;
        for (std::size_t x : touched) {
          ok = ok && is_zero(diff[x]);
          diff[x] = 0;
        }
        if (!ok) throw AssociativityViolation(i, j, k);
      }
    }
}

inline AlgebraPtr make_algebra(Field field, std::size_t dim, std::vector<Product> table, Vec unit,
                               std::vector<std::string> labels = {}, Provenance provenance = {}) {
  for (auto& p : table) {
    Product q;
    for (auto& t : p) {
      if (t.index >= dim) throw DimensionMismatch("structure constant index out of range");
      Scalar v = field.from(t.value);
      if (!is_zero(v)) q.push_back({t.index, v});
    }
    p = std::move(q);
  }
  for (auto& u : unit) u = field.from(u);
  auto a = std::make_shared<const Algebra>(field, dim, std::move(table), std::move(unit), std::move(labels),
                                           std::move(provenance));
  validate_algebra(*a);
  return a;
}

/// The ground field as a one-dimensional algebra.
inline AlgebraPtr ground_field(Field f) {
  return make_algebra(f, 1, {{{0, Scalar(1)}}}, {Scalar(1)}, {"1"}, {"ground-field", f.name(), {}});
}

inline AlgebraPtr zero_algebra(Field f) {
  return make_algebra(f, 0, {}, {}, {}, {"zero", "", {}});
}

/// Algebra structure on a subspace closed under multiplication, in the
/// canonical basis of the subspace.
inline AlgebraPtr induced_algebra(const Algebra& a, const Subspace& s, const Vec& unit_in_a,
                                  std::vector<std::string> labels, Provenance prov) {
  const std::size_t m = s.dim();
  std::vector<Product> table(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      Vec p = a.mul(s.basis()[x], s.basis()[y]);
      if (!s.contains(p)) throw Error("subspace is not closed under multiplication");
      Vec c = s.coords(p);
      for (std::size_t k = 0; k < m; ++k)
        if (!is_zero(c[k])) table[x * m + y].push_back({k, c[k]});
    }
  return make_algebra(a.field(), m, std::move(table), s.coords(unit_in_a), std::move(labels), std::move(prov));
}

inline AlgebraPtr opposite(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Product> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = a.product(j, i);
  Provenance p{"opposite", a.provenance().kind, a.provenance().blocks};
  return make_algebra(a.field(), n, std::move(t), a.unit(), a.labels(), std::move(p));
}

/// A subalgebra-like object embedded in a parent algebra.
struct Embedded {
  AlgebraPtr algebra;
  Subspace image;  ///< the subspace of the parent; algebra basis = image.basis()

  Vec to_parent(const Vec& x) const { return image.from_coords(x); }
  Vec from_parent(const Vec& y) const { return image.coords(y); }
};

inline std::vector<std::string> pivot_labels(const Algebra& a, const Subspace& s) {
  std::vector<std::string> out;
  for (std::size_t p : s.pivots()) out.push_back(a.label(p));
  return out;
}

/// The corner eAe with unit e.
inline Embedded corner(const Algebra& a, const Vec& e) {
  if (!a.is_idempotent(e)) throw NotIdempotent();
  std::vector<Vec> vs;
  for (std::size_t i = 0; i < a.dim(); ++i) vs.push_back(a.mul(a.mul(e, a.basis(i)), e));
  Subspace s = Subspace::span(a.field(), a.dim(), vs);
  auto alg = induced_algebra(a, s, e, pivot_labels(a, s), {"corner", a.element_to_string(e), {}});
  return {alg, s};
}

inline Embedded subalgebra(const Algebra& a, const Subspace& s) {
  if (!s.contains(a.unit())) throw Error("subalgebra must contain the unit");
  auto alg = induced_algebra(a, s, a.unit(), pivot_labels(a, s), {"subalgebra", "", {}});
  return {alg, s};
}

/// Two-sided ideal with its generating witnesses.
struct Ideal {
  AlgebraPtr parent;
  Subspace space;
  std::vector<Vec> generators;

  std::size_t dim() const { return space.dim(); }
};

/// Closure of a subspace under left and/or right multiplication by the
/// algebra generators.
inline Subspace mult_closure(const Algebra& a, const std::vector<Vec>& start, bool left, bool right) {
  Echelon e(a.field(), a.dim());
  std::deque<Vec> queue;
  for (const Vec& v : start)
    if (e.insert(v)) queue.push_back(v);
  const auto& gens = a.generators();
  while (!queue.empty()) {
    Vec v = std::move(queue.front());
    queue.pop_front();
    for (const Vec& g : gens) {
      if (left) {
        Vec p = a.mul(g, v);
        if (e.insert(p)) queue.push_back(std::move(p));
      }
      if (right) {
        Vec p = a.mul(v, g);
        if (e.insert(p)) queue.push_back(std::move(p));
      }
    }
  }
  return Subspace::from_echelon(std::move(e));
}

inline Ideal ideal_generated(const AlgebraPtr& a, const std::vector<Vec>& gens) {
  return {a, mult_closure(*a, gens, true, true), gens};
}

/// Left ideal A x_1 + ... + A x_k.
inline Subspace left_ideal(const Algebra& a, const std::vector<Vec>& gens) {
  return mult_closure(a, gens, true, false);
}

inline Subspace right_ideal(const Algebra& a, const std::vector<Vec>& gens) {
  return mult_closure(a, gens, false, true);
}

inline bool is_two_sided_ideal(const Algebra& a, const Subspace& s) {
  for (const Vec& v : s.basis())
    for (const Vec& g : a.generators())
      if (!s.contains(a.mul(g, v)) || !s.contains(a.mul(v, g))) return false;
  return true;
}

/// Span of all products u v with u in U, v in V.
inline Subspace product_span(const Algebra& a, const Subspace& u, const Subspace& v) {
  Echelon e(a.field(), a.dim());
  for (const Vec& x : u.basis())
    for (const Vec& y : v.basis()) e.insert(a.mul(x, y));
  return Subspace::from_echelon(std::move(e));
}

/// Quotient algebra A / I realized on the complement columns of I.
struct Quotient {
  AlgebraPtr algebra;
  Subspace kernel;
  std::vector<std::size_t> columns;

  Vec project(const Vec& x) const { return kernel.quotient_coords(x); }
  Vec lift(const Vec& q) const {
    Vec v = zero_vec(kernel.ambient_dim());
    for (std::size_t i = 0; i < columns.size(); ++i) v[columns[i]] = q[i];
    return v;
  }
  /// Matrix of the projection, quotient dim x parent dim.
  Mat projection_matrix() const {
    const std::size_t n = kernel.ambient_dim();
    Mat m(kernel.field(), columns.size(), n);
    for (std::size_t j = 0; j < n; ++j) {
      Vec c = project(unit_vec(n, j));
      for (std::size_t i = 0; i < columns.size(); ++i) m(i, j) = c[i];
    }
    return m;
  }
};

inline Quotient quotient(const Algebra& a, const Subspace& ideal) {
  if (!is_two_sided_ideal(a, ideal)) throw Error("quotient by a subspace that is not a two-sided ideal");
  auto cols = ideal.complement_columns();
  const std::size_t m = cols.size();
  std::vector<Product> table(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      Vec c = ideal.quotient_coords(a.mul_basis(cols[x], cols[y]));
      for (std::size_t k = 0; k < m; ++k)
        if (!is_zero(c[k])) table[x * m + y].push_back({k, c[k]});
    }
  std::vector<std::string> labels;
  for (auto c : cols) labels.push_back(a.label(c));
  auto alg = make_algebra(a.field(), m, std::move(table), ideal.quotient_coords(a.unit()), std::move(labels),
                          {"quotient", a.provenance().kind, {}});
  return {alg, ideal, cols};
}

inline Quotient quotient(const Ideal& i) { return quotient(*i.parent, i.space); }

/// Direct product A x B.
inline AlgebraPtr product(const Algebra& a, const Algebra& b) {
  if (a.field() != b.field()) throw Error("product of algebras over different fields");
  const std::size_t n = a.dim(), m = b.dim(), d = n + m;
  std::vector<Product> t(d * d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * d + j] = a.product(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (const Term& x : b.product(i, j)) t[(n + i) * d + (n + j)].push_back({n + x.index, x.value});
  Vec unit = a.unit();
  unit.insert(unit.end(), b.unit().begin(), b.unit().end());
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back("(" + l + ",0)");
  for (const auto& l : b.labels()) labels.push_back("(0," + l + ")");
  std::vector<std::size_t> first(n), second(m);
  for (std::size_t i = 0; i < n; ++i) first[i] = i;
  for (std::size_t i = 0; i < m; ++i) second[i] = n + i;
  return make_algebra(a.field(), d, std::move(t), std::move(unit), std::move(labels),
                      {"product", "", {{"left", first}, {"right", second}}});
}

/// k[x]/(f) for a monic f of degree >= 1, on the basis 1, x, ..., x^{d-1}.
inline AlgebraPtr polynomial_quotient(Field f, const std::vector<Scalar>& coeffs) {
  std::vector<Scalar> c;
  for (auto& x : coeffs) c.push_back(f.from(x));
  while (!c.empty() && is_zero(c.back())) c.pop_back();
  if (c.size() < 2) throw Error("polynomial quotient needs degree >= 1");
  const std::size_t d = c.size() - 1;
  Scalar lc_inv = f.inv(c.back());
  for (auto& x : c) x = f.mul(x, lc_inv);
  // x^k reduced modulo f, for k < 2d.
  std::vector<Vec> powers;
  Vec cur = unit_vec(d, 0);
  for (std::size_t k = 0; k < 2 * d - 1; ++k) {
    powers.push_back(cur);
    Vec next = zero_vec(d);
    for (std::size_t i = 0; i + 1 < d; ++i) next[i + 1] = cur[i];
    Scalar top = cur[d - 1];
    for (std::size_t i = 0; i < d; ++i) next[i] = f.sub(next[i], f.mul(top, c[i]));
    cur = std::move(next);
  }
  std::vector<Product> t(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (!is_zero(powers[i + j][k])) t[i * d + j].push_back({k, powers[i + j][k]});
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
  return make_algebra(f, d, std::move(t), unit_vec(d, 0), std::move(labels), {"polynomial-quotient", "", {}});
}

}  // namespace endok
