#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "endok/iso.hpp"
#include "endok/module.hpp"

namespace endok {

/// An R-S-bimodule: left action matrices per basis element of R and
/// right action matrices (m -> m b) per basis element of S.
struct Bimodule {
  AlgebraPtr left, right;
  std::size_t dim = 0;
  std::vector<Mat> left_action, right_action;

  Vec act_left(const Vec& r, const Vec& m) const { return combine(left_action, r) * m; }
  Vec act_right(const Vec& m, const Vec& s) const { return combine(right_action, s) * m; }

  Module as_left() const { return Module(left, dim, left_action, "bimodule"); }
  /// The right S-structure as a left module over the opposite algebra.
  Module as_right(const AlgebraPtr& right_op) const { return Module(right_op, dim, right_action, "bimodule"); }

 private:
  Mat combine(const std::vector<Mat>& acts, const Vec& x) const {
    Mat m(left->field(), dim, dim);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!is_zero(x[i])) m.add_scaled(x[i], acts[i]);
    return m;
  }
};

inline void validate_bimodule(const Bimodule& b) {
  const Field& f = b.left->field();
  if (b.left_action.size() != b.left->dim() || b.right_action.size() != b.right->dim())
    throw DimensionMismatch("bimodule action count differs from algebra dimension");
  Module(b.left, b.dim, b.left_action, "left", true);
  AlgebraPtr rop = opposite(*b.right);
  Module(rop, b.dim, b.right_action, "right", true);
  for (const Mat& l : b.left_action)
    for (const Mat& r : b.right_action)
      if (l * r != r * l) throw Error("left and right actions do not commute");
  (void)f;
}

/// R as an R-R-bimodule, restricted to a two-sided ideal when given.
inline Bimodule ideal_bimodule(const AlgebraPtr& r, const Subspace& ideal) {
  if (!is_two_sided_ideal(*r, ideal)) throw Error("subspace is not a two-sided ideal");
  Bimodule b{r, r, ideal.dim(), {}, {}};
  for (std::size_t i = 0; i < r->dim(); ++i) {
    Mat l(r->field(), ideal.dim(), ideal.dim()), rr = l;
    for (std::size_t j = 0; j < ideal.dim(); ++j) {
      Vec x = ideal.coords(r->mul(r->basis(i), ideal.basis()[j]));
      Vec y = ideal.coords(r->mul(ideal.basis()[j], r->basis(i)));
      for (std::size_t k = 0; k < ideal.dim(); ++k) {
        l(k, j) = x[k];
        rr(k, j) = y[k];
      }
    }
    b.left_action.push_back(std::move(l));
    b.right_action.push_back(std::move(rr));
  }
  return b;
}

inline Bimodule regular_bimodule(const AlgebraPtr& r) {
  return ideal_bimodule(r, Subspace::full(r->field(), r->dim()));
}

inline Bimodule zero_bimodule(const AlgebraPtr& r, const AlgebraPtr& s) {
  return {r, s, 0, std::vector<Mat>(r->dim(), Mat(r->field(), 0, 0)),
          std::vector<Mat>(s->dim(), Mat(r->field(), 0, 0))};
}

/// An algebra whose basis is split into blocks W_ij (1 <= i, j <= n) that
/// multiply like matrix entries.
struct BlockRing {
  AlgebraPtr algebra;
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> dims, offsets;
  std::vector<Vec> units;  ///< identity of block (i,i), in its own coordinates

  /// Element with coordinates c in block (i, j).
  Vec element(std::size_t i, std::size_t j, const Vec& c) const {
    Vec v = algebra->zero();
    for (std::size_t k = 0; k < c.size(); ++k) v[offsets[i][j] + k] = c[k];
    return v;
  }
  /// The diagonal idempotent e_i.
  Vec idempotent(std::size_t i) const { return element(i, i, units[i]); }
  Vec block(const Vec& x, std::size_t i, std::size_t j) const {
    return Vec(x.begin() + static_cast<std::ptrdiff_t>(offsets[i][j]),
               x.begin() + static_cast<std::ptrdiff_t>(offsets[i][j] + dims[i][j]));
  }
};

using BlockProduct = std::function<Vec(std::size_t i, std::size_t j, std::size_t k, std::size_t u, std::size_t v)>;

inline BlockRing block_ring(Field f, std::vector<std::vector<std::size_t>> dims, const BlockProduct& mul,
                            std::vector<Vec> units, const std::vector<std::vector<std::vector<std::string>>>& labels,
                            std::string kind, std::string detail = {}) {
  BlockRing b;
  b.n = dims.size();
  b.dims = std::move(dims);
  b.units = std::move(units);
  b.offsets.assign(b.n, std::vector<std::size_t>(b.n));
  std::size_t total = 0;
  Provenance prov{std::move(kind), std::move(detail), {}};
  std::vector<std::string> all_labels;
  for (std::size_t i = 0; i < b.n; ++i)
    for (std::size_t j = 0; j < b.n; ++j) {
      b.offsets[i][j] = total;
      std::vector<std::size_t> idx;
      for (std::size_t u = 0; u < b.dims[i][j]; ++u) {
        idx.push_back(total + u);
        all_labels.push_back(labels[i][j][u]);
      }
      prov.blocks.push_back({"block(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")", idx});
      total += b.dims[i][j];
    }
  std::vector<Product> table(total * total);
  for (std::size_t i = 0; i < b.n; ++i)
    for (std::size_t j = 0; j < b.n; ++j)
      for (std::size_t k = 0; k < b.n; ++k)
        for (std::size_t u = 0; u < b.dims[i][j]; ++u)
          for (std::size_t v = 0; v < b.dims[j][k]; ++v) {
            Vec p = mul(i, j, k, u, v);
            if (p.size() != b.dims[i][k]) throw DimensionMismatch("block product has wrong length");
            auto& cell = table[(b.offsets[i][j] + u) * total + b.offsets[j][k] + v];
            for (std::size_t w = 0; w < p.size(); ++w)
              if (!is_zero(p[w])) cell.push_back({b.offsets[i][k] + w, p[w]});
          }
  Vec unit = zero_vec(total);
  for (std::size_t i = 0; i < b.n; ++i)
    for (std::size_t u = 0; u < b.dims[i][i]; ++u) unit[b.offsets[i][i] + u] = b.units[i][u];
  b.algebra = make_algebra(f, total, std::move(table), std::move(unit), std::move(all_labels), std::move(prov));
  return b;
}

namespace detail {

inline std::string block_label(std::size_t i, std::size_t j, const std::string& inner) {
  return "E" + std::to_string(i + 1) + std::to_string(j + 1) + "(" + inner + ")";
}

inline std::vector<std::string> subspace_labels(const Algebra& r, const Subspace& s) {
  std::vector<std::string> out;
  for (const Vec& v : s.basis()) out.push_back(r.element_to_string(v));
  return out;
}

}  // namespace detail

/// Matrices (s_ij) with s_ij in a two-sided ideal L_ij of R (L_ii = R).
/// Products L_ij L_jk must lie in L_ik.
inline BlockRing ideal_matrix_ring(const AlgebraPtr& r, const std::vector<std::vector<Subspace>>& l,
                                   std::string kind = "ideal-matrix-ring") {
  const std::size_t n = l.size();
  const Field& f = r->field();
  Subspace full = Subspace::full(f, r->dim());
  for (std::size_t i = 0; i < n; ++i) {
    if (l[i].size() != n) throw DimensionMismatch("block pattern is not square");
    if (l[i][i] != full) throw ClosureViolation("diagonal entry equals R", i, i);
    for (std::size_t j = 0; j < n; ++j)
      if (!is_two_sided_ideal(*r, l[i][j])) throw ClosureViolation("entry is a two-sided ideal", i, j);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!l[i][k].contains(product_span(*r, l[i][j], l[j][k])))
          throw ClosureViolation("L(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")L(" +
                                     std::to_string(j + 1) + "," + std::to_string(k + 1) + ") inside L(" +
                                     std::to_string(i + 1) + "," + std::to_string(k + 1) + ")",
                                 i, k);
  std::vector<std::vector<std::size_t>> dims(n, std::vector<std::size_t>(n));
  std::vector<std::vector<std::vector<std::string>>> labels(n, std::vector<std::vector<std::string>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      dims[i][j] = l[i][j].dim();
      for (const auto& s : detail::subspace_labels(*r, l[i][j])) labels[i][j].push_back(detail::block_label(i, j, s));
    }
  std::vector<Vec> units;
  for (std::size_t i = 0; i < n; ++i) units.push_back(r->unit());
  auto mul = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t u, std::size_t v) {
    return l[i][k].coords(r->mul(l[i][j].basis()[u], l[j][k].basis()[v]));
  };
  return block_ring(f, std::move(dims), mul, std::move(units), labels, std::move(kind));
}

inline BlockRing matrix_ring(const AlgebraPtr& r, std::size_t n) {
  if (n == 0) throw Error("matrix size must be positive");
  Subspace full = Subspace::full(r->field(), r->dim());
  return ideal_matrix_ring(r, std::vector<std::vector<Subspace>>(n, std::vector<Subspace>(n, full)), "matrix-ring");
}

/// J^m inside R (J^0 = R).
inline Subspace ideal_power(const Algebra& r, const Subspace& j, std::size_t m) {
  Subspace p = Subspace::full(r.field(), r.dim());
  for (std::size_t t = 0; t < m; ++t) p = product_span(r, p, j);
  return p;
}

/// Tiled ring with I_ij above the diagonal and J^(i-j) below it. The three
/// closure conditions on (J, I_ij) are checked individually.
/// `upper[i][j]` is read for i < j (0-based).
inline BlockRing tiled_ring(const AlgebraPtr& r, const Subspace& j, const std::vector<std::vector<Subspace>>& upper) {
  const std::size_t n = upper.size();
  const Algebra& a = *r;
  if (!is_two_sided_ideal(a, j)) throw ClosureViolation("J is a two-sided ideal", 1, 0);
  auto in = [&](std::size_t x, std::size_t y) -> Subspace {
    if (x == y) return Subspace::full(a.field(), a.dim());
    return upper[x][y];
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      if (!is_two_sided_ideal(a, upper[x][y])) throw ClosureViolation("I is a two-sided ideal", x, y);
      if (y + 1 < n && !in(x, y).contains(product_span(a, in(x, y + 1), j)))
        throw ClosureViolation("I(i,j+1)J inside I(i,j)", x, y);
      if (!in(x + 1, y).contains(product_span(a, j, in(x, y))))
        throw ClosureViolation("JI(i,j) inside I(i+1,j)", x, y);
      for (std::size_t z = y + 1; z < n; ++z)
        if (!in(x, z).contains(product_span(a, in(x, y), in(y, z))))
          throw ClosureViolation("I(i,j)I(j,k) inside I(i,k)", x, z);
    }
  std::vector<std::vector<Subspace>> l(n, std::vector<Subspace>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) l[x][y] = x <= y ? in(x, y) : ideal_power(a, j, x - y);
  return ideal_matrix_ring(r, l, "tiled-ring");
}

/// n x n ring with R on the diagonal, I above and J below; requires JI = 0.
inline BlockRing ji_zero_ring(const AlgebraPtr& r, const Subspace& i, const Subspace& j, std::size_t n) {
  if (product_span(*r, j, i).dim() != 0) throw ClosureViolation("JI = 0", 1, 0);
  std::vector<std::vector<Subspace>> l(n, std::vector<Subspace>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) l[x][y] = x == y ? Subspace::full(r->field(), r->dim()) : x < y ? i : j;
  return ideal_matrix_ring(r, l, "ji-zero-ring");
}

/// n x n ring over a commutative R with Rx above and Ry below the diagonal.
inline BlockRing checkerboard_ring(const AlgebraPtr& r, const Vec& x, const Vec& y, std::size_t n) {
  if (!r->is_commutative()) throw ClosureViolation("R is commutative", 0, 0);
  Subspace rx = left_ideal(*r, {x}), ry = left_ideal(*r, {y});
  std::vector<std::vector<Subspace>> l(n, std::vector<Subspace>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) l[a][b] = a == b ? Subspace::full(r->field(), r->dim()) : a < b ? rx : ry;
  return ideal_matrix_ring(r, l, "checkerboard-ring");
}

/// Morita context ring (R M; N S) with pairings phi: M x N -> R and
/// psi: N x M -> S, given on basis pairs (index u * dim N + v, resp.
/// v * dim M + u).
struct MoritaContext {
  Bimodule m, n;
  std::vector<Vec> phi, psi;
  BlockRing ring;
};

inline MoritaContext morita_context(const Bimodule& m, const Bimodule& n, std::vector<Vec> phi,
                                    std::vector<Vec> psi, std::string kind = "morita-context") {
  const AlgebraPtr& r = m.left;
  const AlgebraPtr& s = m.right;
  if (n.left.get() != s.get() || n.right.get() != r.get()) throw ParentMismatch();
  validate_bimodule(m);
  validate_bimodule(n);
  if (phi.size() != m.dim * n.dim || psi.size() != n.dim * m.dim)
    throw DimensionMismatch("pairing tables have the wrong size");
  const Field& f = r->field();
  std::vector<std::vector<std::size_t>> dims{{r->dim(), m.dim}, {n.dim, s->dim()}};
  std::vector<std::vector<std::vector<std::string>>> labels(2, std::vector<std::vector<std::string>>(2));
  for (std::size_t i = 0; i < r->dim(); ++i) labels[0][0].push_back(detail::block_label(0, 0, r->label(i)));
  for (std::size_t i = 0; i < m.dim; ++i) labels[0][1].push_back(detail::block_label(0, 1, "m" + std::to_string(i)));
  for (std::size_t i = 0; i < n.dim; ++i) labels[1][0].push_back(detail::block_label(1, 0, "n" + std::to_string(i)));
  for (std::size_t i = 0; i < s->dim(); ++i) labels[1][1].push_back(detail::block_label(1, 1, s->label(i)));
  auto mul = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t u, std::size_t v) -> Vec {
    const std::size_t key = i * 4 + j * 2 + k;
    switch (key) {
      case 0: return r->mul_basis(u, v);
      case 1: return m.left_action[u].col_vec(v);
      case 2: return phi[u * n.dim + v];
      case 3: return m.right_action[v].col_vec(u);
      case 4: return n.right_action[v].col_vec(u);
      case 5: return psi[u * m.dim + v];
      case 6: return n.left_action[u].col_vec(v);
      default: return s->mul_basis(u, v);
    }
  };
  BlockRing ring = block_ring(f, dims, mul, {r->unit(), s->unit()}, labels, std::move(kind));
  return {m, n, std::move(phi), std::move(psi), std::move(ring)};
}

/// (R1 M; 0 R2).
inline MoritaContext triangular_ring(const Bimodule& m) {
  Bimodule n = zero_bimodule(m.right, m.left);
  return morita_context(m, n, std::vector<Vec>(0), std::vector<Vec>(0), "triangular-ring");
}

/// R (+) M with (r, m)(r', m') = (r r', r m' + m r').
inline AlgebraPtr trivial_extension(const Bimodule& m) {
  const AlgebraPtr& r = m.left;
  if (m.right.get() != r.get()) throw ParentMismatch();
  validate_bimodule(m);
  const std::size_t d = r->dim(), t = d + m.dim;
  std::vector<Product> table(t * t);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) table[i * t + j] = r->product(i, j);
    for (std::size_t u = 0; u < m.dim; ++u) {
      Vec a = m.left_action[i].col_vec(u), b = m.right_action[i].col_vec(u);
      for (std::size_t k = 0; k < m.dim; ++k) {
        if (!is_zero(a[k])) table[i * t + d + u].push_back({d + k, a[k]});
        if (!is_zero(b[k])) table[(d + u) * t + i].push_back({d + k, b[k]});
      }
    }
  }
  Vec unit = r->unit();
  unit.resize(t, Scalar(0));
  std::vector<std::string> labels = r->labels();
  for (std::size_t u = 0; u < m.dim; ++u) labels.push_back("m" + std::to_string(u));
  std::vector<std::size_t> base(d), ext(m.dim);
  for (std::size_t i = 0; i < d; ++i) base[i] = i;
  for (std::size_t u = 0; u < m.dim; ++u) ext[u] = d + u;
  return make_algebra(r->field(), t, std::move(table), std::move(unit), std::move(labels),
                      {"trivial-extension", "", {{"base", base}, {"bimodule", ext}}});
}

/// Skew group ring S * G for a finite group G of automorphisms of S, given
/// as matrices acting on coordinates.
struct SkewGroupRing {
  AlgebraPtr algebra;
  AlgebraPtr base;
  std::vector<Mat> group;
  Vec averaging;       ///< e = (1/|G|) sum of g
  Subspace invariants; ///< S^G inside S

  Vec element(const Vec& s, std::size_t g) const {
    Vec v = algebra->zero();
    for (std::size_t k = 0; k < s.size(); ++k) v[k * group.size() + g] = s[k];
    return v;
  }
};

inline SkewGroupRing skew_group_ring(const AlgebraPtr& s, std::vector<Mat> group) {
  const Field& f = s->field();
  const std::size_t d = s->dim(), n = group.size();
  if (n == 0) throw Error("group is empty");
  if (!f.is_rationals() && n % f.characteristic() == 0)
    throw Error("group order is not invertible in the ground field");
  for (auto& g : group) {
    if (!is_algebra_iso(*s, *s, g)) throw NotAHomomorphism();
  }
  auto find = [&](const Mat& m) {
    for (std::size_t i = 0; i < n; ++i)
      if (group[i] == m) return i;
    throw ClosureViolation("group closed under composition", 0, 0);
  };
  find(Mat::identity(f, d));
  std::vector<std::size_t> mult(n * n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) mult[g * n + h] = find(group[g] * group[h]);
  const std::size_t t = d * n;
  std::vector<Product> table(t * t);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t l = 0; l < d; ++l)
        for (std::size_t h = 0; h < n; ++h) {
          Vec p = s->mul(s->basis(k), group[g].col_vec(l));
          auto& cell = table[(k * n + g) * t + l * n + h];
          for (std::size_t q = 0; q < d; ++q)
            if (!is_zero(p[q])) cell.push_back({q * n + mult[g * n + h], p[q]});
        }
  std::size_t id = find(Mat::identity(f, d));
  Vec unit = zero_vec(t);
  for (std::size_t k = 0; k < d; ++k) unit[k * n + id] = s->unit()[k];
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t g = 0; g < n; ++g) labels.push_back(s->label(k) + "*g" + std::to_string(g));
  SkewGroupRing r;
  r.base = s;
  r.group = std::move(group);
  r.algebra = make_algebra(f, t, std::move(table), std::move(unit), std::move(labels), {"skew-group-ring", "", {}});
  Scalar inv = f.inv(f.from_int(static_cast<long>(n)));
  r.averaging = zero_vec(t);
  for (std::size_t g = 0; g < n; ++g) r.averaging = vadd(f, r.averaging, vscale(f, inv, r.element(s->unit(), g)));
  Mat fix(f, d * n, d);
  for (std::size_t g = 0; g < n; ++g) {
    Mat diff = r.group[g];
    diff.add_scaled(f.from_int(-1), Mat::identity(f, d));
    fix.set_block(g * d, 0, diff);
  }
  r.invariants = kernel(fix);
  return r;
}

}  // namespace endok
