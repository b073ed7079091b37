#pragma once

#include <cstddef>
#include <deque>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "endok/algebra.hpp"

namespace endok {

/// Finite-dimensional left module: one action matrix per basis element of
/// the parent algebra, acting on column vectors. Right modules are left
/// modules over the opposite algebra.
class Module {
 public:
  Module() = default;

  Module(AlgebraPtr parent, std::size_t dim, std::vector<Mat> action, std::string name = {},
         bool validate = true)
      : d_(std::make_shared<Data>(Data{std::move(parent), dim, std::move(action), std::move(name)})) {
    if (d_->action.size() != d_->parent->dim()) throw DimensionMismatch("one action matrix per basis element");
    for (const auto& m : d_->action)
      if (m.rows() != dim || m.cols() != dim) throw DimensionMismatch("action matrix has wrong shape");
    if (validate) this->validate();
  }

  const AlgebraPtr& parent() const { return d_->parent; }
  const Algebra& algebra() const { return *d_->parent; }
  const Field& field() const { return d_->parent->field(); }
  std::size_t dim() const { return d_ ? d_->dim : 0; }
  const Mat& action(std::size_t i) const { return d_->action[i]; }
  const std::vector<Mat>& actions() const { return d_->action; }
  const std::string& name() const { return d_->name; }

  Module renamed(std::string name) const {
    Module m;
    m.d_ = std::make_shared<Data>(*d_);
    m.d_->name = std::move(name);
    return m;
  }

  /// Matrix of the action of an arbitrary algebra element.
  Mat action_of(const Vec& a) const {
    Mat m(field(), dim(), dim());
    for (std::size_t i = 0; i < a.size(); ++i) m.add_scaled(a[i], d_->action[i]);
    return m;
  }

  Vec act(const Vec& a, const Vec& x) const { return action_of(a) * x; }

  bool same_parent(const Module& o) const { return parent()->same_structure(*o.parent()); }

  /// Representation law, checked on algebra generators: rho(b_i) rho(g) =
  /// rho(b_i g) for every basis element b_i and generator g, and rho(1) = 1.
  /// By induction on word length this gives the law for all products.
  void validate() const {
    const Algebra& a = algebra();
    if (action_of(a.unit()) != Mat::identity(field(), dim())) throw Error("unit does not act as the identity");
    for (const Vec& g : a.generators()) {
      Mat rg = action_of(g);
      for (std::size_t i = 0; i < a.dim(); ++i)
        if (action(i) * rg != action_of(a.mul(a.basis(i), g)))
          throw Error("action matrices do not form a representation");
    }
  }

 private:
  struct Data {
    AlgebraPtr parent;
    std::size_t dim;
    std::vector<Mat> action;
    std::string name;
  };
  std::shared_ptr<Data> d_;
};

/// A module map, as a matrix (target dim x source dim) acting on columns.
struct ModuleHom {
  Module source;
  Module target;
  Mat matrix;
};

inline void require_same_parent(const Module& m, const Module& n) {
  if (!m.same_parent(n)) throw ParentMismatch();
}

inline bool intertwines(const Module& m, const Module& n, const Mat& h) {
  if (h.rows() != n.dim() || h.cols() != m.dim()) return false;
  for (const Vec& g : m.algebra().generators())
    if (h * m.action_of(g) != n.action_of(g) * h) return false;
  return true;
}

inline ModuleHom make_hom(const Module& m, const Module& n, Mat h) {
  require_same_parent(m, n);
  if (!intertwines(m, n, h)) throw NotAHomomorphism();
  return {m, n, std::move(h)};
}

/// Left-to-right composition: first f, then g.
inline ModuleHom then(const ModuleHom& f, const ModuleHom& g) {
  return {f.source, g.target, g.matrix * f.matrix};
}

inline ModuleHom identity_hom(const Module& m) { return {m, m, Mat::identity(m.field(), m.dim())}; }

inline Module regular_module(const AlgebraPtr& a) {
  std::vector<Mat> act;
  for (std::size_t i = 0; i < a->dim(); ++i) act.push_back(a->left_mult(a->basis(i)));
  return Module(a, a->dim(), std::move(act), "regular", false);
}

inline Module zero_module(const AlgebraPtr& a) {
  return Module(a, 0, std::vector<Mat>(a->dim(), Mat(a->field(), 0, 0)), "0", false);
}

namespace detail {

/// Groups of basis indices spanning the blocks of a block-diagonal action.
inline std::vector<std::vector<std::size_t>> action_blocks(const Module& m) {
  std::vector<std::size_t> p(m.dim());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
  auto root = [&](std::size_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  };
  for (const Mat& a : m.actions())
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (!is_zero(a(i, j))) p[root(i)] = root(j);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(m.dim(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    std::size_t r = root(i);
    if (slot[r] == m.dim()) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(i);
  }
  return out;
}

inline Mat restrict_block(const Mat& a, const std::vector<std::size_t>& idx) {
  Mat out(a.field(), idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = a(idx[i], idx[j]);
  return out;
}

inline Module block_module(const Module& m, const std::vector<std::size_t>& idx) {
  std::vector<Mat> act;
  for (const Mat& a : m.actions()) act.push_back(restrict_block(a, idx));
  return Module(m.parent(), idx.size(), std::move(act), m.name(), false);
}

/// Hom for modules without a block decomposition: one linear system.
inline std::vector<Mat> hom_space_direct(const Module& m, const Module& n) {
  const std::size_t r = n.dim(), c = m.dim();
  const Field& f = m.field();
  Echelon eqs(f, r * c);
  for (const Vec& g : m.algebra().generators()) {
    Mat am = m.action_of(g), an = n.action_of(g);
    // (H am - an H)[i][j] = sum_k H[i][k] am[k][j] - sum_k an[i][k] H[k][j]
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        Vec row = zero_vec(r * c);
        bool nz = false;
        for (std::size_t k = 0; k < c; ++k)
          if (!is_zero(am(k, j))) {
            row[i * c + k] = f.add(row[i * c + k], am(k, j));
            nz = true;
          }
        for (std::size_t k = 0; k < r; ++k)
          if (!is_zero(an(i, k))) {
            row[k * c + j] = f.sub(row[k * c + j], an(i, k));
            nz = true;
          }
        if (nz) eqs.insert(row);
      }
    if (eqs.rank() == r * c) return {};
  }
  std::vector<Mat> out;
  for (const Vec& v : kernel_basis(eqs)) out.push_back(Mat::unflatten(f, v, r, c));
  return out;
}

}  // namespace detail

/// Basis of Hom_A(M, N) as matrices, solved block by block when the actions
/// are block diagonal.
inline std::vector<Mat> hom_space(const Module& m, const Module& n) {
  require_same_parent(m, n);
  const std::size_t r = n.dim(), c = m.dim();
  if (r == 0 || c == 0) return {};
  auto bm = detail::action_blocks(m), bn = detail::action_blocks(n);
  if (bm.size() == 1 && bn.size() == 1) return detail::hom_space_direct(m, n);
  std::vector<Module> mm, nn;
  for (const auto& b : bm) mm.push_back(bm.size() == 1 ? m : detail::block_module(m, b));
  for (const auto& b : bn) nn.push_back(bn.size() == 1 ? n : detail::block_module(n, b));
  std::vector<Mat> out;
  for (std::size_t t = 0; t < bn.size(); ++t)
    for (std::size_t s = 0; s < bm.size(); ++s)
      for (const Mat& h : detail::hom_space_direct(mm[s], nn[t])) {
        Mat full(m.field(), r, c);
        for (std::size_t i = 0; i < bn[t].size(); ++i)
          for (std::size_t j = 0; j < bm[s].size(); ++j) full(bn[t][i], bm[s][j]) = h(i, j);
        out.push_back(std::move(full));
      }
  return out;
}

inline std::size_t hom_dim(const Module& m, const Module& n) { return hom_space(m, n).size(); }

/// A submodule together with its inclusion.
struct Sub {
  Module module;
  Mat inclusion;  ///< ambient dim x sub dim
  Subspace space;
};

/// A quotient module together with its projection.
struct Quo {
  Module module;
  Mat projection;  ///< quotient dim x ambient dim
  Subspace kernel;
  std::vector<std::size_t> columns;
};

/// Smallest submodule containing the given vectors.
inline Subspace generated_submodule(const Module& m, const std::vector<Vec>& vs) {
  Echelon e(m.field(), m.dim());
  std::deque<Vec> queue;
  for (const Vec& v : vs)
    if (e.insert(v)) queue.push_back(v);
  std::vector<Mat> gens;
  for (const Vec& g : m.algebra().generators()) gens.push_back(m.action_of(g));
  while (!queue.empty()) {
    Vec v = std::move(queue.front());
    queue.pop_front();
    for (const Mat& g : gens) {
      Vec w = g * v;
      if (e.insert(w)) queue.push_back(std::move(w));
    }
  }
  return Subspace::from_echelon(std::move(e));
}

inline bool is_submodule(const Module& m, const Subspace& s) {
  for (const Vec& g : m.algebra().generators()) {
    Mat a = m.action_of(g);
    for (const Vec& v : s.basis())
      if (!s.contains(a * v)) return false;
  }
  return true;
}

inline Sub submodule(const Module& m, const Subspace& s, std::string name = {}) {
  if (s.ambient_dim() != m.dim()) throw DimensionMismatch("subspace lives in the wrong ambient space");
  if (!is_submodule(m, s)) throw NotASubmodule();
  const std::size_t d = s.dim();
  std::vector<Mat> act;
  for (std::size_t i = 0; i < m.algebra().dim(); ++i) {
    Mat a(m.field(), d, d);
    for (std::size_t j = 0; j < d; ++j) {
      Vec c = s.coords(m.action(i) * s.basis()[j]);
      for (std::size_t k = 0; k < d; ++k) a(k, j) = c[k];
    }
    act.push_back(std::move(a));
  }
  Mat inc = Mat::from_cols(m.field(), s.basis(), m.dim());
  return {Module(m.parent(), d, std::move(act), std::move(name), false), std::move(inc), s};
}

inline Quo quotient_module(const Module& m, const Subspace& s, std::string name = {}) {
  if (!is_submodule(m, s)) throw NotASubmodule();
  auto cols = s.complement_columns();
  const std::size_t d = cols.size();
  std::vector<Mat> act;
  for (std::size_t i = 0; i < m.algebra().dim(); ++i) {
    Mat a(m.field(), d, d);
    for (std::size_t j = 0; j < d; ++j) {
      Vec c = s.quotient_coords(m.action(i).col_vec(cols[j]));
      for (std::size_t k = 0; k < d; ++k) a(k, j) = c[k];
    }
    act.push_back(std::move(a));
  }
  Mat proj(m.field(), d, m.dim());
  for (std::size_t j = 0; j < m.dim(); ++j) {
    Vec c = s.quotient_coords(unit_vec(m.dim(), j));
    for (std::size_t k = 0; k < d; ++k) proj(k, j) = c[k];
  }
  return {Module(m.parent(), d, std::move(act), std::move(name), false), std::move(proj), s, std::move(cols)};
}

struct DirectSum {
  Module module;
  std::vector<Mat> injections;   ///< sum dim x summand dim
  std::vector<Mat> projections;  ///< summand dim x sum dim
  std::vector<std::size_t> offsets;
};

inline DirectSum direct_sum(const std::vector<Module>& ms, const AlgebraPtr& parent) {
  for (const auto& m : ms) {
    if (!m.parent()->same_structure(*parent)) throw ParentMismatch();
  }
  const Field& f = parent->field();
  std::size_t total = 0;
  std::vector<std::size_t> off;
  for (const auto& m : ms) {
    off.push_back(total);
    total += m.dim();
  }
  std::vector<Mat> act;
  for (std::size_t i = 0; i < parent->dim(); ++i) {
    Mat a(f, total, total);
    for (std::size_t s = 0; s < ms.size(); ++s) a.set_block(off[s], off[s], ms[s].action(i));
    act.push_back(std::move(a));
  }
  DirectSum out{Module(parent, total, std::move(act), "sum", false), {}, {}, off};
  for (std::size_t s = 0; s < ms.size(); ++s) {
    Mat inj(f, total, ms[s].dim()), proj(f, ms[s].dim(), total);
    for (std::size_t k = 0; k < ms[s].dim(); ++k) {
      inj(off[s] + k, k) = 1;
      proj(k, off[s] + k) = 1;
    }
    out.injections.push_back(std::move(inj));
    out.projections.push_back(std::move(proj));
  }
  return out;
}

inline DirectSum direct_sum(const std::vector<Module>& ms) {
  if (ms.empty()) throw Error("direct sum of no modules needs an explicit parent");
  return direct_sum(ms, ms.front().parent());
}

inline Module power(const Module& m, std::size_t k) {
  return direct_sum(std::vector<Module>(k, m), m.parent()).module;
}

/// k-dual D M = Hom_k(M, k), a left module over the opposite algebra.
inline Module dual(const Module& m, const AlgebraPtr& opposite_algebra) {
  std::vector<Mat> act;
  for (const auto& a : m.actions()) act.push_back(a.transpose());
  return Module(opposite_algebra, m.dim(), std::move(act), "D(" + m.name() + ")", false);
}

/// Restriction of scalars along an algebra map phi: B -> A given as a
/// matrix (A dim x B dim).
inline Module restrict_scalars(const Module& m, const AlgebraPtr& b, const Mat& phi) {
  std::vector<Mat> act;
  for (std::size_t j = 0; j < b->dim(); ++j) act.push_back(m.action_of(phi.col_vec(j)));
  return Module(b, m.dim(), std::move(act), m.name(), false);
}

/// Left ideal L of A as a left A-module.
inline Sub left_ideal_module(const AlgebraPtr& a, const Subspace& l, std::string name = {}) {
  return submodule(regular_module(a), l, std::move(name));
}

/// Image of a module map as a subspace of the target.
inline Subspace image(const ModuleHom& f) { return image(f.matrix); }
inline Subspace kernel(const ModuleHom& f) { return kernel(f.matrix); }

}  // namespace endok
