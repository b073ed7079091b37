#pragma once

#include <cstddef>
#include <vector>

#include "endok/module.hpp"

namespace endok {

namespace detail {

/// Kernel of the trace form (x, y) -> tr(L_{xy}).
inline Subspace trace_form_kernel(const Algebra& a) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  Vec tau = zero_vec(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      for (const Term& t : a.product(k, j))
        if (t.index == j) tau[k] = f.add(tau[k], t.value);
  Mat form(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const Term& t : a.product(i, j)) form(i, j) = f.add(form(i, j), f.mul(t.value, tau[t.index]));
  return kernel(form);
}

/// Nilpotency index of a subspace under multiplication, or 0 if the powers
/// stabilize at a nonzero space.
inline std::size_t nilpotency_index(const Algebra& a, const Subspace& r) {
  Subspace p = r;
  std::size_t k = 1;
  while (p.dim() > 0) {
    Subspace next = product_span(a, p, r);
    if (next.dim() == p.dim()) return 0;
    p = std::move(next);
    ++k;
  }
  return k;
}

inline Subspace compute_radical(const Algebra& a) {
  if (!a.field().is_rationals()) throw UnsupportedField("radical computation");
  Subspace r = trace_form_kernel(a);
  if (!is_two_sided_ideal(a, r)) throw Error("trace-form kernel is not an ideal");
  if (r.dim() > 0 && nilpotency_index(a, r) == 0) throw Error("trace-form kernel is not nilpotent");
  if (r.dim() > 0 && r.dim() < a.dim()) {
    Quotient q = quotient(a, r);
    if (trace_form_kernel(*q.algebra).dim() != 0) throw Error("quotient by the radical is not semisimple");
  }
  return r;
}

}  // namespace detail

/// Jacobson radical over Q, certified: nilpotent, and the quotient has a
/// nondegenerate trace form.
inline const Subspace& radical(const Algebra& a) { return a.cached_radical(detail::compute_radical); }

inline Ideal radical_ideal(const AlgebraPtr& a) {
  const Subspace& r = radical(*a);
  return {a, r, r.basis()};
}

inline std::size_t radical_nilpotency(const Algebra& a) {
  const Subspace& r = radical(a);
  return r.dim() == 0 ? 1 : detail::nilpotency_index(a, r);
}

/// rad(A) M as a subspace of M.
inline Subspace radical_of_module(const Module& m) {
  const Subspace& r = radical(m.algebra());
  std::vector<Vec> vs;
  for (const Vec& x : r.basis()) {
    Mat a = m.action_of(x);
    for (std::size_t c = 0; c < m.dim(); ++c) vs.push_back(a.col_vec(c));
  }
  return Subspace::span(m.field(), m.dim(), vs);
}

inline Quo top(const Module& m) { return quotient_module(m, radical_of_module(m), "top"); }

/// Radical layer dimensions dim rad^k M / rad^{k+1} M.
inline std::vector<std::size_t> radical_layers(const Module& m) {
  std::vector<std::size_t> out;
  Subspace cur = Subspace::full(m.field(), m.dim());
  const Subspace& r = radical(m.algebra());
  while (cur.dim() > 0) {
    std::vector<Vec> vs;
    for (const Vec& x : r.basis()) {
      Mat a = m.action_of(x);
      for (const Vec& v : cur.basis()) vs.push_back(a * v);
    }
    Subspace next = Subspace::span(m.field(), m.dim(), vs);
    out.push_back(cur.dim() - next.dim());
    if (next.dim() == cur.dim()) break;
    cur = std::move(next);
  }
  return out;
}

/// Socle: the vectors annihilated by rad(A).
inline Subspace socle(const Module& m) {
  const Subspace& r = radical(m.algebra());
  std::vector<Vec> rows;
  for (const Vec& x : r.basis()) {
    Mat a = m.action_of(x);
    for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row_vec(i));
  }
  if (rows.empty()) return Subspace::full(m.field(), m.dim());
  return kernel(Mat::from_rows(m.field(), rows, m.dim()));
}

/// t_Y(X): sum of the images of all maps Y -> X.
inline Subspace trace_submodule(const Module& y, const Module& x) {
  std::vector<Vec> vs;
  for (const Mat& h : hom_space(y, x))
    for (std::size_t c = 0; c < h.cols(); ++c) vs.push_back(h.col_vec(c));
  return Subspace::span(x.field(), x.dim(), vs);
}

}  // namespace endok
