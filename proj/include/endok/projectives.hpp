#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "endok/idempotents.hpp"

namespace endok {

/// Indecomposable projectives and simples of an algebra over Q.
struct ProjectiveData {
  std::vector<PrimitiveIdempotent> idempotents;
  std::vector<std::size_t> class_of;         ///< per primitive idempotent
  std::vector<std::size_t> representative;   ///< per class: index into idempotents
  std::vector<std::size_t> multiplicity;     ///< per class: copies of P in A
  std::vector<Module> projective;            ///< per class: P = A e
  std::vector<Subspace> projective_space;    ///< per class: A e inside A
  std::vector<Module> simple;                ///< per class: top of P
  std::size_t simple_count_check = 0;        ///< classes by Hom between simples
  std::size_t block_count_check = 0;         ///< blocks of A / rad A

  std::size_t classes() const { return representative.size(); }
  const Vec& class_idempotent(std::size_t c) const { return idempotents[representative[c]].element; }
};

namespace detail {

inline std::size_t find_root(std::vector<std::size_t>& p, std::size_t x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

inline ProjectiveData compute_projectives(const AlgebraPtr& a, const SearchOptions& opt) {
  ProjectiveData d;
  d.idempotents = primitive_idempotents(*a, opt);
  const std::size_t n = d.idempotents.size();
  const Subspace& rad = radical(*a);
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  // e_i ~ e_j iff e_i A e_j is not inside the radical.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec& ei = d.idempotents[i].element;
      const Vec& ej = d.idempotents[j].element;
      for (std::size_t b = 0; b < a->dim(); ++b)
        if (!rad.contains(a->mul(a->mul(ei, a->basis(b)), ej))) {
          parent[find_root(parent, i)] = find_root(parent, j);
          break;
        }
    }
  d.class_of.assign(n, 0);
  std::vector<std::size_t> root_class(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = find_root(parent, i);
    if (root_class[r] == n) {
      root_class[r] = d.representative.size();
      d.representative.push_back(i);
      d.multiplicity.push_back(0);
    }
    d.class_of[i] = root_class[r];
    ++d.multiplicity[d.class_of[i]];
  }
  Module reg = regular_module(a);
  for (std::size_t c = 0; c < d.classes(); ++c) {
    Subspace l = left_ideal(*a, {d.class_idempotent(c)});
    Sub s = submodule(reg, l, "P" + std::to_string(c + 1));
    d.projective_space.push_back(l);
    d.projective.push_back(s.module);
    d.simple.push_back(top(s.module).module.renamed("S" + std::to_string(c + 1)));
  }
  // Independent class count: simples up to Hom-detected isomorphism.
  std::vector<std::size_t> sp(d.classes());
  std::iota(sp.begin(), sp.end(), 0);
  for (std::size_t i = 0; i < d.classes(); ++i)
    for (std::size_t j = i + 1; j < d.classes(); ++j)
      if (hom_dim(d.simple[i], d.simple[j]) > 0) sp[find_root(sp, i)] = find_root(sp, j);
  for (std::size_t i = 0; i < d.classes(); ++i)
    if (find_root(sp, i) == i) ++d.simple_count_check;
  d.block_count_check = semisimple_block_count(*a, opt);
  std::size_t total = 0;
  for (std::size_t c = 0; c < d.classes(); ++c) total += d.multiplicity[c] * d.projective[c].dim();
  if (total != a->dim()) throw Error("projective dimensions do not add up to the algebra dimension");
  return d;
}

}  // namespace detail

/// Cached per algebra; the result is certified, so the seed only affects
/// which (equivalent) idempotents are found.
inline const ProjectiveData& projectives(const AlgebraPtr& a, const SearchOptions& opt = {}) {
  return a->cached_projectives<ProjectiveData>([&](const Algebra&) { return detail::compute_projectives(a, opt); });
}

/// Cartan matrix: entry (i, j) = dim Hom(P_i, P_j) = dim e_i A e_j.
inline std::vector<std::vector<std::size_t>> cartan_matrix(const AlgebraPtr& a, const SearchOptions& opt = {}) {
  const auto& d = projectives(a, opt);
  std::vector<std::vector<std::size_t>> c(d.classes(), std::vector<std::size_t>(d.classes()));
  for (std::size_t i = 0; i < d.classes(); ++i)
    for (std::size_t j = 0; j < d.classes(); ++j) {
      std::vector<Vec> span;
      for (std::size_t b = 0; b < a->dim(); ++b)
        span.push_back(a->mul(a->mul(d.class_idempotent(i), a->basis(b)), d.class_idempotent(j)));
      c[i][j] = Subspace::span(a->field(), a->dim(), span).dim();
    }
  return c;
}

/// Multiplicity of each simple in the top of m.
inline std::vector<std::size_t> top_multiplicities(const Module& m, const SearchOptions& opt = {}) {
  const auto& d = projectives(m.parent(), opt);
  Quo t = top(m);
  std::vector<std::size_t> out(d.classes());
  for (std::size_t c = 0; c < d.classes(); ++c) {
    // dim e_c top(m) = mult * dim e_c S_c
    Mat ec = t.module.action_of(d.class_idempotent(c));
    std::size_t r = rank(ec);
    std::size_t per = rank(d.simple[c].action_of(d.class_idempotent(c)));
    out[c] = per ? r / per : 0;
  }
  return out;
}

}  // namespace endok
