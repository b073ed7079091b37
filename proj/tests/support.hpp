#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "endok/endok.hpp"

namespace endok::testing {

/// Rank of an integer matrix by fraction-free Bareiss elimination.
inline std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = t;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

/// A quiver with monomial relations; dim kQ/I counted by enumerating paths
/// that contain no relation as a subword.
struct MonomialQuiver {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  std::vector<std::vector<std::size_t>> zero_paths;
};

/// Nonzero paths of length 1 to max_len, grown only from nonzero prefixes.
inline std::vector<std::vector<std::size_t>> nonzero_paths(const MonomialQuiver& q, std::size_t max_len) {
  auto forbidden = [&](const std::vector<std::size_t>& p) {
    for (const auto& z : q.zero_paths)
      for (std::size_t s = 0; s + z.size() <= p.size(); ++s)
        if (std::equal(z.begin(), z.end(), p.begin() + static_cast<std::ptrdiff_t>(s))) return true;
    return false;
  };
  std::vector<std::vector<std::size_t>> out, layer;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) layer.push_back({a});
  for (std::size_t len = 1; len <= max_len && !layer.empty(); ++len) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& p : layer) {
      if (forbidden(p)) continue;
      out.push_back(p);
      for (std::size_t a = 0; a < q.arrows.size(); ++a)
        if (q.arrows[p.back()].second == q.arrows[a].first) {
          auto ext = p;
          ext.push_back(a);
          next.push_back(std::move(ext));
        }
    }
    layer = std::move(next);
  }
  return out;
}

inline std::size_t count_paths(const MonomialQuiver& q, std::size_t max_len) {
  return q.vertices + nonzero_paths(q, max_len).size();
}

inline QuiverPresentation to_presentation(const MonomialQuiver& m) {
  QuiverPresentation q;
  for (std::size_t v = 0; v < m.vertices; ++v) q.vertices.push_back(std::to_string(v + 1));
  for (std::size_t a = 0; a < m.arrows.size(); ++a)
    q.arrows.push_back({"a" + std::to_string(a), m.arrows[a].first, m.arrows[a].second});
  for (const auto& z : m.zero_paths) q.relations.push_back({{Scalar(1), z}});
  return q;
}

/// All paths of length `len` in the quiver.
inline std::vector<std::vector<std::size_t>> paths_of_length(const MonomialQuiver& q, std::size_t len) {
  std::vector<std::vector<std::size_t>> layer;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) layer.push_back({a});
  for (std::size_t l = 1; l < len; ++l) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& p : layer)
      for (std::size_t a = 0; a < q.arrows.size(); ++a)
        if (q.arrows[p.back()].second == q.arrows[a].first) {
          auto ext = p;
          ext.push_back(a);
          next.push_back(std::move(ext));
        }
    layer = std::move(next);
  }
  return layer;
}

/// Random bound quiver: 1 to 3 vertices, a few arrows, random length-2
/// zero relations and every path of length `cut` killed.
inline MonomialQuiver random_monomial_quiver(Rng& rng) {
  MonomialQuiver q;
  q.vertices = static_cast<std::size_t>(rng.uniform(1, 3));
  std::size_t na = static_cast<std::size_t>(rng.uniform(q.vertices == 1 ? 1 : 0, 4));
  for (std::size_t a = 0; a < na; ++a)
    q.arrows.push_back({static_cast<std::size_t>(rng.uniform(0, long(q.vertices) - 1)),
                        static_cast<std::size_t>(rng.uniform(0, long(q.vertices) - 1))});
  for (const auto& p : paths_of_length(q, 2))
    if (rng.uniform(0, 2) == 0) q.zero_paths.push_back(p);
  std::size_t cut = static_cast<std::size_t>(rng.uniform(2, 4));
  for (const auto& p : paths_of_length(q, cut)) q.zero_paths.push_back(p);
  return q;
}

/// A random bound quiver algebra of dimension at most max_dim, sometimes
/// with a commutativity relation between two parallel paths of length 2.
inline AlgebraPtr random_algebra(Rng& rng, std::size_t max_dim = 12) {
  for (;;) {
    MonomialQuiver m = random_monomial_quiver(rng);
    if (count_paths(m, 12) > max_dim) continue;
    QuiverPresentation q = to_presentation(m);
    auto two = paths_of_length(m, 2);
    std::set<std::vector<std::size_t>> zero(m.zero_paths.begin(), m.zero_paths.end());
    if (rng.uniform(0, 3) == 0) {
      for (std::size_t i = 0; i < two.size(); ++i)
        for (std::size_t j = i + 1; j < two.size(); ++j) {
          const auto &p = two[i], &r = two[j];
          if (zero.count(p) || zero.count(r)) continue;
          if (m.arrows[p.front()].first != m.arrows[r.front()].first) continue;
          if (m.arrows[p.back()].second != m.arrows[r.back()].second) continue;
          q.relations.push_back({{Scalar(1), p}, {Scalar(-rng.uniform(1, 3)), r}});
          goto built;
        }
    }
  built:
    try {
      AlgebraPtr a = path_algebra(q);
      if (a->dim() <= max_dim) return a;
    } catch (const Error&) {
    }
  }
}

/// u e u^{-1} for a random sum e of vertex idempotents and a random unit
/// u = 1 + r with r in the radical.
inline Vec random_idempotent(const AlgebraPtr& a, Rng& rng) {
  const Field& f = a->field();
  auto prims = elements(primitive_idempotents(*a));
  Vec e = a->zero();
  for (const auto& p : prims)
    if (rng.coin()) e = vadd(f, e, p);
  const Subspace& rad = radical(*a);
  Vec r = a->zero();
  for (const auto& b : rad.basis()) r = vadd(f, r, vscale(f, f.from_int(rng.uniform(-2, 2)), b));
  Vec u = vadd(f, a->unit(), r);
  Vec inv = a->unit(), pw = a->unit();
  Vec neg = vscale(f, f.from_int(-1), r);
  for (std::size_t k = 0; k < a->dim() + 1; ++k) {
    pw = a->mul(pw, neg);
    if (is_zero(pw)) break;
    inv = vadd(f, inv, pw);
  }
  return a->mul(a->mul(u, e), inv);
}

/// N (a left A-module) as a right module over A^op, i.e. a left module
/// over (A^op)^op.
inline Module as_right_of_opposite(const Module& n, const AlgebraPtr& aop) {
  return Module(opposite(*aop), n.dim(), n.actions(), n.name());
}

}  // namespace endok::testing
