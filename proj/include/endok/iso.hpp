#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "endok/idempotents.hpp"
#include "endok/resolution.hpp"

namespace endok {

/// Checks that m (dim b x dim a) is a unital algebra homomorphism a -> b.
inline bool is_algebra_map(const Algebra& a, const Algebra& b, const Mat& m) {
  if (m.rows() != b.dim() || m.cols() != a.dim()) return false;
  if (m * a.unit() != b.unit()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (m * a.mul_basis(i, j) != b.mul(m.col_vec(i), m.col_vec(j))) return false;
  return true;
}

inline bool is_algebra_iso(const Algebra& a, const Algebra& b, const Mat& m) {
  return a.dim() == b.dim() && is_algebra_map(a, b, m) && rank(m) == a.dim();
}

struct AlgebraIso {
  Certified status = Certified::Unknown;
  Mat map;  ///< dim b x dim a, when Yes
  std::string reason;
};

namespace detail {

/// A linear map defined on a subspace of a, stored as an echelon of graph
/// vectors (x | phi(x)).
class PartialMap {
 public:
  PartialMap(const Algebra& a, const Algebra& b) : a_(a), b_(b), graph_(a.field(), a.dim() + b.dim()) {}

  std::size_t dim() const { return pairs_.size(); }

  /// Adds x -> y. Returns false when this contradicts the map so far.
  bool add(const Vec& x, const Vec& y) {
    Vec g = join(x, y);
    Vec r = graph_.reduce(g);
    std::size_t lead = 0;
    while (lead < r.size() && is_zero(r[lead])) ++lead;
    if (lead == r.size()) return true;
    if (lead >= a_.dim()) return false;
    graph_.insert(g);
    pairs_.push_back({x, y});
    return true;
  }

  std::optional<Vec> image(const Vec& x) const {
    Vec r = graph_.reduce(join(x, b_.zero()));
    for (std::size_t i = 0; i < a_.dim(); ++i)
      if (!is_zero(r[i])) return std::nullopt;
    Vec y(r.begin() + static_cast<std::ptrdiff_t>(a_.dim()), r.end());
    for (auto& v : y) v = a_.field().neg(v);
    return y;
  }

  /// Closes the domain under products. False on inconsistency.
  bool close() {
    for (std::size_t i = 0; i < pairs_.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        const auto pi = pairs_[i];
        const auto pj = pairs_[j];
        if (!add(a_.mul(pi.first, pj.first), b_.mul(pi.second, pj.second))) return false;
        if (!add(a_.mul(pj.first, pi.first), b_.mul(pj.second, pi.second))) return false;
      }
    return true;
  }

  const std::vector<std::pair<Vec, Vec>>& pairs() const { return pairs_; }

  Mat matrix() const {
    Mat m(b_.field(), b_.dim(), a_.dim());
    for (std::size_t j = 0; j < a_.dim(); ++j) {
      Vec y = *image(a_.basis(j));
      for (std::size_t i = 0; i < b_.dim(); ++i) m(i, j) = y[i];
    }
    return m;
  }

 private:
  Vec join(const Vec& x, const Vec& y) const {
    Vec g = x;
    g.insert(g.end(), y.begin(), y.end());
    return g;
  }

  const Algebra& a_;
  const Algebra& b_;
  Echelon graph_;
  std::vector<std::pair<Vec, Vec>> pairs_;
};

inline Subspace peirce(const Algebra& a, const Vec& e, const Vec& f) {
  std::vector<Vec> vs;
  for (std::size_t i = 0; i < a.dim(); ++i) vs.push_back(a.mul(a.mul(e, a.basis(i)), f));
  return Subspace::span(a.field(), a.dim(), vs);
}

struct Generator {
  Vec element;
  std::size_t i, j;  ///< Peirce position
};

/// Generators of a beyond its idempotents, one Peirce piece at a time.
inline std::vector<Generator> peirce_generators(const Algebra& a, const std::vector<Vec>& idem) {
  std::vector<Generator> gens;
  auto closure = [&]() {
    std::vector<Vec> all = idem;
    for (const auto& g : gens) all.push_back(g.element);
    std::vector<Vec> s;
    Echelon e(a.field(), a.dim());
    for (const Vec& v : all)
      if (e.insert(v)) s.push_back(v);
    for (std::size_t k = 0; k < s.size(); ++k)
      for (std::size_t l = 0; l <= k; ++l)
        for (const Vec& p : {a.mul(s[k], s[l]), a.mul(s[l], s[k])})
          if (e.insert(p)) s.push_back(p);
    return Subspace::from_echelon(std::move(e));
  };
  Subspace gen = closure();
  for (std::size_t i = 0; i < idem.size() && gen.dim() < a.dim(); ++i)
    for (std::size_t j = 0; j < idem.size() && gen.dim() < a.dim(); ++j) {
      Subspace piece = peirce(a, idem[i], idem[j]);
      for (const Vec& v : piece.basis()) {
        if (gen.contains(v)) continue;
        gens.push_back({v, i, j});
        gen = closure();
      }
    }
  return gens;
}

inline std::size_t peirce_dim(const Algebra& a, const Vec& e, const Vec& f) { return peirce(a, e, f).dim(); }

}  // namespace detail

/// Obstructions that certify non-isomorphism.
inline std::optional<std::string> algebra_invariant_mismatch(const Algebra& a, const Algebra& b) {
  if (a.field() != b.field()) return "different ground fields";
  if (a.dim() != b.dim()) return "dimension " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim());
  if (a.is_commutative() != b.is_commutative()) return "one algebra is commutative, the other is not";
  if (center(a).dim() != center(b).dim()) return "centers differ in dimension";
  if (a.field().is_rationals()) {
    if (radical(a).dim() != radical(b).dim()) return "radicals differ in dimension";
    if (radical_nilpotency(a) != radical_nilpotency(b)) return "radical nilpotency indices differ";
  }
  return std::nullopt;
}

/// Randomized search for an algebra isomorphism a -> b with an exact
/// certificate. Images of primitive idempotents are matched by Peirce
/// dimensions; each further generator gets an image solving the linear
/// constraints imposed by the part of a already mapped.
inline AlgebraIso algebra_iso(const AlgebraPtr& a, const AlgebraPtr& b, const SearchOptions& opt = {}) {
  AlgebraIso r;
  if (auto why = algebra_invariant_mismatch(*a, *b)) {
    r.status = Certified::No;
    r.reason = *why;
    return r;
  }
  const Field& f = a->field();
  if (a->dim() == 0) {
    r.status = Certified::Yes;
    r.map = Mat(f, 0, 0);
    return r;
  }
  std::vector<Vec> ea = elements(primitive_idempotents(*a, opt));
  std::vector<Vec> eb = elements(primitive_idempotents(*b, opt));
  if (ea.size() != eb.size()) {
    r.status = Certified::No;
    r.reason = "different numbers of primitive idempotents";
    return r;
  }
  const std::size_t n = ea.size();
  std::vector<std::vector<std::size_t>> pa(n, std::vector<std::size_t>(n)), pb = pa;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      pa[i][j] = detail::peirce_dim(*a, ea[i], ea[j]);
      pb[i][j] = detail::peirce_dim(*b, eb[i], eb[j]);
    }
  auto gens = detail::peirce_generators(*a, ea);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  bool any_perm = false;
  Rng rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
  const std::size_t tries = std::max<std::size_t>(opt.retries, 1);
  do {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i)
      for (std::size_t j = 0; j < n && match; ++j) match = pa[i][j] == pb[perm[i]][perm[j]];
    if (!match) continue;
    any_perm = true;
    std::vector<Subspace> target_piece;
    for (const auto& g : gens) target_piece.push_back(detail::peirce(*b, eb[perm[g.i]], eb[perm[g.j]]));
    for (std::size_t t = 0; t < tries; ++t) {
      detail::PartialMap m(*a, *b);
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) ok = m.add(ea[i], eb[perm[i]]);
      ok = ok && m.close();
      for (std::size_t g = 0; g < gens.size() && ok; ++g) {
        const Vec& x = gens[g].element;
        const auto& piece = target_piece[g].basis();
        // Unknown image y = sum c_k piece[k]; constraints y s = phi(x s), s y = phi(s x).
        std::vector<Vec> rows;
        std::vector<Scalar> rhs;
        auto constrain = [&](const Vec& known_img, const std::optional<Vec>& prod_img, bool right) {
          if (!prod_img) return;
          for (std::size_t coord = 0; coord < b->dim(); ++coord) {
            Vec row(piece.size(), Scalar(0));
            for (std::size_t k = 0; k < piece.size(); ++k) {
              Vec p = right ? b->mul(piece[k], known_img) : b->mul(known_img, piece[k]);
              row[k] = p[coord];
            }
            rows.push_back(std::move(row));
            rhs.push_back((*prod_img)[coord]);
          }
        };
        for (const auto& [s, sy] : m.pairs()) {
          constrain(sy, m.image(a->mul(x, s)), true);
          constrain(sy, m.image(a->mul(s, x)), false);
        }
        Vec choice(piece.size(), Scalar(0));
        if (!rows.empty()) {
          Mat am = Mat::from_rows(f, rows, piece.size());
          Mat bm(f, rhs.size(), 1);
          for (std::size_t k = 0; k < rhs.size(); ++k) bm(k, 0) = rhs[k];
          LinearSolution sol = solve_linear(am, bm);
          if (!sol.solvable) {
            ok = false;
            break;
          }
          choice = sol.particular.col_vec(0);
          for (const Vec& kv : sol.kernel)
            choice = vadd(f, choice, vscale(f, f.from_int(rng.uniform(-5, 5)), kv));
        } else {
          for (std::size_t k = 0; k < piece.size(); ++k) choice[k] = f.from_int(rng.uniform(-5, 5));
        }
        Vec y = b->zero();
        for (std::size_t k = 0; k < piece.size(); ++k) y = vadd(f, y, vscale(f, choice[k], piece[k]));
        ok = m.add(x, y) && m.close();
      }
      if (!ok || m.dim() != a->dim()) continue;
      Mat phi = m.matrix();
      if (is_algebra_iso(*a, *b, phi)) {
        r.status = Certified::Yes;
        r.map = std::move(phi);
        return r;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (!any_perm) {
    r.status = Certified::No;
    r.reason = "no matching of primitive idempotents preserves Peirce dimensions";
    return r;
  }
  r.reason = "no isomorphism found within the retry budget";
  return r;
}

}  // namespace endok
