#pragma once

#include <algorithm>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "endok/projectives.hpp"

namespace endok {

/// Finite direct sum of modules A e_k (e_k idempotent), with the summand
/// bases kept in algebra coordinates so that maps out of it are determined
/// by generator images x_k in e_k M.
struct FreeTerm {
  std::vector<Vec> idempotents;
  std::vector<Subspace> spaces;  ///< A e_k inside A
  std::vector<std::size_t> offsets;
  Module module;

  std::size_t summands() const { return idempotents.size(); }
  std::size_t dim() const { return module.dim(); }
};

inline FreeTerm free_term(const AlgebraPtr& a, const std::vector<Vec>& idempotents) {
  FreeTerm t;
  t.idempotents = idempotents;
  std::vector<Module> parts;
  Module reg = regular_module(a);
  for (const Vec& e : idempotents) {
    Subspace l = left_ideal(*a, {e});
    t.spaces.push_back(l);
    parts.push_back(submodule(reg, l).module);
  }
  DirectSum s = direct_sum(parts, a);
  t.offsets = s.offsets;
  t.module = s.module;
  return t;
}

/// Matrix of the map from a free term sending the generator of the k-th
/// summand to images[k] (which must lie in e_k M).
inline Mat free_map(const FreeTerm& t, const Module& target, const std::vector<Vec>& images) {
  Mat m(target.field(), target.dim(), t.dim());
  for (std::size_t k = 0; k < t.summands(); ++k) {
    if (target.act(t.idempotents[k], images[k]) != images[k])
      throw Error("generator image is not fixed by its idempotent");
    const auto& basis = t.spaces[k].basis();
    for (std::size_t j = 0; j < basis.size(); ++j) {
      Vec col = target.act(basis[j], images[k]);
      for (std::size_t r = 0; r < target.dim(); ++r) m(r, t.offsets[k] + j) = col[r];
    }
  }
  return m;
}

struct Cover {
  FreeTerm term;
  std::vector<std::size_t> classes;  ///< primitive class of each summand
  std::vector<Vec> images;           ///< generator images in M
  Mat epi;                           ///< M dim x P dim
};

/// Projective cover: one summand P_c per copy of S_c in the top of m.
inline Cover projective_cover(const Module& m, const SearchOptions& opt = {}) {
  if (m.dim() == 0) throw ZeroModule();
  const auto& d = projectives(m.parent(), opt);
  Subspace covered = radical_of_module(m);
  std::vector<Vec> images;
  std::vector<std::size_t> classes;
  for (std::size_t c = 0; c < d.classes() && covered.dim() < m.dim(); ++c) {
    Mat ec = m.action_of(d.class_idempotent(c));
    for (std::size_t j = 0; j < m.dim() && covered.dim() < m.dim(); ++j) {
      Vec x = ec.col_vec(j);
      if (covered.contains(x)) continue;
      images.push_back(x);
      classes.push_back(c);
      covered = covered.sum(generated_submodule(m, {x}));
    }
  }
  if (covered.dim() != m.dim()) throw Error("projective cover: top not exhausted");
  std::vector<Vec> idem;
  for (auto c : classes) idem.push_back(d.class_idempotent(c));
  Cover out;
  out.term = free_term(m.parent(), idem);
  out.classes = std::move(classes);
  out.images = std::move(images);
  out.epi = free_map(out.term, m, out.images);
  if (rank(out.epi) != m.dim()) throw Error("projective cover is not surjective");
  return out;
}

inline bool is_projective(const Module& m, const SearchOptions& opt = {}) {
  if (m.dim() == 0) return true;
  return projective_cover(m, opt).term.dim() == m.dim();
}

enum class Certified { Yes, No, Unknown };

inline std::string to_string(Certified c) {
  switch (c) {
    case Certified::Yes: return "Yes";
    case Certified::No: return "No";
    default: return "Unknown";
  }
}

struct IsoResult {
  Certified status = Certified::Unknown;
  Mat witness;  ///< invertible intertwiner m -> n when Yes
  std::string reason;
};

/// Randomized-with-certificate isomorphism test.
inline IsoResult iso_test(const Module& m, const Module& n, const SearchOptions& opt = {}) {
  require_same_parent(m, n);
  IsoResult r;
  if (m.dim() != n.dim()) {
    r.status = Certified::No;
    r.reason = "dimension " + std::to_string(m.dim()) + " vs " + std::to_string(n.dim());
    return r;
  }
  if (m.dim() == 0) {
    r.status = Certified::Yes;
    r.witness = Mat(m.field(), 0, 0);
    return r;
  }
  auto mn = hom_space(m, n);
  const std::size_t mm = hom_dim(m, m);
  if (mm != mn.size()) {
    r.status = Certified::No;
    r.reason = "dim Hom(m,m) = " + std::to_string(mm) + " but dim Hom(m,n) = " + std::to_string(mn.size());
    return r;
  }
  const std::size_t nn = hom_dim(n, n);
  if (nn != hom_dim(n, m)) {
    r.status = Certified::No;
    r.reason = "dim Hom(n,n) differs from dim Hom(n,m)";
    return r;
  }
  if (m.field().is_rationals() && radical_layers(m) != radical_layers(n)) {
    r.status = Certified::No;
    r.reason = "radical layers differ";
    return r;
  }
  Rng rng(opt.seed ^ 0x5bd1e995ULL);
  const std::size_t tries = std::max<std::size_t>(opt.retries, 1);
  for (std::size_t s = 0; s < tries; ++s) {
    Mat h(m.field(), n.dim(), m.dim());
    const long spread = s < 4 ? 3 : 1000;
    for (const Mat& b : mn) h.add_scaled(m.field().from_int(rng.uniform(-spread, spread)), b);
    if (rank(h) == m.dim()) {
      if (!intertwines(m, n, h)) throw Error("iso witness does not intertwine");
      r.status = Certified::Yes;
      r.witness = std::move(h);
      return r;
    }
  }
  r.reason = "no invertible intertwiner among sampled maps";
  return r;
}

struct PdStatus {
  enum class Kind { FiniteLength, PeriodicHenceInfinite, UnknownBeyond } kind = Kind::UnknownBeyond;
  std::size_t length = 0;  ///< FiniteLength
  std::size_t from = 0;    ///< Periodic: syzygy index q with Omega^q ~ Omega^p
  std::size_t to = 0;      ///< Periodic: p
  std::size_t bound = 0;   ///< UnknownBeyond

  std::string str() const {
    switch (kind) {
      case Kind::FiniteLength: return "FiniteLength(" + std::to_string(length) + ")";
      case Kind::PeriodicHenceInfinite:
        return "PeriodicHenceInfinite(" + std::to_string(from) + "," + std::to_string(to) + ")";
      default: return "UnknownBeyond(" + std::to_string(bound) + ")";
    }
  }
};

/// Projective resolution ... -> P_1 -> P_0 -> M -> 0.
/// differentials[0] is the augmentation P_0 -> M; differentials[j] maps
/// P_j -> P_{j-1}. syzygies[j] is Omega^j M inside P_{j-1} (syzygies[0] = M).
struct Resolution {
  Module target;
  std::vector<FreeTerm> terms;
  std::vector<Mat> differentials;
  std::vector<Sub> syzygies;
  PdStatus status;
};

inline void verify_exactness(const Resolution& r) {
  for (std::size_t j = 0; j < r.terms.size(); ++j) {
    if (!intertwines(r.terms[j].module, j == 0 ? r.target : r.terms[j - 1].module, r.differentials[j]))
      throw Error("resolution differential is not a module map");
    Subspace ker = kernel(r.differentials[j]);
    if (j + 1 < r.terms.size()) {
      if (image(r.differentials[j + 1]) != ker) throw Error("resolution is not exact");
    }
    if (j == 0 && rank(r.differentials[0]) != r.target.dim()) throw Error("augmentation is not onto");
  }
  if (r.status.kind == PdStatus::Kind::FiniteLength && !r.terms.empty() && rank(r.differentials.back()) != r.terms.back().dim())
    throw Error("last differential of a finite resolution is not injective");
}

/// Minimal projective resolution by iterated projective covers.
inline Resolution resolution(const Module& m, std::size_t bound, const SearchOptions& opt = {}) {
  Resolution r;
  r.target = m;
  Mat full = Mat::identity(m.field(), m.dim());
  r.syzygies.push_back({m, full, Subspace::full(m.field(), m.dim())});
  if (m.dim() == 0) {
    r.status.kind = PdStatus::Kind::FiniteLength;
    r.status.length = 0;
    return r;
  }
  std::optional<std::size_t> stop_after;
  for (std::size_t j = 0;; ++j) {
    const Sub& k = r.syzygies[j];
    Cover c = projective_cover(k.module, opt);
    r.differentials.push_back(k.inclusion * c.epi);
    r.terms.push_back(c.term);
    Subspace ker = kernel(c.epi);
    if (ker.dim() == 0) {
      if (!stop_after) {
        r.status.kind = PdStatus::Kind::FiniteLength;
        r.status.length = j;
      }
      break;
    }
    r.syzygies.push_back(submodule(c.term.module, ker, "Omega" + std::to_string(j + 1)));
    if (stop_after) {
      if (j >= *stop_after) break;
      continue;
    }
    const std::size_t p = j + 1;
    for (std::size_t q = 1; q < p; ++q) {
      if (r.syzygies[q].module.dim() != r.syzygies[p].module.dim()) continue;
      if (iso_test(r.syzygies[q].module, r.syzygies[p].module, opt).status == Certified::Yes) {
        r.status.kind = PdStatus::Kind::PeriodicHenceInfinite;
        r.status.from = q;
        r.status.to = p;
        stop_after = p + 1;
        break;
      }
    }
    if (!stop_after && (j >= bound || r.syzygies[p].module.dim() > opt.max_syzygy_dim)) {
      r.status.kind = PdStatus::Kind::UnknownBeyond;
      r.status.bound = std::min(bound, j + 1);
      break;
    }
  }
  verify_exactness(r);
  return r;
}

inline std::size_t default_bound(const Algebra& a) { return 2 * a.dim(); }

}  // namespace endok
