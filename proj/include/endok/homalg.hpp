#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "endok/verdict.hpp"

namespace endok {

/// True when b carries the transposed structure constants of a.
inline bool is_opposite_of(const Algebra& b, const Algebra& a) {
  if (a.field() != b.field() || a.dim() != b.dim() || a.unit() != b.unit()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (b.product(i, j) != a.product(j, i)) return false;
  return true;
}

struct TensorResult {
  std::size_t dim = 0;
  Subspace relations;  ///< inside M (x)_k N, index i * dim N + j
  std::size_t m_dim = 0, n_dim = 0;
};

/// M (x)_A N for a right module M (a left module over A^op) and a left
/// module N: the quotient of M (x)_k N by {m a (x) n - m (x) a n}.
inline TensorResult tensor_over(const Module& m, const Module& n) {
  if (!is_opposite_of(m.algebra(), n.algebra())) throw ParentMismatch();
  const Field& f = n.field();
  const std::size_t dm = m.dim(), dn = n.dim(), d = dm * dn;
  Echelon rel(f, d);
  for (const Vec& g : n.algebra().generators()) {
    Mat am = m.action_of(g), an = n.action_of(g);
    for (std::size_t i = 0; i < dm; ++i)
      for (std::size_t j = 0; j < dn; ++j) {
        Vec v = zero_vec(d);
        for (std::size_t k = 0; k < dm; ++k)
          if (!is_zero(am(k, i))) v[k * dn + j] = f.add(v[k * dn + j], am(k, i));
        for (std::size_t l = 0; l < dn; ++l)
          if (!is_zero(an(l, j))) v[i * dn + l] = f.sub(v[i * dn + l], an(l, j));
        rel.insert(v);
      }
  }
  TensorResult t;
  t.dim = d - rel.rank();
  t.relations = Subspace::from_echelon(std::move(rel));
  t.m_dim = dm;
  t.n_dim = dn;
  return t;
}

struct TorProfile {
  enum class Status { CompleteThrough, Exact, Periodic };
  std::vector<std::pair<std::size_t, std::size_t>> degrees;  ///< (j, dim Tor_j)
  Status status = Status::CompleteThrough;
  std::size_t bound = 0;
  PdStatus resolution_status;

  std::size_t at(std::size_t j) const {
    for (auto [k, v] : degrees)
      if (k == j) return v;
    if (status == Status::Exact) return 0;
    throw Error("Tor degree " + std::to_string(j) + " not computed");
  }
  bool computed(std::size_t j) const {
    for (auto [k, v] : degrees)
      if (k == j) return true;
    return status == Status::Exact;
  }
  std::string status_str() const {
    switch (status) {
      case Status::Exact: return "Exact";
      case Status::Periodic: return "Periodic";
      default: return "CompleteThrough(" + std::to_string(bound) + ")";
    }
  }
};

/// Tor_j(M, N) from a given projective resolution of N (minimal or not).
/// Uses M (x)_A A e = M e.
inline TorProfile tor_from_resolution(const Module& m, const Resolution& res) {
  const Algebra& a = res.target.algebra();
  if (!is_opposite_of(m.algebra(), a)) throw ParentMismatch();
  const Field& f = a.field();
  const std::size_t nt = res.terms.size();
  // Chain groups C_j = sum_k M e_k.
  std::vector<std::vector<Subspace>> parts(nt);
  std::vector<std::vector<std::size_t>> offs(nt);
  std::vector<std::size_t> cdim(nt, 0);
  for (std::size_t j = 0; j < nt; ++j)
    for (const Vec& e : res.terms[j].idempotents) {
      parts[j].push_back(image(m.action_of(e)));
      offs[j].push_back(cdim[j]);
      cdim[j] += parts[j].back().dim();
    }
  // Boundary maps C_j -> C_{j-1}, j >= 1.
  std::vector<std::size_t> rk(nt + 1, 0);
  for (std::size_t j = 1; j < nt; ++j) {
    const FreeTerm& src = res.terms[j];
    const FreeTerm& dst = res.terms[j - 1];
    Mat bd(f, cdim[j - 1], cdim[j]);
    for (std::size_t k = 0; k < src.summands(); ++k) {
      // Image of the generator e_k of the k-th summand.
      Vec gen = zero_vec(src.dim());
      Vec gc = src.spaces[k].coords(src.idempotents[k]);
      for (std::size_t t = 0; t < gc.size(); ++t) gen[src.offsets[k] + t] = gc[t];
      Vec img = res.differentials[j] * gen;
      for (std::size_t l = 0; l < dst.summands(); ++l) {
        const std::size_t len = dst.spaces[l].dim();
        Vec c(img.begin() + static_cast<std::ptrdiff_t>(dst.offsets[l]),
              img.begin() + static_cast<std::ptrdiff_t>(dst.offsets[l] + len));
        if (is_zero(c)) continue;
        Mat act = m.action_of(dst.spaces[l].from_coords(c));
        for (std::size_t u = 0; u < parts[j][k].dim(); ++u) {
          Vec w = parts[j - 1][l].coords(act * parts[j][k].basis()[u]);
          for (std::size_t t = 0; t < w.size(); ++t)
            bd(offs[j - 1][l] + t, offs[j][k] + u) = f.add(bd(offs[j - 1][l] + t, offs[j][k] + u), w[t]);
        }
      }
    }
    rk[j] = rank(bd);
  }
  TorProfile p;
  p.resolution_status = res.status;
  const bool finite = res.status.kind == PdStatus::Kind::FiniteLength;
  // Tor_j needs the boundary out of C_{j+1}; for a finite resolution that
  // term is zero.
  const std::size_t top = finite ? nt : (nt == 0 ? 0 : nt - 1);
  for (std::size_t j = 0; j < top; ++j) {
    std::size_t next = j + 1 < nt ? rk[j + 1] : 0;
    p.degrees.push_back({j, cdim[j] - rk[j] - next});
  }
  p.bound = top == 0 ? 0 : top - 1;
  if (finite) {
    p.status = TorProfile::Status::Exact;
  } else if (res.status.kind == PdStatus::Kind::PeriodicHenceInfinite) {
    p.status = TorProfile::Status::Periodic;
  }
  return p;
}

inline TorProfile tor(const Module& m, const Module& n, std::size_t bound, const SearchOptions& opt = {}) {
  return tor_from_resolution(m, resolution(n, bound + 1, opt));
}

/// Whether Tor_j vanishes for every j >= 1 (resp. j >= first), certified
/// through a finite resolution or one full syzygy period.
inline Verdict higher_tor_vanishes(const TorProfile& p, std::size_t first = 1) {
  for (auto [j, d] : p.degrees)
    if (j >= first && d != 0) {
      Verdict v = Verdict::no("Tor_" + std::to_string(j) + " has dimension " + std::to_string(d));
      v.degree = j;
      v.value = d;
      return v;
    }
  if (p.status == TorProfile::Status::Exact) return Verdict::yes("finite resolution");
  if (p.status == TorProfile::Status::Periodic) {
    // Tor_j for j > p is Tor_{j-p+q}; all of 1..p were computed.
    if (p.computed(p.resolution_status.to)) return Verdict::yes("vanishing on a full syzygy period");
  }
  return Verdict::unknown("higher Tor vanishes through degree " + std::to_string(p.bound), p.bound);
}

/// The algebra A^op together with a cache, since many right-module
/// computations need it.
inline AlgebraPtr opposite_of(const AlgebraPtr& a) { return opposite(*a); }

/// R/J as a left R-module and as a right R-module (left over R^op).
struct QuotientModules {
  Module left;
  Module right;
};

inline QuotientModules quotient_modules(const AlgebraPtr& a, const AlgebraPtr& aop, const Subspace& j) {
  return {quotient_module(regular_module(a), j, "R/J").module,
          quotient_module(regular_module(aop), j, "R/J").module};
}

/// J = A e A is homological: Tor_j(A/J, A/J) = 0 for all j > 0.
inline Verdict is_homological_ideal(const AlgebraPtr& a, const Vec& e, std::size_t bound,
                                    const SearchOptions& opt = {}) {
  if (!a->is_idempotent(e)) throw NotIdempotent();
  Subspace j = ideal_generated(a, {e}).space;
  AlgebraPtr aop = opposite(*a);
  auto q = quotient_modules(a, aop, j);
  TorProfile p = tor(q.right, q.left, bound, opt);
  Verdict v = higher_tor_vanishes(p);
  v.reason = "Tor(R/J,R/J): " + v.reason;
  return v;
}

/// Modules for the corner C = eAe: Re as a right C-module (left over C^op)
/// and eR as a left C-module.
struct CornerBimodules {
  Embedded corner;
  AlgebraPtr corner_op;
  Subspace re, er;
  Module re_right;
  Module er_left;
};

inline CornerBimodules corner_bimodules(const AlgebraPtr& a, const Vec& e) {
  CornerBimodules b;
  b.corner = corner(*a, e);
  b.corner_op = opposite(*b.corner.algebra);
  b.re = left_ideal(*a, {e});
  b.er = right_ideal(*a, {e});
  const std::size_t cd = b.corner.algebra->dim();
  std::vector<Mat> ract, lact;
  for (std::size_t i = 0; i < cd; ++i) {
    Vec c = b.corner.to_parent(b.corner.algebra->basis(i));
    Mat r(a->field(), b.re.dim(), b.re.dim());
    for (std::size_t u = 0; u < b.re.dim(); ++u) {
      Vec w = b.re.coords(a->mul(b.re.basis()[u], c));
      for (std::size_t t = 0; t < w.size(); ++t) r(t, u) = w[t];
    }
    ract.push_back(std::move(r));
    Mat l(a->field(), b.er.dim(), b.er.dim());
    for (std::size_t u = 0; u < b.er.dim(); ++u) {
      Vec w = b.er.coords(a->mul(c, b.er.basis()[u]));
      for (std::size_t t = 0; t < w.size(); ++t) l(t, u) = w[t];
    }
    lact.push_back(std::move(l));
  }
  b.re_right = Module(b.corner_op, b.re.dim(), std::move(ract), "Re");
  b.er_left = Module(b.corner.algebra, b.er.dim(), std::move(lact), "eR");
  return b;
}

struct StratifyingReport {
  Verdict multiplication;  ///< Re (x)_{eRe} eR -> ReR bijective
  Verdict tor;             ///< Tor^{eRe}_j(Re, eR) = 0 for j >= 1
  Verdict overall;
  std::size_t tensor_dim = 0;
  std::size_t ideal_dim = 0;
  std::size_t mult_rank = 0;
};

inline StratifyingReport is_stratifying(const AlgebraPtr& a, const Vec& e, std::size_t bound,
                                        const SearchOptions& opt = {}) {
  if (!a->is_idempotent(e)) throw NotIdempotent();
  StratifyingReport r;
  if (is_zero(e)) {
    r.multiplication = Verdict::yes("e = 0: both sides vanish");
    r.tor = Verdict::yes("e = 0");
    r.overall = Verdict::yes("e = 0");
    return r;
  }
  CornerBimodules b = corner_bimodules(a, e);
  TensorResult t = tensor_over(b.re_right, b.er_left);
  Subspace j = ideal_generated(a, {e}).space;
  // Explicit multiplication map Re (x)_k eR -> A; it must kill the
  // balancing relations and its rank is dim ReR.
  const std::size_t dr = b.re.dim(), de = b.er.dim();
  Mat mu(a->field(), a->dim(), dr * de);
  for (std::size_t i = 0; i < dr; ++i)
    for (std::size_t k = 0; k < de; ++k) {
      Vec p = a->mul(b.re.basis()[i], b.er.basis()[k]);
      for (std::size_t s = 0; s < a->dim(); ++s) mu(s, i * de + k) = p[s];
    }
  for (const Vec& rel : t.relations.basis())
    if (!is_zero(mu * rel)) throw Error("multiplication map does not respect the tensor relations");
  r.tensor_dim = t.dim;
  r.ideal_dim = j.dim();
  r.mult_rank = rank(mu);
  r.multiplication = Verdict::of(r.tensor_dim == r.ideal_dim && r.mult_rank == r.ideal_dim,
                                 "dim Re(x)eR = " + std::to_string(r.tensor_dim) + ", dim ReR = " +
                                     std::to_string(r.ideal_dim));
  TorProfile p = tor(b.re_right, b.er_left, bound, opt);
  r.tor = higher_tor_vanishes(p);
  r.tor.reason = "Tor^{eRe}(Re,eR): " + r.tor.reason;
  r.overall = conjunction({&r.multiplication, &r.tor}, "stratifying");
  return r;
}

/// Classes (with multiplicity) of indecomposable summands of a projective
/// module, read off its top.
inline std::vector<std::size_t> projective_classes(const Module& p, const SearchOptions& opt = {}) {
  return top_multiplicities(p, opt);
}

/// Membership in add(Ae): m projective and every indecomposable summand
/// of m is a summand of Ae (projectives are determined by their tops).
inline bool in_add(const Module& m, const Vec& e, const SearchOptions& opt = {}) {
  if (m.dim() == 0) return true;
  if (!is_projective(m, opt)) return false;
  const AlgebraPtr& a = m.parent();
  if (is_zero(e)) return false;
  Module ae = left_ideal_module(a, left_ideal(*a, {e})).module;
  auto mc = projective_classes(m, opt), ec = projective_classes(ae, opt);
  for (std::size_t c = 0; c < mc.size(); ++c)
    if (mc[c] > 0 && ec[c] == 0) return false;
  return true;
}

/// A resolution whose terms all lie in add(Ae), built by the trace
/// argument: when J M = M, copies of Ae map onto M.
inline Resolution add_Re_resolution(const AlgebraPtr& a, const Vec& e, const Module& m, std::size_t bound,
                                    const SearchOptions& opt = {}) {
  if (!a->is_idempotent(e)) throw NotIdempotent();
  Subspace j = ideal_generated(a, {e}).space;
  AlgebraPtr aop = opposite(*a);
  Module rj = quotient_module(regular_module(aop), j, "R/J").module;
  TorProfile p = tor(rj, m, bound, opt);
  for (std::size_t d = 0; d <= bound && p.computed(d); ++d)
    if (p.at(d) != 0) throw PreconditionFailed("Tor_j(R/J,M) = 0", d);
  if (p.resolution_status.kind != PdStatus::Kind::FiniteLength)
    throw PreconditionFailed("finite projective dimension of M", bound);

  Resolution r;
  r.target = m;
  r.syzygies.push_back({m, Mat::identity(m.field(), m.dim()), Subspace::full(m.field(), m.dim())});
  for (std::size_t step = 0; step <= bound; ++step) {
    const Sub& k = r.syzygies.back();
    if (k.module.dim() == 0) {
      r.status.kind = PdStatus::Kind::FiniteLength;
      r.status.length = step == 0 ? 0 : step - 1;
      verify_exactness(r);
      return r;
    }
    FreeTerm term;
    Mat epi;
    if (in_add(k.module, e, opt)) {
      Cover c = projective_cover(k.module, opt);
      term = c.term;
      epi = c.epi;
    } else {
      Mat ek = k.module.action_of(e);
      std::vector<Vec> images;
      Subspace covered = Subspace::zero(m.field(), k.module.dim());
      for (std::size_t col = 0; col < k.module.dim() && covered.dim() < k.module.dim(); ++col) {
        Vec x = ek.col_vec(col);
        if (covered.contains(x)) continue;
        images.push_back(x);
        covered = covered.sum(generated_submodule(k.module, {x}));
      }
      if (covered.dim() != k.module.dim()) throw PreconditionFailed("J M = M", step);
      term = free_term(a, std::vector<Vec>(images.size(), e));
      epi = free_map(term, k.module, images);
    }
    r.differentials.push_back(k.inclusion * epi);
    r.terms.push_back(term);
    Subspace ker = kernel(epi);
    r.syzygies.push_back(submodule(term.module, ker, "K" + std::to_string(step + 1)));
  }
  throw BoundExceeded(bound);
}

}  // namespace endok
