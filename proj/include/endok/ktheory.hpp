#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "endok/endomorphism.hpp"
#include "endok/families.hpp"

namespace endok {

/// K0 of a finite-dimensional algebra at rank level.
struct K0Report {
  std::size_t rank = 0;
  std::vector<std::string> class_labels;
  std::size_t simple_count = 0;
  std::size_t block_count = 0;
  std::vector<std::vector<std::size_t>> cartan;
};

inline K0Report k0(const AlgebraPtr& a, const SearchOptions& opt = {}) {
  K0Report r;
  if (a->dim() == 0) return r;
  if (!a->field().is_rationals()) throw UnsupportedField("K0 rank needs the radical, which is computed over Q only");
  const auto& d = projectives(a, opt);
  r.rank = d.classes();
  r.simple_count = d.simple_count_check;
  r.block_count = d.block_count_check;
  for (std::size_t c = 0; c < d.classes(); ++c) r.class_labels.push_back(a->element_to_string(d.class_idempotent(c)));
  r.cartan = cartan_matrix(a, opt);
  if (r.rank != r.simple_count || r.rank != r.block_count)
    throw Error("K0 rank disagreement: " + std::to_string(r.rank) + " projective classes, " +
                std::to_string(r.simple_count) + " simple classes, " + std::to_string(r.block_count) + " blocks");
  return r;
}

/// Number of simple modules, counted as the simple components of A / rad A.
inline std::size_t k0_rank(const AlgebraPtr& a, const SearchOptions& opt = {}) {
  if (!a->field().is_rationals()) throw UnsupportedField("K0 rank needs the radical, which is computed over Q only");
  return semisimple_block_count(*a, opt);
}

/// Rank of K0 of End(m); zero for the zero module.
inline std::size_t end_rank(const Module& m, const SearchOptions& opt = {}) {
  if (m.dim() == 0) return 0;
  return k0_rank(end_algebra(m).algebra, opt);
}

enum class Classification { ConfirmsTheorem, HypothesisFailsFormulaFails, HypothesisFailsFormulaHolds, Inconclusive };

inline std::string to_string(Classification c) {
  switch (c) {
    case Classification::ConfirmsTheorem: return "ConfirmsTheorem";
    case Classification::HypothesisFailsFormulaFails: return "HypothesisFailsFormulaFails";
    case Classification::HypothesisFailsFormulaHolds: return "HypothesisFailsFormulaHolds";
    default: return "Inconclusive";
  }
}

struct Hypothesis {
  std::string name;
  Verdict verdict;
};

struct RankTerm {
  std::string name;
  std::size_t rank = 0;
};

/// One rank-level check of a decomposition formula.
struct DecompositionVerdict {
  std::string theorem;
  std::vector<Hypothesis> hypotheses;
  RankTerm lhs;
  std::vector<RankTerm> rhs;
  bool equation_holds = false;
  Classification classification = Classification::Inconclusive;
  std::vector<std::string> notes;

  std::size_t rhs_total() const {
    std::size_t s = 0;
    for (const auto& t : rhs) s += t.rank;
    return s;
  }
  std::string equation() const {
    std::string s = std::to_string(lhs.rank) + (equation_holds ? " = " : " != ");
    for (std::size_t i = 0; i < rhs.size(); ++i) s += (i ? " + " : "") + std::to_string(rhs[i].rank);
    if (rhs.empty()) s += "0";
    return s;
  }
};

/// Fills in equation_holds and the classification. All hypotheses Yes with
/// a failing equation contradicts a proved theorem and raises
/// SoundnessViolation.
inline DecompositionVerdict classify(DecompositionVerdict v) {
  v.equation_holds = v.lhs.rank == v.rhs_total();
  bool all_yes = true, any_no = false;
  for (const auto& h : v.hypotheses) {
    all_yes = all_yes && h.verdict.is_yes();
    any_no = any_no || h.verdict.is_no();
  }
  if (all_yes) {
    if (!v.equation_holds)
      throw SoundnessViolation(v.theorem + ": all hypotheses certified but " + v.equation());
    v.classification = Classification::ConfirmsTheorem;
  } else if (any_no) {
    v.classification =
        v.equation_holds ? Classification::HypothesisFailsFormulaHolds : Classification::HypothesisFailsFormulaFails;
  } else {
    v.classification = Classification::Inconclusive;
  }
  return v;
}

struct Bounds {
  std::size_t resolution = 0;  ///< 0: twice the algebra dimension
  std::size_t tor = 10;
  SearchOptions search;
  std::size_t resolution_for(const Algebra& a) const { return resolution ? resolution : default_bound(a); }
};

inline Verdict projective_verdict(const Module& m, const SearchOptions& opt, const std::string& what) {
  return Verdict::of(is_projective(m, opt), what + (is_projective(m, opt) ? " is projective" : " is not projective"));
}

/// Left-or-right disjunction of two verdicts.
inline Verdict either(const Verdict& l, const Verdict& r, const std::string& why) {
  if (l.is_yes() || r.is_yes()) return Verdict::yes(why + ": " + (l.is_yes() ? l.reason : r.reason));
  if (l.is_no() && r.is_no()) return Verdict::no(why + ": " + l.reason + "; " + r.reason);
  return Verdict::unknown(why, std::max(l.bound, r.bound));
}

inline Verdict finite_type_verdict(const Module& m, std::size_t bound, const SearchOptions& opt) {
  Resolution res = resolution(m, bound, opt);
  switch (res.status.kind) {
    case PdStatus::Kind::FiniteLength: return Verdict::yes("pd = " + std::to_string(res.status.length));
    case PdStatus::Kind::PeriodicHenceInfinite: return Verdict::no("pd " + res.status.str());
    default: return Verdict::unknown("pd " + res.status.str(), bound);
  }
}

/// Rank-level checks for an ideal I of R: the idempotent-ideal statements
/// and, when e is given with I = ReR, the homological statement.
inline std::vector<DecompositionVerdict> verify_thm1(const AlgebraPtr& r, const Subspace& i,
                                                     const std::optional<Vec>& e = std::nullopt,
                                                     const Bounds& b = {}) {
  if (!is_two_sided_ideal(*r, i)) throw Error("subspace is not a two-sided ideal");
  const SearchOptions& opt = b.search;
  std::vector<DecompositionVerdict> out;
  AlgebraPtr rop = opposite(*r);
  Module reg = regular_module(r);
  Module im = left_ideal_module(r, i).module;
  Module im_right = left_ideal_module(rop, i).module;
  Quotient q = quotient(*r, i);
  const std::size_t rank_r = k0_rank(r, opt);
  const std::size_t rank_q = k0_rank(q.algebra, opt);
  const std::size_t rank_end_i = end_rank(im, opt);

  Verdict idem = Verdict::of(product_span(*r, i, i) == i, i == product_span(*r, i, i) ? "I^2 = I" : "I^2 != I");
  // The right-module statements are the left-module ones over R^op.
  for (int side = 0; side < 2; ++side) {
    const AlgebraPtr& ra = side ? rop : r;
    const std::string tag = side ? " (right)" : " (left)";
    Module m = side ? im_right : im;
    const std::size_t rank_end = side ? end_rank(im_right, opt) : rank_end_i;
    DecompositionVerdict a;
    a.theorem = "1.1(1)" + tag;
    a.hypotheses = {{"I^2 = I", idem}};
    Module reg_side = side ? regular_module(rop) : reg;
    Module sum = i.dim() ? direct_sum({reg_side, m}).module : reg_side;
    a.lhs = {"End_R(R+I)", end_rank(sum, opt)};
    a.rhs = {{"R/I", rank_q}, {"End_R(I)", rank_end}};
    out.push_back(classify(a));

    DecompositionVerdict p;
    p.theorem = "1.1(1) projective" + tag;
    Verdict proj = projective_verdict(m, opt, side ? "I_R" : "_R I");
    p.hypotheses = {{"I^2 = I", idem}, {"I projective f.g." + tag, proj}};
    p.lhs = {"R", rank_r};
    p.rhs = {{"R/I", rank_q}, {"End_R(I)", rank_end}};
    if (e && proj.is_yes() && i == ideal_generated(r, {*e}).space) {
      Module re = left_ideal_module(ra, left_ideal(*ra, {*e})).module;
      auto ci = projective_classes(m, opt), ce = projective_classes(re, opt);
      bool same = true;
      for (std::size_t c = 0; c < ci.size(); ++c) same = same && ((ci[c] > 0) == (ce[c] > 0));
      p.notes.push_back(same ? "add(Re) = add(ReR)" : "add(Re) != add(ReR)");
    }
    out.push_back(classify(p));
  }

  if (e) {
    if (!r->is_idempotent(*e)) throw NotIdempotent();
    if (i != ideal_generated(r, {*e}).space) throw Error("ideal is not generated by the given idempotent");
    DecompositionVerdict h;
    h.theorem = "1.1(2)";
    Verdict hom = is_homological_ideal(r, *e, b.tor, opt);
    const std::size_t bound = b.resolution_for(*r);
    Verdict fl = i.dim() ? finite_type_verdict(im, bound, opt) : Verdict::yes("I = 0");
    Verdict fr = i.dim() ? finite_type_verdict(im_right, bound, opt) : Verdict::yes("I = 0");
    h.hypotheses = {{"ReR homological", hom}, {"ReR has a finite-type resolution (left or right)", either(fl, fr, "finite-type")}};
    Embedded c = corner(*r, *e);
    h.lhs = {"R", rank_r};
    h.rhs = {{"eRe", is_zero(*e) ? 0 : k0_rank(c.algebra, opt)}, {"R/ReR", rank_q}};
    out.push_back(classify(h));
  }
  return out;
}

inline Verdict condition_verdict(const ConditionResult& c, const std::string& name) {
  return c.holds ? Verdict::yes(name) : Verdict::no(name + " fails at " + c.failed);
}

/// Rank-level checks of the four covariance decompositions for
/// lambda: Y -> X.
inline std::vector<DecompositionVerdict> verify_mainthm(const Module& y, const Module& x, const Mat& lambda,
                                                        const SearchOptions& opt = {}) {
  CovarianceReport c = check_covariance(y, x, lambda);
  EndAlgebra ex = end_algebra(x);
  EndAlgebra ey = end_algebra(y);
  const std::size_t rank_xy = k0_rank(end_algebra(direct_sum({x, y}).module).algebra, opt);
  const std::size_t rank_x = k0_rank(ex.algebra, opt), rank_y = k0_rank(ey.algebra, opt);
  const std::size_t rank_xmody = k0_rank(end_quotient(ex, y).algebra, opt);
  const std::size_t rank_ymodx = k0_rank(end_quotient(ey, x).algebra, opt);
  auto make = [&](std::string thm, Verdict h, std::string hname, bool first) {
    DecompositionVerdict v;
    v.theorem = std::move(thm);
    v.hypotheses = {{std::move(hname), std::move(h)}};
    v.lhs = {"End(X+Y)", rank_xy};
    if (first)
      v.rhs = {{"End_{C,Y}(X)", rank_xmody}, {"End(Y)", rank_y}};
    else
      v.rhs = {{"End(X)", rank_x}, {"End_{C,X}(Y)", rank_ymodx}};
    return classify(std::move(v));
  };
  return {make("1.2(1)", condition_verdict(c.covariant, "covariant"), "lambda covariant", true),
          make("1.2(2)", condition_verdict(c.x_covariant, "X-covariant"), "lambda X-covariant", false),
          make("3.8(1)", condition_verdict(c.contravariant, "contravariant"), "lambda contravariant", false),
          make("3.8(2)", condition_verdict(c.y_contravariant, "Y-contravariant"), "lambda Y-contravariant", true)};
}

/// Morita context (R M; N S): rank T = rank S + rank R/(M.N) when phi is
/// injective and _S N is projective.
inline DecompositionVerdict verify_morita_context(const MoritaContext& mc, const SearchOptions& opt = {}) {
  const AlgebraPtr& r = mc.m.left;
  const AlgebraPtr& s = mc.m.right;
  DecompositionVerdict v;
  v.theorem = "4.2";
  Verdict inj = Verdict::yes("M (x)_S N = 0");
  if (mc.m.dim && mc.n.dim) {
    AlgebraPtr sop = opposite(*s);
    Mat mu(r->field(), r->dim(), mc.m.dim * mc.n.dim);
    for (std::size_t k = 0; k < mc.phi.size(); ++k)
      for (std::size_t t = 0; t < r->dim(); ++t) mu(t, k) = mc.phi[k][t];
    BalancedMap bm = balanced_map(mc.m.as_right(sop), mc.n.as_left(), mu);
    inj = Verdict::of(bm.injective(), "dim M(x)N = " + std::to_string(bm.tensor_dim) + ", rank phi = " +
                                          std::to_string(bm.rank));
  }
  Verdict np = mc.n.dim ? projective_verdict(mc.n.as_left(), opt, "_S N") : Verdict::yes("N = 0");
  v.hypotheses = {{"phi injective", inj}, {"_S N projective f.g.", np}};
  Subspace mn = Subspace::span(r->field(), r->dim(), mc.phi);
  v.lhs = {"T", k0_rank(mc.ring.algebra, opt)};
  v.rhs = {{"S", k0_rank(s, opt)}, {"R/M.N", k0_rank(quotient(*r, mn).algebra, opt)}};
  return classify(std::move(v));
}

/// Triangular ring (R1 M; 0 R2): rank S = rank R1 + rank R2, unconditionally.
inline DecompositionVerdict verify_triangular(const MoritaContext& mc, const SearchOptions& opt = {}) {
  DecompositionVerdict v;
  v.theorem = "4.3";
  v.hypotheses = {{"lower-left block is zero", Verdict::of(mc.n.dim == 0, "N = 0")}};
  v.lhs = {"S", k0_rank(mc.ring.algebra, opt)};
  v.rhs = {{"R1", k0_rank(mc.m.left, opt)}, {"R2", k0_rank(mc.m.right, opt)}};
  return classify(std::move(v));
}

/// Tiled ring with I_ij above and J^(i-j) below the diagonal.
inline DecompositionVerdict verify_tiled(const AlgebraPtr& r, const Subspace& j,
                                         const std::vector<std::vector<Subspace>>& upper, const BlockRing& s,
                                         const SearchOptions& opt = {}) {
  DecompositionVerdict v;
  v.theorem = "4.4";
  Verdict jp = j.dim() ? projective_verdict(left_ideal_module(r, j).module, opt, "_R J") : Verdict::yes("J = 0");
  v.hypotheses = {{"_R J projective f.g.", jp}};
  v.lhs = {"S", k0_rank(s.algebra, opt)};
  v.rhs = {{"R", k0_rank(r, opt)}};
  for (std::size_t t = 0; t + 1 < upper.size(); ++t) {
    Subspace ij = product_span(*r, upper[t][t + 1], j);
    v.rhs.push_back({"R/I(" + std::to_string(t + 1) + "," + std::to_string(t + 2) + ")J",
                     k0_rank(quotient(*r, ij).algebra, opt)});
  }
  return classify(std::move(v));
}

/// n x n ring over R with I above and J below the diagonal, JI = 0:
/// rank S = n rank R when _R I or J_R is projective.
inline DecompositionVerdict verify_ji_zero(const AlgebraPtr& r, const Subspace& i, const Subspace& j,
                                           const BlockRing& s, const SearchOptions& opt = {}) {
  DecompositionVerdict v;
  v.theorem = "4.8";
  Verdict ji = Verdict::of(product_span(*r, j, i).dim() == 0, "JI = 0");
  Verdict ip = i.dim() ? projective_verdict(left_ideal_module(r, i).module, opt, "_R I") : Verdict::yes("I = 0");
  Verdict jp = j.dim() ? projective_verdict(left_ideal_module(opposite(*r), j).module, opt, "J_R")
                       : Verdict::yes("J = 0");
  v.hypotheses = {{"JI = 0", ji}, {"_R I or J_R projective f.g.", either(ip, jp, "projective")}};
  v.lhs = {"S", k0_rank(s.algebra, opt)};
  const std::size_t rr = k0_rank(r, opt);
  for (std::size_t t = 0; t < s.n; ++t) v.rhs.push_back({"R", rr});
  return classify(std::move(v));
}

/// Checkerboard ring over a commutative R with Rx above and Ry below.
/// Returns the general statement and, for n = 2, the unconditional one.
inline std::vector<DecompositionVerdict> verify_checkerboard(const AlgebraPtr& r, const Vec& x, const Vec& y,
                                                             const BlockRing& s, const SearchOptions& opt = {}) {
  const Field& f = r->field();
  Subspace full = Subspace::full(f, r->dim());
  Subspace rx = left_ideal(*r, {x}), ry = left_ideal(*r, {y}), rxy = left_ideal(*r, {r->mul(x, y)});
  std::vector<DecompositionVerdict> out;
  const std::size_t rank_s = k0_rank(s.algebra, opt), rank_r = k0_rank(r, opt);
  DecompositionVerdict v;
  v.theorem = "4.7";
  v.hypotheses = {{"R commutative", Verdict::of(r->is_commutative(), "commutative")},
                  {"Rx + Ry = R", Verdict::of(rx.sum(ry) == full, "Rx + Ry")},
                  {"Rx meet Ry = Rxy", Verdict::of(rx.intersect(ry) == rxy, "Rx meet Ry")},
                  {"y invertible in an extension ring", Verdict::of(rank(r->left_mult(y)) == r->dim(),
                                                                   "y is a non-zero-divisor")}};
  v.lhs = {"S", rank_s};
  v.rhs = {{"R", rank_r}};
  const std::size_t qx = k0_rank(quotient(*r, rx).algebra, opt), qy = k0_rank(quotient(*r, ry).algebra, opt);
  for (std::size_t t = 1; t < s.n; ++t) {
    v.rhs.push_back({"R/Rx", qx});
    v.rhs.push_back({"R/Ry", qy});
  }
  out.push_back(classify(std::move(v)));
  if (s.n == 2) {
    DecompositionVerdict w;
    w.theorem = "4.7 (n = 2)";
    w.hypotheses = {{"R commutative", Verdict::of(r->is_commutative(), "commutative")}};
    w.lhs = {"S", rank_s};
    w.rhs = {{"R", rank_r}, {"R/Rxy", k0_rank(quotient(*r, rxy).algebra, opt)}};
    out.push_back(classify(std::move(w)));
  }
  return out;
}

/// Skew group ring R = S*G with e the group average.
inline std::vector<DecompositionVerdict> verify_skew_group(const SkewGroupRing& g, const SearchOptions& opt = {}) {
  const AlgebraPtr& r = g.algebra;
  Subspace rer = ideal_generated(r, {g.averaging}).space;
  Module im = left_ideal_module(r, rer).module;
  const std::size_t rank_q = k0_rank(quotient(*r, rer).algebra, opt);
  std::vector<DecompositionVerdict> out;
  DecompositionVerdict a;
  a.theorem = "4.10(1)";
  a.hypotheses = {{"e idempotent", Verdict::of(r->is_idempotent(g.averaging), "e^2 = e")}};
  a.lhs = {"End_R(R+ReR)", end_rank(direct_sum({regular_module(r), im}).module, opt)};
  a.rhs = {{"R(S,G)", rank_q}, {"End_R(ReR)", end_rank(im, opt)}};
  out.push_back(classify(std::move(a)));
  DecompositionVerdict b;
  b.theorem = "4.10(2)";
  Verdict lp = projective_verdict(im, opt, "_R ReR");
  Verdict rp = projective_verdict(left_ideal_module(opposite(*r), rer).module, opt, "ReR_R");
  b.hypotheses = {{"ReR projective f.g. (left or right)", either(lp, rp, "ReR projective")}};
  b.lhs = {"R", k0_rank(r, opt)};
  b.rhs = {{"R(S,G)", rank_q}, {"S^G", k0_rank(subalgebra(*g.base, g.invariants).algebra, opt)}};
  out.push_back(classify(std::move(b)));
  return out;
}

}  // namespace endok
