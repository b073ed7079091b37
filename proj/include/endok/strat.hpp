#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "endok/ktheory.hpp"

namespace endok {

/// One step R/J_{i+1} with the ideal J_i/J_{i+1} generated by an
/// idempotent e of R/J_{i+1}, and the standard module (R/J_{i+1})e.
struct StratStage {
  AlgebraPtr algebra;          ///< R/J_{i+1}
  Mat projection;              ///< R -> R/J_{i+1}
  Vec idempotent;              ///< e in R/J_{i+1}
  Subspace ideal;              ///< (R/J_{i+1}) e (R/J_{i+1})
  Subspace ideal_in_r;         ///< J_i inside R
  Module delta;                ///< standard module
  AlgebraPtr end_delta;
  bool division = false;
};

/// Stages are listed from the bottom of the chain (J_n, inside R) upwards.
struct StratChain {
  AlgebraPtr algebra;
  std::vector<StratStage> stages;
  bool complete = false;
  bool maximal = false;        ///< no longer chain exists (search exhausted)
  std::size_t explored = 0;

  std::size_t length() const { return stages.size(); }
  bool quasi_hereditary() const {
    for (const auto& s : stages)
      if (!s.division) return false;
    return complete;
  }
};

namespace detail {

struct StratSearch {
  const SearchOptions& opt;
  std::size_t budget;
  bool require_division;
  std::size_t explored = 0;
  bool exhausted_budget = false;
  std::size_t target = 0;  ///< longest possible chain
  std::optional<std::vector<StratStage>> best;

  /// Explores chains below the current quotient c; returns true once a
  /// chain of the target length is found.
  bool dfs(const AlgebraPtr& r, const AlgebraPtr& c, const Mat& proj, std::vector<StratStage>& path) {
    if (c->dim() == 0) {
      if (!best || path.size() > best->size()) best = path;
      return path.size() >= target;
    }
    const auto& d = projectives(c, opt);
    const std::size_t s = d.classes();
    for (std::size_t mask = 1; mask < (std::size_t{1} << s); ++mask) {
      if (explored >= budget) {
        exhausted_budget = true;
        return false;
      }
      ++explored;
      Vec e = c->zero();
      for (std::size_t k = 0; k < s; ++k)
        if (mask >> k & 1) e = vadd(c->field(), e, d.class_idempotent(k));
      Subspace j = ideal_generated(c, {e}).space;
      if (!is_projective(left_ideal_module(c, j).module, opt)) continue;
      Module delta = left_ideal_module(c, left_ideal(*c, {e}), "Delta").module;
      AlgebraPtr end = end_algebra(delta).algebra;
      bool division = division_ring_test(*end, opt);
      if (require_division && !division) continue;
      Quotient q = quotient(*c, j);
      Mat next = q.projection_matrix() * proj;
      StratStage st{c, proj, e, j, kernel(next), delta, end, division};
      path.push_back(std::move(st));
      bool done = dfs(r, q.algebra, next, path);
      path.pop_back();
      if (done || exhausted_budget) return done;
    }
    return false;
  }
};

}  // namespace detail

/// Searches for a longest chain of standardly stratifying ideals generated
/// by sums of primitive idempotents (one per class) in successive quotients.
/// With require_division only chains with division End(Delta) count.
/// Throws BudgetExhausted if the budget runs out before any chain is found.
inline std::optional<StratChain> find_stratification(const AlgebraPtr& a, std::size_t budget,
                                                     const SearchOptions& opt = {}, bool require_division = false) {
  if (!a->field().is_rationals()) throw UnsupportedField("stratification search");
  detail::StratSearch s{opt, budget, require_division};
  s.target = a->dim() ? projectives(a, opt).classes() : 0;
  std::vector<StratStage> path;
  s.dfs(a, a, Mat::identity(a->field(), a->dim()), path);
  if (!s.best) {
    if (s.exhausted_budget) throw BudgetExhausted(budget);
    return std::nullopt;
  }
  StratChain c;
  c.algebra = a;
  c.stages = std::move(*s.best);
  c.complete = true;
  c.maximal = c.stages.size() >= s.target || !s.exhausted_budget;
  c.explored = s.explored;
  return c;
}

/// Re-runs every certificate of a chain from scratch.
inline bool validate_chain(const StratChain& c, const SearchOptions& opt = {}) {
  const AlgebraPtr& r = c.algebra;
  std::size_t total = 0;
  for (std::size_t i = 0; i < c.stages.size(); ++i) {
    const auto& st = c.stages[i];
    if (!st.algebra->is_idempotent(st.idempotent) || is_zero(st.idempotent)) return false;
    if (ideal_generated(st.algebra, {st.idempotent}).space != st.ideal) return false;
    if (!is_projective(left_ideal_module(st.algebra, st.ideal).module, opt)) return false;
    if (kernel(st.projection).dim() + st.algebra->dim() != r->dim()) return false;
    // J_i contains the kernel of R -> R/J_{i+1}, and the ideals increase.
    if (!st.ideal_in_r.contains(kernel(st.projection))) return false;
    if (st.ideal_in_r.dim() != kernel(st.projection).dim() + st.ideal.dim()) return false;
    if (i + 1 < c.stages.size() && kernel(c.stages[i + 1].projection) != st.ideal_in_r) return false;
    if (st.division != division_ring_test(*st.end_delta, opt)) return false;
    total += st.ideal.dim();
  }
  return !c.complete || total == r->dim();
}

/// Quasi-heredity by exhaustive search over division-ring chains.
inline std::pair<Verdict, std::optional<StratChain>> is_quasi_hereditary(const AlgebraPtr& a, std::size_t budget,
                                                                         const SearchOptions& opt = {}) {
  try {
    auto c = find_stratification(a, budget, opt, true);
    if (c) return {Verdict::yes("chain of length " + std::to_string(c->length()) + " with division End(Delta)"), c};
    return {Verdict::no("no chain with division End(Delta) exists"), std::nullopt};
  } catch (const BudgetExhausted&) {
    return {Verdict::unknown("search budget exhausted", budget), std::nullopt};
  }
}

/// rank K0(R) against the sum of rank K0(End(Delta(j))) along a chain.
inline DecompositionVerdict k0_stratified_decomposition(const StratChain& c, const SearchOptions& opt = {}) {
  DecompositionVerdict v;
  v.theorem = "4.1(1)";
  v.hypotheses.push_back({"chain complete", Verdict::of(c.complete, "J_1 = R")});
  for (std::size_t i = 0; i < c.stages.size(); ++i) {
    const auto& st = c.stages[i];
    bool proj = is_projective(left_ideal_module(st.algebra, st.ideal).module, opt);
    v.hypotheses.push_back({"stage " + std::to_string(i + 1) + " standardly stratifying",
                            Verdict::of(proj, proj ? "ideal projective" : "ideal not projective")});
    v.rhs.push_back({"End(Delta(" + std::to_string(i + 1) + "))", k0_rank(st.end_delta, opt)});
  }
  v.lhs = {"R", k0_rank(c.algebra, opt)};
  return classify(std::move(v));
}

}  // namespace endok
