#include <gtest/gtest.h>

#include "support.hpp"

using namespace endok;
using namespace endok::testing;

namespace {

constexpr std::size_t kDecided = 50;
constexpr std::size_t kTorBound = 6;

Module random_cyclic(const AlgebraPtr& a, Rng& rng) {
  const auto& d = projectives(a);
  std::size_t c = static_cast<std::size_t>(rng.uniform(0, long(d.classes()) - 1));
  const Module& p = d.projective[c];
  Subspace rad = radical_of_module(p);
  if (rad.dim() == 0 || rng.uniform(0, 3) == 0) return p;
  Vec x = zero_vec(p.dim());
  for (const auto& b : rad.basis()) vaxpy(p.field(), x, p.field().from_int(rng.uniform(-2, 2)), b);
  if (is_zero(x)) return d.simple[c];
  return quotient_module(p, generated_submodule(p, {x})).module;
}

bool decided(const TorProfile& p) { return p.status != TorProfile::Status::CompleteThrough; }

}  // namespace

TEST(Tor, DegreeZeroIsTheTensorProduct) {
  Rng rng(301);
  for (int t = 0; t < 40; ++t) {
    AlgebraPtr a = random_algebra(rng, 9);
    AlgebraPtr aop = opposite(*a);
    Module m = random_cyclic(aop, rng), n = random_cyclic(a, rng);
    TorProfile p = tor(m, n, 2);
    EXPECT_EQ(p.at(0), tensor_over(m, n).dim);
  }
}

TEST(Tor, VanishesOnProjectivesInBothArguments) {
  Rng rng(302);
  std::size_t count = 0;
  for (int t = 0; t < 400 && count < kDecided; ++t) {
    AlgebraPtr a = random_algebra(rng);
    AlgebraPtr aop = opposite(*a);
    const auto& dl = projectives(a);
    const auto& dr = projectives(aop);
    Module n = random_cyclic(a, rng), m = random_cyclic(aop, rng);
    std::size_t cl = static_cast<std::size_t>(rng.uniform(0, long(dl.classes()) - 1));
    std::size_t cr = static_cast<std::size_t>(rng.uniform(0, long(dr.classes()) - 1));
    // Projective second argument: the resolution stops at once.
    TorProfile p1 = tor(m, dl.projective[cl], kTorBound);
    ASSERT_EQ(p1.status, TorProfile::Status::Exact);
    EXPECT_EQ(higher_tor_vanishes(p1).status, Certified::Yes);
    EXPECT_EQ(p1.at(0), rank(m.action_of(dl.class_idempotent(cl))));
    // Projective first argument: flat, so every higher Tor vanishes.
    TorProfile p2 = tor(dr.projective[cr], n, kTorBound);
    if (!decided(p2)) continue;
    EXPECT_NE(higher_tor_vanishes(p2).status, Certified::No);
    for (auto [j, d] : p2.degrees)
      if (j > 0) EXPECT_EQ(d, 0u) << "Tor_" << j;
    ++count;
  }
  EXPECT_EQ(count, kDecided);
}

TEST(Tor, IndependentOfTheResolvedArgument) {
  Rng rng(303);
  std::size_t count = 0;
  for (int t = 0; t < 600 && count < kDecided; ++t) {
    AlgebraPtr a = random_algebra(rng);
    AlgebraPtr aop = opposite(*a);
    Module m = random_cyclic(aop, rng), n = random_cyclic(a, rng);
    TorProfile resolve_n = tor(m, n, kTorBound);
    // Same groups over A^op with the roles swapped: resolve m instead.
    TorProfile resolve_m = tor(as_right_of_opposite(n, aop), m, kTorBound);
    if (!decided(resolve_n) && !decided(resolve_m)) continue;
    for (std::size_t j = 0; j <= kTorBound; ++j)
      if (resolve_n.computed(j) && resolve_m.computed(j)) EXPECT_EQ(resolve_n.at(j), resolve_m.at(j)) << "Tor_" << j;
    ++count;
  }
  EXPECT_EQ(count, kDecided);
}

TEST(Tor, IndependentOfTheChosenResolution) {
  Rng rng(304);
  std::size_t count = 0;
  for (int t = 0; t < 800 && count < kDecided; ++t) {
    AlgebraPtr a = random_algebra(rng);
    AlgebraPtr aop = opposite(*a);
    Module m = random_cyclic(aop, rng), n = random_cyclic(a, rng);
    Resolution minimal = resolution(n, kTorBound + 1);
    if (minimal.status.kind != PdStatus::Kind::FiniteLength) continue;
    // A resolution by free modules A^k, in general not minimal.
    Resolution free = add_Re_resolution(a, a->unit(), n, kTorBound + 1);
    verify_exactness(free);
    TorProfile p = tor_from_resolution(m, minimal), q = tor_from_resolution(m, free);
    ASSERT_TRUE(decided(p));
    ASSERT_TRUE(decided(q));
    for (std::size_t j = 0; j <= kTorBound; ++j) EXPECT_EQ(p.at(j), q.at(j)) << "Tor_" << j;
    ++count;
  }
  EXPECT_EQ(count, kDecided);
}

TEST(AddResolution, ExactWithTermsInAddRe) {
  Rng rng(305);
  std::size_t count = 0;
  for (int t = 0; t < 1500 && count < kDecided; ++t) {
    AlgebraPtr a = random_algebra(rng);
    Vec e = random_idempotent(a, rng);
    if (is_zero(e)) continue;
    Subspace j = ideal_generated(a, {e}).space;
    std::vector<Module> candidates = {left_ideal_module(a, j).module,
                                      left_ideal_module(a, left_ideal(*a, {e})).module, random_cyclic(a, rng)};
    for (const Module& m : candidates) {
      try {
        Resolution r = add_Re_resolution(a, e, m, kTorBound);
        EXPECT_NO_THROW(verify_exactness(r));
        for (const auto& term : r.terms) EXPECT_TRUE(in_add(term.module, e)) << "term outside add(Re)";
        ++count;
        break;
      } catch (const PreconditionFailed&) {
      }
    }
  }
  EXPECT_EQ(count, kDecided);
}

TEST(AddResolution, MembershipMatchesTopOracle) {
  Rng rng(306);
  for (int t = 0; t < 60; ++t) {
    AlgebraPtr a = random_algebra(rng, 10);
    Vec e = random_idempotent(a, rng);
    const auto& d = projectives(a);
    for (std::size_t c = 0; c < d.classes(); ++c) {
      // P_c is a summand of Ae iff e does not kill the simple top S_c.
      bool expected = !is_zero(e) && rank(d.simple[c].action_of(e)) > 0;
      EXPECT_EQ(in_add(d.projective[c], e), expected);
      if (radical_of_module(d.projective[c]).dim() > 0) EXPECT_FALSE(in_add(d.simple[c], e));
    }
  }
}

TEST(Homological, DualNumbersAndHereditaryAlgebra) {
  AlgebraPtr dual = polynomial_quotient(Field::rationals(), {Scalar(0), Scalar(0), Scalar(1)});
  // J = R for e = 1: R/J = 0.
  EXPECT_EQ(is_homological_ideal(dual, dual->unit(), 4).status, Certified::Yes);
  QuiverPresentation q;
  q.vertices = {"1", "2"};
  q.arrows = {{"a", 0, 1}};
  AlgebraPtr t = path_algebra(q);
  for (const auto& e : elements(primitive_idempotents(*t))) {
    EXPECT_EQ(is_homological_ideal(t, e, 6).status, is_stratifying(t, e, 6).overall.status);
    EXPECT_EQ(is_homological_ideal(t, e, 6).status, Certified::Yes);
  }
}

TEST(Resolution, PeriodicModuleOverDualNumbers) {
  AlgebraPtr dual = polynomial_quotient(Field::rationals(), {Scalar(0), Scalar(0), Scalar(1)});
  Module s = projectives(dual).simple[0];
  Resolution r = resolution(s, 8);
  EXPECT_EQ(r.status.kind, PdStatus::Kind::PeriodicHenceInfinite);
  verify_exactness(r);
  AlgebraPtr dop = opposite(*dual);
  TorProfile p = tor(projectives(dop).simple[0], s, 6);
  EXPECT_EQ(p.status, TorProfile::Status::Periodic);
  ASSERT_TRUE(p.computed(1));
  for (auto [j, d] : p.degrees) EXPECT_EQ(d, 1u) << "Tor_" << j;
  EXPECT_EQ(higher_tor_vanishes(p).status, Certified::No);
}
