#include <gtest/gtest.h>

#include "support.hpp"

using namespace endok;
using namespace endok::testing;

namespace {

Vec random_vec(Rng& rng, const Field& f, std::size_t n, long spread = 2) {
  Vec v(n);
  for (auto& x : v) x = f.from_int(rng.uniform(-spread, spread));
  return v;
}

// A cyclic module: A e modulo the submodule generated by a random radical vector.
Module random_cyclic(const AlgebraPtr& a, Rng& rng) {
  const auto& d = projectives(a);
  std::size_t c = static_cast<std::size_t>(rng.uniform(0, long(d.classes()) - 1));
  const Module& p = d.projective[c];
  Subspace rad = radical_of_module(p);
  if (rad.dim() == 0 || rng.coin()) return p;
  Vec x = zero_vec(p.dim());
  for (const auto& b : rad.basis()) vaxpy(p.field(), x, p.field().from_int(rng.uniform(-2, 2)), b);
  return quotient_module(p, generated_submodule(p, {x})).module;
}

Module conjugate(const Module& m, const Mat& g, const Mat& ginv) {
  std::vector<Mat> act;
  for (const auto& a : m.actions()) act.push_back(g * a * ginv);
  return Module(m.parent(), m.dim(), std::move(act), m.name());
}

// An invertible upper unitriangular matrix and its inverse.
std::pair<Mat, Mat> random_unitriangular(Rng& rng, const Field& f, std::size_t n) {
  Mat g = Mat::identity(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g(i, j) = f.from_int(rng.uniform(-2, 2));
  LinearSolution s = solve_linear(g, Mat::identity(f, n));
  return {g, s.particular};
}

}  // namespace

TEST(Module, RepresentationLawIsEnforced) {
  AlgebraPtr a = polynomial_quotient(Field::rationals(), {Scalar(0), Scalar(0), Scalar(1)});
  Mat one = Mat::identity(a->field(), 1), x(a->field(), 1, 1);
  x(0, 0) = 1;  // x acting by 1 violates x^2 = 0
  EXPECT_THROW(Module(a, 1, {one, x}), Error);
  x(0, 0) = 0;
  EXPECT_NO_THROW(Module(a, 1, {one, x}));
  EXPECT_THROW(Module(a, 2, {one, x}), DimensionMismatch);
}

TEST(Module, HomFromProjectiveIsEvaluationAtTheIdempotent) {
  Rng rng(201);
  for (int t = 0; t < 40; ++t) {
    AlgebraPtr a = random_algebra(rng, 9);
    const auto& d = projectives(a);
    Module m = random_cyclic(a, rng);
    for (std::size_t c = 0; c < d.classes(); ++c) {
      // Oracle: Hom(Ae, M) = eM.
      std::size_t expected = rank(m.action_of(d.class_idempotent(c)));
      auto hs = hom_space(d.projective[c], m);
      EXPECT_EQ(hs.size(), expected);
      for (const auto& h : hs) EXPECT_TRUE(intertwines(d.projective[c], m, h));
    }
  }
}

TEST(Module, HomIsAdditiveAndDualityReversesIt) {
  Rng rng(202);
  for (int t = 0; t < 30; ++t) {
    AlgebraPtr a = random_algebra(rng, 8);
    AlgebraPtr aop = opposite(*a);
    Module m = random_cyclic(a, rng), n = random_cyclic(a, rng), k = random_cyclic(a, rng);
    Module mn = direct_sum({m, n}).module;
    EXPECT_EQ(hom_dim(mn, k), hom_dim(m, k) + hom_dim(n, k));
    EXPECT_EQ(hom_dim(k, mn), hom_dim(k, m) + hom_dim(k, n));
    EXPECT_EQ(hom_dim(mn, mn), hom_dim(m, m) + hom_dim(m, n) + hom_dim(n, m) + hom_dim(n, n));
    EXPECT_EQ(hom_dim(m, n), hom_dim(dual(n, aop), dual(m, aop)));
  }
}

TEST(Module, HomIsInvariantUnderChangeOfBasis) {
  Rng rng(203);
  for (int t = 0; t < 30; ++t) {
    AlgebraPtr a = random_algebra(rng, 8);
    Module m = random_cyclic(a, rng), n = random_cyclic(a, rng);
    Module s = direct_sum({m, n}).module;
    auto [g, gi] = random_unitriangular(rng, a->field(), s.dim());
    Module s2 = conjugate(s, g, gi);
    EXPECT_EQ(hom_dim(s, s), hom_dim(s2, s2));
    EXPECT_EQ(hom_dim(m, s), hom_dim(m, s2));
    IsoResult iso = iso_test(s, s2);
    ASSERT_EQ(iso.status, Certified::Yes);
    EXPECT_TRUE(intertwines(s, s2, iso.witness));
    EXPECT_EQ(rank(iso.witness), s.dim());
  }
}

TEST(Module, SubmoduleAndQuotientDimensionsAdd) {
  Rng rng(204);
  for (int t = 0; t < 40; ++t) {
    AlgebraPtr a = random_algebra(rng, 10);
    Module reg = regular_module(a);
    Subspace s = generated_submodule(reg, {random_vec(rng, a->field(), a->dim())});
    EXPECT_TRUE(is_submodule(reg, s));
    Sub sub = submodule(reg, s);
    Quo q = quotient_module(reg, s);
    EXPECT_EQ(sub.module.dim() + q.module.dim(), reg.dim());
    EXPECT_TRUE(intertwines(sub.module, reg, sub.inclusion));
    EXPECT_TRUE(intertwines(reg, q.module, q.projection));
    EXPECT_TRUE((q.projection * sub.inclusion).is_zero());
  }
}

TEST(Module, RadicalLayersTopAndSocle) {
  Rng rng(205);
  for (int t = 0; t < 40; ++t) {
    AlgebraPtr a = random_algebra(rng, 10);
    Module m = random_cyclic(a, rng);
    auto layers = radical_layers(m);
    std::size_t total = 0;
    for (auto l : layers) total += l;
    EXPECT_EQ(total, m.dim());
    // A cyclic module over a basic algebra with a primitive generator has a simple top.
    EXPECT_EQ(top(m).module.dim(), layers.front());
    Subspace soc = socle(m);
    EXPECT_GE(soc.dim(), 1u);
    // The radical annihilates the socle.
    for (const auto& r : radical(*a).basis())
      for (const auto& v : soc.basis()) EXPECT_TRUE(is_zero(m.act(r, v)));
  }
}

TEST(Module, ProjectiveCoverAndProjectivity) {
  Rng rng(206);
  for (int t = 0; t < 40; ++t) {
    AlgebraPtr a = random_algebra(rng, 9);
    const auto& d = projectives(a);
    Module m = random_cyclic(a, rng);
    Cover c = projective_cover(m);
    EXPECT_EQ(rank(c.epi), m.dim());
    EXPECT_TRUE(intertwines(c.term.module, m, c.epi));
    std::size_t expected = 0;
    auto tops = top_multiplicities(m);
    for (std::size_t k = 0; k < tops.size(); ++k) expected += tops[k] * d.projective[k].dim();
    EXPECT_EQ(c.term.dim(), expected);
    // Oracle: m is projective iff its cover is an isomorphism.
    EXPECT_EQ(is_projective(m), c.term.dim() == m.dim());
    for (std::size_t k = 0; k < d.classes(); ++k)
      EXPECT_EQ(is_projective(d.simple[k]), d.simple[k].dim() == d.projective[k].dim());
  }
}

TEST(Module, NonIsomorphicModulesAreSeparated) {
  AlgebraPtr a = polynomial_quotient(Field::rationals(), {Scalar(0), Scalar(0), Scalar(1)});
  Module reg = regular_module(a);
  Module simple = projectives(a).simple[0];
  Module two_simples = direct_sum({simple, simple}).module;
  EXPECT_EQ(iso_test(reg, two_simples).status, Certified::No);
  EXPECT_EQ(iso_test(reg, simple).status, Certified::No);
}
