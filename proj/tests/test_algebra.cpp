#include <gtest/gtest.h>

#include "support.hpp"

using namespace endok;
using namespace endok::testing;

namespace {

std::size_t nonzero_paths_of_length(const MonomialQuiver& q, std::size_t len) {
  if (len == 0) return q.vertices;
  return count_paths(q, len) - count_paths(q, len - 1);
}

// Two-dimensional algebra with a deliberately broken product.
std::vector<Product> broken_table() {
  // basis 1, x with x*x = 1 + x but x*1 = 0: unit fails.
  return {{{0, Scalar(1)}}, {{1, Scalar(1)}}, {}, {{0, Scalar(1)}, {1, Scalar(1)}}};
}

}  // namespace

TEST(PathAlgebra, DimensionMatchesPathEnumeration) {
  Rng rng(101);
  int checked = 0;
  for (int t = 0; t < 300 && checked < 150; ++t) {
    MonomialQuiver m = random_monomial_quiver(rng);
    std::size_t expected = count_paths(m, 12);
    if (expected > 20) continue;
    AlgebraPtr a = path_algebra(to_presentation(m));
    EXPECT_EQ(a->dim(), expected);
    ++checked;
  }
  EXPECT_GE(checked, 100);
}

TEST(PathAlgebra, RadicalIsTheArrowIdealWithOracleNilpotency) {
  Rng rng(102);
  for (int t = 0; t < 80; ++t) {
    MonomialQuiver m = random_monomial_quiver(rng);
    if (count_paths(m, 12) > 16) continue;
    AlgebraPtr a = path_algebra(to_presentation(m));
    EXPECT_EQ(radical(*a).dim(), a->dim() - m.vertices);
    std::size_t longest = 0;
    for (std::size_t l = 1; l <= 12; ++l)
      if (nonzero_paths_of_length(m, l) > 0) longest = l;
    EXPECT_EQ(radical_nilpotency(*a), longest + 1);
  }
}

TEST(PathAlgebra, PrimitiveIdempotentsAndK0) {
  Rng rng(103);
  for (int t = 0; t < 60; ++t) {
    MonomialQuiver m = random_monomial_quiver(rng);
    if (count_paths(m, 12) > 14) continue;
    AlgebraPtr a = path_algebra(to_presentation(m));
    auto ps = elements(primitive_decomposition(*a));
    EXPECT_EQ(ps.size(), m.vertices);
    Vec sum = a->zero();
    for (std::size_t i = 0; i < ps.size(); ++i) {
      sum = a->add(sum, ps[i]);
      for (std::size_t j = 0; j < ps.size(); ++j)
        EXPECT_EQ(a->mul(ps[i], ps[j]), i == j ? ps[i] : a->zero());
    }
    EXPECT_EQ(sum, a->unit());
    K0Report k = k0(a);
    EXPECT_EQ(k.rank, m.vertices);
    std::size_t total = 0;
    for (const auto& row : k.cartan)
      for (auto c : row) total += c;
    EXPECT_EQ(total, a->dim());
  }
}

TEST(Algebra, RandomAlgebrasAreAssociativeAndOppositeIsInvolutive) {
  Rng rng(104);
  for (int t = 0; t < 40; ++t) {
    AlgebraPtr a = random_algebra(rng, 10);
    EXPECT_NO_THROW(validate_algebra(*a));
    AlgebraPtr op = opposite(*a);
    AlgebraPtr back = opposite(*op);
    for (std::size_t i = 0; i < a->dim(); ++i)
      for (std::size_t j = 0; j < a->dim(); ++j) {
        EXPECT_EQ(op->mul_basis(i, j), a->mul_basis(j, i));
        EXPECT_EQ(back->mul_basis(i, j), a->mul_basis(i, j));
      }
  }
}

TEST(Algebra, BrokenTablesAreRejected) {
  EXPECT_THROW(make_algebra(Field::rationals(), 2, broken_table(), {Scalar(1), Scalar(0)}), UnitViolation);
  // Unital but (y y) y = 0 while y (y y) = y.
  std::vector<Product> t(9);
  for (std::size_t i = 0; i < 3; ++i) {
    t[0 * 3 + i] = {{i, Scalar(1)}};
    t[i * 3 + 0] = {{i, Scalar(1)}};
  }
  t[1 * 3 + 1] = {{2, Scalar(1)}};  // y y = z
  t[1 * 3 + 2] = {{1, Scalar(1)}};  // y z = y
  t[2 * 3 + 1] = {};                // z y = 0
  t[2 * 3 + 2] = {};
  EXPECT_THROW(make_algebra(Field::rationals(), 3, t, {Scalar(1), Scalar(0), Scalar(0)}), AssociativityViolation);
}

TEST(Algebra, IdealGeneratedByIdempotentIsIdempotent) {
  Rng rng(105);
  for (int t = 0; t < 60; ++t) {
    AlgebraPtr a = random_algebra(rng, 10);
    Vec e = random_idempotent(a, rng);
    ASSERT_TRUE(a->is_idempotent(e));
    Subspace j = ideal_generated(a, {e}).space;
    EXPECT_TRUE(is_two_sided_ideal(*a, j));
    EXPECT_EQ(product_span(*a, j, j), j);
    EXPECT_TRUE(j.contains(e));
  }
}

TEST(Algebra, CornerDimensionCountsPathsBetweenChosenVertices) {
  Rng rng(106);
  for (int t = 0; t < 60; ++t) {
    MonomialQuiver m = random_monomial_quiver(rng);
    if (count_paths(m, 12) > 14) continue;
    AlgebraPtr a = path_algebra(to_presentation(m));
    std::vector<bool> chosen(m.vertices);
    Vec e = a->zero();
    auto verts = provenance_block(*a, "vertices");
    for (std::size_t v = 0; v < m.vertices; ++v)
      if ((chosen[v] = rng.coin())) e = a->add(e, a->basis(verts[v]));
    // Oracle: paths with both ends among the chosen vertices.
    std::size_t expected = 0;
    for (std::size_t v = 0; v < m.vertices; ++v) expected += chosen[v];
    for (const auto& p : nonzero_paths(m, 12))
      if (chosen[m.arrows[p.front()].first] && chosen[m.arrows[p.back()].second]) ++expected;
    if (is_zero(e)) continue;
    Embedded c = corner(*a, e);
    EXPECT_EQ(c.algebra->dim(), expected);
    EXPECT_EQ(c.to_parent(c.algebra->unit()), e);
  }
}

TEST(Algebra, PolynomialQuotientsAndProducts) {
  const Field q = Field::rationals();
  AlgebraPtr dual = polynomial_quotient(q, {Scalar(0), Scalar(0), Scalar(1)});
  EXPECT_EQ(dual->dim(), 2u);
  EXPECT_EQ(radical(*dual).dim(), 1u);
  EXPECT_EQ(k0_rank(dual), 1u);
  AlgebraPtr gauss = polynomial_quotient(q, {Scalar(1), Scalar(0), Scalar(1)});
  EXPECT_TRUE(division_ring_test(*gauss));
  AlgebraPtr split = polynomial_quotient(q, {Scalar(-1), Scalar(0), Scalar(1)});
  EXPECT_FALSE(division_ring_test(*split));
  EXPECT_EQ(k0_rank(split), 2u);
  AlgebraPtr prod = product(*dual, *split);
  EXPECT_EQ(prod->dim(), 4u);
  EXPECT_EQ(k0_rank(prod), 3u);
  EXPECT_EQ(center(*prod).dim(), 4u);
}

TEST(Algebra, RadicalOverPrimeFieldIsUnsupported) {
  AlgebraPtr a = polynomial_quotient(Field::prime(3), {Scalar(0), Scalar(0), Scalar(1)});
  EXPECT_EQ(a->dim(), 2u);
  EXPECT_THROW(radical(*a), UnsupportedField);
  EXPECT_THROW(k0_rank(a), UnsupportedField);
}

TEST(Algebra, QuotientByRadicalIsSemisimple) {
  Rng rng(107);
  for (int t = 0; t < 40; ++t) {
    AlgebraPtr a = random_algebra(rng, 10);
    Quotient q = quotient(*a, radical(*a));
    EXPECT_EQ(radical(*q.algebra).dim(), 0u);
    EXPECT_EQ(q.algebra->dim() + radical(*a).dim(), a->dim());
    EXPECT_EQ(semisimple_block_count(*q.algebra), k0_rank(a));
  }
}
