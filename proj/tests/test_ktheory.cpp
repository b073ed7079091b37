#include <gtest/gtest.h>

#include "support.hpp"

using namespace endok;
using namespace endok::testing;

namespace {

Workspace load(const std::string& file) { return parse_spec(std::string(ENDOK_CORPUS_DIR) + "/" + file); }

const DecompositionVerdict& find(const std::vector<DecompositionVerdict>& vs, const std::string& theorem) {
  for (const auto& v : vs)
    if (v.theorem == theorem) return v;
  throw std::runtime_error("no verdict " + theorem);
}

}  // namespace

TEST(K0, RankIsAdditiveAndMoritaInvariant) {
  Rng rng(501);
  for (int t = 0; t < 30; ++t) {
    AlgebraPtr a = random_algebra(rng, 6), b = random_algebra(rng, 6);
    const std::size_t ra = k0_rank(a), rb = k0_rank(b);
    EXPECT_EQ(k0(a).rank, ra);
    EXPECT_EQ(k0_rank(product(*a, *b)), ra + rb);
    if (a->dim() <= 4) EXPECT_EQ(k0_rank(matrix_ring(a, 2).algebra), ra);
    EXPECT_EQ(k0_rank(opposite(*a)), ra);
  }
}

TEST(K0, ExamplesFromTheCorpus) {
  Workspace a = load("example1_A.alg");
  EXPECT_EQ(k0(a.algebra("A")).rank, 2u);
  EXPECT_EQ(k0(a.algebra("eAe")).rank, 1u);
  EXPECT_EQ(k0(a.algebra("A/I")).rank, 1u);
  K0Report ka = k0(a.algebra("A"));
  // P_1 = span{e1, a, ab}, P_2 = span{e2, b}.
  std::size_t total = 0;
  for (const auto& row : ka.cartan)
    for (auto c : row) total += c;
  EXPECT_EQ(total, 5u);
  Workspace t = load("example2_T.alg");
  EXPECT_EQ(k0(t.algebra("T")).rank, 2u);
  EXPECT_THROW(k0(polynomial_quotient(Field::prime(5), {Scalar(0), Scalar(1)})), UnsupportedField);
}

TEST(IdealDecomposition, ExampleAIdempotentIdealThatIsNotProjective) {
  Workspace w = load("example1_A.alg");
  auto vs = verify_thm1(w.algebra("A"), w.ideal("I").space, w.element("e1").coords);
  const auto& p = find(vs, "1.1(1) projective (left)");
  EXPECT_EQ(p.equation(), "2 != 1 + 2");
  EXPECT_EQ(p.classification, Classification::HypothesisFailsFormulaFails);
  const auto& h = find(vs, "1.1(2)");
  EXPECT_EQ(h.equation(), "2 = 1 + 1");
  EXPECT_EQ(h.classification, Classification::HypothesisFailsFormulaHolds);
  const auto& a = find(vs, "1.1(1) (left)");
  EXPECT_EQ(a.classification, Classification::ConfirmsTheorem);
}

TEST(IdealDecomposition, ExampleBHomologicalIdeal) {
  Workspace w = load("example1_B.alg");
  AlgebraPtr b = w.algebra("Bop");
  auto vs = verify_thm1(b, w.ideal("I'").space, w.element("e1").coords);
  const auto& h = find(vs, "1.1(2)");
  EXPECT_TRUE(h.hypotheses[0].verdict.is_yes());
  EXPECT_TRUE(h.equation_holds);
  EXPECT_NE(h.classification, Classification::HypothesisFailsFormulaFails);
}

TEST(IdealDecomposition, StrictUpperCornerOfT) {
  Workspace w = load("example2_T.alg");
  AlgebraPtr t = w.algebra("T");
  const Subspace& i = w.ideal("I").space;
  EXPECT_EQ(product_span(*t, i, i).dim(), 0u);
  EXPECT_TRUE(is_projective(left_ideal_module(t, i).module));
  auto vs = verify_thm1(t, i);
  const auto& p = find(vs, "1.1(1) projective (left)");
  EXPECT_EQ(p.equation(), "2 != 2 + 1");
  ASSERT_EQ(p.hypotheses.size(), 2u);
  EXPECT_TRUE(p.hypotheses[0].verdict.is_no());
  EXPECT_TRUE(p.hypotheses[1].verdict.is_yes());
  EXPECT_EQ(p.classification, Classification::HypothesisFailsFormulaFails);
}

TEST(IdealDecomposition, CornerIdealOfTConfirmsBothStatements) {
  Workspace w = load("example2_T.alg");
  AlgebraPtr t = w.algebra("T");
  auto vs = verify_thm1(t, w.ideal("Te11T").space, w.element("e11").coords);
  const auto& h = find(vs, "1.1(2)");
  EXPECT_EQ(h.equation(), "2 = 1 + 1");
  EXPECT_EQ(h.classification, Classification::ConfirmsTheorem);
  const ModuleHom& f = w.morphism("Te11T inclusion");
  auto ms = verify_mainthm(f.source, f.target, f.matrix);
  const auto& c = find(ms, "1.2(1)");
  EXPECT_EQ(c.equation(), "2 = 1 + 1");
  EXPECT_EQ(c.classification, Classification::ConfirmsTheorem);
}

TEST(CovariantDecomposition, SocleInclusionOfDualNumbers) {
  Workspace w = load("example1_R.alg");
  const ModuleHom& f = w.morphism("soc inclusion");
  auto ms = verify_mainthm(f.source, f.target, f.matrix);
  const auto& c = find(ms, "1.2(1)");
  EXPECT_EQ(c.equation(), "2 = 1 + 1");
  EXPECT_EQ(c.classification, Classification::ConfirmsTheorem);
}

TEST(IdealDecomposition, ProjectiveIdempotentIdealGivesAMoritaEquivalentEnd) {
  Rng rng(502);
  int seen = 0;
  for (int t = 0; t < 200 && seen < 20; ++t) {
    AlgebraPtr a = random_algebra(rng, 9);
    Vec e = random_idempotent(a, rng);
    Subspace i = ideal_generated(a, {e}).space;
    if (i.dim() == 0 || !is_projective(left_ideal_module(a, i).module)) continue;
    // R (+) I is a progenerator, so End(R (+) I) is Morita equivalent to R.
    auto vs = verify_thm1(a, i, e, Bounds{8, 6, {}});
    EXPECT_EQ(find(vs, "1.1(1) (left)").lhs.rank, k0_rank(a));
    ++seen;
  }
  EXPECT_GE(seen, 10);
}

TEST(Classify, CertifiedHypothesesWithAFailingEquationAreASoundnessViolation) {
  DecompositionVerdict v;
  v.theorem = "test";
  v.hypotheses = {{"h", Verdict::yes("given")}};
  v.lhs = {"L", 3};
  v.rhs = {{"A", 1}, {"B", 1}};
  EXPECT_THROW(classify(v), SoundnessViolation);
  v.hypotheses[0].verdict = Verdict::no("given");
  EXPECT_EQ(classify(v).classification, Classification::HypothesisFailsFormulaFails);
  v.hypotheses[0].verdict = Verdict::unknown("given", 4);
  EXPECT_EQ(classify(v).classification, Classification::Inconclusive);
  v.lhs.rank = 2;
  v.hypotheses[0].verdict = Verdict::yes("given");
  EXPECT_EQ(classify(v).classification, Classification::ConfirmsTheorem);
}

TEST(FamilyRings, FamilyInstances) {
  Workspace w = load("corollaries.alg");
  // Upper triangular 2x2 over k.
  const auto& tri = w.families.at("triangular k");
  auto v43 = verify_triangular(*tri.morita);
  EXPECT_EQ(v43.equation(), "2 = 1 + 1");
  EXPECT_EQ(v43.classification, Classification::ConfirmsTheorem);
  // [[T, T], [Te1T, T]]: T / Te1T = k.
  const auto& tiled = w.families.at("tiled T");
  auto v44 = verify_tiled(tiled.base, tiled.j, tiled.upper, *tiled.blocks);
  EXPECT_EQ(v44.equation(), "3 = 2 + 1");
  EXPECT_EQ(v44.classification, Classification::ConfirmsTheorem);
  // rad T squared is zero.
  const auto& ji = w.families.at("JI zero T");
  auto v48 = verify_ji_zero(ji.base, ji.i, ji.j, *ji.blocks);
  EXPECT_EQ(v48.equation(), "4 = 2 + 2");
  EXPECT_EQ(v48.classification, Classification::ConfirmsTheorem);
  EXPECT_EQ(ji.blocks->algebra->dim(), 8u);
  // k[x]/x^2 with x above and 1 below the diagonal.
  const auto& cb = w.families.at("checkerboard");
  auto v47 = verify_checkerboard(cb.base, cb.x, cb.y, *cb.blocks);
  EXPECT_EQ(find(v47, "4.7").equation(), "2 = 1 + 1 + 0");
  EXPECT_EQ(find(v47, "4.7 (n = 2)").equation(), "2 = 1 + 1");
  for (const auto& v : v47) EXPECT_EQ(v.classification, Classification::ConfirmsTheorem);
  // (k x k) * C2 is M_2(k); the group average generates everything.
  const auto& sk = w.families.at("k x k * C2");
  auto v410 = verify_skew_group(*sk.skew);
  EXPECT_EQ(find(v410, "4.10(2)").equation(), "1 = 0 + 1");
  EXPECT_EQ(find(v410, "4.10(2)").classification, Classification::ConfirmsTheorem);
  EXPECT_EQ(find(v410, "4.10(1)").classification, Classification::ConfirmsTheorem);
}
