#include <gtest/gtest.h>

#include "support.hpp"

using namespace endok;
using namespace endok::testing;

namespace {

constexpr std::uint64_t kSeed = 7;
constexpr std::size_t kInstances = 220;
constexpr std::size_t kMaxDim = 12;
constexpr std::size_t kTorBound = 10;

struct Instance {
  AlgebraPtr algebra;
  Vec e;
};

const std::vector<Instance>& instances() {
  static const std::vector<Instance> all = [] {
    Rng rng(kSeed);
    std::vector<Instance> out;
    for (std::size_t k = 0; k < kInstances; ++k) {
      AlgebraPtr a = random_algebra(rng, kMaxDim);
      Vec e = random_idempotent(a, rng);
      out.push_back({a, e});
    }
    return out;
  }();
  return all;
}

}  // namespace

TEST(RandomCorpus, IsNontrivial) {
  std::size_t proper = 0, big = 0;
  for (const auto& in : instances()) {
    EXPECT_LE(in.algebra->dim(), kMaxDim);
    EXPECT_TRUE(in.algebra->is_idempotent(in.e));
    std::size_t j = ideal_generated(in.algebra, {in.e}).space.dim();
    proper += j > 0 && j < in.algebra->dim();
    big += in.algebra->dim() >= 8;
  }
  EXPECT_GE(proper, kInstances / 3);
  EXPECT_GE(big, kInstances / 10);
}

TEST(RandomCorpus, CornerCriterionBiconditional) {
  std::size_t projective = 0;
  for (std::size_t k = 0; k < instances().size(); ++k) {
    const auto& in = instances()[k];
    CornerCriterion c = corner_criterion(in.algebra, in.e);
    EXPECT_TRUE(c.agree()) << "instance " << k << ": left " << c.left << ", right " << c.right_projective << "/"
                           << c.right_injective;
    projective += c.left;
  }
  EXPECT_GT(projective, 0u);
  EXPECT_LT(projective, instances().size());
}

TEST(RandomCorpus, HomologicalIffStratifying) {
  std::size_t yes = 0;
  for (std::size_t k = 0; k < instances().size(); ++k) {
    const auto& in = instances()[k];
    Verdict h = is_homological_ideal(in.algebra, in.e, kTorBound);
    StratifyingReport s = is_stratifying(in.algebra, in.e, kTorBound);
    ASSERT_TRUE(h.decided()) << "instance " << k << ": " << h.reason;
    ASSERT_TRUE(s.overall.decided()) << "instance " << k << ": " << s.overall.reason;
    EXPECT_EQ(h.status, s.overall.status) << "instance " << k << ": " << h.reason << " / " << s.overall.reason;
    yes += h.is_yes();
  }
  EXPECT_GT(yes, 0u);
  EXPECT_LT(yes, instances().size());
}

TEST(RandomCorpus, SoundnessTripwireNeverFires) {
  std::size_t confirmed = 0;
  for (std::size_t k = 0; k < instances().size(); ++k) {
    const auto& in = instances()[k];
    Subspace j = ideal_generated(in.algebra, {in.e}).space;
    try {
      for (const auto& v : verify_thm1(in.algebra, j, in.e, Bounds{8, 6, {}}))
        confirmed += v.classification == Classification::ConfirmsTheorem;
      if (j.dim() > 0 && in.algebra->dim() <= 10) {
        Sub s = submodule(regular_module(in.algebra), j);
        for (const auto& v : verify_mainthm(s.module, regular_module(in.algebra), s.inclusion))
          confirmed += v.classification == Classification::ConfirmsTheorem;
      }
    } catch (const SoundnessViolation& e) {
      ADD_FAILURE() << "instance " << k << ": " << e.what();
    }
  }
  EXPECT_GT(confirmed, 0u);
}
