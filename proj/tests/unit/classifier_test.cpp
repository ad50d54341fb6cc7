#include "blowup/classifier.hpp"

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "blowup/errors.hpp"
#include "blowup/search.hpp"
#include "generators.hpp"

namespace blowup {
namespace {

struct OracleFlags {
  bool terminal = true;
  bool canonical = true;
};

OracleFlags oracle_flags(const WeightVector& n, const Rat& eps) {
  OracleFlags f;
  for (const auto& p : brute_force_lattice_points(n, eps)) {
    if (p.membership == Membership::Interior) f.canonical = false;
    if (p.membership != Membership::Vertex) f.terminal = false;
  }
  return f;
}

TEST(Classify, Examples) {
  const auto a = classify(WeightVector({6, 10, 15, 7}), Rat(1));
  EXPECT_TRUE(a.eps_log_terminal);
  EXPECT_TRUE(a.eps_log_canonical);
  EXPECT_FALSE(a.witness);

  EXPECT_FALSE(classify(WeightVector({2, 3, 5}), Rat(1)).eps_log_terminal);

  const auto b = classify(WeightVector({1, 2}), Rat(1));
  EXPECT_FALSE(b.eps_log_terminal);
  EXPECT_TRUE(b.eps_log_canonical);
  ASSERT_TRUE(b.witness);
  EXPECT_EQ(b.witness->point, (std::vector<Rat>{Rat(1, 2), Rat(0)}));
  EXPECT_EQ(b.witness->membership, Membership::BoundaryNonVertex);

  const auto c = classify(WeightVector({1, 2}), Rat(1, 2));
  EXPECT_TRUE(c.eps_log_terminal);
  EXPECT_TRUE(c.eps_log_canonical);
  EXPECT_EQ(c.eps, Rat(1, 2));
}

TEST(Classify, InteriorWitnessRefutesBoth) {
  // (2,3): V = 4, k = 3 gives residues (2,1), both positive with sum 3 < 4.
  const auto bad = classify(WeightVector({2, 3}), Rat(1));
  EXPECT_FALSE(bad.eps_log_terminal);
  EXPECT_FALSE(bad.eps_log_canonical);
  ASSERT_TRUE(bad.witness);
  EXPECT_EQ(bad.witness->membership, Membership::Interior);
  EXPECT_EQ(bad.witness->k, 3);
  EXPECT_EQ(bad.witness->point, (std::vector<Rat>{Rat(1, 2), Rat(1, 4)}));
  // (2,3,5) only has boundary points: k = 6 gives (3,0,3).
  const auto edge = classify(WeightVector({2, 3, 5}), Rat(1));
  EXPECT_TRUE(edge.eps_log_canonical);
  ASSERT_TRUE(edge.witness);
  EXPECT_EQ(edge.witness->k, 6);
}

TEST(Classify, RejectsZeroWeightsAndBadEpsilon) {
  EXPECT_THROW(classify(WeightVector({0, 2}), Rat(1)), InvalidArgument);
  EXPECT_THROW(classify(WeightVector({1, 2}), Rat(2)), InvalidArgument);
  EXPECT_THROW(classify(WeightVector({1, 2}), Rat(0)), InvalidArgument);
  EXPECT_THROW(WeightVector({2, 4, 6}), InvalidArgument);
}

TEST(FastPaths, Examples) {
  EXPECT_TRUE(is_terminal_fast(WeightVector({1, 1, 2, 2})));
  EXPECT_FALSE(is_terminal_fast(WeightVector({1, 2})));
  EXPECT_TRUE(is_terminal_fast(WeightVector({1, 1, 1})));
  EXPECT_TRUE(is_canonical_fast(WeightVector({1, 2})));
  EXPECT_TRUE(is_canonical_fast(WeightVector({1, 1, 4})));
  EXPECT_THROW(is_canonical_fast(WeightVector({2, 2, 2})), InvalidArgument);
}

TEST(Kawakita, Examples) {
  EXPECT_TRUE(kawakita_form(WeightVector({1, 2, 3})));
  EXPECT_TRUE(kawakita_form(WeightVector({3, 1, 2})));
  EXPECT_FALSE(kawakita_form(WeightVector({2, 3, 5})));
  EXPECT_FALSE(kawakita_form(WeightVector({1, 2, 4})));
  EXPECT_THROW(kawakita_form(WeightVector({1, 2})), InvalidArgument);
}

TEST(Kawakita, ExhaustiveAgreementInDimensionThree) {
  for (std::int64_t V = 2; V <= 60; ++V) {
    for (const auto& n : enumerate_blowups(3, V)) {
      EXPECT_EQ(classify(n, Rat(1)).eps_log_terminal, kawakita_form(n)) << n.to_string();
    }
  }
}

TEST(Classify, AgreesWithOriginalCoordinatesOracle) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 400; ++trial) {
    const auto n = testing::random_weights(rng, 2 + trial % 4, 30);
    const Rat eps = std::vector<Rat>{Rat(1), Rat(1, 2), Rat(1, 3)}[trial % 3];
    const auto got = classify(n, eps);
    const auto want = oracle_flags(n, eps);
    EXPECT_EQ(got.eps_log_terminal, want.terminal) << n.to_string() << " eps=" << eps;
    EXPECT_EQ(got.eps_log_canonical, want.canonical) << n.to_string() << " eps=" << eps;
  }
}

TEST(Classify, FastPathsAgreeWithGeometry) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 1500; ++trial) {
    const auto n = testing::random_weights(rng, 2 + trial % 4, 200);
    const auto r = classify(n, Rat(1));
    EXPECT_EQ(r.eps_log_terminal, is_terminal_fast(n)) << n.to_string();
    EXPECT_EQ(r.eps_log_canonical, is_canonical_fast(n)) << n.to_string();
  }
}

TEST(Classify, PropertyInvariants) {
  std::mt19937_64 rng(23);
  const std::vector<Rat> ladder{Rat(1, 5), Rat(1, 3), Rat(1, 2), Rat(2, 3), Rat(1)};
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = testing::random_weights(rng, 2 + trial % 4, 80);
    const auto perm = testing::shuffled(n, rng);
    bool prev_t = true, prev_c = true;
    for (const Rat& eps : ladder) {
      const auto r = classify(n, eps);
      // Shrinking towards p can only remove lattice points.
      EXPECT_TRUE(prev_t || !r.eps_log_terminal) << n.to_string();
      EXPECT_TRUE(prev_c || !r.eps_log_canonical) << n.to_string();
      EXPECT_TRUE(!r.eps_log_terminal || r.eps_log_canonical) << n.to_string();
      const auto q = classify(perm, eps);
      EXPECT_EQ(q.eps_log_terminal, r.eps_log_terminal) << perm.to_string();
      EXPECT_EQ(q.eps_log_canonical, r.eps_log_canonical) << perm.to_string();
      prev_t = r.eps_log_terminal;
      prev_c = r.eps_log_canonical;
    }
  }
}

TEST(Classify, WitnessIsPresentExactlyWhenAFlagFails) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = testing::random_weights(rng, 2 + trial % 4, 60);
    const auto r = classify(n, Rat(1 + trial % 2, 2));
    EXPECT_EQ(r.witness.has_value(), !r.eps_log_terminal);
    if (r.witness) {
      const ShrunkSimplex s(GeneratingPoint(n), r.eps);
      EXPECT_EQ(classify_point(r.witness->point, s), r.witness->membership);
      EXPECT_EQ(r.witness->membership == Membership::Interior, !r.eps_log_canonical);
    }
  }
}

}  // namespace
}  // namespace blowup
