#include <gtest/gtest.h>

#include "metaplectic/blockform.hpp"
#include "metaplectic/sampling.hpp"

using namespace metaplectic;

namespace {

BlockParams identity_blocks() { return {1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1}; }

BlockParams lower_blocks() { return {1, 0, 4, 1, 1, 0, 4, 1, 1, 0, 4, 1}; }

BlockParams second_only() { return {1, 0, 0, 1, 1, 0, -4, 1, 1, 0, 0, 1}; }

// gamma * m^{-1} is an integer upper unitriangular matrix.
bool same_left_coset(const Mat3& gamma, const Mat3& m) {
  return in_gamma_inf(Mat3(gamma * inv(m)));
}

}  // namespace

TEST(BlockToMatrix, Examples) {
  EXPECT_EQ(block_to_matrix(identity_blocks()), Mat3::identity());
  EXPECT_EQ(block_to_matrix(lower_blocks()), (Mat3{{1, 0, 0}, {4, 1, 0}, {4, 4, 1}}));
  EXPECT_EQ(block_to_matrix(second_only()), (Mat3{{1, 0, 0}, {0, 1, 0}, {-4, 0, 1}}));
}

TEST(BlockToPlucker, Examples) {
  EXPECT_EQ(block_to_plucker(identity_blocks()), (Plucker<Int>{0, 0, -1, 0, 0, -1}));
  EXPECT_EQ(block_to_plucker(lower_blocks()), (Plucker<Int>{-4, -4, -1, -12, 4, -1}));
  EXPECT_EQ(block_to_plucker(second_only()), (Plucker<Int>{4, 0, -1, -4, 0, -1}));
}

TEST(BlockToPlucker, AgreesWithMatrixMinors) {
  for (const BlockParams& bp : {identity_blocks(), lower_blocks(), second_only()}) {
    EXPECT_EQ(block_to_plucker(bp), plucker(block_to_matrix(bp)));
  }
}

TEST(BlockFactor, GenericExample) {
  const BlockParams bp = block_factor(ScaledPlucker{1, 0, -1, -1, 0, -1});
  EXPECT_EQ(bp.c2, -4);
  EXPECT_EQ(bp.d2, 1);
  EXPECT_EQ(bp.c3, 0);
  EXPECT_EQ(bp.d3, 1);
  EXPECT_EQ(bp.d1, 1);
  EXPECT_EQ(bp.c1, 0);
  EXPECT_EQ(bp.a1, 1);
  EXPECT_EQ(bp.a2, 1);
  EXPECT_EQ(bp.a3, 1);
  EXPECT_EQ(bp.b1, 0);
  EXPECT_EQ(bp.b2, 0);
  EXPECT_EQ(bp.b3, 0);
}

TEST(BlockFactor, ReconstructsUpToLeftGammaInf) {
  const Mat3 g{{1, 0, 0}, {4, 1, 0}, {4, 4, 1}};
  const BlockParams bp = block_factor(scaled_plucker(g));
  EXPECT_TRUE(is_valid(bp));
  EXPECT_TRUE(same_left_coset(g, block_to_matrix(bp)));
}

TEST(BlockFactor, RejectsSmallCells) {
  EXPECT_THROW(block_factor(ScaledPlucker{0, 0, -1, 0, 0, -1}), PreconditionError);
  EXPECT_EQ(block_factor_any(ScaledPlucker{0, 0, -1, 0, 0, -1}), identity_blocks());
  EXPECT_THROW(block_factor_any(ScaledPlucker{1, 0, -1, 1, 0, -1}), DomainError);
}

TEST(BlockFactor, ChoosesSmallestPositiveA) {
  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    const BlockParams bp = block_factor_any(scaled_plucker(sample_gamma14(rng, 6)));
    for (const auto& [a, c] : {std::pair{bp.a1, bp.c1}, std::pair{bp.a2, bp.c2},
                               std::pair{bp.a3, bp.c3}}) {
      if (sgn(c) == 0) {
        EXPECT_EQ(a, 1);
      } else {
        EXPECT_GT(a, 0);
        EXPECT_LT(a, abs(c));
      }
    }
  }
}

TEST(BlockFactor, RoundTripOnSamples) {
  Rng rng(11);
  int big = 0;
  for (int i = 0; i < 3000; ++i) {
    const Mat3 g = sample_gamma14(rng, 1 + i % 12);
    const ScaledPlucker p = scaled_plucker(g);
    const BlockParams bp = block_factor_any(p);
    ASSERT_TRUE(is_valid(bp)) << to_string(bp);
    ASSERT_TRUE(same_left_coset(g, block_to_matrix(bp))) << to_string(p);
    ASSERT_EQ(block_to_plucker(bp), p.primed());
    if (sgn(p.A1) != 0) {
      ASSERT_EQ(block_factor(p), bp);
      ++big;
    }
  }
  EXPECT_GT(big, 1000);
}
