#include <gtest/gtest.h>

#include "metaplectic/cosets.hpp"
#include "metaplectic/sampling.hpp"
#include "metaplectic/splitting.hpp"
#include "oracles.hpp"

using namespace metaplectic;

namespace {

const Mat3 kLower{{1, 0, 0}, {4, 1, 0}, {4, 4, 1}};

Sign by_blocks(const ScaledPlucker& p) { return split_block(block_factor_any(p)); }

}  // namespace

TEST(SplitBlock, Examples) {
  EXPECT_EQ(split_block({1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1}), Sign::plus());
  EXPECT_EQ(split_block({1, 0, 4, 1, 1, 0, 4, 1, 1, 0, 4, 1}), Sign::plus());
  EXPECT_EQ(split_block({1, 0, 0, 1, 1, 0, -4, 1, 1, 0, 0, 1}), Sign::plus());
}

// The non-arithmetic factor is the cocycle of the block product.
TEST(SplitBlock, EqualsSymbolProductTimesCocycle) {
  Rng rng(2);
  for (int i = 0; i < 2000; ++i) {
    const BlockParams bp = block_factor_any(scaled_plucker(sample_gamma14(rng, 1 + i % 12)));
    const int symbols = kronecker(bp.c1, bp.d1) * kronecker(bp.c2, bp.d2) *
                       kronecker(bp.c3, bp.d3);
    const int want = symbols * oracle::sigma_blocks_23(bp) *
                     oracle::sigma_blocks_1_23(bp, block_to_plucker(bp).A2);
    ASSERT_EQ(split_block(bp).value(), want) << to_string(bp);
  }
}

TEST(SplitTheorem, Examples) {
  EXPECT_EQ(split_theorem({1, 0, -1, -1, 0, -1}), Sign::plus());
  EXPECT_EQ(split_theorem({1, 0, -1, -1, 0, -1}), by_blocks({1, 0, -1, -1, 0, -1}));
  EXPECT_THROW(split_theorem({1, 0, -1, 1, 0, -1}), DomainError);
}

TEST(SplitTheorem, HypothesisErrors) {
  EXPECT_THROW(split_theorem({-1, -1, -1, -3, 1, -1}), HypothesisError);   // A1 < 0
  EXPECT_THROW(split_theorem({0, 0, -1, 0, 0, -1}), HypothesisError);      // A1 = 0
  const auto even = enumerate_S(Int(4), Int(8));
  ASSERT_FALSE(even.empty());
  EXPECT_THROW(split_theorem(even.front().coords), HypothesisError);  // A2/D even
}

TEST(SplitTheorem, MatchesBlockFormulaWhereApplicable) {
  Rng rng(9);
  int used = 0;
  for (int i = 0; i < 3000; ++i) {
    const ScaledPlucker p = scaled_plucker(sample_gamma14(rng, 1 + i % 12));
    if (!theorem_hypotheses_hold(p) && !(sgn(p.A1) < 0 && sgn(p.A2) != 0)) continue;
    const ScaledPlucker q = sgn(p.A1) < 0 ? sym_s3(p) : p;
    if (!theorem_hypotheses_hold(q)) continue;
    ++used;
    ASSERT_EQ(split_theorem(q), by_blocks(q)) << to_string(q);
  }
  EXPECT_GT(used, 500);
}

// Equal 2-adic valuations of A1 and A2: the parity form of the hypothesis
// holds, and the formula applies without swapping.
TEST(SplitTheorem, TiedValuations) {
  for (const auto& [a1, a2] : {std::pair{2L, 6L}, std::pair{2L, -2L}, std::pair{6L, 2L},
                               std::pair{4L, -4L}, std::pair{4L, 12L}}) {
    const auto reps = enumerate_S(Int(a1), Int(a2));
    ASSERT_FALSE(reps.empty()) << a1 << "," << a2;
    for (const CosetRep& r : reps) {
      ASSERT_TRUE(theorem_hypotheses_hold(r.coords));
      ASSERT_EQ(split_theorem(r.coords), by_blocks(r.coords)) << to_string(r.coords);
    }
  }
}

TEST(SplitCell, Examples) {
  EXPECT_EQ(split_cell({0, 0, -1, 0, 0, -1}), Sign::plus());
  EXPECT_EQ(split_cell({0, 0, -1, 0, 4, -1}), Sign::from_int(kronecker(4L, 1L)));
  EXPECT_EQ(split_cell({0, -4, -1, 0, 0, -1}), Sign::from_int(kronecker(4L, 1L)));
  EXPECT_THROW(split_cell({-4, -4, -1, -12, 4, -1}), PreconditionError);
}

TEST(SplitCell, NontrivialValues) {
  // Bw1B with (B2 / -C2) = (4 / -3) = 1 and (8 / -3) = -1.
  EXPECT_EQ(split_cell(ScaledPlucker{0, 0, -1, 0, 1, 3}.primed()), Sign::plus());
  EXPECT_EQ(split_cell(ScaledPlucker{0, 0, -1, 0, 2, 3}.primed()), Sign::minus());
  EXPECT_EQ(by_blocks({0, 0, -1, 0, 2, 3}), Sign::minus());
}

TEST(Split, Examples) {
  EXPECT_EQ(split(Mat3::identity()), Sign::plus());
  EXPECT_EQ(split(kLower), Sign::plus());
  EXPECT_EQ(split(Mat3{{1, 0, 0}, {-4, 1, 0}, {4, -4, 1}}), Sign::minus());
  EXPECT_THROW(split(Mat3{{1, 0, 0}, {2, 1, 0}, {0, 0, 1}}), MembershipError);
}

TEST(Lift, Examples) {
  const MetaElt id = lift(Mat3::identity());
  EXPECT_EQ(id.g, Mat3Q::identity());
  EXPECT_EQ(id.eps, Sign::plus());
  EXPECT_EQ(lift(kLower).g, to_rational(kLower));
}

TEST(Lift, IsAHomomorphism) {
  Rng rng(44);
  for (int i = 0; i < 1500; ++i) {
    const Mat3 g1 = sample_gamma14(rng, 1 + i % 12), g2 = sample_gamma14(rng, 1 + i % 7);
    ASSERT_EQ(meta_mul(lift(g1), lift(g2)), lift(Mat3(g1 * g2)))
        << "g1 and g2 at trial " << i;
  }
}

TEST(Split, AgreesWithBlockFormulaOnSamples) {
  Rng rng(45);
  for (int i = 0; i < 3000; ++i) {
    const Mat3 g = sample_gamma14(rng, 1 + i % 12);
    ASSERT_EQ(split(g), split_by_blocks(g));
  }
}

TEST(SplitReduction, Examples) {
  const ScaledPlucker p{1, 0, -1, -1, 0, -1};
  const Reduction r = split_reduction(p, 1, 1);
  EXPECT_EQ(r.reduced, p);
  EXPECT_EQ(r.correction, Sign::plus());
  EXPECT_THROW(split_reduction({2, 1, -1, 2, 1, -1}, 1, 2), HypothesisError);
}

TEST(SplitReduction, DivisibilityErrors) {
  const ScaledPlucker p{3, 0, -1, -3, 1, -1};
  EXPECT_THROW(split_reduction(p, 1, 3), HypothesisError);  // D1 != (D, B1)
  EXPECT_THROW(split_reduction(p, 5, 1), HypothesisError);  // D does not divide
  const Reduction r = split_reduction(p, 3, 1);
  EXPECT_EQ(r.reduced, (ScaledPlucker{1, 0, -1, -1, 1, -1}));
  EXPECT_EQ(by_blocks(p), by_blocks(r.reduced) * r.correction);
}

TEST(SplitReduction, MatchesBlockFormula) {
  int applied = 0;
  for (long a1 : {3L, 9L, 15L})
    for (long a2 : {-9L, -3L, 3L, 6L, 9L}) {
      for (const CosetRep& rep : enumerate_S(Int(a1), Int(a2))) {
        const ScaledPlucker& p = rep.coords;
        const Int d = odd_part(gcd(p.A1, p.A2));
        const Int d1 = gcd(d, p.B1), d2 = d / d1;
        if (!divides(d2, p.B2)) {
          EXPECT_THROW(split_reduction(p, d1, d2), HypothesisError);
          continue;
        }
        const Reduction r = split_reduction(p, d1, d2);
        ASSERT_EQ(by_blocks(p), by_blocks(r.reduced) * r.correction) << to_string(p);
        ++applied;
      }
    }
  EXPECT_GT(applied, 20);
}

TEST(SplitCoords, AllRoutesAgreeOnEnumeratedCosets) {
  for (long a1 = -5; a1 <= 5; ++a1)
    for (long a2 = -5; a2 <= 5; ++a2) {
      if (a1 == 0 || a2 == 0) continue;
      for (const CosetRep& r : enumerate_S(Int(a1), Int(a2))) {
        ASSERT_EQ(split_coords(r.coords), by_blocks(r.coords)) << to_string(r.coords);
      }
    }
}
