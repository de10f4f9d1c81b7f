#include <gtest/gtest.h>

#include "metaplectic/blockform.hpp"
#include "metaplectic/cocycle.hpp"
#include "metaplectic/sampling.hpp"
#include "oracles.hpp"

using namespace metaplectic;

namespace {

const Mat3Q kTorus = Mat3Q::diagonal(-1, 1, -1);

Mat3Q embed(int plane, const Int& a, const Int& b, const Int& c, const Int& d) {
  Mat3Q m = Mat3Q::identity();
  const int i = plane == 3 ? 1 : 0;
  const int j = plane == 1 ? 1 : 2;
  m(i, i) = a;
  m(i, j) = b;
  m(j, i) = c;
  m(j, j) = d;
  return m;
}

}  // namespace

TEST(Delta, Examples) {
  const DeltaData id = delta(Mat3Q::identity());
  EXPECT_EQ(id.X1, 1);
  EXPECT_EQ(id.X2, 1);
  EXPECT_EQ(id.X3, 1);
  EXPECT_EQ(id.Delta, Mat3Q::identity());

  const DeltaData wl = delta(to_rational(weyl_long()));
  EXPECT_EQ(wl.X2, 1);
  EXPECT_EQ(wl.X3, 1);
  EXPECT_EQ(wl.Delta, Mat3Q::identity());

  const DeltaData g = delta(to_rational(Mat3{{1, 0, 0}, {4, 1, 0}, {4, 4, 1}}));
  EXPECT_EQ(g.X2, 12);
  EXPECT_EQ(g.X3, 4);
  EXPECT_EQ(g.Delta, Mat3Q::diagonal(Rat(1, 12), 3, 4));
}

TEST(SigmaTorus, Examples) {
  EXPECT_EQ(sigma_torus(kTorus, kTorus), Sign::minus());
  EXPECT_EQ(sigma_torus(kTorus, Mat3Q::diagonal(2, Rat(1, 3), Rat(3, 2))), Sign::plus());
  EXPECT_EQ(sigma_torus(Mat3Q::identity(), kTorus), Sign::plus());
}

TEST(SigmaTorus, Errors) {
  EXPECT_THROW(sigma_torus(Mat3Q::diagonal(0, 1, 1), kTorus), DomainError);
  EXPECT_THROW(sigma_torus(to_rational(weyl_long()), kTorus), DomainError);
}

TEST(Sigma, Examples) {
  Rng rng(8);
  const Mat3Q n = unipotent<Rat>(1, 2, 3);
  for (int i = 0; i < 200; ++i) {
    const Mat3Q g = sample_sl3_q(rng);
    EXPECT_EQ(sigma(n, g), Sign::plus());
    EXPECT_EQ(sigma(g, sample_torus_q(rng, true)), Sign::plus());
  }
  EXPECT_EQ(sigma(kTorus, kTorus), Sign::minus());
}

TEST(Sigma, TorusRuleMatchesSigmaTorus) {
  Rng rng(81);
  for (int i = 0; i < 300; ++i) {
    const Mat3Q a = sample_torus_q(rng), b = sample_torus_q(rng);
    ASSERT_EQ(sigma(a, b), sigma_torus(a, b));
  }
}

TEST(MetaMul, Examples) {
  Rng rng(4);
  const Mat3Q g = sample_sl3_q(rng);
  const MetaElt x{Mat3Q::identity(), Sign::plus()};
  const MetaElt y{g, Sign::minus()};
  EXPECT_EQ(meta_mul(x, y), y);
  const MetaElt inverse = meta_mul({g, Sign::plus()}, {inv(g), Sign::plus()});
  EXPECT_EQ(inverse.g, Mat3Q::identity());
  EXPECT_EQ(inverse.eps, sigma(g, inv(g)));
}

TEST(MetaMul, Associative) {
  Rng rng(12);
  for (int i = 0; i < 400; ++i) {
    const MetaElt a{sample_sl3_q(rng), Sign::plus()};
    const MetaElt b{sample_sl3_q(rng), Sign::minus()};
    const MetaElt c{sample_sl3_q(rng), Sign::plus()};
    ASSERT_EQ(meta_mul(meta_mul(a, b), c), meta_mul(a, meta_mul(b, c)));
  }
}

TEST(Sigma, UnipotentAndTorusIdentities) {
  Rng rng(21);
  for (int i = 0; i < 400; ++i) {
    const Mat3Q g1 = sample_sl3_q(rng), g2 = sample_sl3_q(rng);
    const Mat3Q n1 = sample_unipotent_q(rng), n2 = sample_unipotent_q(rng);
    ASSERT_EQ(sigma(Mat3Q(n1 * g1), Mat3Q(g2 * n2)), sigma(g1, g2));
    ASSERT_EQ(sigma(Mat3Q(g1 * n1), g2), sigma(g1, Mat3Q(n1 * g2)));
    ASSERT_EQ(sigma(g1, n1), Sign::plus());
  }
}

// Independent closed forms for sigma on products of the three embedded
// SL(2) blocks of a Gamma_1(4) element.
TEST(Sigma, MatchesClosedFormsOnBlocks) {
  Rng rng(33);
  int nontrivial = 0;
  for (int i = 0; i < 2000; ++i) {
    const Mat3 g = sample_gamma14(rng, 1 + i % 10);
    const BlockParams bp = block_factor_any(scaled_plucker(g));
    const Mat3Q g1 = embed(1, bp.a1, bp.b1, bp.c1, bp.d1);
    const Mat3Q g2 = embed(2, bp.a2, bp.b2, bp.c2, bp.d2);
    const Mat3Q g3 = embed(3, bp.a3, bp.b3, bp.c3, bp.d3);
    ASSERT_EQ(to_integer(Mat3Q(g1 * g2 * g3)).value(), block_to_matrix(bp));
    ASSERT_EQ(sigma(g2, g3).value(), oracle::sigma_blocks_23(bp)) << to_string(bp);
    const Int a2p = block_to_plucker(bp).A2;
    ASSERT_EQ(sigma(g1, Mat3Q(g2 * g3)).value(), oracle::sigma_blocks_1_23(bp, a2p))
        << to_string(bp);
    if (oracle::sigma_blocks_1_23(bp, a2p) < 0) ++nontrivial;
  }
  EXPECT_GT(nontrivial, 0);
}
