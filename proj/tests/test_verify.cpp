#include <gtest/gtest.h>

#include "metaplectic/verify.hpp"

using namespace metaplectic;

namespace {

VerifyConfig small(unsigned workers = 1) {
  VerifyConfig cfg;
  cfg.seed = 7;
  cfg.trials = 150;
  cfg.workers = workers;
  return cfg;
}

}  // namespace

class EverySuite : public ::testing::TestWithParam<std::string> {};

TEST_P(EverySuite, PassesOnASmallRun) {
  VerifyConfig cfg = small();
  if (GetParam() == "cosets" || GetParam() == "twist") cfg.bound = 5;
  const Report r = run_suite(GetParam(), cfg);
  EXPECT_EQ(r.suite, GetParam());
  EXPECT_GT(r.cases, 0u);
  EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures.front().witness);
}

INSTANTIATE_TEST_SUITE_P(Suites, EverySuite, ::testing::ValuesIn(suite_names()),
                         [](const auto& info) { return info.param; });

TEST(RunSuite, UnknownName) {
  EXPECT_THROW(run_suite("nope", small()), PreconditionError);
}

TEST(RunSuite, IndependentOfWorkerCount) {
  const Report one = run_suite("homomorphism", small(1));
  const Report three = run_suite("homomorphism", small(3));
  EXPECT_EQ(one.cases, three.cases);
  EXPECT_EQ(one.failures.size(), three.failures.size());
}

TEST(ParallelFor, CollectsFailuresInIndexOrder) {
  const auto fails = detail::parallel_for(50, 4, [](std::uint64_t i) {
    std::vector<std::string> out;
    if (i % 7 == 3) out.push_back("bad " + std::to_string(i));
    return out;
  });
  ASSERT_EQ(fails.size(), 7u);
  for (std::size_t k = 0; k < fails.size(); ++k) {
    EXPECT_EQ(fails[k].index, 3 + 7 * k);
    EXPECT_EQ(fails[k].witness, "bad " + std::to_string(3 + 7 * k));
  }
}

TEST(ShrinkingTrial, ReportsTheShortestFailingLength) {
  const auto check = [](std::uint64_t, int len) -> detail::Check {
    if (len >= 4) return "fails at " + std::to_string(len);
    return std::nullopt;
  };
  const auto out = detail::shrinking_trial(1, 9, check);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_NE(out[0].find("fails at 4"), std::string::npos);
  EXPECT_NE(out[0].find("from word length 9 to 4"), std::string::npos);
  EXPECT_TRUE(detail::shrinking_trial(1, 3, check).empty());
}

TEST(SummaryLine, Format) {
  Report r("demo");
  r.cases = 12;
  r.elapsed_seconds = 0.5;
  EXPECT_EQ(summary_line(r), "demo: PASS cases=12 failures=0 elapsed=0.50s");
  r.failures.push_back({3, "x"});
  EXPECT_EQ(summary_line(r), "demo: FAIL cases=12 failures=1 elapsed=0.50s");
}
