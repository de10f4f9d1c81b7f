// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "metaplectic/verify.hpp"

using namespace metaplectic;

namespace {

struct Criterion {
  std::string name;
  std::vector<std::string> suites;
  std::uint64_t trials;
  long bound;
  double limit_seconds;  // 0: no limit
};

bool run_criterion(const Criterion& c) {
  VerifyConfig cfg;
  cfg.seed = 20240601;
  cfg.trials = c.trials;
  cfg.bound = c.bound;
  cfg.max_word = 12;
  double elapsed = 0;
  std::uint64_t cases = 0, failures = 0;
  std::string first_witness;
  for (const std::string& s : c.suites) {
    const Report r = run_suite(s, cfg);
    elapsed += r.elapsed_seconds;
    cases += r.cases;
    failures += r.failures.size();
    if (first_witness.empty() && !r.failures.empty()) {
      first_witness = s + ": " + r.failures.front().witness;
    }
  }
  const bool in_time = c.limit_seconds == 0 || elapsed < c.limit_seconds;
  const bool pass = failures == 0 && in_time;
  std::printf("%s %s: cases=%llu failures=%llu elapsed=%.2fs", pass ? "PASS" : "FAIL",
              c.name.c_str(), static_cast<unsigned long long>(cases),
              static_cast<unsigned long long>(failures), elapsed);
  if (c.limit_seconds > 0) std::printf(" limit=%.0fs", c.limit_seconds);
  std::printf("\n");
  if (!first_witness.empty()) std::printf("  first failure: %s\n", first_witness.c_str());
  if (!in_time) std::printf("  over the time limit\n");
  std::fflush(stdout);
  return pass;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"1 kronecker identities and legendre agreement", {"kronecker"}, 100000, 0, 30},
      {"2 plucker relation, invariance, coprimality", {"plucker"}, 10000, 0, 30},
      {"3 cocycle identity and lemma identities", {"cocycle"}, 10000, 0, 60},
      {"4 splitting is a homomorphism", {"homomorphism"}, 10000, 0, 120},
      {"5 dispatcher agrees with block formula", {"agreement"}, 10000, 6, 0},
      {"6 symmetries and odd reduction", {"symmetry", "reduction"}, 10000, 0, 0},
      {"7 coset bijection and twisted multiplicativity", {"cosets", "twist"}, 0, 7, 120},
      {"8 cell table agrees with block formula", {"cells"}, 10000, 0, 0},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    if (!run_criterion(c)) ++failed;
  }
  std::printf("%s: %d of %zu criteria passed\n", failed == 0 ? "PASS" : "FAIL",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
