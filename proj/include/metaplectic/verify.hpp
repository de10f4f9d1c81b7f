#pragma once

// Property suites cross-checking the library against itself and against
// independent routes (block formula vs. Pluecker formula vs. cell table,
// cocycle vs. splitting).  Each suite returns a Report; failures carry the
// full input that triggered them.
//
// Random trials are sharded over a worker pool.  Trial i is seeded from
// (seed, i) alone and failures are sorted by trial index, so a report does
// not depend on the number of workers.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "metaplectic/blockform.hpp"
#include "metaplectic/cocycle.hpp"
#include "metaplectic/cosets.hpp"
#include "metaplectic/exactnum.hpp"
#include "metaplectic/io.hpp"
#include "metaplectic/sampling.hpp"
#include "metaplectic/sl3group.hpp"
#include "metaplectic/splitting.hpp"

namespace metaplectic {

struct Failure {
  std::uint64_t index = 0;  // trial or enumeration index
  std::string witness;
};

struct Report {
  Report() = default;
  explicit Report(std::string name) : suite(std::move(name)) {}

  std::string suite;
  std::uint64_t cases = 0;
  std::vector<Failure> failures;
  double elapsed_seconds = 0;

  bool ok() const { return failures.empty(); }
};

struct VerifyConfig {
  std::uint64_t seed = 1;
  std::uint64_t trials = 10000;
  long bound = 0;  // enumeration bound; 0 selects the suite default
  int max_word = 12;
  unsigned workers = 0;  // 0 = hardware concurrency
};

namespace detail {

using Check = std::optional<std::string>;

inline unsigned worker_count(unsigned requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

// Runs body(i) for i in [0, n) on a pool; collects failures in index order.
inline std::vector<Failure> parallel_for(
    std::uint64_t n, unsigned workers,
    const std::function<std::vector<std::string>(std::uint64_t)>& body) {
  std::atomic<std::uint64_t> next{0};
  std::mutex mu;
  std::vector<Failure> failures;
  auto work = [&] {
    for (;;) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= n) return;
      std::vector<std::string> bad;
      try {
        bad = body(i);
      } catch (const std::exception& e) {
        bad.push_back(std::string("exception: ") + e.what());
      }
      if (!bad.empty()) {
        std::lock_guard<std::mutex> lock(mu);
        for (auto& w : bad) failures.push_back({i, std::move(w)});
      }
    }
  };
  const unsigned k = static_cast<unsigned>(
      std::min<std::uint64_t>(worker_count(workers), std::max<std::uint64_t>(n, 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < k; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  std::stable_sort(failures.begin(), failures.end(),
                   [](const Failure& a, const Failure& b) { return a.index < b.index; });
  return failures;
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline std::string mat(const Mat3& g) { return "[" + format_matrix(g) + "]"; }
inline std::string mat(const Mat3Q& g) { return "[" + format_matrix(g) + "]"; }

inline int word_len_for(std::uint64_t seed, int max_word) {
  return 1 + static_cast<int>(splitmix64(seed ^ 0xabcdefULL) %
                              static_cast<std::uint64_t>(std::max(max_word, 1)));
}

// A random-word trial: on failure, re-run with every shorter word length and
// report the shortest one that still fails.
inline std::vector<std::string> shrinking_trial(
    std::uint64_t seed, int len,
    const std::function<Check(std::uint64_t, int)>& check) {
  Check first = check(seed, len);
  if (!first) return {};
  for (int l = 1; l < len; ++l) {
    if (Check c = check(seed, l)) {
      return {*c + " (shrunk from word length " + std::to_string(len) + " to " +
              std::to_string(l) + ")"};
    }
  }
  return {*first + " (word length " + std::to_string(len) + ")"};
}

inline Int sample_value(Rng& rng, long magnitude) {
  const long kind = rng.uniform(0, 3);
  if (kind == 0) return Int(rng.uniform(-50, 50));
  if (kind == 1) {
    Int v = rng.uniform(-99, 99) | 1;
    v <<= rng.uniform(0, 12);
    return v;
  }
  return Int(rng.uniform(-magnitude, magnitude));
}

// (-1)^e for an integer exponent.
inline int neg_one_pow(const Int& e) { return is_odd(e) ? -1 : 1; }

inline Int half(const Int& n) { return exact_div(Int(n - 1), Int(2), "(n-1)/2"); }

inline long pick_bound(long configured, long fallback) {
  return configured > 0 ? configured : fallback;
}

inline std::vector<ScaledPlucker> enumerate_big_cell(long bound) {
  std::vector<ScaledPlucker> out;
  for (long a1 = -bound; a1 <= bound; ++a1)
    for (long a2 = -bound; a2 <= bound; ++a2) {
      if (a1 == 0 || a2 == 0) continue;
      for (const CosetRep& r : enumerate_S(Int(a1), Int(a2))) out.push_back(r.coords);
    }
  return out;
}

// Every valid small-cell sextuple with |A|, |B| <= h and |C| <= 4h.
inline std::vector<ScaledPlucker> enumerate_small_cells(long h) {
  std::vector<ScaledPlucker> out;
  for (long a1 = -h; a1 <= h; ++a1)
    for (long a2 = -h; a2 <= h; ++a2) {
      if (a1 != 0 && a2 != 0) continue;
      for (long b1 = -h; b1 <= h; ++b1)
        for (long b2 = -h; b2 <= h; ++b2)
          for (long c1 = -4 * h - 1; c1 <= 4 * h; ++c1) {
            if (((c1 % 4) + 4) % 4 != 3) continue;
            for (long c2 = -4 * h - 1; c2 <= 4 * h; ++c2) {
              if (((c2 % 4) + 4) % 4 != 3) continue;
              ScaledPlucker p{a1, b1, c1, a2, b2, c2};
              if (is_valid(p)) out.push_back(p);
            }
          }
    }
  return out;
}

inline std::string coords(const ScaledPlucker& p) { return to_string(p); }

// A Gamma_1(4) element whose coordinates are p, scrambled on both sides by
// Gamma_infty.
inline Mat3 scrambled_rep(const ScaledPlucker& p, Rng& rng) {
  return sample_gamma_inf(rng) * rep_matrix(p) * sample_gamma_inf(rng);
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline Report verify_kronecker(const VerifyConfig& cfg) {
  detail::Timer timer;
  Report rep{"kronecker"};
  const long mag = 1000000;

  auto trial = [&](std::uint64_t i) {
    std::vector<std::string> bad;
    Rng rng(trial_seed(cfg.seed, i));
    const Int a = detail::sample_value(rng, mag), b = detail::sample_value(rng, mag);
    const Int m = detail::sample_value(rng, mag), n = detail::sample_value(rng, mag);
    auto fail = [&](const std::string& item) {
      bad.push_back(item + " with a=" + a.get_str() + " b=" + b.get_str() +
                    " m=" + m.get_str() + " n=" + n.get_str());
    };

    if (sgn(a) != 0 && sgn(b) != 0 &&
        kronecker(a, n) * kronecker(b, n) != kronecker(Int(a * b), n)) {
      fail("(1) multiplicative in the numerator");
    }
    if (sgn(m) != 0 && sgn(n) != 0 &&
        kronecker(a, m) * kronecker(a, n) != kronecker(a, Int(m * n))) {
      fail("(2) multiplicative in the denominator");
    }
    {
      const Int np = sgn(n) == 0 ? Int(1) : Int(abs(n));
      const Int period = mod_positive(np, Int(4)) == 2 ? Int(4 * np) : np;
      if (kronecker(Int(a + b * period), np) != kronecker(a, np)) {
        fail("(3) periodic in the numerator");
      }
    }
    {
      Int an = a;
      if (sgn(an) == 0) an = 1;
      if (mod_positive(an, Int(4)) == 3) an = -an;
      const Int period = mod_positive(an, Int(4)) == 2 ? Int(4 * abs(an)) : Int(abs(an));
      if (kronecker(an, Int(n + b * period)) != kronecker(an, n)) {
        fail("(4) periodic in the denominator");
      }
    }
    if (sgn(n) != 0) {
      const Int odd = odd_part(n);
      if (kronecker(Int(-1), n) != detail::neg_one_pow(detail::half(odd))) {
        fail("(5) (-1/n)");
      }
      if (kronecker(Int(2), odd) !=
          detail::neg_one_pow(exact_div(Int(odd * odd - 1), Int(8), "(n'^2-1)/8"))) {
        fail("(5) (2/n')");
      }
    }
    if (sgn(m) != 0 && sgn(n) != 0) {
      Int nn = n;
      for (Int g = gcd(m, nn); g != 1; g = gcd(m, nn)) nn /= g;
      const Int mo = odd_part(m), no = odd_part(nn);
      const int lhs = kronecker(m, nn) * kronecker(nn, m);
      const int rhs = hilbert_real(nn, m).value() *
                      detail::neg_one_pow(Int(detail::half(mo) * detail::half(no)));
      if (lhs != rhs) fail("(6) reciprocity (with n -> " + nn.get_str() + ")");

      const Int unit = kronecker(Int(-1), m);
      if (kronecker(unit, n) !=
          detail::neg_one_pow(Int(detail::half(mo) * detail::half(odd_part(n))))) {
        fail("(7) ((-1/m)/n)");
      }
    }
    return bad;
  };
  rep.failures = detail::parallel_for(cfg.trials, cfg.workers, trial);
  rep.cases = cfg.trials;

  std::vector<long> primes;
  for (long p = 3; p <= 500; p += 2)
    if (is_prime_small(static_cast<std::uint64_t>(p))) primes.push_back(p);
  auto prime_case = [&](std::uint64_t j) {
    std::vector<std::string> bad;
    const Int p = primes[j];
    for (long k = -primes[j]; k <= primes[j]; ++k) {
      if (kronecker(Int(k), p) != legendre_oracle(Int(k), p)) {
        bad.push_back("kronecker(" + std::to_string(k) + ", " + p.get_str() +
                      ") differs from the exhaustive-squares oracle");
      }
    }
    return bad;
  };
  auto more = detail::parallel_for(primes.size(), cfg.workers, prime_case);
  for (auto& f : more) {
    f.index += cfg.trials;
    rep.failures.push_back(std::move(f));
  }
  rep.cases += primes.size();
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

inline Report verify_plucker(const VerifyConfig& cfg) {
  detail::Timer timer;
  Report rep{"plucker"};

  auto check = [](std::uint64_t seed, int len) -> detail::Check {
    Rng rng(seed);
    const Mat3 g = sample_gamma14(rng, len);
    const Mat3 n1 = sample_gamma_inf(rng), n2 = sample_gamma_inf(rng);
    const std::string w = " for g=" + detail::mat(g);
    if (!in_gamma14(g)) return "sample left Gamma_1(4)" + w;
    const Plucker<Int> q = plucker(g);
    if (!plucker_relation_holds(q)) return "quadratic relation fails" + w;
    if (gcd(q.A1, q.B1, q.C1) != 1 || gcd(q.A2, q.B2, q.C2) != 1) {
      return "coordinates not coprime" + w;
    }
    const ScaledPlucker p = scaled_plucker(g);
    if (auto why = scaled_plucker_violation(p)) return *why + w;
    if (plucker(Mat3(n1 * g)) != q) return "left Gamma_infty changes coordinates" + w;
    const Cell cell = cell_of(q);
    if (cell_of(plucker(Mat3(n1 * g * n2))) != cell) {
      return "Gamma_infty multiplication changes the cell" + w;
    }

    const Int x = rng.uniform(-4, 4), y = rng.uniform(-4, 4), z = rng.uniform(-4, 4);
    const Mat3 n = unipotent<Int>(x, y, z);
    if (scaled_plucker(conjugate(g, n)) != sym_conj_n(p, x, y, z)) {
      return "sym_conj_n disagrees with n g n^-1" + w;
    }
    if (scaled_plucker(conjugate(g, s3_matrix())) != sym_s3(p)) {
      return "sym_s3 disagrees with S3 g S3" + w;
    }
    if (scaled_plucker(conjugate(g, s2_matrix())) != sym_s2(p)) {
      return "sym_s2 disagrees with S2 g S2" + w;
    }
    if (scaled_plucker(cartan_involution(g)) != sym_cartan(p)) {
      return "sym_cartan disagrees with the Cartan involution" + w;
    }
    if (sym_cartan(sym_cartan(p)) != p) return "sym_cartan is not an involution" + w;
    return std::nullopt;
  };
  auto trial = [&](std::uint64_t i) {
    const std::uint64_t seed = trial_seed(cfg.seed, i);
    return detail::shrinking_trial(seed, detail::word_len_for(seed, cfg.max_word), check);
  };
  rep.failures = detail::parallel_for(cfg.trials, cfg.workers, trial);
  rep.cases = cfg.trials;
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

inline Report verify_cocycle(const VerifyConfig& cfg) {
  detail::Timer timer;
  Report rep{"cocycle"};
  auto trial = [&](std::uint64_t i) {
    std::vector<std::string> bad;
    Rng rng(trial_seed(cfg.seed, i));
    const Mat3Q g1 = sample_sl3_q(rng), g2 = sample_sl3_q(rng), g3 = sample_sl3_q(rng);
    const Mat3Q n1 = sample_unipotent_q(rng), n2 = sample_unipotent_q(rng);
    const Mat3Q a = sample_torus_q(rng, true);
    const std::string w = " for g1=" + detail::mat(g1) + " g2=" + detail::mat(g2);

    if (sigma(g1, g2) * sigma(Mat3Q(g1 * g2), g3) !=
        sigma(g1, Mat3Q(g2 * g3)) * sigma(g2, g3)) {
      bad.push_back("2-cocycle identity fails" + w + " g3=" + detail::mat(g3));
    }
    if (sigma(Mat3Q(n1 * g1), Mat3Q(g2 * n2)) != sigma(g1, g2)) {
      bad.push_back("sigma(n g1, g2 n') != sigma(g1, g2)" + w + " n=" +
                    detail::mat(n1) + " n'=" + detail::mat(n2));
    }
    if (sigma(Mat3Q(g1 * n1), g2) != sigma(g1, Mat3Q(n1 * g2))) {
      bad.push_back("sigma(g1 n, g2) != sigma(g1, n g2)" + w + " n=" + detail::mat(n1));
    }
    if (sigma(n1, g1) != Sign::plus() || sigma(g1, n1) != Sign::plus()) {
      bad.push_back("sigma(n, g) or sigma(g, n) != 1" + w + " n=" + detail::mat(n1));
    }
    if (sigma(g1, a) != Sign::plus()) {
      bad.push_back("sigma(g, a) != 1 for positive a" + w + " a=" + detail::mat(a));
    }
    const MetaElt x{g1, Sign::plus()}, y{g2, Sign::minus()}, z{g3, Sign::plus()};
    if (meta_mul(meta_mul(x, y), z) != meta_mul(x, meta_mul(y, z))) {
      bad.push_back("meta_mul is not associative" + w + " g3=" + detail::mat(g3));
    }
    return bad;
  };
  rep.failures = detail::parallel_for(cfg.trials, cfg.workers, trial);
  rep.cases = cfg.trials;
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

inline Report verify_homomorphism(const VerifyConfig& cfg) {
  detail::Timer timer;
  Report rep{"homomorphism"};
  auto check = [](std::uint64_t seed, int len) -> detail::Check {
    Rng rng(seed);
    const Mat3 g1 = sample_gamma14(rng, len), g2 = sample_gamma14(rng, len);
    const Sign lhs = split(Mat3(g1 * g2));
    const Sign rhs = split(g1) * split(g2) * sigma(g1, g2);
    if (lhs != rhs) {
      return "s(g1 g2) != s(g1) s(g2) sigma(g1, g2) for g1=" + detail::mat(g1) +
             " g2=" + detail::mat(g2);
    }
    if (meta_mul(lift(g1), lift(g2)) != lift(Mat3(g1 * g2))) {
      return "lift is not multiplicative for g1=" + detail::mat(g1) +
             " g2=" + detail::mat(g2);
    }
    return std::nullopt;
  };
  auto trial = [&](std::uint64_t i) {
    const std::uint64_t seed = trial_seed(cfg.seed, i);
    return detail::shrinking_trial(seed, detail::word_len_for(seed, cfg.max_word), check);
  };
  rep.failures = detail::parallel_for(cfg.trials, cfg.workers, trial);
  rep.cases = cfg.trials;
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

inline Report verify_agreement(const VerifyConfig& cfg) {
  detail::Timer timer;
  Report rep{"agreement"};
  const long bound = detail::pick_bound(cfg.bound, 6);
  const std::vector<ScaledPlucker> reps = detail::enumerate_big_cell(bound);

  auto enumerated = [&](std::uint64_t i) -> std::vector<std::string> {
    const ScaledPlucker& p = reps[i];
    Rng rng(trial_seed(cfg.seed, i));
    const Mat3 m = rep_matrix(p);
    if (scaled_plucker(m) != p) {
      return {"reconstruction of " + detail::coords(p) + " has other coordinates"};
    }
    const Sign oracle = split_block(block_factor(p));
    std::vector<std::string> bad;
    if (split(m) != oracle) {
      bad.push_back("dispatcher != block formula at " + detail::coords(p) +
                    " g=" + detail::mat(m));
    }
    const Mat3 scrambled = detail::scrambled_rep(p, rng);
    if (split(scrambled) != oracle) {
      bad.push_back("dispatcher != block formula on the double coset of " +
                    detail::coords(p) + " g=" + detail::mat(scrambled));
    }
    return bad;
  };
  rep.failures = detail::parallel_for(reps.size(), cfg.workers, enumerated);

  auto check = [](std::uint64_t seed, int len) -> detail::Check {
    Rng rng(seed);
    const Mat3 g = sample_gamma14(rng, len);
    if (split(g) != split_by_blocks(g)) {
      return "dispatcher != block formula for g=" + detail::mat(g);
    }
    return std::nullopt;
  };
  auto sampled = [&](std::uint64_t i) {
    const std::uint64_t seed = trial_seed(cfg.seed ^ 0x1111ULL, i);
    return detail::shrinking_trial(seed, detail::word_len_for(seed, cfg.max_word), check);
  };
  for (auto& f : detail::parallel_for(cfg.trials, cfg.workers, sampled)) {
    f.index += reps.size();
    rep.failures.push_back(std::move(f));
  }
  rep.cases = reps.size() + cfg.trials;
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

namespace detail {

// The symmetry identities at one element; `s` is the splitting used.
inline std::vector<std::string> symmetry_checks(const Mat3& g, Rng& rng,
                                                const char* route,
                                                Sign (*s)(const Mat3&)) {
  std::vector<std::string> bad;
  const std::string w = std::string(" [") + route + "] for g=" + mat(g);
  const Sign base = s(g);
  const ScaledPlucker p = scaled_plucker(g);

  const Mat3 n = sample_gamma_inf(rng);
  if (s(Mat3(n * g)) != base || s(Mat3(g * n)) != base || s(conjugate(g, n)) != base) {
    bad.push_back("not Gamma_infty bi-invariant" + w + " n=" + mat(n));
  }

  const bool big = sgn(p.A1) != 0 && sgn(p.A2) != 0;
  if (big) {
    const Sign want = Sign::from_bool_negative(sgn(p.A1) * sgn(p.A2) > 0) * base;
    if (s(conjugate(g, s2_matrix())) != want) {
      bad.push_back("s(S2 g S2) != -sign(A1 A2) s(g)" + w);
    }
  }

  {
    const BlockParams bp = block_factor_any(p);
    Sign want = base;
    if (sgn(bp.c1) != 0 && sgn(bp.c2) != 0 && sgn(bp.c3) != 0 && sgn(p.A2) == 0) {
      want *= hilbert_real(Int(bp.c1 * bp.a3), Int(-1));
    }
    if (s(conjugate(g, s3_matrix())) != want) {
      bad.push_back("s(S3 g S3) differs from the sign-symmetry case split" + w);
    }
  }

  if (big) {
    if (s(cartan_involution(g)) != hilbert_real(Int(-p.A1), Int(-p.A2)) * base) {
      bad.push_back("s(phi(g)) != (-A1, -A2) s(g)" + w);
    }
  } else if (sgn(p.A2) == 0 && sgn(p.A1) != 0 && sgn(p.B2) != 0) {
    if (s(cartan_involution(g)) != hilbert_real(Int(-p.A1), p.B2) * base) {
      bad.push_back("s(phi(g)) != (-A1, B2) s(g) with A2 = 0" + w);
    }
  }
  return bad;
}

inline std::vector<std::string> symmetry_both_routes(const Mat3& g, Rng& rng) {
  Rng other = rng;
  auto bad = symmetry_checks(g, rng, "block formula", &split_by_blocks);
  auto more = symmetry_checks(g, other, "dispatcher", &split);
  bad.insert(bad.end(), more.begin(), more.end());
  return bad;
}

}  // namespace detail

inline Report verify_symmetry(const VerifyConfig& cfg) {
  detail::Timer timer;
  Report rep{"symmetry"};
  const long bound = detail::pick_bound(cfg.bound, 6);
  std::vector<ScaledPlucker> reps = detail::enumerate_big_cell(bound);
  const auto small = detail::enumerate_small_cells(2);
  reps.insert(reps.end(), small.begin(), small.end());

  auto enumerated = [&](std::uint64_t i) {
    Rng rng(trial_seed(cfg.seed, i));
    return detail::symmetry_both_routes(detail::scrambled_rep(reps[i], rng), rng);
  };
  rep.failures = detail::parallel_for(reps.size(), cfg.workers, enumerated);

  auto check = [](std::uint64_t seed, int len) -> detail::Check {
    Rng rng(seed);
    const Mat3 g = sample_gamma14(rng, len);
    auto bad = detail::symmetry_both_routes(g, rng);
    if (bad.empty()) return std::nullopt;
    return bad.front();
  };
  auto sampled = [&](std::uint64_t i) {
    const std::uint64_t seed = trial_seed(cfg.seed ^ 0x2222ULL, i);
    return detail::shrinking_trial(seed, detail::word_len_for(seed, cfg.max_word), check);
  };
  for (auto& f : detail::parallel_for(cfg.trials, cfg.workers, sampled)) {
    f.index += reps.size();
    rep.failures.push_back(std::move(f));
  }
  rep.cases = reps.size() + cfg.trials;
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

namespace detail {

// Checks the odd-factor reduction for every odd D dividing (A1, A2).
inline std::vector<std::string> reduction_checks(const Mat3& g, std::uint64_t& applied) {
  std::vector<std::string> bad;
  const ScaledPlucker p = scaled_plucker(g);
  if (sgn(p.A1) == 0 || sgn(p.A2) == 0) return bad;
  const Int odd = odd_part(gcd(p.A1, p.A2));
  const Sign base = split_by_blocks(g);
  for (Int d = 3; d <= odd; d += 2) {
    if (!divides(d, odd)) continue;
    const Int d1 = gcd(d, p.B1);
    const Int d2 = d / d1;
    const std::string w = " for g=" + mat(g) + " D1=" + d1.get_str() +
                          " D2=" + d2.get_str();
    const Mat3Q conj = scale_conjugate(to_rational(g), d1, d2);
    const std::optional<Mat3> integral = to_integer(conj);
    if (!integral) {
      bad.push_back("T g T^-1 is not integral" + w);
      continue;
    }
    const bool in_group = in_gamma14(*integral);
    if (in_group != divides(d2, p.B2)) {
      bad.push_back("T g T^-1 in Gamma_1(4) does not match D2 | B2" + w);
      continue;
    }
    if (!in_group) {
      try {
        (void)split_reduction(p, d1, d2);
        bad.push_back("split_reduction accepted D2 not dividing B2" + w);
      } catch (const HypothesisError&) {
      }
      continue;
    }
    ++applied;
    const Reduction r = split_reduction(p, d1, d2);
    if (scaled_plucker(*integral) != r.reduced) {
      bad.push_back("reduced coordinates differ from those of T g T^-1" + w);
    }
    if (split_by_blocks(*integral) * r.correction != base) {
      bad.push_back("s(g) != s(T g T^-1) (D1/C1)(D2/C2)" + w);
    }
    if (split_coords(r.reduced) * r.correction != base) {
      bad.push_back("dispatcher on the reduced coordinates disagrees" + w);
    }
  }
  return bad;
}

}  // namespace detail

inline Report verify_reduction(const VerifyConfig& cfg) {
  detail::Timer timer;
  Report rep{"reduction"};
  const long bound = detail::pick_bound(cfg.bound, 9);
  std::vector<ScaledPlucker> reps;
  for (long a1 = -bound; a1 <= bound; ++a1)
    for (long a2 = -bound; a2 <= bound; ++a2) {
      if (a1 == 0 || a2 == 0) continue;
      if (odd_part(gcd(Int(a1), Int(a2))) == 1) continue;
      for (const CosetRep& r : enumerate_S(Int(a1), Int(a2))) reps.push_back(r.coords);
    }

  std::atomic<std::uint64_t> applied{0};
  auto enumerated = [&](std::uint64_t i) {
    Rng rng(trial_seed(cfg.seed, i));
    std::uint64_t local = 0;
    auto bad = detail::reduction_checks(detail::scrambled_rep(reps[i], rng), local);
    applied += local;
    return bad;
  };
  rep.failures = detail::parallel_for(reps.size(), cfg.workers, enumerated);

  auto sampled = [&](std::uint64_t i) {
    const std::uint64_t seed = trial_seed(cfg.seed ^ 0x3333ULL, i);
    Rng rng(seed);
    const Mat3 g = sample_gamma14(rng, detail::word_len_for(seed, cfg.max_word));
    std::uint64_t local = 0;
    auto bad = detail::reduction_checks(g, local);
    applied += local;
    return bad;
  };
  for (auto& f : detail::parallel_for(cfg.trials, cfg.workers, sampled)) {
    f.index += reps.size();
    rep.failures.push_back(std::move(f));
  }
  rep.cases = reps.size() + cfg.trials;
  if (applied == 0) {
    rep.failures.push_back({rep.cases, "no element admitted a reduction"});
  }

  // The even factor is never removable.
  try {
    (void)split_reduction({2, 1, -1, 2, 1, -1}, 1, 2);
  } catch (const HypothesisError&) {
  } catch (const std::exception& e) {
    rep.failures.push_back({rep.cases, std::string("even D: ") + e.what()});
  }
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

inline Report verify_cells(const VerifyConfig& cfg) {
  detail::Timer timer;
  Report rep{"cells"};
  const long h = detail::pick_bound(cfg.bound, 4);
  const std::vector<ScaledPlucker> reps = detail::enumerate_small_cells(h);

  auto enumerated = [&](std::uint64_t i) -> std::vector<std::string> {
    const ScaledPlucker& p = reps[i];
    Rng rng(trial_seed(cfg.seed, i));
    const Sign table = split_cell(p.primed());
    const Sign oracle = split_block(block_factor_any(p));
    std::vector<std::string> bad;
    if (table != oracle) {
      bad.push_back(std::string("cell table != block formula on ") +
                    to_string(cell_of(p.primed())) + " at " + detail::coords(p));
    }
    if (scaled_plucker(rep_matrix(p)) != p) {
      bad.push_back("reconstruction of " + detail::coords(p) + " has other coordinates");
    }
    const Mat3 g = detail::scrambled_rep(p, rng);
    if (split(g) != oracle) {
      bad.push_back("dispatcher != block formula at g=" + detail::mat(g));
    }
    return bad;
  };
  rep.failures = detail::parallel_for(reps.size(), cfg.workers, enumerated);

  // Short words land on the small cells often; longer ones rarely do.
  std::atomic<std::uint64_t> small_hits{0};
  auto sampled = [&](std::uint64_t i) -> std::vector<std::string> {
    const std::uint64_t seed = trial_seed(cfg.seed ^ 0x4444ULL, i);
    Rng rng(seed);
    const int len = 1 + static_cast<int>(i % 3);
    const Mat3 g = sample_gamma_inf(rng) * sample_gamma14(rng, len) * sample_gamma_inf(rng);
    const Plucker<Int> q = plucker(g);
    if (cell_of(q) == Cell::BwlB) return {};
    ++small_hits;
    if (split_cell(q) != split_by_blocks(g)) {
      return {std::string("cell table != block formula on ") + to_string(cell_of(q)) +
              " for g=" + detail::mat(g)};
    }
    return {};
  };
  for (auto& f : detail::parallel_for(cfg.trials, cfg.workers, sampled)) {
    f.index += reps.size();
    rep.failures.push_back(std::move(f));
  }
  rep.cases = reps.size() + small_hits.load();
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

namespace detail {

inline std::vector<std::string> coset_instance(const MultParams& m, bool twist) {
  std::vector<std::string> bad;
  const std::string w = " at " + to_string(m);
  const MultData d = mult_data(m);
  const Int mu = d.mu.value();
  const auto whole = enumerate_S(Int(m.A1 * m.alpha1), Int(m.A2 * m.alpha2));
  const auto first = enumerate_S(m.A1, Int(mu * m.A2));
  const auto second = enumerate_S(m.alpha1, Int(-mu * m.alpha2));

  if (!twist) {
    if (whole.size() != first.size() * second.size()) {
      bad.push_back("cardinality " + std::to_string(whole.size()) + " != " +
                    std::to_string(first.size()) + " * " +
                    std::to_string(second.size()) + w);
    }
    for (const CosetRep& r : whole) {
      const auto pair = phi_split(r, m);
      if (!std::binary_search(first.begin(), first.end(), pair.first) ||
          !std::binary_search(second.begin(), second.end(), pair.second)) {
        bad.push_back("phi image outside the target sets for " + coords(r.coords) + w);
      } else if (psi_merge(pair, m) != r) {
        bad.push_back("psi(phi(p)) != p for " + coords(r.coords) + w);
      }
    }
    for (const CosetRep& f : first)
      for (const CosetRep& s : second) {
        if (phi_split(psi_merge({f, s}, m), m) != std::make_pair(f, s)) {
          bad.push_back("phi(psi(p1, p2)) != (p1, p2) for " + coords(f.coords) +
                        ", " + coords(s.coords) + w);
        }
      }
    return bad;
  }

  const Sign t = twist_factor(m);
  for (const CosetRep& r : whole) {
    const auto pair = phi_split(r, m);
    const Sign whole_s = split_coords(r.coords);
    const Sign parts = split_coords(pair.first.coords) * split_coords(pair.second.coords) * t;
    if (whole_s != parts) {
      bad.push_back("s(p) != s(p1) s(p2) twist for " + coords(r.coords) + w);
    }
    const Sign parts_oracle = split_block(block_factor(pair.first.coords)) *
                              split_block(block_factor(pair.second.coords)) * t;
    if (split_block(block_factor(r.coords)) != parts_oracle) {
      bad.push_back("block formula: s(p) != s(p1) s(p2) twist for " +
                    coords(r.coords) + w);
    }
  }
  return bad;
}

inline Report coset_suite(const char* name, const VerifyConfig& cfg, bool twist) {
  Timer timer;
  Report rep{name};
  const long bound = pick_bound(cfg.bound, 7);
  const std::vector<MultParams> params = mult_params_up_to(bound, twist);
  std::atomic<std::uint64_t> elements{0};
  auto body = [&](std::uint64_t i) {
    const MultParams& m = params[i];
    elements += enumerate_S(Int(m.A1 * m.alpha1), Int(m.A2 * m.alpha2)).size();
    return coset_instance(m, twist);
  };
  rep.failures = parallel_for(params.size(), cfg.workers, body);
  rep.cases = elements.load();
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

}  // namespace detail

inline Report verify_cosets(const VerifyConfig& cfg) {
  return detail::coset_suite("cosets", cfg, false);
}

inline Report verify_twist(const VerifyConfig& cfg) {
  return detail::coset_suite("twist", cfg, true);
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "kronecker", "plucker",   "cocycle", "homomorphism", "agreement",
      "symmetry",  "reduction", "cells",   "cosets",       "twist"};
  return names;
}

inline Report run_suite(const std::string& name, const VerifyConfig& cfg) {
  static const std::map<std::string, Report (*)(const VerifyConfig&)> table{
      {"kronecker", &verify_kronecker}, {"plucker", &verify_plucker},
      {"cocycle", &verify_cocycle},     {"homomorphism", &verify_homomorphism},
      {"agreement", &verify_agreement}, {"symmetry", &verify_symmetry},
      {"reduction", &verify_reduction}, {"cells", &verify_cells},
      {"cosets", &verify_cosets},       {"twist", &verify_twist}};
  const auto it = table.find(name);
  if (it == table.end()) throw PreconditionError("unknown suite '" + name + "'");
  return it->second(cfg);
}

inline std::string summary_line(const Report& r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << r.suite << ": " << (r.ok() ? "PASS" : "FAIL") << " cases=" << r.cases
     << " failures=" << r.failures.size() << " elapsed=" << r.elapsed_seconds << "s";
  return os.str();
}

}  // namespace metaplectic
