#pragma once

// Seeded random generation of group elements for the verification suites.
// Every trial draws from its own generator, seeded by (master seed, index),
// so results do not depend on how trials are spread over workers.

#include <array>
#include <cstdint>
#include <random>

#include "metaplectic/errors.hpp"
#include "metaplectic/exactnum.hpp"
#include "metaplectic/sl3group.hpp"

namespace metaplectic {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) ^ splitmix64(index + 0x5851f42d4c957f2dULL));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(splitmix64(seed)) {}

  long uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(eng_);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

// One generator of Gamma_1(4): either n(x, y, z) with x, y, z in [-3, 3], or
// a lower elementary matrix whose off-diagonal entry lies in 4 * [-2, 2].
inline Mat3 gamma14_generator(Rng& rng) {
  if (rng.coin()) {
    return unipotent<Int>(rng.uniform(-3, 3), rng.uniform(-3, 3),
                          rng.uniform(-3, 3));
  }
  static constexpr std::array<std::array<int, 2>, 3> slots{
      {{1, 0}, {2, 0}, {2, 1}}};
  const auto& slot = slots[rng.uniform(0, 2)];
  Mat3 e = Mat3::identity();
  e(slot[0], slot[1]) = 4 * rng.uniform(-2, 2);
  return e;
}

inline Mat3 sample_gamma14(Rng& rng, int word_len) {
  if (word_len < 1) throw PreconditionError("sample_gamma14: word_len >= 1");
  Mat3 g = gamma14_generator(rng);
  for (int i = 1; i < word_len; ++i) g = g * gamma14_generator(rng);
  return g;
}

inline Mat3 sample_gamma14(std::uint64_t seed, int word_len) {
  Rng rng(seed);
  return sample_gamma14(rng, word_len);
}

inline Mat3 sample_gamma_inf(Rng& rng, long range = 5) {
  return unipotent<Int>(rng.uniform(-range, range), rng.uniform(-range, range),
                        rng.uniform(-range, range));
}

// A small nonzero rational p/q.
inline Rat sample_nonzero_rational(Rng& rng) {
  long num = 0;
  while (num == 0) num = rng.uniform(-6, 6);
  Rat r(num, rng.uniform(1, 5));
  r.canonicalize();
  return r;
}

// A small rational, zero with probability `zero_p`.
inline Rat sample_rational(Rng& rng, double zero_p = 0.3) {
  if (rng.coin(zero_p)) return Rat(0);
  return sample_nonzero_rational(rng);
}

inline Mat3Q sample_unipotent_q(Rng& rng) {
  return unipotent<Rat>(sample_rational(rng), sample_rational(rng),
                        sample_rational(rng));
}

inline Mat3Q sample_torus_q(Rng& rng, bool positive = false) {
  Rat a = sample_nonzero_rational(rng), b = sample_nonzero_rational(rng);
  if (positive) {
    a = abs(a);
    b = abs(b);
  }
  Rat c = 1 / (a * b);
  return Mat3Q::diagonal(a, b, c);
}

// A rational SL(3) matrix n t w n', hitting every Bruhat cell; with
// probability one half, a product of two such.
inline Mat3Q sample_sl3_q(Rng& rng) {
  auto one = [&rng] {
    const auto& ws = weyl_elements();
    const WeylElt& w = ws[rng.uniform(0, static_cast<long>(ws.size()) - 1)];
    return sample_unipotent_q(rng) * sample_torus_q(rng) *
           to_rational(w.matrix) * sample_unipotent_q(rng);
  };
  Mat3Q g = one();
  if (rng.coin()) g = g * one();
  return g;
}

}  // namespace metaplectic
