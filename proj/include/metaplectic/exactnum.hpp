#pragma once

// Exact integer/rational arithmetic and the quadratic symbols built on it.
//
// Int and Rat are GMP's mpz_class / mpq_class.  Beware of gmpxx expression
// templates: never bind the result of an arithmetic expression to `auto`.

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "metaplectic/errors.hpp"

namespace metaplectic {

using Int = mpz_class;
using Rat = mpq_class;

// An element of {+1, -1}.
class Sign {
 public:
  constexpr Sign() noexcept = default;

  static constexpr Sign plus() noexcept { return Sign(1); }
  static constexpr Sign minus() noexcept { return Sign(-1); }

  static Sign from_int(int v) {
    if (v != 1 && v != -1) {
      throw ConsistencyError("value " + std::to_string(v) + " is not a sign");
    }
    return Sign(v);
  }

  static constexpr Sign from_bool_negative(bool negative) noexcept {
    return negative ? minus() : plus();
  }

  constexpr int value() const noexcept { return v_; }
  constexpr bool is_negative() const noexcept { return v_ < 0; }

  constexpr Sign operator-() const noexcept { return Sign(-v_); }
  constexpr Sign& operator*=(Sign o) noexcept {
    v_ *= o.v_;
    return *this;
  }
  friend constexpr Sign operator*(Sign a, Sign b) noexcept {
    return Sign(a.v_ * b.v_);
  }
  friend constexpr bool operator==(Sign, Sign) noexcept = default;

 private:
  explicit constexpr Sign(int v) noexcept : v_(v) {}
  int v_ = 1;
};

inline std::string to_string(Sign s) { return s.value() > 0 ? "1" : "-1"; }
inline std::string to_string(const Int& n) { return n.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int gcd(const Int& a, const Int& b, const Int& c) {
  return gcd(gcd(a, b), c);
}

// Floor division and the matching non-negative-for-positive-divisor
// remainder.  b must be nonzero.
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// a mod |m| in [0, |m|).
inline Int mod_positive(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline bool divides(const Int& d, const Int& n) {
  if (sgn(d) == 0) return sgn(n) == 0;
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

// n / d, requiring the division to be exact.
inline Int exact_div(const Int& n, const Int& d, const char* what) {
  if (sgn(d) == 0 || !divides(d, n)) {
    throw ConsistencyError(std::string("inexact division: ") + what + " (" +
                           n.get_str() + " / " + d.get_str() + ")");
  }
  Int q;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

// Inverse of a modulo |m|, in [0, |m|).  Throws DomainError when a is not
// invertible.
inline Int mod_inverse(const Int& a, const Int& m) {
  Int mm = abs(m);
  if (mm == 1) return Int(0);
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), mm.get_mpz_t()) == 0) {
    throw DomainError(a.get_str() + " is not invertible modulo " +
                      mm.get_str());
  }
  return r;
}

inline bool is_odd(const Int& n) { return mpz_odd_p(n.get_mpz_t()) != 0; }

struct TwoAdic {
  unsigned long exponent;
  Int odd;  // same sign as the input
};

// n = 2^exponent * odd with odd odd.
inline TwoAdic val2(const Int& n) {
  if (sgn(n) == 0) throw DomainError("val2 of 0");
  mp_bitcnt_t e = mpz_scan1(n.get_mpz_t(), 0);
  Int odd;
  mpz_tdiv_q_2exp(odd.get_mpz_t(), n.get_mpz_t(), e);
  return {static_cast<unsigned long>(e), odd};
}

inline Int odd_part(const Int& n) { return val2(n).odd; }

// Real Hilbert symbol (a, b)_R: -1 iff both arguments are negative.
// A zero argument against a nonzero one gives +1 (this is what makes
// kronecker(0, -1) = 1); both zero is a domain error.
inline Sign hilbert_real(int sign_a, int sign_b) {
  if (sign_a == 0 && sign_b == 0) {
    throw DomainError("Hilbert symbol (0, 0) is undefined");
  }
  return Sign::from_bool_negative(sign_a < 0 && sign_b < 0);
}

inline Sign hilbert_real(const Rat& a, const Rat& b) {
  return hilbert_real(sgn(a), sgn(b));
}

inline Sign hilbert_real(const Int& a, const Int& b) {
  return hilbert_real(sgn(a), sgn(b));
}

// Kronecker symbol (k / n) for all integer pairs.
//
// Conventions: (k/-1) = (k, -1)_R, (k/2) via k mod 8, (k/0) = 1 iff k = +-1.
// Binary Jacobi algorithm; never factors n.
inline int kronecker(const Int& k, const Int& n) {
  if (sgn(n) == 0) return (k == 1 || k == -1) ? 1 : 0;

  int result = 1;
  Int m = abs(n);
  if (sgn(n) < 0 && sgn(k) < 0) result = -result;

  if (!is_odd(k) && !is_odd(m)) return 0;

  mp_bitcnt_t v = mpz_scan1(m.get_mpz_t(), 0);
  if (v > 0) {
    mpz_tdiv_q_2exp(m.get_mpz_t(), m.get_mpz_t(), v);
    if (v % 2 == 1) {
      unsigned long k8 = mpz_fdiv_ui(k.get_mpz_t(), 8);
      if (k8 == 3 || k8 == 5) result = -result;
    }
  }

  // Jacobi symbol (a / m) with m odd and positive.
  Int a = mod_positive(k, m);
  while (sgn(a) != 0) {
    mp_bitcnt_t t = mpz_scan1(a.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), t);
    if (t % 2 == 1) {
      unsigned long m8 = mpz_fdiv_ui(m.get_mpz_t(), 8);
      if (m8 == 3 || m8 == 5) result = -result;
    }
    a.swap(m);
    if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 &&
        mpz_fdiv_ui(m.get_mpz_t(), 4) == 3) {
      result = -result;
    }
    a = mod_positive(a, m);
  }
  return m == 1 ? result : 0;
}

inline int kronecker(long k, long n) { return kronecker(Int(k), Int(n)); }

// Kronecker symbol known to be a unit (both arguments coprime).
inline Sign kronecker_sign(const Int& k, const Int& n) {
  int v = kronecker(k, n);
  if (v == 0) {
    throw ConsistencyError("Kronecker symbol (" + k.get_str() + "/" +
                           n.get_str() + ") vanishes");
  }
  return Sign::from_int(v);
}

// Deterministic primality by trial division; intended for small moduli.
inline bool is_prime_small(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

// Legendre symbol decided by squaring every residue modulo p.  Used as an
// oracle for kronecker(); p must be an odd prime small enough to enumerate.
inline int legendre_oracle(const Int& k, const Int& p) {
  if (sgn(p) <= 0 || !mpz_fits_ulong_p(p.get_mpz_t()) ||
      !is_prime_small(p.get_ui()) || p == 2) {
    throw DomainError("legendre_oracle: " + p.get_str() +
                      " is not an odd prime");
  }
  const std::uint64_t q = p.get_ui();
  const std::uint64_t r = mpz_fdiv_ui(k.get_mpz_t(), q);
  if (r == 0) return 0;
  for (std::uint64_t x = 1; x < q; ++x) {
    if ((x * x) % q == r) return 1;
  }
  return -1;
}

}  // namespace metaplectic
