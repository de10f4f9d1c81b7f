#pragma once

// Representatives of Gamma_infty \ Gamma_1(4) / Gamma_infty on the big cell,
// the sets S(A1, A2), and the CRT bijection
//
//   S(A1 alpha1, A2 alpha2) <-> S(A1, mu A2) x S(alpha1, -mu alpha2)
//
// together with the twisted multiplicativity of s across it.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "metaplectic/blockform.hpp"
#include "metaplectic/exactnum.hpp"
#include "metaplectic/sl3group.hpp"
#include "metaplectic/splitting.hpp"

namespace metaplectic {

// b / a in [0, 1).
inline bool in_box(const Int& b, const Int& a) {
  if (sgn(a) > 0) return sgn(b) >= 0 && b < a;
  return sgn(b) <= 0 && b > a;
}

// The representative of r modulo |a| lying in the box of a.
inline Int box_rep(const Int& r, const Int& a) {
  Int m = mod_positive(r, a);
  if (sgn(a) < 0 && sgn(m) != 0) m += a;
  return m;
}

struct CosetRep {
  ScaledPlucker coords;

  friend bool operator==(const CosetRep&, const CosetRep&) = default;
  friend auto operator<=>(const CosetRep& a, const CosetRep& b) {
    return a.coords <=> b.coords;
  }
};

inline bool in_S(const ScaledPlucker& p) {
  return sgn(p.A1) != 0 && sgn(p.A2) != 0 && is_valid(p) &&
         in_box(p.B1, p.A1) && in_box(p.B2, p.A2) &&
         in_box(p.C2, Int(4 * p.A2));
}

struct Normalization {
  CosetRep rep;
  Int x, y, z;  // rep = coordinates of gamma * n(x, y, z)^{-1}
};

inline Normalization normalize_coords(const ScaledPlucker& p) {
  if (sgn(p.A1) == 0 || sgn(p.A2) == 0) {
    throw PreconditionError("coset representatives need A1 A2 != 0");
  }
  Normalization r;
  r.x = floor_div(p.B1, p.A1);
  r.y = -floor_div(p.B2, p.A2);
  r.z = -floor_div(Int(p.C2 + 4 * p.B2 * r.x), Int(4 * p.A2));
  r.rep.coords = sym_conj_n(p, r.x, r.y, r.z);
  if (!in_S(r.rep.coords)) {
    throw ConsistencyError("normalization left the box: " +
                           to_string(r.rep.coords));
  }
  return r;
}

// The unique n in Gamma_infty with gamma n in the box, returned as n.
inline std::pair<CosetRep, Mat3> canonical_rep(const Mat3& gamma) {
  const Normalization nm = normalize_coords(scaled_plucker(gamma));
  return {nm.rep, inv(unipotent<Int>(nm.x, nm.y, nm.z))};
}

// A matrix in Gamma_1(4) with the given coordinates.
inline Mat3 rep_matrix(const ScaledPlucker& p) {
  return block_to_matrix(block_factor_any(p));
}

// All of S(A1, A2), sorted.
inline std::vector<CosetRep> enumerate_S(const Int& a1, const Int& a2) {
  if (sgn(a1) == 0 || sgn(a2) == 0) {
    throw PreconditionError("enumerate_S needs A1 A2 != 0");
  }
  const Int abs1 = abs(a1), abs2 = abs(a2), four_abs2 = 4 * abs2;
  std::vector<CosetRep> out;
  for (Int i = 0; i < abs1; ++i) {
    const Int b1 = sgn(a1) > 0 ? i : Int(-i);
    for (Int j = 0; j < abs2; ++j) {
      const Int b2 = sgn(a2) > 0 ? j : Int(-j);
      for (Int k = 0; k < four_abs2; ++k) {
        const Int c2 = sgn(a2) > 0 ? k : Int(-k);
        if (mod_positive(c2, Int(4)) != 3) continue;
        const Int num = -(a1 * c2 + 4 * b1 * b2);
        if (!divides(a2, num)) continue;
        ScaledPlucker p{a1, b1, exact_div(num, a2, "C1"), a2, b2, c2};
        if (is_valid(p)) out.push_back({p});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Solves x = r1 (mod m1), x = r2 (mod m2); returns (x, lcm) with x in
// [0, lcm), or nothing if the congruences are incompatible.
inline std::optional<std::pair<Int, Int>> crt(const Int& r1, const Int& m1,
                                              const Int& r2, const Int& m2) {
  const Int n1 = abs(m1), n2 = abs(m2);
  if (sgn(n1) == 0 || sgn(n2) == 0) throw DomainError("crt: zero modulus");
  const Int g = gcd(n1, n2);
  const Int diff = r2 - r1;
  if (!divides(g, diff)) return std::nullopt;
  const Int step = n2 / g;
  const Int l = n1 * step;
  const Int k = mod_positive(
      Int((diff / g) * mod_inverse(Int(n1 / g), step)), step);
  return std::make_pair(mod_positive(Int(r1 + k * n1), l), l);
}

// Parameters (A1, alpha1, A2, alpha2) of the bijection.
struct MultParams {
  Int A1, alpha1, A2, alpha2;
};

inline std::string to_string(const MultParams& m) {
  return "(A1=" + m.A1.get_str() + ", alpha1=" + m.alpha1.get_str() +
         ", A2=" + m.A2.get_str() + ", alpha2=" + m.alpha2.get_str() + ")";
}

inline std::optional<std::string> mult_violation(const MultParams& m) {
  if (sgn(m.A1) <= 0 || sgn(m.alpha1) <= 0) return "A1, alpha1 must be > 0";
  if (sgn(m.A2) == 0 || sgn(m.alpha2) == 0) return "A2, alpha2 must be != 0";
  if (gcd(Int(m.A1 * m.A2), Int(m.alpha1 * m.alpha2)) != 1) {
    return "(A1 A2, alpha1 alpha2) != 1";
  }
  if (!is_odd(m.A1) || !is_odd(m.A2)) return "A1, A2 must be odd";
  if (mod_positive(Int(m.A1 * m.alpha1 + m.A2 * m.alpha2), Int(4)) != 0) {
    return "A1 alpha1 + A2 alpha2 != 0 mod 4";
  }
  return std::nullopt;
}

inline std::optional<std::string> twist_violation(const MultParams& m) {
  if (auto why = mult_violation(m)) return why;
  if (!is_odd(Int(m.alpha2 / gcd(m.alpha1, m.alpha2)))) {
    return "alpha2 / (alpha1, alpha2) must be odd";
  }
  return std::nullopt;
}

inline void require_mult(const MultParams& m) {
  if (auto why = mult_violation(m)) {
    throw HypothesisError("multiplicativity " + to_string(m) + ": " + *why);
  }
}

struct MultData {
  Sign mu;
  Int gamma_unit;  // smallest positive, = 1 mod 4 and = alpha1 mod A2
  Int ell;         // gamma_unit = alpha1 + ell A2
};

inline MultData mult_data(const MultParams& m) {
  require_mult(m);
  MultData d;
  d.mu = kronecker_sign(Int(-1), Int(-m.A1 * m.A2));
  const Int bound = 4 * abs(m.A2);
  for (Int g = 1; g <= bound; g += 4) {
    if (divides(m.A2, Int(g - m.alpha1))) {
      d.gamma_unit = g;
      d.ell = exact_div(Int(g - m.alpha1), m.A2, "ell");
      return d;
    }
  }
  throw ConsistencyError("no gamma = 1 mod 4 with gamma = alpha1 mod A2");
}

inline void require_in_S(const ScaledPlucker& p, const Int& a1, const Int& a2,
                         const char* what) {
  if (p.A1 != a1 || p.A2 != a2 || !in_S(p)) {
    throw PreconditionError(std::string(what) + " " + to_string(p) +
                            " is not in S(" + a1.get_str() + ", " +
                            a2.get_str() + ")");
  }
}

// S(A1 alpha1, A2 alpha2) -> S(A1, mu A2) x S(alpha1, -mu alpha2).
inline std::pair<CosetRep, CosetRep> phi_split(const CosetRep& rep,
                                               const MultParams& m) {
  const MultData d = mult_data(m);
  const ScaledPlucker& p = rep.coords;
  require_in_S(p, Int(m.A1 * m.alpha1), Int(m.A2 * m.alpha2), "phi_split:");

  const Int mu = d.mu.value();
  const Int e = kronecker(Int(-1), m.A2);
  const Int c1_first = exact_div(
      Int(-m.A1 * d.gamma_unit * p.C2 - 4 * p.B1 * p.B2), Int(mu * m.A2),
      "first C1");
  const ScaledPlucker first{m.A1, p.B1,      c1_first,
                            Int(mu * m.A2), p.B2, Int(d.gamma_unit * p.C2)};
  const ScaledPlucker second{m.alpha1,
                             p.B1,
                             Int(e * m.A2 * p.C1),
                             Int(-mu * m.alpha2),
                             Int(-e * mu * p.B2),
                             Int(-mu * e * m.A1 * p.C2)};
  for (const ScaledPlucker* q : {&first, &second}) {
    if (auto why = scaled_plucker_violation(*q)) {
      throw ConsistencyError("phi_split produced invalid coordinates " +
                             to_string(*q) + ": " + *why);
    }
  }
  return {normalize_coords(first).rep, normalize_coords(second).rep};
}

// The inverse of phi_split.
inline CosetRep psi_merge(const std::pair<CosetRep, CosetRep>& pair,
                          const MultParams& m) {
  const MultData d = mult_data(m);
  const Int mu = d.mu.value();
  const Int e = kronecker(Int(-1), m.A2);
  const Int mu_e = -mu * e;  // = (-1 / A1)
  const ScaledPlucker& f = pair.first.coords;
  const ScaledPlucker& s = pair.second.coords;
  require_in_S(f, m.A1, Int(mu * m.A2), "psi_merge first:");
  require_in_S(s, m.alpha1, Int(-mu * m.alpha2), "psi_merge second:");

  auto solve = [](const Int& r1, const Int& m1, const Int& r2, const Int& m2,
                  const Int& box, const char* what) {
    const auto sol = crt(r1, m1, r2, m2);
    if (!sol) throw ConsistencyError(std::string("psi_merge: CRT for ") + what);
    return box_rep(sol->first, box);
  };

  const Int a1 = m.A1 * m.alpha1;
  const Int a2 = m.A2 * m.alpha2;
  const Int b1 = solve(f.B1, m.A1, s.B1, m.alpha1, a1, "B1");
  const Int b2 = solve(f.B2, m.A2, Int(mu_e * s.B2), m.alpha2, a2, "B2");
  const Int x = exact_div(Int(b1 - f.B1), m.A1, "x");
  const Int x_alt = exact_div(Int(b1 - s.B1), m.alpha1, "x'");

  const Int mod_first = 4 * m.A2, mod_second = 4 * m.alpha2;
  const Int r_first =
      mod_inverse(d.gamma_unit, mod_first) * (f.C2 - 4 * b2 * x);
  const Int r_second = mu_e * mod_inverse(m.A1, mod_second) *
                       (s.C2 - 4 * mu_e * b2 * x_alt);
  const Int c2 = solve(r_first, mod_first, r_second, mod_second,
                       Int(4 * a2), "C2");
  const Int c1 =
      exact_div(Int(-a1 * c2 - 4 * b1 * b2), a2, "C1 from the relation");

  CosetRep out{{a1, b1, c1, a2, b2, c2}};
  if (!in_S(out.coords)) {
    throw ConsistencyError("psi_merge produced " + to_string(out.coords) +
                           " outside S");
  }
  return out;
}

// s(gamma) = s(pi_1 phi(gamma)) s(pi_2 phi(gamma)) * twist_factor.
inline Sign twist_factor(const MultParams& m) {
  if (auto why = twist_violation(m)) {
    throw HypothesisError("twisted multiplicativity " + to_string(m) + ": " +
                          *why);
  }
  const Int unit_a1 = kronecker(Int(-1), m.A1) * m.A1;
  return kronecker_sign(m.alpha2, unit_a1) * kronecker_sign(m.alpha1, m.A2);
}

// Every hypothesis-satisfying (A1, alpha1, A2, alpha2) with entries bounded by
// `bound` in absolute value.
inline std::vector<MultParams> mult_params_up_to(long bound, bool twist) {
  std::vector<MultParams> out;
  for (long a1 = 1; a1 <= bound; ++a1)
    for (long al1 = 1; al1 <= bound; ++al1)
      for (long a2 = -bound; a2 <= bound; ++a2)
        for (long al2 = -bound; al2 <= bound; ++al2) {
          if (a2 == 0 || al2 == 0) continue;
          MultParams m{a1, al1, a2, al2};
          if (twist ? !twist_violation(m) : !mult_violation(m)) {
            out.push_back(m);
          }
        }
  return out;
}

}  // namespace metaplectic
