#pragma once

// The splitting s : Gamma_1(4) -> {+-1}, for which gamma -> (gamma, s(gamma))
// is a homomorphism into the double cover.  Three routes:
//
//  * split_block   - the formula in block parameters (the reference),
//  * split_theorem - the closed formula in Pluecker coordinates, valid when
//                    A1 > 0 and A2 / (A1, A2) is odd,
//  * split_cell    - closed formulas on the five smaller Bruhat cells.
//
// split() dispatches between the last two, moving a big-cell element into
// the theorem's domain with the Cartan and sign symmetries.

#include <utility>

#include "metaplectic/blockform.hpp"
#include "metaplectic/cocycle.hpp"
#include "metaplectic/exactnum.hpp"
#include "metaplectic/sl3group.hpp"

namespace metaplectic {

inline Sign split_block(const BlockParams& bp) {
  Sign s = kronecker_sign(bp.c1, bp.d1) * kronecker_sign(bp.c2, bp.d2) *
           kronecker_sign(bp.c3, bp.d3);

  const bool c1 = sgn(bp.c1) != 0, c2 = sgn(bp.c2) != 0, c3 = sgn(bp.c3) != 0;
  const Int x = bp.c1 * bp.c3 - bp.d1 * bp.c2 * bp.a3;
  Sign non_arith;
  if (c1 && c2 && !c3) {
    non_arith = hilbert_real(bp.c1, bp.d1);
  } else if (c1 && c2 && c3 && sgn(x) != 0) {
    non_arith = hilbert_real(Int(bp.c1 * bp.c2 * x), Int(bp.c1 * bp.a3)) *
                hilbert_real(bp.a3, Int(bp.c2 * bp.c3));
  } else if (c1 && c2 && c3) {
    non_arith = hilbert_real(Int(bp.c2 * bp.a3), Int(bp.c1 * bp.a3)) *
                hilbert_real(bp.a3, Int(bp.c2 * bp.c3));
  } else if (!c1 && c2 && c3) {
    non_arith = hilbert_real(bp.a3, Int(bp.c2 * bp.c3));
  }
  return s * non_arith;
}

struct SplitContext {
  Int D, D1, D2;
  Sign eps;
};

inline SplitContext split_context(const ScaledPlucker& p) {
  if (sgn(p.A1) == 0 || sgn(p.A2) == 0) {
    throw PreconditionError("split_context needs A1 A2 != 0");
  }
  SplitContext c;
  c.D = gcd(p.A1, p.A2);
  c.D1 = gcd(c.D, p.B1);
  c.D2 = exact_div(c.D, c.D1, "D / D1");
  c.eps = kronecker_sign(Int(-1), Int(-exact_div(p.B1, c.D1, "B1 / D1")));
  return c;
}

inline bool theorem_hypotheses_hold(const ScaledPlucker& p) {
  if (sgn(p.A1) <= 0 || sgn(p.A2) == 0) return false;
  return is_odd(exact_div(p.A2, gcd(p.A1, p.A2), "A2 / (A1, A2)"));
}

inline Sign split_theorem(const ScaledPlucker& p) {
  require_valid(p);
  if (!theorem_hypotheses_hold(p)) {
    throw HypothesisError(
        "split_theorem needs A1 > 0, A2 != 0 and A2/(A1,A2) odd; got " +
        to_string(p));
  }
  const SplitContext c = split_context(p);
  const Int a1 = exact_div(p.A1, c.D, "A1/D");
  const Int a2 = exact_div(p.A2, c.D, "A2/D");
  const Int b1 = exact_div(p.B1, c.D1, "B1/D1");
  const Int b2x4 = exact_div(4 * p.B2, c.D2, "4 B2/D2");
  const Int a2_abs = abs(a2);

  return kronecker_sign(Int(-c.eps.value()), Int(-p.A1 * p.A2)) *
         kronecker_sign(a1, a2) * kronecker_sign(b1, a1) *
         kronecker_sign(b2x4, a2_abs) * kronecker_sign(c.D1, p.C1) *
         kronecker_sign(c.D2, p.C2);
}

// Splitting on the five cells other than the big cell, from primed
// coordinates.
inline Sign split_cell(const Plucker<Int>& q) {
  switch (cell_of(q)) {
    case Cell::B:
      return Sign::plus();
    case Cell::Bw1B:
      return kronecker_sign(q.B2, Int(-q.C2));
    case Cell::Bw2B:
      return kronecker_sign(Int(-q.B1), Int(-q.C1));
    case Cell::Bw1w2B:
      return kronecker_sign(exact_div(q.A2, q.B1, "A2/B1"), Int(-q.C2)) *
             kronecker_sign(Int(-q.B1), Int(-q.C1));
    case Cell::Bw2w1B:
      return hilbert_real(Int(-q.A1), q.B2) *
             kronecker_sign(Int(-exact_div(q.A1, q.B2, "A1/B2")), Int(-q.C1)) *
             kronecker_sign(q.B2, Int(-q.C2));
    case Cell::BwlB:
      break;
  }
  throw PreconditionError("split_cell: big-cell coordinates");
}

struct Reduction {
  ScaledPlucker reduced;
  Sign correction;
};

// Removes an odd common factor D = D1 D2 of A1 and A2:
// s(gamma) = s(T gamma T^{-1}) (D1/C1)(D2/C2).
inline Reduction split_reduction(const ScaledPlucker& p, const Int& d1,
                                 const Int& d2) {
  require_valid(p);
  if (sgn(p.A1) == 0 || sgn(p.A2) == 0) {
    throw HypothesisError("split_reduction needs A1 A2 != 0");
  }
  if (sgn(d1) <= 0 || sgn(d2) <= 0) {
    throw HypothesisError("split_reduction needs D1, D2 > 0");
  }
  const Int d = d1 * d2;
  if (!is_odd(d)) {
    throw HypothesisError("split_reduction: D = " + d.get_str() +
                          " is even; only odd factors can be removed");
  }
  if (!divides(d, gcd(p.A1, p.A2))) {
    throw HypothesisError("split_reduction: D does not divide (A1, A2)");
  }
  if (gcd(d, p.B1) != d1) {
    throw HypothesisError("split_reduction: D1 != (D, B1)");
  }
  if (!divides(d2, p.B2)) {
    throw HypothesisError("split_reduction: D2 does not divide B2");
  }
  return {sym_scale(p, d1, d2),
          kronecker_sign(d1, p.C1) * kronecker_sign(d2, p.C2)};
}

// s from the coordinates of any Gamma_1(4) coset.
inline Sign split_coords(ScaledPlucker p) {
  require_valid(p);
  const Plucker<Int> q = p.primed();
  if (cell_of(q) != Cell::BwlB) return split_cell(q);

  Sign correction;
  if (val2(p.A2).exponent > val2(p.A1).exponent) {
    // s(phi(gamma)) = (-A1, -A2) s(gamma)
    correction *= hilbert_real(Int(-p.A1), Int(-p.A2));
    p = sym_cartan(p);
  }
  if (sgn(p.A1) < 0) {
    // s(S3 gamma S3) = s(gamma) on the big cell
    p = sym_s3(p);
  }

  const Int odd = odd_part(gcd(p.A1, p.A2));
  if (odd != 1) {
    const Int d1 = gcd(odd, p.B1);
    const Int d2 = exact_div(odd, d1, "odd D / D1");
    if (divides(d2, p.B2)) {
      const Reduction r = split_reduction(p, d1, d2);
      correction *= r.correction;
      p = r.reduced;
    }
  }
  return correction * split_theorem(p);
}

inline Sign split(const Mat3& gamma) {
  return split_coords(scaled_plucker(gamma));
}

// gamma -> (gamma, s(gamma)).
inline MetaElt lift(const Mat3& gamma) {
  return {to_rational(gamma), split(gamma)};
}

// The reference value: block formula on the canonical factorization.
inline Sign split_by_blocks(const Mat3& gamma) {
  return split_block(block_factor_any(scaled_plucker(gamma)));
}

}  // namespace metaplectic
