#pragma once

// Block parameters: gamma = n * E1(a1 b1; c1 d1) * E2(a2 b2; c2 d2) *
// E3(a3 b3; c3 d3), where E1, E2, E3 embed SL(2) into the (1,2), (1,3) and
// (2,3) coordinate planes and each block lies in Gamma_1(4) of SL(2).

#include <string>

#include "metaplectic/exactnum.hpp"
#include "metaplectic/sl3group.hpp"

namespace metaplectic {

struct BlockParams {
  Int a1, b1, c1, d1;
  Int a2, b2, c2, d2;
  Int a3, b3, c3, d3;

  friend bool operator==(const BlockParams&, const BlockParams&) = default;
};

inline std::string to_string(const BlockParams& bp) {
  auto blk = [](const Int& a, const Int& b, const Int& c, const Int& d) {
    return "((" + a.get_str() + "," + b.get_str() + "),(" + c.get_str() + "," +
           d.get_str() + "))";
  };
  return "[" + blk(bp.a1, bp.b1, bp.c1, bp.d1) + "," +
         blk(bp.a2, bp.b2, bp.c2, bp.d2) + "," +
         blk(bp.a3, bp.b3, bp.c3, bp.d3) + "]";
}

inline bool block_in_gamma14(const Int& a, const Int& b, const Int& c,
                             const Int& d) {
  return a * d - b * c == 1 && mod_positive(c, Int(4)) == 0 &&
         mod_positive(d, Int(4)) == 1 && mod_positive(a, Int(4)) == 1;
}

inline bool is_valid(const BlockParams& bp) {
  return block_in_gamma14(bp.a1, bp.b1, bp.c1, bp.d1) &&
         block_in_gamma14(bp.a2, bp.b2, bp.c2, bp.d2) &&
         block_in_gamma14(bp.a3, bp.b3, bp.c3, bp.d3);
}

inline Mat3 block_to_matrix(const BlockParams& bp) {
  const Mat3 g1{{bp.a1, bp.b1, 0}, {bp.c1, bp.d1, 0}, {0, 0, 1}};
  const Mat3 g2{{bp.a2, 0, bp.b2}, {0, 1, 0}, {bp.c2, 0, bp.d2}};
  const Mat3 g3{{1, 0, 0}, {0, bp.a3, bp.b3}, {0, bp.c3, bp.d3}};
  return g1 * g2 * g3;
}

// Primed Pluecker coordinates read directly off the block parameters.
inline Plucker<Int> block_to_plucker(const BlockParams& bp) {
  Plucker<Int> p;
  p.A1 = -bp.c2;
  p.B1 = -bp.d2 * bp.c3;
  p.C1 = -bp.d2 * bp.d3;
  p.A2 = bp.d1 * bp.c2 * bp.a3 - bp.c1 * bp.c3;
  p.B2 = bp.c1 * bp.d3 - bp.d1 * bp.c2 * bp.b3;
  p.C2 = -bp.d1 * bp.d2;
  return p;
}

namespace detail {

// Completes (c, d) with d = 1 mod 4 and c = 0 mod 4 to a block whose a is the
// smallest positive inverse of d modulo c; c = 0 forces the identity block.
inline void complete_block(Int& a, Int& b, const Int& c, const Int& d) {
  if (sgn(c) == 0) {
    if (d != 1) {
      throw ConsistencyError("block with c = 0 needs d = 1, got d = " +
                             d.get_str());
    }
    a = 1;
    b = 0;
    return;
  }
  a = mod_inverse(d, c);  // |c| >= 4, so this lies in [1, |c|)
  b =exact_div(a * d - 1, c, "b = (a d - 1) / c");
}

}  // namespace detail

// Canonical block parameters of the left Gamma_infty-coset with the given
// coordinates, for any Bruhat cell.
//
// d2 = eps (B1', C1') with eps = (-1 / (B1', C1')), so d2 = 1 mod 4; then
// c2 = -A1', c3 = -B1'/d2, d3 = -C1'/d2, d1 = -C2'/d2.  When c3 != 0, a3 is
// the smallest positive inverse of d3 modulo c3 and c1 = (d1 c2 a3 - A2')/c3
// (automatically 0 mod 4).  When c3 = 0 the third block is the identity and
// c1 = B2'.  The remaining a's are smallest positive inverses, b = (ad-1)/c.
inline BlockParams block_factor_any(const ScaledPlucker& p) {
  require_valid(p);
  const Plucker<Int> q = p.primed();
  BlockParams bp;

  const Int g = gcd(q.B1, q.C1);
  bp.d2 = kronecker(Int(-1), g) * g;
  bp.c2 = -q.A1;
  bp.c3 = exact_div(-q.B1, bp.d2, "c3 = -B1'/d2");
  bp.d3 = exact_div(-q.C1, bp.d2, "d3 = -C1'/d2");
  bp.d1 = exact_div(-q.C2, bp.d2, "d1 = -C2'/d2");

  detail::complete_block(bp.a2, bp.b2, bp.c2, bp.d2);
  if (sgn(bp.c3) != 0) {
    detail::complete_block(bp.a3, bp.b3, bp.c3, bp.d3);
    bp.c1 = exact_div(bp.d1 * bp.c2 * bp.a3 - q.A2, bp.c3,
                      "c1 = (d1 c2 a3 - A2')/c3");
  } else {
    detail::complete_block(bp.a3, bp.b3, bp.c3, bp.d3);
    bp.c1 = q.B2;
    if (q.A2 != bp.d1 * bp.c2) {
      throw ConsistencyError("block_factor: A2' != d1 c2 with c3 = 0");
    }
  }
  detail::complete_block(bp.a1, bp.b1, bp.c1, bp.d1);

  if (!is_valid(bp)) {
    throw ConsistencyError("block_factor produced invalid blocks " +
                           to_string(bp));
  }
  return bp;
}

// The generic construction, defined when A1' != 0.
inline BlockParams block_factor(const ScaledPlucker& p) {
  if (sgn(p.A1) == 0) {
    throw PreconditionError(
        "block_factor needs A1 != 0; use block_factor_any for smaller cells");
  }
  return block_factor_any(p);
}

}  // namespace metaplectic
