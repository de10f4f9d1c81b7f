#pragma once

// The standard 2-cocycle on SL(3, R), restricted to rational
// matrices, and multiplication in the double cover SL(3, R) x {+-1}.

#include <array>

#include "metaplectic/exactnum.hpp"
#include "metaplectic/sl3group.hpp"

namespace metaplectic {

struct DeltaData {
  Rat X1, X2, X3;
  Mat3Q Delta;  // diag(X1/X2, X2/X3, X3)
};

// X2 is the first nonzero of (-A2', B2', -C2'), X3 the first nonzero of
// (-A1', -B1', -C1').
inline DeltaData delta(const Mat3Q& g) {
  const Plucker<Rat> p = plucker(g);
  DeltaData d;
  d.X1 = g.det();
  if (sgn(p.A2) != 0) d.X2 = -p.A2;
  else if (sgn(p.B2) != 0) d.X2 = p.B2;
  else if (sgn(p.C2) != 0) d.X2 = -p.C2;
  else throw DomainError("delta: second Pluecker triple vanishes");
  if (sgn(p.A1) != 0) d.X3 = -p.A1;
  else if (sgn(p.B1) != 0) d.X3 = -p.B1;
  else if (sgn(p.C1) != 0) d.X3 = -p.C1;
  else throw DomainError("delta: first Pluecker triple vanishes");
  d.Delta = Mat3Q::diagonal(d.X1 / d.X2, d.X2 / d.X3, d.X3);
  return d;
}

namespace detail {

// Only the signs of torus entries matter to the real Hilbert symbol.
using TorusSigns = std::array<int, 3>;

inline Sign sigma_torus_signs(const TorusSigns& a, const TorusSigns& b) {
  return hilbert_real(a[0], b[1]) * hilbert_real(a[0], b[2]) *
         hilbert_real(a[1], b[2]);
}

inline TorusSigns delta_signs(const Mat3Q& h) {
  const Mat3Q d = delta(h).Delta;
  return {sgn(d(0, 0)), sgn(d(1, 1)), sgn(d(2, 2))};
}

}  // namespace detail

// sigma(t(a1,a2,a3), t(b1,b2,b3)) = (a1,b2)(a1,b3)(a2,b3).
inline Sign sigma_torus(const Mat3Q& t1, const Mat3Q& t2) {
  if (!t1.is_diagonal() || !t2.is_diagonal()) {
    throw DomainError("sigma_torus: arguments must be diagonal");
  }
  detail::TorusSigns a{}, b{};
  for (int i = 0; i < 3; ++i) {
    a[i] = sgn(t1(i, i));
    b[i] = sgn(t2(i, i));
    if (a[i] == 0 || b[i] == 0) {
      throw DomainError("sigma_torus: zero diagonal entry");
    }
  }
  return detail::sigma_torus_signs(a, b);
}

// sigma(g1, g2) via the Bruhat decomposition g1 = n a w_1 ... w_k n':
//
//   sigma(g1, g2) = sigma(a, w_1...w_k n' g2) * prod_i sigma(w_i, w_{i+1}...w_k n' g2)
//
// with sigma(a, h) = sigma(a, Delta(h)) and
// sigma(w, h) = sigma(Delta(w h) Delta(h), -Delta(h)).
inline Sign sigma(const Mat3Q& g1, const Mat3Q& g2) {
  const BruhatDecomposition b = bruhat(g1);
  Mat3Q h = b.n2 * g2;
  detail::TorusSigns dh = detail::delta_signs(h);
  Sign result;
  for (auto it = b.w.word.rbegin(); it != b.w.word.rend(); ++it) {
    const Mat3Q wh = to_rational(weyl_simple(*it)) * h;
    const detail::TorusSigns dwh = detail::delta_signs(wh);
    const detail::TorusSigns prod{dwh[0] * dh[0], dwh[1] * dh[1],
                                  dwh[2] * dh[2]};
    const detail::TorusSigns neg{-dh[0], -dh[1], -dh[2]};
    result *= detail::sigma_torus_signs(prod, neg);
    h = wh;
    dh = dwh;
  }
  const detail::TorusSigns a{sgn(b.t(0, 0)), sgn(b.t(1, 1)), sgn(b.t(2, 2))};
  result *= detail::sigma_torus_signs(a, dh);
  return result;
}

inline Sign sigma(const Mat3& g1, const Mat3& g2) {
  return sigma(to_rational(g1), to_rational(g2));
}

// An element (g, eps) of the double cover.
struct MetaElt {
  Mat3Q g;
  Sign eps;

  friend bool operator==(const MetaElt&, const MetaElt&) = default;
};

inline MetaElt meta_mul(const MetaElt& x, const MetaElt& y) {
  return {x.g * y.g, x.eps * y.eps * sigma(x.g, y.g)};
}

}  // namespace metaplectic
