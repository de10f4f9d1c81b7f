#pragma once

// Exact SL(3) algebra over Z and Q: matrices, the Gamma_1(4) / Gamma_infty
// membership tests, Pluecker coordinates of N\SL(3), Bruhat cells and the
// Bruhat decomposition with fixed signed Weyl representatives.

#include <array>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "metaplectic/errors.hpp"
#include "metaplectic/exactnum.hpp"

namespace metaplectic {

template <class T>
class Matrix3 {
 public:
  using value_type = T;

  Matrix3() : m_{} {
    for (auto& row : m_) row.fill(T(0));
  }

  Matrix3(std::initializer_list<std::initializer_list<T>> rows) : Matrix3() {
    if (rows.size() != 3) throw DomainError("Matrix3 needs exactly 3 rows");
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != 3) throw DomainError("Matrix3 rows need 3 entries");
      std::size_t j = 0;
      for (const auto& x : row) m_[i][j++] = x;
      ++i;
    }
  }

  static Matrix3 identity() {
    Matrix3 r;
    for (int i = 0; i < 3; ++i) r(i, i) = T(1);
    return r;
  }

  static Matrix3 diagonal(const T& a, const T& b, const T& c) {
    Matrix3 r;
    r(0, 0) = a;
    r(1, 1) = b;
    r(2, 2) = c;
    return r;
  }

  T& operator()(int i, int j) { return m_[i][j]; }
  const T& operator()(int i, int j) const { return m_[i][j]; }

  T det() const {
    const auto& m = m_;
    T r = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
    r -= m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]);
    r += m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return r;
  }

  bool is_diagonal() const {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j && sgn(m_[i][j]) != 0) return false;
    return true;
  }

  bool is_upper_unitriangular() const {
    for (int i = 0; i < 3; ++i) {
      if (m_[i][i] != 1) return false;
      for (int j = 0; j < i; ++j)
        if (sgn(m_[i][j]) != 0) return false;
    }
    return true;
  }

  friend Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
    Matrix3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        T s = a(i, 0) * b(0, j);
        s += a(i, 1) * b(1, j);
        s += a(i, 2) * b(2, j);
        r(i, j) = s;
      }
    return r;
  }

  friend bool operator==(const Matrix3& a, const Matrix3& b) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (a(i, j) != b(i, j)) return false;
    return true;
  }

 private:
  std::array<std::array<T, 3>, 3> m_;
};

using Mat3 = Matrix3<Int>;
using Mat3Q = Matrix3<Rat>;

template <class T>
Matrix3<T> mul(const Matrix3<T>& a, const Matrix3<T>& b) {
  return a * b;
}

template <class T>
Matrix3<T> transpose(const Matrix3<T>& g) {
  Matrix3<T> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = g(j, i);
  return r;
}

// Adjugate; equals the inverse when det = 1.
template <class T>
Matrix3<T> adjugate(const Matrix3<T>& g) {
  Matrix3<T> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      r(i, j) = g(r0, c0) * g(r1, c1) - g(r0, c1) * g(r1, c0);
    }
  return r;
}

inline Mat3Q inv(const Mat3Q& g) {
  Rat d = g.det();
  if (sgn(d) == 0) throw DomainError("inverse of a singular matrix");
  Mat3Q r = adjugate(g);
  if (d != 1) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) /= d;
  }
  return r;
}

inline Mat3 inv(const Mat3& g) {
  const Int d = g.det();
  if (d != 1 && d != -1) {
    throw PreconditionError("integer inverse needs det = +-1");
  }
  Mat3 r = adjugate(g);
  if (d == -1) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = -r(i, j);
  }
  return r;
}

template <class T>
Matrix3<T> minus_transpose_inv(const Matrix3<T>& g) {
  return transpose(inv(g));
}

inline Mat3Q to_rational(const Mat3& g) {
  Mat3Q r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = Rat(g(i, j));
  return r;
}

inline std::optional<Mat3> to_integer(const Mat3Q& g) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (g(i, j).get_den() != 1) return std::nullopt;
      r(i, j) = g(i, j).get_num();
    }
  return r;
}

// n(x, y, z) = [[1, x, z], [0, 1, y], [0, 0, 1]].
template <class T>
Matrix3<T> unipotent(const T& x, const T& y, const T& z) {
  Matrix3<T> r = Matrix3<T>::identity();
  r(0, 1) = x;
  r(1, 2) = y;
  r(0, 2) = z;
  return r;
}

// ---------------------------------------------------------------------------
// Subgroups.

inline bool in_gamma_inf(const Mat3& g) { return g.is_upper_unitriangular(); }

// Describes the first congruence of Gamma_1(4) that g violates, if any.
inline std::optional<std::string> gamma14_violation(const Mat3& g) {
  if (g.det() != 1) {
    return "determinant is " + g.det().get_str() + ", not 1";
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j <= i; ++j) {
      const int want = (i == j) ? 1 : 0;
      if (mod_positive(g(i, j), Int(4)) != want) {
        return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
               ") = " + g(i, j).get_str() + " is not congruent to " +
               std::to_string(want) + " mod 4";
      }
    }
  }
  return std::nullopt;
}

inline bool in_gamma14(const Mat3& g) { return !gamma14_violation(g); }

inline void require_gamma14(const Mat3& g) {
  if (auto why = gamma14_violation(g)) {
    throw MembershipError("matrix is not in Gamma_1(4): " + *why);
  }
}

// ---------------------------------------------------------------------------
// Pluecker coordinates.

// Primed coordinates (A1', B1', C1', A2', B2', C2') of the coset N g.
template <class T>
struct Plucker {
  T A1, B1, C1, A2, B2, C2;

  friend bool operator==(const Plucker&, const Plucker&) = default;
};

template <class T>
Plucker<T> plucker(const Matrix3<T>& m) {
  const T& d = m(1, 0);
  const T& e = m(1, 1);
  const T& f = m(1, 2);
  const T& g = m(2, 0);
  const T& h = m(2, 1);
  const T& i = m(2, 2);
  Plucker<T> p;
  p.A1 = -g;
  p.B1 = -h;
  p.C1 = -i;
  p.A2 = e * g - d * h;
  p.B2 = d * i - f * g;
  p.C2 = f * h - e * i;
  return p;
}

template <class T>
bool plucker_relation_holds(const Plucker<T>& p) {
  T s = p.A1 * p.C2 + p.B1 * p.B2 + p.C1 * p.A2;
  return sgn(s) == 0;
}

// Coordinates of a Gamma_1(4) coset divided by 4 where the congruences allow:
// primed = (4 A1, 4 B1, C1, 4 A2, 4 B2, C2).
struct ScaledPlucker {
  Int A1, B1, C1, A2, B2, C2;

  Plucker<Int> primed() const {
    return {4 * A1, 4 * B1, C1, 4 * A2, 4 * B2, C2};
  }

  friend bool operator==(const ScaledPlucker&, const ScaledPlucker&) = default;
  friend auto operator<=>(const ScaledPlucker& a, const ScaledPlucker& b) {
    auto key = [](const ScaledPlucker& p) {
      return std::array<const Int*, 6>{&p.A1, &p.B1, &p.C1,
                                       &p.A2, &p.B2, &p.C2};
    };
    auto ka = key(a), kb = key(b);
    for (int i = 0; i < 6; ++i) {
      int c = cmp(*ka[i], *kb[i]);
      if (c != 0) return c <=> 0;
    }
    return 0 <=> 0;
  }
};

inline std::string to_string(const ScaledPlucker& p) {
  return "(" + p.A1.get_str() + "," + p.B1.get_str() + "," + p.C1.get_str() +
         "," + p.A2.get_str() + "," + p.B2.get_str() + "," + p.C2.get_str() +
         ")";
}

template <class T>
std::string to_string(const Plucker<T>& p) {
  return "(" + p.A1.get_str() + "," + p.B1.get_str() + "," + p.C1.get_str() +
         "," + p.A2.get_str() + "," + p.B2.get_str() + "," + p.C2.get_str() +
         ")";
}

// Reason the sextuple is not the coordinate vector of a coset of
// Gamma_infty \ Gamma_1(4), if it is not.
inline std::optional<std::string> scaled_plucker_violation(
    const ScaledPlucker& p) {
  Int rel = p.A1 * p.C2 + 4 * p.B1 * p.B2 + p.C1 * p.A2;
  if (sgn(rel) != 0) return "quadratic relation fails: " + to_string(p);
  if (gcd(p.A1, p.B1, p.C1) != 1) return "(A1,B1,C1) not coprime";
  if (gcd(p.A2, p.B2, p.C2) != 1) return "(A2,B2,C2) not coprime";
  if (mod_positive(p.C1, Int(4)) != 3) return "C1 is not -1 mod 4";
  if (mod_positive(p.C2, Int(4)) != 3) return "C2 is not -1 mod 4";
  return std::nullopt;
}

inline bool is_valid(const ScaledPlucker& p) {
  return !scaled_plucker_violation(p);
}

inline void require_valid(const ScaledPlucker& p) {
  if (auto why = scaled_plucker_violation(p)) {
    throw DomainError("invalid scaled Pluecker coordinates: " + *why);
  }
}

inline ScaledPlucker scaled_from_primed(const Plucker<Int>& q) {
  ScaledPlucker p;
  p.A1 = exact_div(q.A1, Int(4), "A1' by 4");
  p.B1 = exact_div(q.B1, Int(4), "B1' by 4");
  p.C1 = q.C1;
  p.A2 = exact_div(q.A2, Int(4), "A2' by 4");
  p.B2 = exact_div(q.B2, Int(4), "B2' by 4");
  p.C2 = q.C2;
  return p;
}

inline ScaledPlucker scaled_plucker(const Mat3& g) {
  require_gamma14(g);
  return scaled_from_primed(plucker(g));
}

// ---------------------------------------------------------------------------
// Bruhat cells and Weyl representatives.

enum class Cell { B, Bw1B, Bw2B, Bw1w2B, Bw2w1B, BwlB };

inline const char* to_string(Cell c) {
  switch (c) {
    case Cell::B: return "B";
    case Cell::Bw1B: return "Bw1B";
    case Cell::Bw2B: return "Bw2B";
    case Cell::Bw1w2B: return "Bw1w2B";
    case Cell::Bw2w1B: return "Bw2w1B";
    case Cell::BwlB: return "BwlB";
  }
  return "?";
}

// Read off the cell from the vanishing pattern of the A and B coordinates.
template <class T>
Cell cell_of(const Plucker<T>& p) {
  const bool a1 = sgn(p.A1) != 0, a2 = sgn(p.A2) != 0;
  const bool b1 = sgn(p.B1) != 0, b2 = sgn(p.B2) != 0;
  if (a1 && a2) return Cell::BwlB;
  if (a1) return Cell::Bw2w1B;
  if (a2) return Cell::Bw1w2B;
  if (b1 && b2) {
    throw DomainError("coordinates violate the Pluecker relation");
  }
  if (b2) return Cell::Bw1B;
  if (b1) return Cell::Bw2B;
  return Cell::B;
}

struct WeylElt {
  std::vector<int> word;  // simple reflections, left to right
  Mat3 matrix;

  friend bool operator==(const WeylElt&, const WeylElt&) = default;
};

inline const Mat3& weyl_simple(int alpha) {
  static const Mat3 w1{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}};
  static const Mat3 w2{{1, 0, 0}, {0, 0, -1}, {0, 1, 0}};
  if (alpha == 1) return w1;
  if (alpha == 2) return w2;
  throw DomainError("simple reflection index must be 1 or 2");
}

// The six reduced words used throughout; the long element is [1, 2, 1].
inline const std::vector<WeylElt>& weyl_elements() {
  static const std::vector<WeylElt> all = [] {
    const std::vector<std::vector<int>> words = {{}, {1}, {2}, {1, 2}, {2, 1},
                                                 {1, 2, 1}};
    std::vector<WeylElt> out;
    for (const auto& w : words) {
      Mat3 m = Mat3::identity();
      for (int a : w) m = m * weyl_simple(a);
      out.push_back({w, m});
    }
    return out;
  }();
  return all;
}

inline const WeylElt& weyl_element(std::span<const int> word) {
  for (const auto& w : weyl_elements()) {
    if (std::equal(w.word.begin(), w.word.end(), word.begin(), word.end())) {
      return w;
    }
  }
  throw DomainError("not one of the six reduced Weyl words");
}

inline const Mat3& weyl_long() { return weyl_elements().back().matrix; }

struct BruhatDecomposition {
  Mat3Q n;   // upper unitriangular
  Mat3Q t;   // diagonal, det 1
  WeylElt w;
  Mat3Q n2;  // upper unitriangular
};

// g = n * t * w.matrix * n2.
//
// Rows are processed bottom to top; the pivot of each row is its leftmost
// nonzero entry in a column not yet used.  Entries right of a pivot are
// cleared by column operations (right multiplication by N) and entries above
// it by row operations (left multiplication by N), leaving a monomial matrix.
inline BruhatDecomposition bruhat(const Mat3Q& g) {
  if (g.det() != 1) throw PreconditionError("bruhat: det(g) must be 1");
  Mat3Q m = g;
  Mat3Q left_ops = Mat3Q::identity();   // L with L g R = monomial
  Mat3Q right_ops = Mat3Q::identity();  // R
  std::array<bool, 3> used{false, false, false};
  std::array<int, 3> pivot_col{};

  for (int row = 2; row >= 0; --row) {
    int j = -1;
    for (int c = 0; c < 3; ++c) {
      if (!used[c] && sgn(m(row, c)) != 0) {
        j = c;
        break;
      }
    }
    if (j < 0) throw ConsistencyError("bruhat: singular matrix");
    used[j] = true;
    pivot_col[row] = j;
    const Rat p = m(row, j);
    for (int k = j + 1; k < 3; ++k) {
      if (sgn(m(row, k)) == 0) continue;
      const Rat f = m(row, k) / p;
      // column k -= f * column j
      for (int r = 0; r < 3; ++r) {
        m(r, k) -= f * m(r, j);
        right_ops(r, k) -= f * right_ops(r, j);
      }
    }
    for (int i = 0; i < row; ++i) {
      if (sgn(m(i, j)) == 0) continue;
      const Rat f = m(i, j) / p;
      // row i -= f * row `row`
      for (int c = 0; c < 3; ++c) {
        m(i, c) -= f * m(row, c);
        left_ops(i, c) -= f * left_ops(row, c);
      }
    }
  }

  const WeylElt* w = nullptr;
  for (const auto& cand : weyl_elements()) {
    bool ok = true;
    for (int r = 0; r < 3 && ok; ++r) ok = sgn(cand.matrix(r, pivot_col[r])) != 0;
    if (ok) {
      w = &cand;
      break;
    }
  }
  if (!w) throw ConsistencyError("bruhat: no Weyl element for pivot pattern");

  // m = t * w  =>  t = m * w^{-1}
  Mat3Q t = m * inv(to_rational(w->matrix));
  if (!t.is_diagonal()) throw ConsistencyError("bruhat: torus part not diagonal");
  return {inv(left_ops), t, *w, inv(right_ops)};
}

// ---------------------------------------------------------------------------
// Coordinate symmetries and their matrix-level counterparts.

// Coordinates of n M n^{-1} (equivalently of M n^{-1}) for n = n(x, y, z).
inline ScaledPlucker sym_conj_n(const ScaledPlucker& p, const Int& x,
                                const Int& y, const Int& z) {
  ScaledPlucker q;
  q.A1 = p.A1;
  q.B1 = p.B1 - p.A1 * x;
  q.C1 = p.C1 - 4 * p.B1 * y + 4 * p.A1 * (x * y - z);
  q.A2 = p.A2;
  q.B2 = p.B2 + p.A2 * y;
  q.C2 = p.C2 + 4 * p.B2 * x + 4 * p.A2 * z;
  return q;
}

// Conjugation by S3 = t(1, 1, -1).
inline ScaledPlucker sym_s3(const ScaledPlucker& p) {
  return {-p.A1, -p.B1, p.C1, -p.A2, p.B2, p.C2};
}

// Conjugation by S2 = t(1, -1, 1).
inline ScaledPlucker sym_s2(const ScaledPlucker& p) {
  return {p.A1, -p.B1, p.C1, p.A2, -p.B2, p.C2};
}

// The involution M -> w_l M^{-t} w_l^{-1}; swaps the two coordinate triples.
inline ScaledPlucker sym_cartan(const ScaledPlucker& p) {
  return {p.A2, -p.B2, p.C2, p.A1, -p.B1, p.C1};
}

// Conjugation by T = t(1, 1/D2, 1/D) with D = D1 D2.  Requires D | (A1, A2)
// and D1 = (D, B1); the result lies in Gamma_1(4) iff D2 | B2, which is
// required here.
inline ScaledPlucker sym_scale(const ScaledPlucker& p, const Int& d1,
                               const Int& d2) {
  if (sgn(d1) <= 0 || sgn(d2) <= 0) {
    throw PreconditionError("sym_scale: D1 and D2 must be positive");
  }
  const Int d = d1 * d2;
  if (!divides(d, gcd(p.A1, p.A2))) {
    throw PreconditionError("sym_scale: D does not divide (A1, A2)");
  }
  if (gcd(d, p.B1) != d1) {
    throw PreconditionError("sym_scale: D1 is not (D, B1)");
  }
  if (!divides(d2, p.B2)) {
    throw PreconditionError("sym_scale: D2 does not divide B2");
  }
  return {exact_div(p.A1, d, "A1/D"), exact_div(p.B1, d1, "B1/D1"), p.C1,
          exact_div(p.A2, d, "A2/D"), exact_div(p.B2, d2, "B2/D2"), p.C2};
}

template <class T>
Matrix3<T> conjugate(const Matrix3<T>& g, const Matrix3<T>& h) {
  return h * g * inv(h);
}

inline const Mat3& s2_matrix() {
  static const Mat3 s = Mat3::diagonal(1, -1, 1);
  return s;
}

inline const Mat3& s3_matrix() {
  static const Mat3 s = Mat3::diagonal(1, 1, -1);
  return s;
}

template <class T>
Matrix3<T> cartan_involution(const Matrix3<T>& g) {
  Matrix3<T> wl;
  const Mat3& w = weyl_long();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) wl(i, j) = T(w(i, j));
  return wl * minus_transpose_inv(g) * inv(wl);
}

// T g T^{-1} with T = t(1, 1/D2, 1/(D1 D2)); rational in general.
inline Mat3Q scale_conjugate(const Mat3Q& g, const Int& d1, const Int& d2) {
  const Rat d(d1 * d2);
  const std::array<Rat, 3> t{Rat(1), Rat(1) / Rat(d2), Rat(1) / d};
  Mat3Q r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = t[i] * g(i, j) / t[j];
  return r;
}

}  // namespace metaplectic
