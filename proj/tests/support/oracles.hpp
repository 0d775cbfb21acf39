#pragma once

// Independent reference computations used only by tests.

#include <array>

#include "slicereg/stem.hpp"

namespace slicereg::testing {

/// H_C as 8 real coordinates: (re c0, im c0, re c1, im c1, ...).
using Real8 = std::array<Rat, 8>;

inline Real8 to_real8(const CQuat& x) {
  Real8 v;
  for (int n = 0; n < 4; ++n) {
    v[2 * n] = x[n].re();
    v[2 * n + 1] = x[n].im();
  }
  return v;
}

inline CQuat from_real8(const Real8& v) {
  return {GRat(v[0], v[1]), GRat(v[2], v[3]), GRat(v[4], v[5]), GRat(v[6], v[7])};
}

/// Product through the structure constants e_a·e_b = sign·e_c of the units 1, i, j, k,
/// and E·E = −1 for the commuting tensor unit.
inline Real8 real8_mul(const Real8& x, const Real8& y) {
  // kTable[a][b] = {sign, index}
  static const int kSign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static const int kIndex[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  Real8 out;
  for (int a = 0; a < 4; ++a) {
    for (int s = 0; s < 2; ++s) {
      for (int b = 0; b < 4; ++b) {
        for (int t = 0; t < 2; ++t) {
          const Rat coeff = x[2 * a + s] * y[2 * b + t];
          if (coeff.is_zero()) continue;
          int sign = kSign[a][b];
          if (s == 1 && t == 1) sign = -sign;
          out[2 * kIndex[a][b] + ((s + t) % 2)] += sign > 0 ? coeff : -coeff;
        }
      }
    }
  }
  return out;
}

inline CQuat oracle_mul(const CQuat& a, const CQuat& b) {
  return from_real8(real8_mul(to_real8(a), to_real8(b)));
}

/// Vanishing order through Taylor coefficients: the first k with p^(k)(z0) ≠ 0.
template <class S>
unsigned taylor_order(Poly<S> p, const S& z0) {
  unsigned k = 0;
  while (!p.is_zero() && p(z0) == S(0)) {
    p = p.derivative();
    ++k;
  }
  return k;
}

/// Stem value by expanding Σ z0ᵏ a_k term by term with explicit powers.
inline CQuat oracle_eval_stem(const StemPoly& f, const GRat& z0) {
  CQuat out;
  for (std::size_t n = 0; n < f.coeffs().size(); ++n) out += complexify(f.coeffs()[n]) * pow(z0, static_cast<unsigned>(n));
  return out;
}

}  // namespace slicereg::testing
