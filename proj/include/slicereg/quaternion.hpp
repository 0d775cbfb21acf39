#pragma once

// Quaternions over a commutative scalar ring S.
//
//   Quat<Rat>                  the real quaternions H (rational points)
//   Quat<GRat>                 H_C = H ⊗ C; the scalar E commutes with i, j, k
//   Quat<std::complex<double>> numeric H_C, used by the series module only
//
// Coordinates are over the basis (1, i, j, k) with i² = j² = k² = −1, ij = k.

#include <array>
#include <cstddef>
#include <ostream>
#include <utility>

#include "slicereg/rational.hpp"

namespace slicereg {

template <class S>
class Quat {
 public:
  Quat() : c_{S(0), S(0), S(0), S(0)} {}
  Quat(S scalar) : c_{std::move(scalar), S(0), S(0), S(0)} {}  // NOLINT
  Quat(S a, S b, S c, S d) : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  /// Basis element 1, i, j or k for index 0..3.
  static Quat basis(std::size_t index) {
    Quat q;
    q.c_[index] = S(1);
    return q;
  }

  const S& operator[](std::size_t n) const { return c_[n]; }
  S& operator[](std::size_t n) { return c_[n]; }
  const std::array<S, 4>& coords() const noexcept { return c_; }

  bool is_zero() const {
    return c_[0] == S(0) && c_[1] == S(0) && c_[2] == S(0) && c_[3] == S(0);
  }
  /// True when the i, j, k coordinates vanish, i.e. the value is central.
  bool is_scalar() const { return c_[1] == S(0) && c_[2] == S(0) && c_[3] == S(0); }

  /// Quaternionic conjugation, extended S-linearly.
  Quat conj() const { return {c_[0], -c_[1], -c_[2], -c_[3]}; }
  /// x + x̄ = 2·c0.
  S trace() const { return c_[0] + c_[0]; }
  /// x·x̄ = c0² + c1² + c2² + c3² (squares taken in S, so possibly 0 for x ≠ 0 over GRat).
  S norm() const { return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3]; }
  /// Part in W = span(i, j, k).
  Quat imag() const { return {S(0), c_[1], c_[2], c_[3]}; }

  Quat operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }
  Quat& operator+=(const Quat& o) {
    for (std::size_t n = 0; n < 4; ++n) c_[n] += o.c_[n];
    return *this;
  }
  Quat& operator-=(const Quat& o) {
    for (std::size_t n = 0; n < 4; ++n) c_[n] -= o.c_[n];
    return *this;
  }
  Quat& operator*=(const S& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend Quat operator+(Quat a, const Quat& b) { return a += b; }
  friend Quat operator-(Quat a, const Quat& b) { return a -= b; }
  friend Quat operator*(Quat a, const S& s) { return a *= s; }
  friend Quat operator*(const S& s, Quat a) { return a *= s; }

  friend Quat operator*(const Quat& a, const Quat& b) {
    const auto& x = a.c_;
    const auto& y = b.c_;
    return {x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3],
            x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
            x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1],
            x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0]};
  }

  friend bool operator==(const Quat& a, const Quat& b) { return a.c_ == b.c_; }

 private:
  std::array<S, 4> c_;
};

using Quaternion = Quat<Rat>;
using CQuat = Quat<GRat>;

/// Embeds H into H_C.
inline CQuat complexify(const Quaternion& q) { return {GRat(q[0]), GRat(q[1]), GRat(q[2]), GRat(q[3])}; }

/// True when every coordinate has zero E-part.
inline bool is_real(const CQuat& x) {
  return x[0].is_real() && x[1].is_real() && x[2].is_real() && x[3].is_real();
}

/// Real part of each coordinate; callers check is_real first when it matters.
inline Quaternion real_part(const CQuat& x) { return {x[0].re(), x[1].re(), x[2].re(), x[3].re()}; }

/// Complex conjugation E ↦ −E applied to each coordinate.
inline CQuat complex_conj(const CQuat& x) { return {x[0].conj(), x[1].conj(), x[2].conj(), x[3].conj()}; }

template <class S>
Quat<S> pow(const Quat<S>& base, unsigned exponent) {
  Quat<S> result(S(1));
  for (unsigned n = 0; n < exponent; ++n) result = result * base;
  return result;
}

template <class S>
std::ostream& operator<<(std::ostream& os, const Quat<S>& q) {
  return os << '(' << q[0] << ", " << q[1] << ", " << q[2] << ", " << q[3] << ')';
}

}  // namespace slicereg
