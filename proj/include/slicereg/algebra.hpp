#pragma once

// Trace, norm, inversion and inner automorphisms of H and H_C, the
// bilinear form on W⊗C, and the Clifford algebra R₃ in H⊕H coordinates.
//
// Automorphisms of H_C are represented implicitly by invertible elements
// alpha acting as x ↦ alpha·x·alpha⁻¹; SO3Matrix exists for inspection.
//
// R₃ change of basis, for reference only (never used at runtime):
//   ω± = ½(e₁e₂e₃ ± 1),  R₃ = ω₊H ⊕ ω₋H,  H ≅ subalgebra generated by e₁, e₂.

#include <array>
#include <utility>

#include "slicereg/quaternion.hpp"

namespace slicereg {

template <class S>
S trace(const Quat<S>& x) {
  return x.trace();
}

template <class S>
S norm(const Quat<S>& x) {
  return x.norm();
}

template <class S>
Quat<S> conj(const Quat<S>& x) {
  return x.conj();
}

/// x⁻¹ = x̄ / Nm(x).  Throws ZeroInverseError for 0, ZeroDivisorError when Nm(x) = 0.
template <class S>
Quat<S> inverse(const Quat<S>& x) {
  if (x.is_zero()) throw ZeroInverseError("cannot invert 0");
  const S n = x.norm();
  if (n == S(0)) throw ZeroDivisorError("element has zero norm and is not invertible");
  return x.conj() * (S(1) / n);
}

template <class S>
struct CenterSplit {
  S center;       // ½Tr(x)
  Quat<S> wpart;  // component in W⊗C
};

/// x = center·1 + wpart with wpart ∈ span(i, j, k).
template <class S>
CenterSplit<S> split(const Quat<S>& x) {
  return {x[0], x.imag()};
}

/// C-bilinear extension of the euclidean product on W.  Throws NotInWError.
template <class S>
S bform(const Quat<S>& v, const Quat<S>& w) {
  if (!(v[0] == S(0)) || !(w[0] == S(0))) throw NotInWError("bilinear form needs pure-imaginary arguments");
  return v[1] * w[1] + v[2] * w[2] + v[3] * w[3];
}

/// Inner automorphism x ↦ alpha·x·alpha⁻¹.
template <class S>
Quat<S> conj_by_unit(const Quat<S>& alpha, const Quat<S>& x) {
  if (alpha.norm() == S(0)) throw ZeroDivisorError("conjugating element has zero norm");
  return alpha * x * inverse(alpha);
}

/// Matrix of an automorphism on W⊗C in the basis (i, j, k); column n is the image of basis n+1.
struct SO3Matrix {
  std::array<std::array<GRat, 3>, 3> m;

  const GRat& operator()(int r, int c) const { return m[r][c]; }
  GRat determinant() const;
  bool is_orthogonal() const;  // MᵀM = I
  static SO3Matrix identity();
  friend bool operator==(const SO3Matrix&, const SO3Matrix&) = default;
};

SO3Matrix aut_to_matrix(const CQuat& alpha);

/// Element of R₃ ≅ H⊕H (or R₃⊗C ≅ H_C⊕H_C); every operation is componentwise.
template <class S>
struct R3Elem {
  Quat<S> first;
  Quat<S> second;

  static R3Elem scalar(const S& s) { return {Quat<S>(s), Quat<S>(s)}; }

  R3Elem conj() const { return {first.conj(), second.conj()}; }
  std::pair<S, S> trace() const { return {first.trace(), second.trace()}; }
  std::pair<S, S> norm() const { return {first.norm(), second.norm()}; }
  /// The order-swapping automorphism (x₁, x₂) ↦ (x₂, x₁).
  R3Elem swap() const { return {second, first}; }

  friend R3Elem operator+(const R3Elem& a, const R3Elem& b) { return {a.first + b.first, a.second + b.second}; }
  friend R3Elem operator-(const R3Elem& a, const R3Elem& b) { return {a.first - b.first, a.second - b.second}; }
  friend R3Elem operator*(const R3Elem& a, const R3Elem& b) { return {a.first * b.first, a.second * b.second}; }
  friend bool operator==(const R3Elem&, const R3Elem&) = default;
};

using R3Quat = R3Elem<Rat>;
using R3CQuat = R3Elem<GRat>;

/// Quadratic cone of R₃: Tr and Nm are real, i.e. both components share trace and norm.
bool in_quadratic_cone(const R3Quat& x);

}  // namespace slicereg
