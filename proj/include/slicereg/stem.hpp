#pragma once

// Polynomial stem functions F(z) = Σ zᵏ·a_k with quaternion coefficients.
//
// The same coefficient list is the slice regular polynomial f(q) = Σ qᵏ·a_k
// (coefficients on the right).  Because z is central in H_C, the star
// product of slice functions is plain coefficient convolution, and it equals
// the pointwise product of the stem functions.
//
// StemPoly has real quaternion coefficients, which is exactly the reality
// condition F(z̄) = conj F(z).  CStemPoly widens the coefficients to H_C for
// derived objects (e.g. after dividing out a divisor with non-real roots);
// its reality is checked, not assumed.

#include <optional>
#include <utility>
#include <vector>

#include "slicereg/algebra.hpp"
#include "slicereg/poly.hpp"

namespace slicereg {

template <class S>
class BasicStem {
 public:
  using Coeff = Quat<S>;

  BasicStem() = default;
  explicit BasicStem(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }
  BasicStem(Coeff constant) : c_{std::move(constant)} { trim(); }  // NOLINT

  /// p0 + p1·i + p2·j + p3·k.
  static BasicStem from_components(const Poly<S>& p0, const Poly<S>& p1, const Poly<S>& p2,
                                   const Poly<S>& p3) {
    const int deg = std::max({p0.degree(), p1.degree(), p2.degree(), p3.degree()});
    std::vector<Coeff> v;
    for (int n = 0; n <= deg; ++n) {
      const auto k = static_cast<std::size_t>(n);
      v.emplace_back(p0.coeff(k), p1.coeff(k), p2.coeff(k), p3.coeff(k));
    }
    return BasicStem(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Coeff>& coeffs() const noexcept { return c_; }
  Coeff coeff(std::size_t n) const { return n < c_.size() ? c_[n] : Coeff(); }

  /// Coordinate polynomial along basis element `index` (0 = 1, 1 = i, 2 = j, 3 = k).
  Poly<S> component(std::size_t index) const {
    std::vector<S> v;
    v.reserve(c_.size());
    for (const auto& q : c_) v.push_back(q[index]);
    return Poly<S>(std::move(v));
  }

  BasicStem operator-() const {
    BasicStem out = *this;
    for (auto& q : out.c_) q = -q;
    return out;
  }
  BasicStem& operator+=(const BasicStem& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t n = 0; n < o.c_.size(); ++n) c_[n] += o.c_[n];
    trim();
    return *this;
  }
  BasicStem& operator-=(const BasicStem& o) { return *this += -o; }
  friend BasicStem operator+(BasicStem a, const BasicStem& b) { return a += b; }
  friend BasicStem operator-(BasicStem a, const BasicStem& b) { return a -= b; }

  /// Multiplication by a central (scalar-valued) polynomial.
  friend BasicStem operator*(const Poly<S>& p, const BasicStem& f) {
    if (p.is_zero() || f.is_zero()) return {};
    std::vector<Coeff> out(p.coeffs().size() + f.c_.size() - 1);
    for (std::size_t m = 0; m < p.coeffs().size(); ++m) {
      for (std::size_t n = 0; n < f.c_.size(); ++n) out[m + n] += f.c_[n] * p.coeffs()[m];
    }
    return BasicStem(std::move(out));
  }

  friend bool operator==(const BasicStem&, const BasicStem&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Coeff> c_;
};

using StemPoly = BasicStem<Rat>;
using CStemPoly = BasicStem<GRat>;

CStemPoly complexify(const StemPoly& f);
/// True when every coefficient lies in H (no E-parts).
bool is_real(const CStemPoly& f);
StemPoly real_part(const CStemPoly& f);

/// Coefficient convolution c_n = Σ a_k·b_{n−k}.
template <class S>
BasicStem<S> star(const BasicStem<S>& f, const BasicStem<S>& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<Quat<S>> out(f.coeffs().size() + g.coeffs().size() - 1);
  for (std::size_t m = 0; m < f.coeffs().size(); ++m) {
    for (std::size_t n = 0; n < g.coeffs().size(); ++n) out[m + n] += f.coeffs()[m] * g.coeffs()[n];
  }
  return BasicStem<S>(std::move(out));
}

/// F^c: coefficientwise quaternionic conjugation.
template <class S>
BasicStem<S> stem_conj(const BasicStem<S>& f) {
  std::vector<Quat<S>> out;
  out.reserve(f.coeffs().size());
  for (const auto& q : f.coeffs()) out.push_back(q.conj());
  return BasicStem<S>(std::move(out));
}

/// Tr(F) = F + F^c, a central polynomial.
template <class S>
Poly<S> stem_trace(const BasicStem<S>& f) {
  const Poly<S> p = f.component(0);
  return p + p;
}

/// Nm(F) = F★F^c = F′² + B(F″, F″) as a central polynomial.
template <class S>
Poly<S> stem_norm(const BasicStem<S>& f) {
  Poly<S> out;
  for (std::size_t n = 0; n < 4; ++n) {
    const Poly<S> p = f.component(n);
    out += p * p;
  }
  return out;
}

/// F̂ = ½(F − F^c), the trace-free part.
template <class S>
BasicStem<S> stem_hat(const BasicStem<S>& f) {
  return BasicStem<S>::from_components(Poly<S>(), f.component(1), f.component(2), f.component(3));
}

/// F = (F′, F″) with F′ central and F″ = w1·i + w2·j + w3·k.
template <class S>
struct SplitStem {
  Poly<S> center;
  Poly<S> w1;
  Poly<S> w2;
  Poly<S> w3;

  BasicStem<S> assemble() const { return BasicStem<S>::from_components(center, w1, w2, w3); }
};

template <class S>
SplitStem<S> split_stem(const BasicStem<S>& f) {
  return {f.component(0), f.component(1), f.component(2), f.component(3)};
}

/// F″ ≡ 0.
template <class S>
bool is_slice_preserving(const BasicStem<S>& f) {
  for (const auto& q : f.coeffs()) {
    if (!q.is_scalar()) return false;
  }
  return true;
}

/// Effective divisor on C given by a monic polynomial (the constant 1 is the empty divisor).
class Divisor {
 public:
  /// Normalizes to monic.  Throws ZeroPolynomialError for 0.
  explicit Divisor(const GRatPoly& p);
  static Divisor empty() { return Divisor(GRatPoly(GRat(1))); }

  const GRatPoly& gcd_poly() const noexcept { return p_; }
  bool is_empty() const { return p_.degree() == 0; }
  /// Total multiplicity (sum over all points).
  int degree() const { return p_.degree(); }
  unsigned multiplicity(const GRat& at) const { return vanishing_order(p_, at); }

  friend bool operator==(const Divisor&, const Divisor&) = default;

 private:
  GRatPoly p_;
};

/// Central divisor: vanishing locus with multiplicities of F″, as monic gcd(w1, w2, w3).
/// Throws SlicePreservingError.
Divisor cdiv(const StemPoly& f);
Divisor cdiv(const CStemPoly& f);

/// cdiv, or nullopt when F is slice preserving.
std::optional<Divisor> cdiv_if_defined(const StemPoly& f);

struct CentralFactorization {
  GRatPoly lambda;     // gcd polynomial of cdiv(F)
  CStemPoly reduced;   // F = lambda·reduced, cdiv(reduced) empty
};

/// Factors the central divisor out of a trace-free stem.
/// Throws ZeroFunctionError, SlicePreservingError, and Error when Tr(F) ≠ 0.
CentralFactorization remove_central_divisor(const StemPoly& f);

/// Stem function value F(z0) ∈ H_C.
CQuat eval_stem(const StemPoly& f, const GRat& z0);
CQuat eval_stem(const CStemPoly& f, const GRat& z0);

/// Slice function value Σ qᵏ·a_k by direct quaternion powers.
Quaternion eval_slice(const StemPoly& f, const Quaternion& q);

/// Slice function value through the stem: writing q = x + v with v = Im q and
/// s = Nm(v), F(x + E·√s) = P + E·√s·Q̃ has P, Q̃ ∈ H rational and f(q) = P + v·Q̃.
Quaternion eval_slice_via_stem(const StemPoly& f, const Quaternion& q);

/// Pair of stems for R₃ ≅ H⊕H.
struct R3StemPoly {
  StemPoly first;
  StemPoly second;

  R3StemPoly swap() const { return {second, first}; }
  friend bool operator==(const R3StemPoly&, const R3StemPoly&) = default;
};

template <class T>
using Pair = std::pair<T, T>;

R3StemPoly r3_star(const R3StemPoly& f, const R3StemPoly& g);
R3StemPoly r3_conj(const R3StemPoly& f);
Pair<RatPoly> r3_trace(const R3StemPoly& f);
Pair<RatPoly> r3_norm(const R3StemPoly& f);
/// Per-component central divisor; nullopt marks a slice-preserving component.
Pair<std::optional<Divisor>> r3_cdiv(const R3StemPoly& f);
R3CQuat r3_eval_stem(const R3StemPoly& f, const GRat& z0);
/// Componentwise slice evaluation at (p₁, p₂) ∈ H⊕H.  With require_cone the point must lie in
/// the quadratic cone, otherwise NotInConeError is thrown.
R3Quat r3_eval_slice(const R3StemPoly& f, const R3Quat& at, bool require_cone = false);

}  // namespace slicereg
