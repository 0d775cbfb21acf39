#pragma once

// Truncated stem power series and floating-point evaluation.
//
// Coefficients are exact rationals; only evaluation uses doubles.  Every
// series carries a majorant |a_k|₁ ≤ scale·rateᵏ/k! valid for all k (|·|₁ is
// the sum of coordinate moduli, submultiplicative on H_C), so evaluation can
// report a rigorous bound on the discarded tail.

#include <complex>
#include <cstddef>
#include <vector>

#include "slicereg/stem.hpp"

namespace slicereg {

using ComplexF = std::complex<double>;
using CQuatF = Quat<ComplexF>;

inline constexpr std::size_t kDefaultSeriesOrder = 40;
inline constexpr double kDefaultTolerance = 1e-9;

/// Exponential-type coefficient bound |a_k|₁ ≤ scale·rateᵏ/k!.
struct TailMajorant {
  double scale = 0.0;
  double rate = 0.0;
};

class TruncSeries {
 public:
  /// Zero series modulo z^order.  order ≥ 1.
  explicit TruncSeries(std::size_t order);
  TruncSeries(std::vector<Quaternion> coeffs, TailMajorant majorant);

  /// Truncates f modulo z^order; the majorant is derived from f's coefficients.
  static TruncSeries from_stem(const StemPoly& f, std::size_t order);
  /// Constant series c.
  static TruncSeries constant(const Quaternion& c, std::size_t order);

  std::size_t order() const noexcept { return c_.size(); }
  const std::vector<Quaternion>& coeffs() const noexcept { return c_; }
  const Quaternion& coeff(std::size_t n) const { return c_.at(n); }
  const TailMajorant& majorant() const noexcept { return tail_; }

  /// Σ_{k<order} zᵏ a_k as a polynomial.
  StemPoly to_stem() const { return StemPoly(c_); }

  TruncSeries operator-() const;
  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  /// Right multiplication by a constant quaternion: Σ zᵏ (a_k·u).
  TruncSeries times(const Quaternion& u) const;

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

 private:
  std::vector<Quaternion> c_;
  TailMajorant tail_;
};

/// Star product modulo z^min(order).
TruncSeries star(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_conj(const TruncSeries& s);
/// Tr and Nm modulo z^order, as central polynomials of degree < order.
RatPoly series_trace(const TruncSeries& s);
RatPoly series_norm(const TruncSeries& s);

enum class SeriesKind { Cos, Sin, Exp, CosHalf, SinHalf };

/// Exact Taylor coefficients of cos z, sin z, e^z, cos(z/2), sin(z/2) (real-valued) modulo z^order.
TruncSeries build_series(SeriesKind kind, std::size_t order);

/// cos(z)·i + sin(z)·j.
TruncSeries rotating_unit_series(std::size_t order);
/// cos(z/2) − k·sin(z/2); conjugating i by it gives cos(z)·i + sin(z)·j.
TruncSeries half_angle_rotor_series(std::size_t order);

double l1_norm(const CQuatF& q);
CQuatF to_float(const CQuat& q);

struct NumericValue {
  CQuatF value;
  double tail_bound;  // bound on |true value − value|₁ from the discarded terms
};

/// Horner evaluation of Σ qᵏ a_k at a (possibly non-central) point q.
NumericValue eval_numeric(const TruncSeries& s, const CQuatF& q);
/// Stem evaluation at a central point z.
NumericValue eval_numeric(const TruncSeries& s, ComplexF z);

/// Published sample grid for identity checks (5 points, |z| ≤ 1.5).
std::vector<ComplexF> default_sample_grid();

struct ConjugationSample {
  ComplexF z;
  double identity_error = 0.0;  // |Hc⁻¹·F·Hc − G|₁
  double trace_error = 0.0;     // |Tr F − Tr G|
  double norm_error = 0.0;      // |Nm F − Nm G|
  double tail_bound = 0.0;      // combined truncation bound of the three evaluations
  bool pass = false;
};

struct ConjugationReport {
  double tolerance = 0.0;
  std::vector<ConjugationSample> samples;
  bool all_pass() const;
};

/// Checks Hc(z)⁻¹·F(z)·Hc(z) = G(z) and matching Tr, Nm at each sample within tol.  A sample
/// passes when every error and the truncation bound are ≤ tol.
/// Throws NearSingularSample when |Nm(Hc(z))| < tol.
ConjugationReport check_conjugation_identity(const TruncSeries& f, const TruncSeries& g,
                                             const TruncSeries& conjugator,
                                             const std::vector<ComplexF>& samples, double tol);

struct NumericRoot {
  ComplexF value;
  unsigned multiplicity;
};

/// Roots of p with exact multiplicities (squarefree decomposition) and numeric locations
/// (Durand–Kerner on each squarefree factor).  Display aid only.
std::vector<NumericRoot> numeric_roots(const GRatPoly& p);

}  // namespace slicereg
