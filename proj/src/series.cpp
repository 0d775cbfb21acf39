#include "slicereg/series.hpp"

#include <algorithm>
#include <cmath>

namespace slicereg {

namespace {

double l1(const Quaternion& q) {
  double s = 0.0;
  for (std::size_t n = 0; n < 4; ++n) s += std::abs(q[n].to_double());
  return s;
}

Rat factorial(std::size_t n) {
  Rat out(1);
  for (std::size_t k = 2; k <= n; ++k) out *= Rat(static_cast<long>(k));
  return out;
}

// Σ_{k ≥ order} scale·(rate·r)ᵏ/k!  ≤  scale·(rate·r)^order/order!·exp(rate·r).
double tail_bound(const TailMajorant& m, std::size_t order, double r) {
  const double x = m.rate * r;
  if (m.scale == 0.0 || x == 0.0) return 0.0;
  const double n = static_cast<double>(order);
  return m.scale * std::exp(n * std::log(x) - std::lgamma(n + 1.0) + x);
}

ComplexF to_complex(const GRat& g) { return {g.re().to_double(), g.im().to_double()}; }

}  // namespace

TruncSeries::TruncSeries(std::size_t order) : c_(order) {
  if (order == 0) throw Error("series order must be at least 1");
}

TruncSeries::TruncSeries(std::vector<Quaternion> coeffs, TailMajorant majorant)
    : c_(std::move(coeffs)), tail_(majorant) {
  if (c_.empty()) throw Error("series order must be at least 1");
}

TruncSeries TruncSeries::from_stem(const StemPoly& f, std::size_t order) {
  TruncSeries s(order);
  double scale = 0.0;
  double fact = 1.0;
  for (std::size_t n = 0; n < f.coeffs().size(); ++n) {
    if (n > 0) fact *= static_cast<double>(n);
    scale = std::max(scale, l1(f.coeffs()[n]) * fact);
    if (n < order) s.c_[n] = f.coeffs()[n];
  }
  s.tail_ = {scale, 1.0};
  return s;
}

TruncSeries TruncSeries::constant(const Quaternion& c, std::size_t order) {
  TruncSeries s(order);
  s.c_[0] = c;
  s.tail_ = {l1(c), 0.0};
  return s;
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries out = *this;
  for (auto& q : out.c_) q = -q;
  return out;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries out(std::min(a.order(), b.order()));
  for (std::size_t n = 0; n < out.order(); ++n) out.c_[n] = a.c_[n] + b.c_[n];
  out.tail_ = {a.tail_.scale + b.tail_.scale, std::max(a.tail_.rate, b.tail_.rate)};
  return out;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

TruncSeries TruncSeries::times(const Quaternion& u) const {
  TruncSeries out = *this;
  for (auto& q : out.c_) q = q * u;
  out.tail_.scale *= l1(u);
  return out;
}

TruncSeries star(const TruncSeries& a, const TruncSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<Quaternion> out(order);
  for (std::size_t m = 0; m < order; ++m) {
    for (std::size_t n = 0; m + n < order; ++n) out[m + n] += a.coeff(m) * b.coeff(n);
  }
  // Σ_j ρ₁ʲρ₂^{k−j}/(j!(k−j)!) = (ρ₁+ρ₂)ᵏ/k!
  return TruncSeries(std::move(out), {a.majorant().scale * b.majorant().scale,
                                      a.majorant().rate + b.majorant().rate});
}

TruncSeries series_conj(const TruncSeries& s) {
  std::vector<Quaternion> out;
  out.reserve(s.order());
  for (const auto& q : s.coeffs()) out.push_back(q.conj());
  return TruncSeries(std::move(out), s.majorant());
}

RatPoly series_trace(const TruncSeries& s) { return stem_trace(s.to_stem()); }

RatPoly series_norm(const TruncSeries& s) {
  const TruncSeries n = star(s, series_conj(s));
  return n.to_stem().component(0);
}

TruncSeries build_series(SeriesKind kind, std::size_t order) {
  std::vector<Quaternion> c(order);
  double rate = 1.0;
  for (std::size_t n = 0; n < order; ++n) {
    const Rat inv_fact = Rat(1) / factorial(n);
    const bool even = n % 2 == 0;
    const Rat sign = ((n / 2) % 2 == 0) ? Rat(1) : Rat(-1);
    switch (kind) {
      case SeriesKind::Cos:
        if (even) c[n] = Quaternion(sign * inv_fact);
        break;
      case SeriesKind::Sin:
        if (!even) c[n] = Quaternion(sign * inv_fact);
        break;
      case SeriesKind::Exp:
        c[n] = Quaternion(inv_fact);
        break;
      case SeriesKind::CosHalf:
        if (even) c[n] = Quaternion(sign * inv_fact / pow(Rat(2), static_cast<unsigned>(n)));
        break;
      case SeriesKind::SinHalf:
        if (!even) c[n] = Quaternion(sign * inv_fact / pow(Rat(2), static_cast<unsigned>(n)));
        break;
    }
  }
  if (kind == SeriesKind::CosHalf || kind == SeriesKind::SinHalf) rate = 0.5;
  return TruncSeries(std::move(c), {1.0, rate});
}

TruncSeries rotating_unit_series(std::size_t order) {
  return build_series(SeriesKind::Cos, order).times(Quaternion::basis(1)) +
         build_series(SeriesKind::Sin, order).times(Quaternion::basis(2));
}

TruncSeries half_angle_rotor_series(std::size_t order) {
  return build_series(SeriesKind::CosHalf, order) -
         build_series(SeriesKind::SinHalf, order).times(Quaternion::basis(3));
}

double l1_norm(const CQuatF& q) { return std::abs(q[0]) + std::abs(q[1]) + std::abs(q[2]) + std::abs(q[3]); }

CQuatF to_float(const CQuat& q) { return {to_complex(q[0]), to_complex(q[1]), to_complex(q[2]), to_complex(q[3])}; }

NumericValue eval_numeric(const TruncSeries& s, const CQuatF& q) {
  CQuatF acc;
  for (auto it = s.coeffs().rbegin(); it != s.coeffs().rend(); ++it) {
    const Quaternion& a = *it;
    acc = q * acc + CQuatF(a[0].to_double(), a[1].to_double(), a[2].to_double(), a[3].to_double());
  }
  return {acc, tail_bound(s.majorant(), s.order(), l1_norm(q))};
}

NumericValue eval_numeric(const TruncSeries& s, ComplexF z) { return eval_numeric(s, CQuatF(z)); }

std::vector<ComplexF> default_sample_grid() {
  return {{0.3, 0.0}, {1.0, 0.0}, {-0.7, 0.0}, {0.5, 0.5}, {0.0, -1.2}};
}

bool ConjugationReport::all_pass() const {
  return std::all_of(samples.begin(), samples.end(), [](const ConjugationSample& s) { return s.pass; });
}

ConjugationReport check_conjugation_identity(const TruncSeries& f, const TruncSeries& g,
                                             const TruncSeries& conjugator,
                                             const std::vector<ComplexF>& samples, double tol) {
  ConjugationReport report;
  report.tolerance = tol;
  for (const ComplexF z : samples) {
    const NumericValue fz = eval_numeric(f, z);
    const NumericValue gz = eval_numeric(g, z);
    const NumericValue hz = eval_numeric(conjugator, z);
    const ComplexF nh = hz.value.norm();
    if (std::abs(nh) < tol) {
      throw NearSingularSample("conjugator norm " + std::to_string(std::abs(nh)) + " below tolerance at z = (" +
                               std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")");
    }
    const CQuatF lhs = inverse(hz.value) * fz.value * hz.value;
    ConjugationSample s;
    s.z = z;
    s.identity_error = l1_norm(lhs - gz.value);
    s.trace_error = std::abs(fz.value.trace() - gz.value.trace());
    s.norm_error = std::abs(fz.value.norm() - gz.value.norm());
    s.tail_bound = fz.tail_bound + gz.tail_bound + hz.tail_bound;
    s.pass = s.identity_error <= tol && s.trace_error <= tol && s.norm_error <= tol && s.tail_bound <= tol;
    report.samples.push_back(s);
  }
  return report;
}

namespace {

std::vector<ComplexF> durand_kerner(const std::vector<ComplexF>& monic) {
  const std::size_t n = monic.size() - 1;
  std::vector<ComplexF> roots(n);
  const ComplexF seed(0.4, 0.9);
  ComplexF p(1.0, 0.0);
  for (auto& r : roots) r = (p *= seed);
  auto eval = [&](ComplexF x) {
    ComplexF acc(0.0, 0.0);
    for (auto it = monic.rbegin(); it != monic.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  for (int iter = 0; iter < 1000; ++iter) {
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      ComplexF denom(1.0, 0.0);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) denom *= roots[i] - roots[j];
      }
      const ComplexF step = eval(roots[i]) / denom;
      roots[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-15) break;
  }
  return roots;
}

}  // namespace

std::vector<NumericRoot> numeric_roots(const GRatPoly& p) {
  std::vector<NumericRoot> out;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    std::vector<ComplexF> c;
    for (const auto& x : factor.coeffs()) c.push_back(to_complex(x));
    for (const auto& r : durand_kerner(c)) out.push_back({r, mult});
  }
  std::sort(out.begin(), out.end(), [](const NumericRoot& a, const NumericRoot& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return out;
}

}  // namespace slicereg
