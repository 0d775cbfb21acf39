#pragma once

// Dense univariate polynomials over an exact field S (Rat or GRat).

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "slicereg/rational.hpp"

namespace slicereg {

template <class S>
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<S> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(S constant) : c_{std::move(constant)} { trim(); }  // NOLINT

  /// c·zⁿ
  static Poly monomial(const S& c, std::size_t n) {
    std::vector<S> v(n + 1, S(0));
    v[n] = c;
    return Poly(std::move(v));
  }
  static Poly z() { return monomial(S(1), 1); }

  /// −1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<S>& coeffs() const noexcept { return c_; }
  /// Coefficient of zⁿ (zero beyond the degree).
  S coeff(std::size_t n) const { return n < c_.size() ? c_[n] : S(0); }
  const S& lead() const { return c_.back(); }

  Poly operator-() const {
    Poly out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
    for (std::size_t n = 0; n < o.c_.size(); ++n) c_[n] += o.c_[n];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
    for (std::size_t n = 0; n < o.c_.size(); ++n) c_[n] -= o.c_[n];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<S> out(a.c_.size() + b.c_.size() - 1, S(0));
    for (std::size_t m = 0; m < a.c_.size(); ++m) {
      if (a.c_[m] == S(0)) continue;
      for (std::size_t n = 0; n < b.c_.size(); ++n) out[m + n] += a.c_[m] * b.c_[n];
    }
    return Poly(std::move(out));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly&, const Poly&) = default;

  /// Divides every coefficient by the leading one; the zero polynomial stays zero.
  Poly monic() const {
    if (is_zero()) return {};
    Poly out = *this;
    const S l = lead();
    for (auto& x : out.c_) x /= l;
    return out;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<S> out(c_.size() - 1, S(0));
    for (std::size_t n = 1; n < c_.size(); ++n) out[n - 1] = c_[n] * S(static_cast<long>(n));
    return Poly(std::move(out));
  }

  /// Horner evaluation; T must accept S·T products (e.g. GRat at Rat coefficients).
  template <class T>
  T operator()(const T& at) const {
    T acc = T(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + T(*it);
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == S(0)) c_.pop_back();
  }

  std::vector<S> c_;
};

using RatPoly = Poly<Rat>;
using GRatPoly = Poly<GRat>;

inline GRatPoly to_grat(const RatPoly& p) {
  std::vector<GRat> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return GRatPoly(std::move(v));
}

/// Real parts of the coefficients.
inline RatPoly real_part(const GRatPoly& p) {
  std::vector<Rat> v;
  for (const auto& c : p.coeffs()) v.push_back(c.re());
  return RatPoly(std::move(v));
}

inline bool is_real(const GRatPoly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const GRat& c) { return c.is_real(); });
}

template <class S>
struct DivMod {
  Poly<S> quotient;
  Poly<S> remainder;
};

/// a = q·b + r with deg r < deg b.  Throws DivisionByZeroPoly.
template <class S>
DivMod<S> divmod(const Poly<S>& a, const Poly<S>& b) {
  if (b.is_zero()) throw DivisionByZeroPoly("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<S>(), a};
  std::vector<S> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<S> quo(rem.size() - db, S(0));
  for (std::size_t n = rem.size(); n-- > db;) {
    const S factor = rem[n] / b.lead();
    quo[n - db] = factor;
    if (factor == S(0)) continue;
    for (std::size_t m = 0; m <= db; ++m) rem[n - db + m] -= factor * b.coeffs()[m];
  }
  rem.resize(db);
  return {Poly<S>(std::move(quo)), Poly<S>(std::move(rem))};
}

/// Pseudo-remainder lc(b)^(deg a − deg b + 1)·a mod b.
template <class S>
Poly<S> pseudo_remainder(const Poly<S>& a, const Poly<S>& b) {
  const int delta = a.degree() - b.degree();
  if (delta < 0) return a;
  Poly<S> scaled = a * Poly<S>(pow(b.lead(), static_cast<unsigned>(delta + 1)));
  return divmod(scaled, b).remainder;
}

/// Monic greatest common divisor via the subresultant remainder sequence.
/// gcd(a, 0) = monic(a).  Throws BothZeroError.
template <class S>
Poly<S> gcd(Poly<S> a, Poly<S> b) {
  if (a.is_zero() && b.is_zero()) throw BothZeroError("gcd of two zero polynomials");
  if (a.degree() < b.degree()) std::swap(a, b);
  if (b.is_zero()) return a.monic();
  S g(1);
  S h(1);
  while (!b.is_zero()) {
    const unsigned delta = static_cast<unsigned>(a.degree() - b.degree());
    Poly<S> r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) break;
    const S divisor = g * pow(h, delta);
    b = r * Poly<S>(S(1) / divisor);
    g = a.lead();
    h = delta == 0 ? h : pow(g, delta) / pow(h, delta - 1);
  }
  return a.monic();
}

/// Largest m with (z − at)^m dividing p.  Throws ZeroPolynomialError.
template <class S>
unsigned vanishing_order(const Poly<S>& p, const S& at) {
  if (p.is_zero()) throw ZeroPolynomialError("vanishing order of the zero polynomial");
  const Poly<S> linear{-at, S(1)};
  unsigned order = 0;
  Poly<S> rest = p;
  for (;;) {
    auto [q, r] = divmod(rest, linear);
    if (!r.is_zero()) return order;
    ++order;
    rest = std::move(q);
  }
}

template <class S>
struct SquarefreeFactor {
  Poly<S> factor;  // monic, squarefree
  unsigned multiplicity;
};

/// Yun's algorithm: p = lc · Π factorₘ^m with pairwise coprime squarefree factors.
template <class S>
std::vector<SquarefreeFactor<S>> squarefree_decomposition(const Poly<S>& p) {
  if (p.is_zero()) throw ZeroPolynomialError("squarefree decomposition of the zero polynomial");
  std::vector<SquarefreeFactor<S>> out;
  if (p.degree() == 0) return out;
  const Poly<S> f = p.monic();
  const Poly<S> d = f.derivative();
  Poly<S> a = gcd(f, d);
  Poly<S> b = divmod(f, a).quotient;
  Poly<S> c = divmod(d, a).quotient;
  Poly<S> e = c - b.derivative();
  unsigned m = 1;
  while (b.degree() > 0) {
    Poly<S> factor = e.is_zero() ? b.monic() : gcd(b, e);
    if (factor.degree() > 0) out.push_back({factor, m});
    b = divmod(b, factor).quotient;
    c = divmod(e, factor).quotient;
    e = c - b.derivative();
    ++m;
  }
  return out;
}

}  // namespace slicereg
