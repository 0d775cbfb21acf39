#pragma once

// Exact scalars: arbitrary-precision rationals and Gaussian rationals.
//
// GRat is the scalar field of the complexified algebra A⊗C.  Its imaginary
// unit (printed as `E`) is the commuting tensor unit and must not be
// confused with the quaternion unit i.

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "slicereg/errors.hpp"

namespace slicereg {

/// Rational number, always in lowest terms with positive denominator.
class Rat {
 public:
  Rat() = default;

  template <std::integral I>
  Rat(I n) : v_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)

  template <std::integral I, std::integral J>
  Rat(I num, J den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    v_.canonicalize();
  }

  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "n" or "n/d" with decimal integers of any length.
  static Rat parse(std::string_view text);

  const mpq_class& value() const noexcept { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const noexcept { return sgn(v_) == 0; }
  bool is_one() const noexcept { return v_ == 1; }
  int sign() const noexcept { return sgn(v_); }
  bool is_integer() const noexcept { return v_.get_den() == 1; }
  double to_double() const { return v_.get_d(); }
  Rat abs() const { return Rat(mpq_class(::abs(v_))); }

  /// `a` or `a/b`.
  std::string to_string() const { return v_.get_str(); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

 private:
  mpq_class v_{0};
};

/// Non-negative integer power.
Rat pow(const Rat& base, unsigned exponent);

/// Gaussian rational re + E·im.
class GRat {
 public:
  GRat() = default;
  GRat(Rat re, Rat im = Rat(0)) : re_(std::move(re)), im_(std::move(im)) {}  // NOLINT
  template <std::integral I>
  GRat(I n) : re_(n) {}  // NOLINT

  static GRat unit() { return {Rat(0), Rat(1)}; }

  const Rat& re() const noexcept { return re_; }
  const Rat& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const noexcept { return im_.is_zero(); }

  /// Complex conjugation E ↦ −E.
  GRat conj() const { return {re_, -im_}; }
  /// re² + im².
  Rat abs2() const { return re_ * re_ + im_ * im_; }

  GRat operator-() const { return {-re_, -im_}; }
  GRat& operator+=(const GRat& o) { re_ += o.re_; im_ += o.im_; return *this; }
  GRat& operator-=(const GRat& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  GRat& operator*=(const GRat& o) {
    Rat r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
  }
  GRat& operator/=(const GRat& o) {
    if (o.is_zero()) throw DivisionByZero("Gaussian rational division by zero");
    const Rat d = o.abs2();
    *this *= o.conj();
    re_ /= d;
    im_ /= d;
    return *this;
  }

  friend GRat operator+(GRat a, const GRat& b) { return a += b; }
  friend GRat operator-(GRat a, const GRat& b) { return a -= b; }
  friend GRat operator*(GRat a, const GRat& b) { return a *= b; }
  friend GRat operator/(GRat a, const GRat& b) { return a /= b; }
  friend bool operator==(const GRat& a, const GRat& b) = default;

  /// `a`, `b*E`, or `a + b*E`.
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const GRat& g) { return os << g.to_string(); }

 private:
  Rat re_;
  Rat im_;
};

GRat pow(const GRat& base, unsigned exponent);

}  // namespace slicereg
