#include "slicereg/rational.hpp"

#include <cctype>

namespace slicereg {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                               : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw DivisionByZero("rational with zero denominator");
  if (negative) n = -n;
  return Rat(mpq_class(n, d));
}

Rat pow(const Rat& base, unsigned exponent) {
  Rat result(1);
  Rat b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

GRat pow(const GRat& base, unsigned exponent) {
  GRat result(1);
  GRat b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

std::string GRat::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string imag = im_.is_one() ? "E" : (im_ == Rat(-1) ? "-E" : im_.to_string() + "*E");
  if (re_.is_zero()) return imag;
  if (im_.sign() < 0) {
    const Rat a = -im_;
    return re_.to_string() + " - " + (a.is_one() ? "E" : a.to_string() + "*E");
  }
  return re_.to_string() + " + " + imag;
}

}  // namespace slicereg
