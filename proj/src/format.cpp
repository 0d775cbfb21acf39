#include "slicereg/format.hpp"

#include <vector>

namespace slicereg {

namespace {

std::string power(std::size_t n) {
  if (n == 0) return "";
  if (n == 1) return "z";
  return "z^" + std::to_string(n);
}

// Joins signed terms: {"-", "3*z"} → "... - 3*z".
struct TermList {
  std::vector<std::pair<bool, std::string>> terms;  // (negative, magnitude)

  void add(bool negative, std::string body) { terms.emplace_back(negative, std::move(body)); }

  std::string str(const char* empty) const {
    if (terms.empty()) return empty;
    std::string out;
    for (std::size_t n = 0; n < terms.size(); ++n) {
      const auto& [neg, body] = terms[n];
      if (n == 0) {
        out += neg ? "-" + body : body;
      } else {
        out += neg ? " - " : " + ";
        out += body;
      }
    }
    return out;
  }
};

// Magnitude of a rational coefficient multiplying `tail` (which may be empty).
std::string scaled(const Rat& magnitude, const std::string& tail) {
  if (tail.empty()) return magnitude.to_string();
  if (magnitude.is_one()) return tail;
  return magnitude.to_string() + "*" + tail;
}

std::string grat_factor(const GRat& g, const std::string& tail, bool& negative) {
  if (g.is_real()) {
    negative = g.re().sign() < 0;
    return scaled(g.re().abs(), tail);
  }
  negative = false;
  const std::string inner = "(" + g.to_string() + ")";
  return tail.empty() ? inner : inner + "*" + tail;
}

}  // namespace

std::string format(const Rat& r) { return r.to_string(); }

std::string format(const GRat& g) { return g.to_string(); }

std::string format(const RatPoly& p) {
  TermList t;
  for (std::size_t n = 0; n < p.coeffs().size(); ++n) {
    const Rat& c = p.coeffs()[n];
    if (c.is_zero()) continue;
    t.add(c.sign() < 0, scaled(c.abs(), power(n)));
  }
  return t.str("0");
}

std::string format(const GRatPoly& p) {
  if (is_real(p)) return format(real_part(p));
  TermList t;
  for (std::size_t n = 0; n < p.coeffs().size(); ++n) {
    const GRat& c = p.coeffs()[n];
    if (c.is_zero()) continue;
    bool neg = false;
    std::string body = grat_factor(c, power(n), neg);
    t.add(neg, std::move(body));
  }
  return t.str("0");
}

std::string format(const Quaternion& q) {
  static const char* units[] = {"", "i", "j", "k"};
  TermList t;
  for (std::size_t n = 0; n < 4; ++n) {
    if (q[n].is_zero()) continue;
    t.add(q[n].sign() < 0, scaled(q[n].abs(), units[n]));
  }
  return "(" + t.str("0") + ")";
}

std::string format(const CQuat& q) {
  if (is_real(q)) return format(real_part(q));
  static const char* units[] = {"", "i", "j", "k"};
  TermList t;
  for (std::size_t n = 0; n < 4; ++n) {
    if (q[n].is_zero()) continue;
    bool neg = false;
    std::string body = grat_factor(q[n], units[n], neg);
    t.add(neg, std::move(body));
  }
  return "(" + t.str("0") + ")";
}

std::string format(const StemPoly& f) { return format(complexify(f)); }

std::string format(const CStemPoly& f) {
  std::string out;
  for (std::size_t n = 0; n < f.coeffs().size(); ++n) {
    if (f.coeffs()[n].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += format(f.coeffs()[n]);
    if (n > 0) out += "*" + power(n);
  }
  return out.empty() ? "0" : out;
}

std::string format(const Divisor& d) { return format(d.gcd_poly()); }

std::string format(const R3StemPoly& f) { return "( " + format(f.first) + " ; " + format(f.second) + " )"; }

}  // namespace slicereg
