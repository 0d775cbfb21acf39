#include "slicereg/stem.hpp"

namespace slicereg {

CStemPoly complexify(const StemPoly& f) {
  std::vector<CQuat> v;
  v.reserve(f.coeffs().size());
  for (const auto& q : f.coeffs()) v.push_back(complexify(q));
  return CStemPoly(std::move(v));
}

bool is_real(const CStemPoly& f) {
  for (const auto& q : f.coeffs()) {
    if (!is_real(q)) return false;
  }
  return true;
}

StemPoly real_part(const CStemPoly& f) {
  std::vector<Quaternion> v;
  v.reserve(f.coeffs().size());
  for (const auto& q : f.coeffs()) v.push_back(real_part(q));
  return StemPoly(std::move(v));
}

Divisor::Divisor(const GRatPoly& p) : p_(p.monic()) {
  if (p.is_zero()) throw ZeroPolynomialError("divisor of the zero polynomial");
}

namespace {

template <class S>
Poly<S> w_gcd(const BasicStem<S>& f) {
  if (is_slice_preserving(f)) {
    throw SlicePreservingError("central divisor is undefined for a slice-preserving function");
  }
  const auto parts = split_stem(f);
  Poly<S> g;
  for (const Poly<S>* p : {&parts.w1, &parts.w2, &parts.w3}) {
    if (p->is_zero()) continue;
    g = g.is_zero() ? p->monic() : gcd(g, *p);
  }
  return g;
}

}  // namespace

Divisor cdiv(const StemPoly& f) { return Divisor(to_grat(w_gcd(f))); }

Divisor cdiv(const CStemPoly& f) { return Divisor(w_gcd(f)); }

std::optional<Divisor> cdiv_if_defined(const StemPoly& f) {
  if (is_slice_preserving(f)) return std::nullopt;
  return cdiv(f);
}

CentralFactorization remove_central_divisor(const StemPoly& f) {
  if (f.is_zero()) throw ZeroFunctionError("cannot factor the zero function");
  if (!stem_trace(f).is_zero()) throw Error("removing the central divisor needs Tr(F) = 0");
  const Divisor d = cdiv(f);
  const GRatPoly& lambda = d.gcd_poly();
  const CStemPoly cf = complexify(f);
  Poly<GRat> parts[4];
  for (std::size_t n = 1; n < 4; ++n) {
    auto [q, r] = divmod(cf.component(n), lambda);
    if (!r.is_zero()) throw Error("internal: divisor does not divide a W component");
    parts[n] = std::move(q);
  }
  return {lambda, CStemPoly::from_components(parts[0], parts[1], parts[2], parts[3])};
}

CQuat eval_stem(const CStemPoly& f, const GRat& z0) {
  CQuat acc;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * z0 + *it;
  return acc;
}

CQuat eval_stem(const StemPoly& f, const GRat& z0) {
  CQuat acc;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * z0 + complexify(*it);
  return acc;
}

Quaternion eval_slice(const StemPoly& f, const Quaternion& q) {
  Quaternion acc;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = q * acc + *it;
  return acc;
}

Quaternion eval_slice_via_stem(const StemPoly& f, const Quaternion& q) {
  const Rat x = q[0];
  const Quaternion v = q.imag();
  const Rat s = v.norm();
  // (x + E·y)^k = even + E·y·odd with y² = s.
  Rat even(1);
  Rat odd(0);
  Quaternion p;
  Quaternion qt;
  for (const auto& a : f.coeffs()) {
    p += a * even;
    qt += a * odd;
    Rat next_even = x * even - s * odd;
    odd = even + x * odd;
    even = std::move(next_even);
  }
  return p + v * qt;
}

R3StemPoly r3_star(const R3StemPoly& f, const R3StemPoly& g) {
  return {star(f.first, g.first), star(f.second, g.second)};
}

R3StemPoly r3_conj(const R3StemPoly& f) { return {stem_conj(f.first), stem_conj(f.second)}; }

Pair<RatPoly> r3_trace(const R3StemPoly& f) { return {stem_trace(f.first), stem_trace(f.second)}; }

Pair<RatPoly> r3_norm(const R3StemPoly& f) { return {stem_norm(f.first), stem_norm(f.second)}; }

Pair<std::optional<Divisor>> r3_cdiv(const R3StemPoly& f) {
  return {cdiv_if_defined(f.first), cdiv_if_defined(f.second)};
}

R3CQuat r3_eval_stem(const R3StemPoly& f, const GRat& z0) {
  return {eval_stem(f.first, z0), eval_stem(f.second, z0)};
}

R3Quat r3_eval_slice(const R3StemPoly& f, const R3Quat& at, bool require_cone) {
  if (require_cone && !in_quadratic_cone(at)) throw NotInConeError("evaluation point is not in the quadratic cone");
  return {eval_slice(f.first, at.first), eval_slice(f.second, at.second)};
}

}  // namespace slicereg
