#include "slicereg/equiv.hpp"

#include <algorithm>

#include "slicereg/format.hpp"

namespace slicereg {

const char* to_string(Branch b) {
  switch (b) {
    case Branch::NotSlicePreserving: return "NotSlicePreserving";
    case Branch::SlicePreservingIdentical: return "SlicePreservingIdentical";
  }
  return "?";
}

const char* to_string(Mismatch m) {
  switch (m) {
    case Mismatch::Trace: return "trace";
    case Mismatch::Norm: return "norm";
    case Mismatch::Cdiv: return "cdiv";
    case Mismatch::Identity: return "identity";
  }
  return "?";
}

const char* to_string(Pairing p) {
  switch (p) {
    case Pairing::Direct: return "Direct";
    case Pairing::Swapped: return "Swapped";
    case Pairing::None: return "None";
  }
  return "?";
}

const char* to_string(OrbitKind k) {
  switch (k) {
    case OrbitKind::CenterFixed: return "CenterFixed";
    case OrbitKind::NullCone: return "NullCone";
    case OrbitKind::Generic: return "Generic";
  }
  return "?";
}

const char* to_string(Isotropy i) {
  switch (i) {
    case Isotropy::FullGroup: return "FullGroup";
    case Isotropy::AdditiveC: return "AdditiveC";
    case Isotropy::TorusCstar: return "TorusCstar";
  }
  return "?";
}

InvariantBundle invariants(const StemPoly& f) { return {stem_trace(f), stem_norm(f), cdiv_if_defined(f)}; }

EquivVerdict equivalent(const StemPoly& f, const StemPoly& h) {
  EquivVerdict v;
  if (is_slice_preserving(f) || is_slice_preserving(h)) {
    v.branch = Branch::SlicePreservingIdentical;
    v.equivalent = f == h;
    if (!v.equivalent) {
      v.reason = Mismatch::Identity;
      v.detail = "identity mismatch: " + format(f) + " vs " + format(h);
    }
    return v;
  }
  v.branch = Branch::NotSlicePreserving;
  const RatPoly tf = stem_trace(f);
  const RatPoly th = stem_trace(h);
  if (tf != th) {
    v.reason = Mismatch::Trace;
    v.detail = "trace mismatch: " + format(tf) + " vs " + format(th);
    return v;
  }
  const RatPoly nf = stem_norm(f);
  const RatPoly nh = stem_norm(h);
  if (nf != nh) {
    v.reason = Mismatch::Norm;
    v.detail = "norm mismatch: " + format(nf) + " vs " + format(nh);
    return v;
  }
  const Divisor df = cdiv(f);
  const Divisor dh = cdiv(h);
  if (df != dh) {
    v.reason = Mismatch::Cdiv;
    v.detail = "cdiv mismatch: " + format(df) + " vs " + format(dh);
    return v;
  }
  v.equivalent = true;
  return v;
}

R3Verdict r3_equivalent(const R3StemPoly& f, const R3StemPoly& h, bool allow_swap) {
  R3Verdict out;
  out.direct = {equivalent(f.first, h.first), equivalent(f.second, h.second)};
  if (out.direct.first.equivalent && out.direct.second.equivalent) {
    out.equivalent = true;
    out.pairing = Pairing::Direct;
  }
  if (allow_swap) {
    out.swapped = Pair<EquivVerdict>{equivalent(f.first, h.second), equivalent(f.second, h.first)};
    if (!out.equivalent && out.swapped->first.equivalent && out.swapped->second.equivalent) {
      out.equivalent = true;
      out.pairing = Pairing::Swapped;
    }
  }
  return out;
}

namespace {

// Why p and q lie in different orbits, or nullopt when they share one.
std::optional<std::string> orbit_mismatch(const CQuat& p, const CQuat& q) {
  const auto sp = split(p);
  const auto sq = split(q);
  if (sp.center != sq.center) return "center parts differ: " + format(sp.center) + " vs " + format(sq.center);
  const GRat bp = bform(sp.wpart, sp.wpart);
  const GRat bq = bform(sq.wpart, sq.wpart);
  if (bp != bq) return "B(w,w) differs: " + format(bp) + " vs " + format(bq);
  if (sp.wpart.is_zero() != sq.wpart.is_zero()) return "one W-part is zero, the other lies on the null cone";
  return std::nullopt;
}

}  // namespace

bool orbit_equivalent(const CQuat& p, const CQuat& q) {
  if (p.is_zero() || q.is_zero()) throw ZeroInputError("orbit comparison needs nonzero inputs");
  return !orbit_mismatch(p, q).has_value();
}

OrbitClass classify_orbit(const CQuat& v) {
  const CQuat w = v.imag();
  if (w.is_zero()) return {OrbitKind::CenterFixed, GRat(0), Isotropy::FullGroup};
  const GRat lambda = bform(w, w);
  if (lambda.is_zero()) return {OrbitKind::NullCone, GRat(0), Isotropy::AdditiveC};
  return {OrbitKind::Generic, lambda, Isotropy::TorusCstar};
}

namespace {

// Coordinates of f as a flat vector of length 4·slots, ordered (degree, component).
RatVector flatten(const StemPoly& f, std::size_t slots) {
  RatVector v(4 * slots, Rat(0));
  for (std::size_t n = 0; n < f.coeffs().size() && n < slots; ++n) {
    for (std::size_t c = 0; c < 4; ++c) v[4 * n + c] = f.coeffs()[n][c];
  }
  return v;
}

StemPoly unflatten(const RatVector& v) {
  std::vector<Quaternion> coeffs(v.size() / 4);
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    coeffs[n] = Quaternion(v[4 * n], v[4 * n + 1], v[4 * n + 2], v[4 * n + 3]);
  }
  return StemPoly(std::move(coeffs));
}

StemPoly normalize_intertwiner(const StemPoly& alpha) {
  for (const auto& q : alpha.coeffs()) {
    for (std::size_t c = 0; c < 4; ++c) {
      if (!q[c].is_zero()) return RatPoly(Rat(1) / q[c]) * alpha;
    }
  }
  return alpha;
}

}  // namespace

std::vector<StemPoly> find_intertwiner(const StemPoly& f, const StemPoly& h, unsigned max_degree) {
  const std::size_t unknowns = 4 * (static_cast<std::size_t>(max_degree) + 1);
  const std::size_t slots = static_cast<std::size_t>(max_degree) +
                            static_cast<std::size_t>(std::max({f.degree(), h.degree(), 0})) + 1;
  Matrix<Rat> system(4 * slots, unknowns);
  for (std::size_t u = 0; u < unknowns; ++u) {
    std::vector<Quaternion> coeffs(u / 4 + 1);
    coeffs[u / 4] = Quaternion::basis(u % 4);
    const StemPoly e(std::move(coeffs));
    const RatVector column = flatten(star(f, e) - star(e, h), slots);
    for (std::size_t r = 0; r < column.size(); ++r) system(r, u) = column[r];
  }

  std::vector<StemPoly> out;
  for (const auto& v : nullspace(std::move(system))) {
    StemPoly alpha = normalize_intertwiner(unflatten(v));
    if (star(f, alpha) != star(alpha, h)) throw Error("internal: intertwiner failed re-verification");
    out.push_back(std::move(alpha));
  }
  return out;
}

bool in_span(const std::vector<StemPoly>& basis, const StemPoly& alpha) {
  int deg = alpha.degree();
  for (const auto& b : basis) deg = std::max(deg, b.degree());
  if (deg < 0) return true;
  const std::size_t slots = static_cast<std::size_t>(deg) + 1;
  Matrix<Rat> without(4 * slots, basis.size());
  Matrix<Rat> with(4 * slots, basis.size() + 1);
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const RatVector v = flatten(basis[c], slots);
    for (std::size_t r = 0; r < v.size(); ++r) without(r, c) = with(r, c) = v[r];
  }
  const RatVector a = flatten(alpha, slots);
  for (std::size_t r = 0; r < a.size(); ++r) with(r, basis.size()) = a[r];
  return rank(std::move(without)) == rank(std::move(with));
}

ConjugatorReport verify_conjugator(const StemPoly& f, const StemPoly& h, const StemPoly& alpha) {
  if (alpha.is_zero()) throw ZeroAlphaError("conjugator must be nonzero");
  ConjugatorReport r;
  r.intertwines = star(f, alpha) == star(alpha, h);
  r.norm_alpha = stem_norm(alpha);
  r.invertible_on_C = r.norm_alpha.degree() == 0;
  if (r.invertible_on_C) {
    const StemPoly inv = RatPoly(Rat(1) / r.norm_alpha.lead()) * stem_conj(alpha);
    r.conjugation_identity = f == star(star(alpha, h), inv);
  }
  return r;
}

bool ScanReport::all_pass() const {
  return std::all_of(samples.begin(), samples.end(), [](const SampleResult& s) { return s.pass; });
}

std::vector<GRat> ScanReport::failing() const {
  std::vector<GRat> out;
  for (const auto& s : samples) {
    if (!s.pass) out.push_back(s.z);
  }
  return out;
}

ScanReport pointwise_orbit_scan(const StemPoly& f, const StemPoly& h, const std::vector<GRat>& samples) {
  ScanReport report;
  for (const auto& z : samples) {
    const CQuat fz = eval_stem(f, z);
    const CQuat hz = eval_stem(h, z);
    SampleResult s{z, false, {}};
    if (fz == hz) {
      s.pass = true;
      s.detail = "equal values";
    } else if (fz.is_zero() || hz.is_zero()) {
      s.detail = "exactly one value is 0";
    } else if (auto why = orbit_mismatch(fz, hz)) {
      s.detail = *why;
    } else {
      s.pass = true;
      s.detail = "same orbit";
    }
    report.samples.push_back(std::move(s));
  }
  return report;
}

}  // namespace slicereg
