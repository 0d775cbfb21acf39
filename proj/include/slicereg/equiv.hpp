#pragma once

// Equivalence of slice regular functions under pointwise automorphisms.
//
// Two stems F, H that are not slice preserving are equivalent iff they share
// Tr, Nm and the central divisor.  If either is slice preserving (values in
// the center, which every automorphism fixes) they are equivalent iff equal.
//
// Pointwise orbits in H_C: p and q lie in one orbit iff their center parts
// agree, B(p″, p″) = B(q″, q″), and p″, q″ are both zero or both nonzero.
// The last clause separates the fixed points {0} of W⊗C from the null cone
// H₀ \ {0}; a criterion stated with Tr and Nm alone would accept, e.g.,
// p = 1 and q = 1 + i + E·j, which no automorphism relates.

#include <optional>
#include <string>
#include <vector>

#include "slicereg/linalg.hpp"
#include "slicereg/stem.hpp"

namespace slicereg {

struct InvariantBundle {
  RatPoly trace;
  RatPoly norm;
  std::optional<Divisor> central_divisor;  // nullopt: slice preserving

  bool slice_preserving() const { return !central_divisor.has_value(); }
  friend bool operator==(const InvariantBundle&, const InvariantBundle&) = default;
};

InvariantBundle invariants(const StemPoly& f);

enum class Branch { NotSlicePreserving, SlicePreservingIdentical };
enum class Mismatch { Trace, Norm, Cdiv, Identity };

const char* to_string(Branch b);
const char* to_string(Mismatch m);

struct EquivVerdict {
  bool equivalent = false;
  Branch branch = Branch::NotSlicePreserving;
  std::optional<Mismatch> reason;  // first failing invariant
  std::string detail;              // e.g. "cdiv mismatch: 1 vs 2 + z^2"
};

EquivVerdict equivalent(const StemPoly& f, const StemPoly& h);

enum class Pairing { Direct, Swapped, None };
const char* to_string(Pairing p);

struct R3Verdict {
  bool equivalent = false;
  Pairing pairing = Pairing::None;
  Pair<EquivVerdict> direct;                // (F₁ vs H₁, F₂ vs H₂)
  std::optional<Pair<EquivVerdict>> swapped;  // (F₁ vs H₂, F₂ vs H₁), only with allow_swap
};

/// Componentwise decision over Aut(H_C) × Aut(H_C); allow_swap adds the order-swapping automorphism.
R3Verdict r3_equivalent(const R3StemPoly& f, const R3StemPoly& h, bool allow_swap);

/// Throws ZeroInputError when p or q is 0.
bool orbit_equivalent(const CQuat& p, const CQuat& q);

enum class OrbitKind { CenterFixed, NullCone, Generic };
enum class Isotropy { FullGroup, AdditiveC, TorusCstar };
const char* to_string(OrbitKind k);
const char* to_string(Isotropy i);

struct OrbitClass {
  OrbitKind kind;
  GRat lambda;  // B(v″, v″); 0 unless Generic
  Isotropy isotropy;
};

OrbitClass classify_orbit(const CQuat& v);

/// Basis of {α : deg α ≤ max_degree, F★α = α★H}, each element verified and scaled so that the
/// lowest-degree nonzero coefficient has its first nonzero coordinate equal to 1.
std::vector<StemPoly> find_intertwiner(const StemPoly& f, const StemPoly& h, unsigned max_degree);

/// True when alpha is a rational linear combination of `basis`.
bool in_span(const std::vector<StemPoly>& basis, const StemPoly& alpha);

struct ConjugatorReport {
  bool intertwines = false;  // F★α = α★H
  RatPoly norm_alpha;
  bool invertible_on_C = false;  // Nm(α) is a nonzero constant
  /// Set when invertible: F = α★H★α⁻¹ holds exactly with the polynomial inverse α^c / Nm(α).
  std::optional<bool> conjugation_identity;
};

/// Throws ZeroAlphaError.
ConjugatorReport verify_conjugator(const StemPoly& f, const StemPoly& h, const StemPoly& alpha);

struct SampleResult {
  GRat z;
  bool pass = false;
  std::string detail;
};

struct ScanReport {
  std::vector<SampleResult> samples;
  bool all_pass() const;
  /// Samples where F(z) and H(z) are in different Aut(H_C)-orbits.
  std::vector<GRat> failing() const;
};

ScanReport pointwise_orbit_scan(const StemPoly& f, const StemPoly& h, const std::vector<GRat>& samples);

}  // namespace slicereg
