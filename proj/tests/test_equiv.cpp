#include <gtest/gtest.h>

#include "slicereg/equiv.hpp"
#include "support/random.hpp"

namespace slicereg {
namespace {

using testing::Gen;

const Quaternion kOne(1);
const Quaternion kI = Quaternion::basis(1);
const Quaternion kJ = Quaternion::basis(2);
const Quaternion kK = Quaternion::basis(3);
const RatPoly kZ = RatPoly::z();
const GRat kE = GRat::unit();

StemPoly lift(const RatPoly& p, const Quaternion& unit) { return p * StemPoly(unit); }
StemPoly pair_f() { return StemPoly({kI, kJ, kK * Rat(1, 2)}); }
StemPoly pair_g() { return StemPoly({kI, Quaternion(), kI * Rat(1, 2)}); }

StemPoly conjugate_by(const Quaternion& a, const StemPoly& f) {
  return star(star(StemPoly(a), f), StemPoly(inverse(a)));
}

TEST(Invariants, Examples) {
  const RatPoly nm{Rat(1), Rat(0), Rat(1), Rat(0), Rat(1, 4)};
  EXPECT_EQ(invariants(pair_f()), (InvariantBundle{RatPoly(), nm, Divisor::empty()}));

  const RatPoly p{1, 0, 1};
  const InvariantBundle central = invariants(lift(p, kOne));
  EXPECT_EQ(central.trace, (RatPoly{2, 0, 2}));
  EXPECT_EQ(central.norm, p * p);
  EXPECT_TRUE(central.slice_preserving());

  EXPECT_EQ(invariants(StemPoly(kI)), (InvariantBundle{RatPoly(), RatPoly(1), Divisor::empty()}));
}

TEST(Equivalent, Examples) {
  EquivVerdict v = equivalent(pair_f(), pair_g());
  EXPECT_FALSE(v.equivalent);
  EXPECT_EQ(v.branch, Branch::NotSlicePreserving);
  ASSERT_TRUE(v.reason.has_value());
  EXPECT_EQ(*v.reason, Mismatch::Cdiv);
  EXPECT_EQ(v.detail, "cdiv mismatch: 1 vs 2 + z^2");

  v = equivalent(pair_f(), conjugate_by(kOne + kK, pair_f()));
  EXPECT_TRUE(v.equivalent);
  EXPECT_FALSE(v.reason.has_value());

  const StemPoly c = lift(RatPoly{1, 0, 1}, kOne);
  v = equivalent(c, c);
  EXPECT_TRUE(v.equivalent);
  EXPECT_EQ(v.branch, Branch::SlicePreservingIdentical);
}

TEST(Equivalent, ReasonOrder) {
  EquivVerdict v = equivalent(StemPoly(kI), StemPoly(kOne + kI));
  ASSERT_TRUE(v.reason.has_value());
  EXPECT_EQ(*v.reason, Mismatch::Trace);
  v = equivalent(StemPoly(kI), StemPoly(kI * Rat(2)));
  ASSERT_TRUE(v.reason.has_value());
  EXPECT_EQ(*v.reason, Mismatch::Norm);
  v = equivalent(StemPoly(kI), StemPoly(kOne));
  EXPECT_EQ(v.branch, Branch::SlicePreservingIdentical);
  ASSERT_TRUE(v.reason.has_value());
  EXPECT_EQ(*v.reason, Mismatch::Identity);
  EXPECT_STREQ(to_string(Mismatch::Cdiv), "cdiv");
}

TEST(R3Equivalent, Examples) {
  const R3StemPoly fg{pair_f(), pair_g()};
  EXPECT_TRUE(r3_equivalent(fg, fg, false).equivalent);
  EXPECT_EQ(r3_equivalent(fg, fg, false).pairing, Pairing::Direct);

  const R3Verdict no_swap = r3_equivalent(fg, fg.swap(), false);
  EXPECT_FALSE(no_swap.equivalent);
  EXPECT_FALSE(no_swap.swapped.has_value());
  const R3Verdict with_swap = r3_equivalent(fg, fg.swap(), true);
  EXPECT_TRUE(with_swap.equivalent);
  EXPECT_EQ(with_swap.pairing, Pairing::Swapped);

  EXPECT_TRUE(r3_equivalent({StemPoly(kI), StemPoly(kJ)}, {StemPoly(kI), StemPoly(kI)}, false).equivalent);
}

TEST(OrbitEquivalent, Examples) {
  const CQuat i = CQuat::basis(1);
  const CQuat j = CQuat::basis(2);
  EXPECT_TRUE(orbit_equivalent(i, i * GRat(Rat(3, 5)) + j * GRat(Rat(4, 5))));
  EXPECT_TRUE(orbit_equivalent(i, i * GRat(Rat(5, 4)) + j * GRat(Rat(0), Rat(3, 4))));
  EXPECT_FALSE(orbit_equivalent(CQuat(1), CQuat(1) + i + j * kE));
  EXPECT_FALSE(orbit_equivalent(i, i * GRat(2)));
  EXPECT_THROW(orbit_equivalent(CQuat(), i), ZeroInputError);
  EXPECT_THROW(orbit_equivalent(i, CQuat()), ZeroInputError);
}

TEST(OrbitEquivalent, EquivalenceRelationOnOrbits) {
  Gen gen(51);
  for (int n = 0; n < 80; ++n) {
    const CQuat p = gen.cquat();
    if (p.is_zero()) continue;
    const CQuat q = conj_by_unit(gen.invertible_cquat(), p);
    const CQuat r = conj_by_unit(gen.invertible_cquat(), q);
    ASSERT_TRUE(orbit_equivalent(p, p));
    ASSERT_TRUE(orbit_equivalent(p, q));
    ASSERT_TRUE(orbit_equivalent(q, p));
    ASSERT_TRUE(orbit_equivalent(q, r));
    ASSERT_TRUE(orbit_equivalent(p, r));
    const CQuat other = gen.cquat();
    if (!other.is_zero()) ASSERT_EQ(orbit_equivalent(p, other), orbit_equivalent(other, p));
  }
}

TEST(ClassifyOrbit, Examples) {
  OrbitClass c = classify_orbit(CQuat(7));
  EXPECT_EQ(c.kind, OrbitKind::CenterFixed);
  EXPECT_EQ(c.isotropy, Isotropy::FullGroup);
  c = classify_orbit(CQuat::basis(1) + CQuat::basis(2) * kE);
  EXPECT_EQ(c.kind, OrbitKind::NullCone);
  EXPECT_EQ(c.isotropy, Isotropy::AdditiveC);
  EXPECT_EQ(c.lambda, GRat(0));
  c = classify_orbit(CQuat(2, 3, 0, 0));
  EXPECT_EQ(c.kind, OrbitKind::Generic);
  EXPECT_EQ(c.lambda, GRat(9));
  EXPECT_EQ(c.isotropy, Isotropy::TorusCstar);
}

TEST(ClassifyOrbit, InvariantUnderInnerAutomorphisms) {
  Gen gen(52);
  for (int n = 0; n < 100; ++n) {
    const CQuat v = gen.integer(0, 3) == 0 ? CQuat(gen.grat()) : gen.cquat();
    const OrbitClass before = classify_orbit(v);
    const OrbitClass after = classify_orbit(conj_by_unit(gen.invertible_cquat(), v));
    ASSERT_EQ(before.kind, after.kind);
    ASSERT_EQ(before.lambda, after.lambda);
    ASSERT_EQ(before.isotropy, after.isotropy);
  }
}

TEST(FindIntertwiner, PairSolutionSpace) {
  const auto basis = find_intertwiner(pair_f(), pair_g(), 2);
  // exact nullspace computed independently
  const std::vector<StemPoly> reference = {
      StemPoly({kI * Rat(2), kJ - kOne}),
      StemPoly({Quaternion(2), kI + kK}),
      StemPoly({Quaternion(), kI * Rat(2), kJ - kOne}),
      StemPoly({Quaternion(), Quaternion(2), kI + kK}),
  };
  ASSERT_EQ(basis.size(), reference.size());
  for (const auto& r : reference) EXPECT_TRUE(in_span(basis, r));
  for (const auto& b : basis) EXPECT_TRUE(in_span(reference, b));

  const StemPoly alpha({kI * Rat(2), kJ, (kI + kK) * Rat(1, 2)});
  EXPECT_TRUE(in_span(basis, alpha));
  for (const auto& b : basis) EXPECT_EQ(star(pair_f(), b), star(b, pair_g()));

  EXPECT_EQ(find_intertwiner(pair_f(), pair_g(), 0).size(), 0U);
  EXPECT_EQ(find_intertwiner(pair_f(), pair_g(), 1).size(), 2U);
}

TEST(FindIntertwiner, SmallCases) {
  const auto same = find_intertwiner(pair_f(), pair_f(), 0);
  EXPECT_TRUE(in_span(same, StemPoly(kOne)));

  const auto ij = find_intertwiner(StemPoly(kI), StemPoly(kJ), 0);
  ASSERT_EQ(ij.size(), 2U);
  EXPECT_TRUE(in_span(ij, StemPoly(kI + kJ)));
  EXPECT_TRUE(in_span(ij, StemPoly(kOne - kK)));
  EXPECT_FALSE(in_span(ij, StemPoly(kI - kJ)));
  EXPECT_EQ(ij[0], StemPoly(kI + kJ));  // normalized: first nonzero coordinate 1
}

TEST(VerifyConjugator, Examples) {
  const StemPoly alpha({kI * Rat(2), kJ, (kI + kK) * Rat(1, 2)});
  ConjugatorReport r = verify_conjugator(pair_f(), pair_g(), alpha);
  EXPECT_TRUE(r.intertwines);
  EXPECT_EQ(r.norm_alpha, (RatPoly{Rat(4), Rat(0), Rat(3), Rat(0), Rat(1, 2)}));
  EXPECT_FALSE(r.invertible_on_C);
  EXPECT_FALSE(r.conjugation_identity.has_value());

  r = verify_conjugator(StemPoly(kI), StemPoly(kI), StemPoly(kOne));
  EXPECT_TRUE(r.intertwines);
  EXPECT_TRUE(r.invertible_on_C);
  ASSERT_TRUE(r.conjugation_identity.has_value());
  EXPECT_TRUE(*r.conjugation_identity);

  EXPECT_FALSE(verify_conjugator(StemPoly(kJ), StemPoly(kI), StemPoly(kOne)).intertwines);
  EXPECT_THROW(verify_conjugator(StemPoly(kI), StemPoly(kI), StemPoly()), ZeroAlphaError);
}

TEST(PointwiseScan, Examples) {
  const GRat z(Rat(0), Rat(3, 2));
  EXPECT_EQ(eval_stem(pair_g(), z), CQuat::basis(1) * GRat(Rat(-1, 8)));
  EXPECT_TRUE(pointwise_orbit_scan(pair_f(), pair_g(), {z}).all_pass());

  const std::vector<GRat> grid = {GRat(0), GRat(1), kE, GRat(Rat(1, 2), Rat(-2))};
  EXPECT_TRUE(pointwise_orbit_scan(pair_f(), pair_f(), grid).all_pass());

  const ScanReport bad = pointwise_orbit_scan(StemPoly(kI), StemPoly(kOne + kI), {GRat(0)});
  EXPECT_FALSE(bad.all_pass());
  EXPECT_EQ(bad.failing(), std::vector<GRat>{GRat(0)});
}

TEST(EquivProperties, SoundnessOfConstantIntertwiners) {
  Gen gen(53);
  for (int n = 0; n < 40; ++n) {
    const StemPoly f = gen.non_central_stem(3);
    const StemPoly h = conjugate_by(gen.invertible_quaternion(), f);
    for (const auto& alpha : find_intertwiner(f, h, 0)) {
      if (verify_conjugator(f, h, alpha).invertible_on_C) ASSERT_TRUE(equivalent(f, h).equivalent);
    }
    ASSERT_FALSE(find_intertwiner(f, h, 0).empty());
  }
}

TEST(EquivProperties, TraceNormMismatchIsCertifiedPointwise) {
  Gen gen(54);
  const std::vector<GRat> grid = {GRat(0), GRat(1), GRat(-1), GRat(2), kE, GRat(Rat(1, 2), Rat(1))};
  for (int n = 0; n < 80; ++n) {
    const StemPoly f = gen.non_central_stem(3);
    const StemPoly h = gen.non_central_stem(3);
    const EquivVerdict v = equivalent(f, h);
    if (v.equivalent || *v.reason == Mismatch::Cdiv) continue;
    const bool certified = !pointwise_orbit_scan(f, h, grid).all_pass() ||
                           stem_trace(f) != stem_trace(h) || stem_norm(f) != stem_norm(h);
    ASSERT_TRUE(certified);
  }
}

TEST(EquivProperties, VerdictInvariantUnderConstantConjugation) {
  Gen gen(55);
  for (int n = 0; n < 100; ++n) {
    const StemPoly f = gen.stem(4);
    const StemPoly h = gen.coin() ? conjugate_by(gen.invertible_quaternion(), f) : gen.stem(4);
    const StemPoly conj_f = conjugate_by(gen.invertible_quaternion(), f);
    ASSERT_EQ(equivalent(f, h).equivalent, equivalent(conj_f, h).equivalent);
    ASSERT_EQ(invariants(conj_f), invariants(f));
  }
}

TEST(EquivProperties, EquivalentImpliesPointwiseOrbits) {
  Gen gen(56);
  const std::vector<GRat> grid = {GRat(0), GRat(1), kE, GRat(Rat(-1, 3), Rat(2))};
  for (int n = 0; n < 40; ++n) {
    const StemPoly f = gen.non_central_stem(3);
    const StemPoly h = conjugate_by(gen.invertible_quaternion(), f);
    const ScanReport scan = pointwise_orbit_scan(f, h, grid);
    ASSERT_TRUE(scan.all_pass());
  }
}

}  // namespace
}  // namespace slicereg
