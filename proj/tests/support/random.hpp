#pragma once

// Seeded generators for property tests.  Rationals have numerator and
// denominator bounded by 9.

#include <random>

#include "slicereg/stem.hpp"

namespace slicereg::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rat rat() { return Rat(integer(-9, 9), integer(1, 9)); }
  /// Mostly small values, zero about a quarter of the time.
  Rat sparse_rat() { return integer(0, 3) == 0 ? Rat(0) : rat(); }

  GRat grat() { return {rat(), rat()}; }

  Quaternion quaternion() { return {sparse_rat(), sparse_rat(), sparse_rat(), sparse_rat()}; }
  CQuat cquat() { return {grat(), grat(), grat(), grat()}; }

  Quaternion invertible_quaternion() {
    for (;;) {
      Quaternion q = quaternion();
      if (!q.is_zero()) return q;
    }
  }

  CQuat invertible_cquat() {
    for (;;) {
      CQuat q = cquat();
      if (!q.norm().is_zero()) return q;
    }
  }

  StemPoly stem(int max_degree = 5) {
    const int deg = integer(0, max_degree);
    std::vector<Quaternion> c;
    for (int n = 0; n <= deg; ++n) c.push_back(quaternion());
    return StemPoly(std::move(c));
  }

  /// A stem that is not slice preserving.
  StemPoly non_central_stem(int max_degree = 5) {
    for (;;) {
      StemPoly f = stem(max_degree);
      if (!is_slice_preserving(f)) return f;
    }
  }

  RatPoly poly(int max_degree) {
    const int deg = integer(0, max_degree);
    std::vector<Rat> c;
    for (int n = 0; n <= deg; ++n) c.push_back(sparse_rat());
    return RatPoly(std::move(c));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace slicereg::testing
