#pragma once

// Text rendering.  Polynomials use ascending powers of z, rationals print
// as `a/b`, and quaternion coefficients print as `(a + b*i + c*j + d*k)` with
// zero coordinates omitted.  Every rendering reparses to the same value.

#include <string>

#include "slicereg/stem.hpp"

namespace slicereg {

std::string format(const Rat& r);
std::string format(const GRat& g);
std::string format(const RatPoly& p);
std::string format(const GRatPoly& p);
std::string format(const Quaternion& q);
std::string format(const CQuat& q);
std::string format(const StemPoly& f);
std::string format(const CStemPoly& f);
std::string format(const Divisor& d);
/// `( first ; second )`.
std::string format(const R3StemPoly& f);

}  // namespace slicereg
