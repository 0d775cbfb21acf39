#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slicereg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SLICEREG_DEFINE_ERROR(Name)          \
  class Name : public Error {                \
   public:                                   \
    using Error::Error;                      \
  };

// algebra
SLICEREG_DEFINE_ERROR(DivisionByZero)
SLICEREG_DEFINE_ERROR(ZeroDivisorError)  // nonzero element with Nm = 0
SLICEREG_DEFINE_ERROR(ZeroInverseError)  // inverting 0
SLICEREG_DEFINE_ERROR(NotInWError)       // center part nonzero where W⊗C is required

// poly
SLICEREG_DEFINE_ERROR(DivisionByZeroPoly)
SLICEREG_DEFINE_ERROR(BothZeroError)
SLICEREG_DEFINE_ERROR(ZeroPolynomialError)

// stem / equiv
SLICEREG_DEFINE_ERROR(SlicePreservingError)
SLICEREG_DEFINE_ERROR(ZeroFunctionError)
SLICEREG_DEFINE_ERROR(ZeroAlphaError)
SLICEREG_DEFINE_ERROR(ZeroInputError)
SLICEREG_DEFINE_ERROR(NotInConeError)

// series
SLICEREG_DEFINE_ERROR(NearSingularSample)

#undef SLICEREG_DEFINE_ERROR

/// Syntax error in an expression; `position` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnitNotAllowedError : public ParseError {
 public:
  using ParseError::ParseError;
};

class VariableInPointError : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace slicereg
