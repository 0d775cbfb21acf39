#pragma once

// Expression syntax for stems and H_C points.
//
//   expr   := term (("+" | "-") term)*
//   term   := factor ("*" factor)*
//   factor := "-" factor | base ("^" natural)?
//   base   := rational | unit | var | "(" expr ")"
//   rational := integer ("/" positive_integer)?
//   unit   := "i" | "j" | "k" | "E"        (E: the commuting complex unit)
//   var    := "z" | "q"
//
// Written factor order is preserved, so "i*j" is k and "j*i" is −k.  The
// variable is central, so every stem normalizes to Σ zᵏ·a_k.  R₃ pairs are
// written "( <expr> ; <expr> )".

#include <cstddef>
#include <string_view>
#include <vector>

#include "slicereg/stem.hpp"

namespace slicereg {

enum class ParseMode { Stem, Point };

struct Ast {
  enum class Kind { Rational, Unit, Var, Neg, Add, Sub, Mul, Pow };

  Kind kind = Kind::Rational;
  std::size_t position = 0;
  Rat value;              // Rational
  char symbol = 0;        // Unit, Var
  unsigned exponent = 0;  // Pow
  std::vector<Ast> children;
};

/// Throws ParseError, UnitNotAllowedError (E in stem mode), VariableInPointError.
Ast parse_ast(std::string_view text, ParseMode mode);

/// Multiplies out the tree into Σ zᵏ·c_k with c_k ∈ H_C.
CStemPoly normalize(const Ast& ast);

StemPoly parse_stem(std::string_view text);
CQuat parse_point(std::string_view text);
/// "( F₁ ; F₂ )".
R3StemPoly parse_r3_stem(std::string_view text);

}  // namespace slicereg
