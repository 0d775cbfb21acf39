#include <gtest/gtest.h>

#include "slicereg/format.hpp"
#include "slicereg/parse.hpp"
#include "support/corpus.hpp"
#include "support/random.hpp"

namespace slicereg {
namespace {

const Quaternion kOne(1);
const Quaternion kI = Quaternion::basis(1);
const Quaternion kJ = Quaternion::basis(2);
const Quaternion kK = Quaternion::basis(3);
const GRat kE = GRat::unit();

StemPoly lift(const RatPoly& p, const Quaternion& unit) { return p * StemPoly(unit); }

TEST(ParseStem, Examples) {
  EXPECT_EQ(parse_stem("i + z*j + (1/2)*z^2*k"), StemPoly({kI, kJ, kK * Rat(1, 2)}));
  EXPECT_EQ(parse_stem("(1 + (1/2)*z^2)*i"), StemPoly({kI, Quaternion(), kI * Rat(1, 2)}));
  EXPECT_EQ(parse_stem("q^2*i"), lift(RatPoly{0, 0, 1}, kI));
  EXPECT_EQ(parse_stem("z*i*z"), lift(RatPoly{0, 0, 1}, kI));
  EXPECT_EQ(parse_stem("0"), StemPoly());
  EXPECT_EQ(parse_stem("  z   +1 "), lift(RatPoly{1, 1}, kOne));
}

TEST(ParsePoint, Examples) {
  EXPECT_EQ(parse_point("1 + i + E*j"), CQuat(1) + CQuat::basis(1) + CQuat::basis(2) * kE);
  EXPECT_EQ(parse_point("E^2"), CQuat(-1));
  EXPECT_EQ(parse_point("(1 + E)*(1 - E)"), CQuat(2));
  EXPECT_EQ(parse_point("E*i"), parse_point("i*E"));
}

TEST(ParseStem, FactorOrderIsPreserved) {
  EXPECT_EQ(parse_stem("i*j"), StemPoly(kK));
  EXPECT_EQ(parse_stem("j*i"), StemPoly(-kK));
  EXPECT_EQ(parse_stem("(1 + z*i)*(1 + (1 + z)*j)"),
            lift(RatPoly(1), kOne) + lift(RatPoly{0, 1}, kI) + lift(RatPoly{1, 1}, kJ) + lift(RatPoly{0, 1, 1}, kK));
}

struct PrecedenceCase {
  const char* text;
  const char* same_as;
};

TEST(ParseStem, Precedence) {
  const PrecedenceCase cases[] = {
      {"-z^2", "-(z^2)"},
      {"2*i^2", "-2"},
      {"1 + 2*z", "1 + (2*z)"},
      {"1 - z - z", "(1 - z) - z"},
      {"-z + 1", "(-z) + 1"},
      {"2*z^3", "2*(z^3)"},
      {"-i*j", "-(i*j)"},
      {"(1 + z)^2", "1 + 2*z + z^2"},
      {"z^0", "1"},
      {"--z", "z"},
      {"1/2*z", "(1/2)*z"},
  };
  for (const auto& c : cases) {
    EXPECT_EQ(parse_stem(c.text), parse_stem(c.same_as)) << c.text;
  }
  EXPECT_EQ(parse_stem("-z^2"), lift(RatPoly{0, 0, -1}, kOne));
  EXPECT_EQ(parse_stem("2*i^2"), StemPoly(Quaternion(-2)));
}

TEST(ParseAst, TreeShape) {
  const Ast a = parse_ast("-z^2", ParseMode::Stem);
  ASSERT_EQ(a.kind, Ast::Kind::Neg);
  ASSERT_EQ(a.children.size(), 1U);
  EXPECT_EQ(a.children[0].kind, Ast::Kind::Pow);
  EXPECT_EQ(a.children[0].exponent, 2U);

  const Ast b = parse_ast("1 + 2*i", ParseMode::Stem);
  ASSERT_EQ(b.kind, Ast::Kind::Add);
  EXPECT_EQ(b.children[1].kind, Ast::Kind::Mul);
  EXPECT_EQ(b.children[1].children[1].symbol, 'i');
  EXPECT_EQ(b.children[1].children[1].position, 6U);
}

template <class E>
std::size_t error_position(const std::string& text, ParseMode mode) {
  try {
    parse_ast(text, mode);
  } catch (const E& e) {
    return e.position();
  }
  ADD_FAILURE() << "no error for " << text;
  return ~std::size_t{0};
}

TEST(ParseErrors, Positions) {
  EXPECT_EQ(error_position<ParseError>("1 + ", ParseMode::Stem), 4U);
  EXPECT_EQ(error_position<ParseError>("(z + 1", ParseMode::Stem), 6U);
  EXPECT_EQ(error_position<ParseError>("z $ 1", ParseMode::Stem), 2U);
  EXPECT_EQ(error_position<ParseError>("z^-1", ParseMode::Stem), 2U);
  EXPECT_EQ(error_position<ParseError>("1/0", ParseMode::Stem), 2U);
  EXPECT_EQ(error_position<ParseError>("z^2^3", ParseMode::Stem), 3U);
  EXPECT_EQ(error_position<ParseError>("z + q", ParseMode::Stem), 4U);
  EXPECT_EQ(error_position<ParseError>("", ParseMode::Stem), 0U);
  EXPECT_THROW(parse_stem("i j"), ParseError);
  EXPECT_THROW(parse_stem("z/2"), ParseError);
}

TEST(ParseErrors, UnitAndVariableRestrictions) {
  EXPECT_EQ(error_position<UnitNotAllowedError>("i + E*z", ParseMode::Stem), 4U);
  EXPECT_THROW(parse_stem("E"), UnitNotAllowedError);
  EXPECT_EQ(error_position<VariableInPointError>("1 + z", ParseMode::Point), 4U);
  EXPECT_THROW(parse_point("q*i"), VariableInPointError);
}

TEST(ParseR3, Pairs) {
  const R3StemPoly p = parse_r3_stem("( i + z*j ; (1 + z)*k )");
  EXPECT_EQ(p.first, parse_stem("i + z*j"));
  EXPECT_EQ(p.second, parse_stem("(1 + z)*k"));
  EXPECT_THROW(parse_r3_stem("( i ; j"), ParseError);
  EXPECT_THROW(parse_r3_stem("i + j"), ParseError);
  EXPECT_EQ(parse_r3_stem(format(p)), p);
}

TEST(RoundTrip, GoldenCorpus) {
  for (const auto& text : testing::stem_corpus()) {
    const StemPoly f = parse_stem(text);
    const std::string rendered = format(f);
    EXPECT_EQ(parse_stem(rendered), f) << text << " -> " << rendered;
    EXPECT_EQ(format(parse_stem(rendered)), rendered);
  }
  for (const auto& text : testing::point_corpus()) {
    const CQuat p = parse_point(text);
    const std::string rendered = format(p);
    EXPECT_EQ(parse_point(rendered), p) << text << " -> " << rendered;
  }
}

TEST(RoundTrip, RandomStems) {
  testing::Gen gen(71);
  for (int n = 0; n < 200; ++n) {
    const StemPoly f = gen.stem();
    ASSERT_EQ(parse_stem(format(f)), f) << format(f);
    const CQuat p = gen.cquat();
    ASSERT_EQ(parse_point(format(p)), p) << format(p);
  }
}

TEST(Format, Rendering) {
  EXPECT_EQ(format(parse_stem("i + z*j + (1/2)*z^2*k")), "(i) + (j)*z + (1/2*k)*z^2");
  EXPECT_EQ(format(RatPoly{Rat(4), Rat(0), Rat(3), Rat(0), Rat(1, 2)}), "4 + 3*z^2 + 1/2*z^4");
  EXPECT_EQ(format(RatPoly{0, 0, -1, 1}), "-z^2 + z^3");
  EXPECT_EQ(format(Quaternion(0, Rat(1, 2), 0, Rat(1, 2))), "(1/2*i + 1/2*k)");
}

}  // namespace
}  // namespace slicereg
