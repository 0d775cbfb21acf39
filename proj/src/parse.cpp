#include "slicereg/parse.hpp"

#include <cctype>
#include <string>

namespace slicereg {

namespace {

class Parser {
 public:
  Parser(std::string_view text, ParseMode mode) : text_(text), mode_(mode) {}

  Ast parse_all() {
    Ast out = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

  // "( a ; b )" at top level.
  std::pair<Ast, Ast> parse_pair() {
    expect('(');
    Ast a = expr();
    expect(';');
    Ast b = expr();
    expect(')');
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return {std::move(a), std::move(b)};
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char ch) {
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  static Ast node(Ast::Kind kind, std::size_t position, std::vector<Ast> children) {
    Ast a;
    a.kind = kind;
    a.position = position;
    a.children = std::move(children);
    return a;
  }

  Ast expr() {
    Ast lhs = term();
    for (;;) {
      const char ch = peek();
      if (ch != '+' && ch != '-') return lhs;
      const std::size_t at = pos_++;
      Ast rhs = term();
      lhs = node(ch == '+' ? Ast::Kind::Add : Ast::Kind::Sub, at, {std::move(lhs), std::move(rhs)});
    }
  }

  Ast term() {
    Ast lhs = factor();
    while (peek() == '*') {
      const std::size_t at = pos_++;
      Ast rhs = factor();
      lhs = node(Ast::Kind::Mul, at, {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  Ast factor() {
    if (peek() == '-') {
      const std::size_t at = pos_++;
      return node(Ast::Kind::Neg, at, {factor()});
    }
    Ast b = base();
    if (peek() == '^') {
      const std::size_t at = pos_++;
      skip_space();
      const std::string e = digits();
      if (e.empty()) fail("expected a natural exponent");
      if (e.size() > 6) fail("exponent too large");
      Ast p = node(Ast::Kind::Pow, at, {std::move(b)});
      p.exponent = static_cast<unsigned>(std::stoul(e));
      return p;
    }
    return b;
  }

  Ast base() {
    const char ch = peek();
    const std::size_t at = pos_;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string num = digits();
      std::string den = "1";
      if (pos_ < text_.size() && text_[pos_] == '/') {
        const std::size_t den_at = ++pos_;
        den = digits();
        if (den.empty()) fail("expected a denominator");
        if (den.find_first_not_of('0') == std::string::npos) throw ParseError("zero denominator", den_at);
      }
      Ast a = node(Ast::Kind::Rational, at, {});
      a.value = Rat::parse(num + "/" + den);
      return a;
    }
    if (ch == '(') {
      ++pos_;
      Ast inner = expr();
      expect(')');
      return inner;
    }
    if (ch == 'i' || ch == 'j' || ch == 'k' || ch == 'E') {
      if (ch == 'E' && mode_ == ParseMode::Stem) {
        throw UnitNotAllowedError("unit E is not allowed in a stem (coefficients must be real quaternions)", at);
      }
      ++pos_;
      Ast a = node(Ast::Kind::Unit, at, {});
      a.symbol = ch;
      return a;
    }
    if (ch == 'z' || ch == 'q') {
      if (mode_ == ParseMode::Point) throw VariableInPointError("variables are not allowed in a point", at);
      if (variable_ != 0 && variable_ != ch) fail("mixing variables z and q");
      variable_ = ch;
      ++pos_;
      Ast a = node(Ast::Kind::Var, at, {});
      a.symbol = ch;
      return a;
    }
    if (ch == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string_view text_;
  ParseMode mode_;
  std::size_t pos_ = 0;
  char variable_ = 0;
};

}  // namespace

Ast parse_ast(std::string_view text, ParseMode mode) { return Parser(text, mode).parse_all(); }

CStemPoly normalize(const Ast& ast) {
  switch (ast.kind) {
    case Ast::Kind::Rational:
      return CStemPoly(CQuat(GRat(ast.value)));
    case Ast::Kind::Unit:
      switch (ast.symbol) {
        case 'i': return CStemPoly(CQuat::basis(1));
        case 'j': return CStemPoly(CQuat::basis(2));
        case 'k': return CStemPoly(CQuat::basis(3));
        default: return CStemPoly(CQuat(GRat::unit()));
      }
    case Ast::Kind::Var:
      return CStemPoly(std::vector<CQuat>{CQuat(), CQuat(GRat(1))});
    case Ast::Kind::Neg:
      return -normalize(ast.children[0]);
    case Ast::Kind::Add:
      return normalize(ast.children[0]) + normalize(ast.children[1]);
    case Ast::Kind::Sub:
      return normalize(ast.children[0]) - normalize(ast.children[1]);
    case Ast::Kind::Mul:
      return star(normalize(ast.children[0]), normalize(ast.children[1]));
    case Ast::Kind::Pow: {
      const CStemPoly b = normalize(ast.children[0]);
      CStemPoly out(CQuat(GRat(1)));
      for (unsigned n = 0; n < ast.exponent; ++n) out = star(out, b);
      return out;
    }
  }
  return {};
}

StemPoly parse_stem(std::string_view text) { return real_part(normalize(parse_ast(text, ParseMode::Stem))); }

CQuat parse_point(std::string_view text) { return normalize(parse_ast(text, ParseMode::Point)).coeff(0); }

R3StemPoly parse_r3_stem(std::string_view text) {
  Parser p(text, ParseMode::Stem);
  auto [a, b] = p.parse_pair();
  return {real_part(normalize(a)), real_part(normalize(b))};
}

}  // namespace slicereg
