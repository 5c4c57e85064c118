#include "strata/parse.hpp"

#include <cctype>

#include "strata/affine.hpp"
#include "strata/errors.hpp"

namespace strata {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const RootDatum& rd)
      : text_(text), rd_(rd) {}

  AffElt parse() {
    skip_ws();
    if (eof()) throw ParseError("empty expression", pos_);
    AffElt x = parse_expr();
    skip_ws();
    if (!eof()) throw ParseError("trailing input", pos_);
    return x;
  }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  long parse_int() {
    skip_ws();
    size_t start = pos_;
    if (!eof() && (peek() == '-' || peek() == '+')) ++pos_;
    size_t digits = pos_;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == digits) throw ParseError("expected integer", pos_);
    return std::stol(text_.substr(start, pos_ - start));
  }

  AffElt parse_expr() {
    AffElt x = parse_term();
    while (true) {
      skip_ws();
      if (eof() || peek() != '*') break;
      ++pos_;
      AffElt y = parse_term();
      x = aff_mul(x, y);
    }
    return x;
  }

  AffElt parse_term() {
    AffElt x = parse_factor();
    skip_ws();
    if (!eof() && peek() == '^') {
      ++pos_;
      long e = parse_int();
      AffElt base = e < 0 ? aff_inv(x) : x;
      long n = e < 0 ? -e : e;
      AffElt acc = aff_identity(rd_);
      for (long i = 0; i < n; ++i) acc = aff_mul(acc, base);
      return acc;
    }
    return x;
  }

  AffElt parse_factor() {
    skip_ws();
    if (eof()) throw ParseError("expected element", pos_);
    char c = peek();
    if (c == '(') {
      ++pos_;
      AffElt x = parse_expr();
      skip_ws();
      if (eof() || peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return x;
    }
    if (c == '1') {
      ++pos_;
      return aff_identity(rd_);
    }
    if (c == 't') {
      ++pos_;
      skip_ws();
      if (eof() || peek() != '[') throw ParseError("expected '['", pos_);
      ++pos_;
      IVec lambda;
      lambda.push_back(parse_int());
      while (true) {
        skip_ws();
        if (eof()) throw ParseError("expected ',' or ']'", pos_);
        if (peek() == ',') {
          ++pos_;
          lambda.push_back(parse_int());
          continue;
        }
        if (peek() == ']') {
          ++pos_;
          break;
        }
        throw ParseError("expected ',' or ']'", pos_);
      }
      if (static_cast<int>(lambda.size()) != rd_.ambient_rank())
        throw DimensionMismatch("translation has wrong rank for " +
                                rd_.name());
      if (!rd_.in_cochar_lattice(lambda))
        throw SemanticError("translation outside the cocharacter lattice of " +
                            rd_.name());
      return aff_translation(rd_, lambda);
    }
    if (c == 's') {
      size_t spos = pos_;
      ++pos_;
      size_t digits = pos_;
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek())))
        ++pos_;
      if (pos_ == digits)
        throw ParseError("expected reflection index after 's'", pos_);
      long idx = std::stol(text_.substr(digits, pos_ - digits));
      if (idx == 0) {
        const Group& full = rd_.full_level();
        if (full.components().size() != 1)
          throw SemanticError(
              "s0 is ambiguous: the root system is not irreducible");
        return full.affine_gens()[full.simple_set().size()];
      }
      if (idx < 1 || idx > rd_.num_simple())
        throw ParseError("reflection index out of range", spos);
      return {IVec(rd_.ambient_rank(), 0),
              rd_.simple_reflection(static_cast<int>(idx - 1))};
    }
    throw ParseError("unexpected character", pos_);
  }

  const std::string& text_;
  const RootDatum& rd_;
  size_t pos_ = 0;
};

}  // namespace

AffElt parse_element(const std::string& text, const RootDatum& rd) {
  return Parser(text, rd).parse();
}

}  // namespace strata
