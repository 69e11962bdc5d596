#include <cctype>

#include "locdec/poly.hpp"

namespace locdec {

std::string Token::describe() const {
  switch (kind) {
    case Kind::End: return "end of input";
    case Kind::Identifier: return "identifier '" + text + "'";
    case Kind::Integer: return "number '" + text + "'";
    case Kind::Punct: return "'" + text + "'";
  }
  return "?";
}

Lexer::Lexer(std::string_view text) : text_(text) { current_ = scan(); }

Token Lexer::scan() {
  // whitespace and '#' comments
  while (pos_ < text_.size()) {
    char c = text_[pos_];
    if (c == '#') {
      while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_, ++column_;
    } else if (c == '\n') {
      ++pos_;
      ++line_;
      column_ = 1;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos_;
      ++column_;
    } else {
      break;
    }
  }
  Token tok;
  tok.line = line_;
  tok.column = column_;
  if (pos_ >= text_.size()) return tok;
  char c = text_[pos_];
  std::size_t start = pos_;
  if (std::isalpha(static_cast<unsigned char>(c))) {
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    tok.kind = Token::Kind::Identifier;
  } else if (std::isdigit(static_cast<unsigned char>(c))) {
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    tok.kind = Token::Kind::Integer;
  } else {
    ++pos_;
    tok.kind = Token::Kind::Punct;
  }
  tok.text = std::string(text_.substr(start, pos_ - start));
  column_ += pos_ - start;
  return tok;
}

Token Lexer::next() {
  Token t = current_;
  current_ = scan();
  return t;
}

bool Lexer::accept_punct(std::string_view p) {
  if (current_.kind == Token::Kind::Punct && current_.text == p) {
    next();
    return true;
  }
  return false;
}

Token Lexer::expect_punct(std::string_view p) {
  if (current_.kind != Token::Kind::Punct || current_.text != p) fail("'" + std::string(p) + "'");
  return next();
}

Token Lexer::expect_identifier(std::string_view what) {
  if (current_.kind != Token::Kind::Identifier) fail(what);
  return next();
}

void Lexer::fail(std::string_view expected) const {
  throw SyntaxError(current_.line, current_.column, std::string(expected), current_.describe());
}

namespace {

// expr   := term (("+"|"-") term)*
// term   := unary (("*"|"/") unary)*
// unary  := ("+"|"-") unary | power
// power  := primary ("^" INTEGER)?
// primary:= INTEGER | IDENT | "(" expr ")"
class ExprParser {
 public:
  ExprParser(Lexer& lexer, const Ring& ring) : lex_(lexer), ring_(ring) {}

  ParsedFraction expr() {
    ParsedFraction acc = term();
    for (;;) {
      if (lex_.accept_punct("+")) {
        acc = add(acc, term(), false);
      } else if (lex_.accept_punct("-")) {
        acc = add(acc, term(), true);
      } else {
        return acc;
      }
    }
  }

 private:
  ParsedFraction add(const ParsedFraction& a, const ParsedFraction& b, bool subtract) {
    Polynomial rhs = subtract ? -b.num : b.num;
    if (a.den == b.den) return {a.num + rhs, a.den};
    return {a.num * b.den + rhs * a.den, a.den * b.den};
  }

  ParsedFraction term() {
    ParsedFraction acc = unary();
    for (;;) {
      if (lex_.accept_punct("*")) {
        ParsedFraction r = unary();
        acc = {acc.num * r.num, acc.den * r.den};
      } else if (lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == "/") {
        lex_.next();
        ParsedFraction r = unary();
        if (r.num.is_zero()) throw DivisionByZero();
        acc = {acc.num * r.den, acc.den * r.num};
        normalize(acc);
      } else {
        return acc;
      }
    }
  }

  // Keep the denominator's leading coefficient at 1 and fold constant
  // denominators into the numerator.
  static void normalize(ParsedFraction& f) {
    if (f.den.is_constant()) {
      Rational c = f.den.constant_term();
      f.num = Rational(1 / c) * f.num;
      f.den = Polynomial::constant(f.den.ring(), 1);
    }
  }

  ParsedFraction unary() {
    if (lex_.accept_punct("-")) {
      ParsedFraction f = unary();
      return {-f.num, f.den};
    }
    if (lex_.accept_punct("+")) return unary();
    return power();
  }

  ParsedFraction power() {
    ParsedFraction base = primary();
    if (lex_.accept_punct("^")) {
      if (lex_.peek().kind != Token::Kind::Integer) lex_.fail("non-negative integer exponent");
      Token e = lex_.next();
      unsigned long k = std::stoul(e.text);
      if (k > 100000) throw SyntaxError(e.line, e.column, "exponent <= 100000", e.text);
      base = {base.num.pow(static_cast<unsigned>(k)), base.den.pow(static_cast<unsigned>(k))};
    }
    return base;
  }

  ParsedFraction primary() {
    const Token& t = lex_.peek();
    Polynomial one = Polynomial::constant(ring_, 1);
    if (t.kind == Token::Kind::Integer) {
      Token tok = lex_.next();
      return {Polynomial::constant(ring_, Rational(mpz_class(tok.text))), one};
    }
    if (t.kind == Token::Kind::Identifier) {
      Token tok = lex_.next();
      auto idx = ring_.index_of(tok.text);
      if (!idx) throw UnknownVariable(tok.text);
      return {Polynomial::variable(ring_, *idx), one};
    }
    if (lex_.accept_punct("(")) {
      ParsedFraction inner = expr();
      lex_.expect_punct(")");
      return inner;
    }
    lex_.fail("number, variable or '('");
  }

  Lexer& lex_;
  const Ring& ring_;
};

}  // namespace

ParsedFraction parse_expression(Lexer& lexer, const Ring& ring) {
  return ExprParser(lexer, ring).expr();
}

Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
  Lexer lexer(text);
  ParsedFraction f = parse_expression(lexer, ring);
  if (lexer.peek().kind != Token::Kind::End) lexer.fail("operator or end of input");
  if (!f.den.is_constant())
    throw InputError("expression is not a polynomial (non-constant denominator)");
  return Rational(1 / f.den.constant_term()) * f.num;
}

}  // namespace locdec
