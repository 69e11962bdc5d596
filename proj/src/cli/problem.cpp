#include <set>

#include "locdec/cli.hpp"

namespace locdec::cli {

namespace {

std::string at(const Token& t) {
  return " (line " + std::to_string(t.line) + ", column " + std::to_string(t.column) + ")";
}

Ring parse_ring(Lexer& lex) {
  Token kw = lex.expect_identifier("'ring'");
  if (kw.text != "ring") throw SyntaxError(kw.line, kw.column, "'ring'", kw.describe());
  Token field = lex.expect_identifier("coefficient field 'Q'");
  if (field.text != "Q")
    throw SemanticError("only the field Q is supported, got '" + field.text + "'" + at(field));
  lex.expect_punct("[");
  std::vector<std::string> vars;
  std::set<std::string> seen;
  do {
    Token v = lex.expect_identifier("variable name");
    if (!seen.insert(v.text).second)
      throw SemanticError("variable '" + v.text + "' declared twice" + at(v));
    vars.push_back(v.text);
  } while (lex.accept_punct(","));
  lex.expect_punct("]");
  lex.expect_punct(";");
  return Ring(std::move(vars));
}

Polynomial polynomial_expression(Lexer& lex, const Ring& ring) {
  const Token start = lex.peek();
  ParsedFraction f = parse_expression(lex, ring);
  if (!f.den.is_constant())
    throw SemanticError("expected a polynomial, got a fraction with denominator " +
                        f.den.to_string() + at(start));
  return Rational(1 / f.den.constant_term()) * f.num;
}

LocalElement local_expression(Lexer& lex, const Ring& ring) {
  const Token start = lex.peek();
  ParsedFraction f = parse_expression(lex, ring);
  if (f.den.constant_term() == 0)
    throw SemanticError("denominator " + f.den.to_string() + " vanishes at the origin" +
                        at(start));
  return LocalElement(f.num, f.den);
}

std::vector<Polynomial> polynomial_tuple(Lexer& lex, const Ring& ring) {
  std::vector<Polynomial> out;
  lex.expect_punct("(");
  do out.push_back(polynomial_expression(lex, ring));
  while (lex.accept_punct(","));
  lex.expect_punct(")");
  return out;
}

LRMatrix matrix_literal(Lexer& lex, const Ring& ring, const Token& name) {
  std::vector<std::vector<LocalElement>> rows;
  lex.expect_punct("[");
  do {
    const Token row_start = lex.peek();
    lex.expect_punct("[");
    std::vector<LocalElement> row;
    do row.push_back(local_expression(lex, ring));
    while (lex.accept_punct(","));
    lex.expect_punct("]");
    if (!rows.empty() && row.size() != rows.front().size())
      throw SemanticError("matrix '" + name.text + "' has ragged rows: row " +
                          std::to_string(rows.size() + 1) + " has " + std::to_string(row.size()) +
                          " entries, expected " + std::to_string(rows.front().size()) +
                          at(row_start));
    rows.push_back(std::move(row));
  } while (lex.accept_punct(","));
  lex.expect_punct("]");
  std::vector<LocalElement> entries;
  for (auto& r : rows)
    for (auto& e : r) entries.push_back(std::move(e));
  return LRMatrix(ring, rows.size(), rows.front().size(), std::move(entries));
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  Lexer lex(text);
  ProblemFile p{parse_ring(lex), {}, {}, {}, {}};
  std::set<std::string> names;
  while (lex.peek().kind != Token::Kind::End) {
    Token kw = lex.expect_identifier("'matrix', 'poly', 'ideal' or 'map'");
    if (kw.text != "matrix" && kw.text != "poly" && kw.text != "ideal" && kw.text != "map")
      throw SyntaxError(kw.line, kw.column, "'matrix', 'poly', 'ideal' or 'map'", kw.describe());
    Token name = lex.expect_identifier("name");
    if (p.ring.index_of(name.text))
      throw SemanticError("name '" + name.text + "' is a ring variable" + at(name));
    if (!names.insert(name.text).second)
      throw SemanticError("name '" + name.text + "' declared twice" + at(name));
    lex.expect_punct("=");
    if (kw.text == "matrix") {
      p.matrices.emplace_back(name.text, matrix_literal(lex, p.ring, name));
    } else if (kw.text == "poly") {
      p.polys.emplace(name.text, polynomial_expression(lex, p.ring));
    } else if (kw.text == "ideal") {
      p.ideals.emplace(name.text, polynomial_tuple(lex, p.ring));
    } else {
      p.maps.emplace(name.text, polynomial_tuple(lex, p.ring));
    }
    lex.expect_punct(";");
  }
  return p;
}

const LRMatrix& ProblemFile::matrix(std::string_view name) const {
  if (name.empty()) {
    if (matrices.size() != 1)
      throw SemanticError(matrices.empty() ? "the problem declares no matrix"
                                           : "several matrices declared; choose one with --matrix");
    return matrices.front().second;
  }
  for (const auto& [n, m] : matrices)
    if (n == name) return m;
  throw SemanticError("undeclared matrix '" + std::string(name) + "'");
}

const Polynomial& ProblemFile::poly(std::string_view name) const {
  auto it = polys.find(std::string(name));
  if (it == polys.end()) throw SemanticError("undeclared polynomial '" + std::string(name) + "'");
  return it->second;
}

LocalIdeal ProblemFile::ideal(std::string_view name) const {
  if (auto it = ideals.find(std::string(name)); it != ideals.end())
    return LocalIdeal(Ideal(ring, it->second));
  if (auto it = polys.find(std::string(name)); it != polys.end())
    return LocalIdeal(Ideal::principal(it->second));
  throw SemanticError("undeclared ideal '" + std::string(name) + "'");
}

const std::vector<Polynomial>& ProblemFile::map(std::string_view name) const {
  if (name.empty()) {
    if (maps.size() != 1)
      throw SemanticError(maps.empty() ? "the problem declares no map"
                                       : "several maps declared; choose one with --map");
    return maps.begin()->second;
  }
  auto it = maps.find(std::string(name));
  if (it == maps.end()) throw SemanticError("undeclared map '" + std::string(name) + "'");
  return it->second;
}

std::string ring_to_string(const Ring& ring) {
  std::string s = "Q[";
  for (std::size_t i = 0; i < ring.size(); ++i) s += (i ? "," : "") + ring.variable(i);
  return s + "]";
}

}  // namespace locdec::cli
