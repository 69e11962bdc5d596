#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

#include "locdec/errors.hpp"

namespace locdec {

using Rational = mpq_class;

/// Ordered variable names of Q[x_1..x_p]. Copies share the name table; two
/// rings are equal when their names agree.
class Ring {
 public:
  explicit Ring(std::vector<std::string> variables);

  std::size_t size() const { return vars_->size(); }
  const std::vector<std::string>& variables() const { return *vars_; }
  const std::string& variable(std::size_t i) const { return (*vars_)[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Q[t, x_1..x_p] with a fresh name for t that does not clash.
  Ring with_leading_auxiliary() const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.vars_ == b.vars_ || *a.vars_ == *b.vars_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> vars_;
};

bool is_valid_identifier(std::string_view name);

class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<Exponent> exps);
  explicit Monomial(std::span<const Exponent> exps);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::size_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  bool divides(const Monomial& other) const;
  /// Precondition: divides(other).
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  /// Drops/prepends variables; used to move between R and R[t].
  Monomial with_prefix(std::size_t count) const;
  Monomial without_prefix(std::size_t count) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

 private:
  boost::container::small_vector<Exponent, 6> exps_;
  std::size_t degree_ = 0;
};

/// Global monomial orders. The elimination order compares the first `block`
/// variables by degrevlex, then the rest by degrevlex. The homogenizing order
/// compares total degree, then prefers a larger exponent of variable 0, then
/// degrevlex on the rest; with variable 0 as homogenizing variable it turns a
/// homogeneous Groebner basis into a standard basis for the local order.
class MonomialOrder {
 public:
  enum class Kind { DegRevLex, Lex, Elimination, Homogenizing };

  static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder elimination(std::size_t block) {
    return MonomialOrder(Kind::Elimination, block);
  }
  static MonomialOrder homogenizing() { return MonomialOrder(Kind::Homogenizing, 1); }

  Kind kind() const { return kind_; }
  std::size_t block() const { return block_; }
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}
  Kind kind_;
  std::size_t block_;
};

/// m-adic order: a natural number or infinity (the order of 0).
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  static Valuation finite(std::size_t v) { return Valuation(v); }

  bool is_infinite() const { return !value_; }
  /// Precondition: !is_infinite().
  std::size_t value() const { return *value_; }

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);
  friend Valuation operator+(const Valuation& a, const Valuation& b);

  std::string to_string() const;

 private:
  Valuation() = default;
  explicit Valuation(std::size_t v) : value_(v) {}
  std::optional<std::size_t> value_;
};

struct Term {
  Monomial mono;
  Rational coef;
};

/// Exact polynomial over Q. Terms are kept sorted by descending degrevlex
/// with no zero coefficients, so equal polynomials have identical storage.
class Polynomial {
 public:
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const Ring& ring, const Rational& c);
  static Polynomial variable(const Ring& ring, std::size_t index);
  static Polynomial variable(const Ring& ring, std::string_view name);
  static Polynomial term(const Ring& ring, const Monomial& mono, const Rational& c);
  /// Sorts, merges and drops zero terms.
  static Polynomial from_terms(const Ring& ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  Rational constant_term() const;

  /// Total degree; nullopt stands for the degree -infinity of 0.
  std::optional<std::size_t> degree() const;
  /// Lowest total degree of a term; infinity for 0.
  Valuation order_at_origin() const;

  /// Throws ZeroPolynomial on 0.
  const Term& leading_term() const;
  Term leading_term(const MonomialOrder& order) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);

  /// this += c * mono * q, in place.
  Polynomial& add_scaled(const Rational& c, const Monomial& mono, const Polynomial& q);

  Polynomial pow(unsigned k) const;
  Polynomial derivative(std::size_t var) const;
  /// Scales so the leading degrevlex coefficient is 1; 0 stays 0.
  Polynomial monic() const;

  /// Exact division; nullopt when d does not divide this.
  std::optional<Polynomial> try_exact_divide(const Polynomial& d) const;

  Polynomial embed_with_auxiliary(const Ring& extended) const;
  Polynomial drop_auxiliary(const Ring& base) const;

  /// Canonical text, e.g. "x^2*y - 3/2*y".
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_ring(const Polynomial& q) const;
  Ring ring_;
  std::vector<Term> terms_;
};

std::optional<Polynomial> try_exact_divide(const Polynomial& p, const Polynomial& d);

/// Monic gcd by recursive primitive remainder sequences, one variable at a
/// time. gcd(0, 0) = 0.
Polynomial gcd_prs(const Polynomial& a, const Polynomial& b);
/// Evaluation at large integers and interpolation; nullopt when the
/// evaluation points fail, which callers answer with gcd_prs.
std::optional<Polynomial> gcd_heuristic(const Polynomial& a, const Polynomial& b);

// ---------------------------------------------------------------------------
// Expression language (shared with the problem-file reader).

struct Token {
  enum class Kind { Identifier, Integer, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;

  std::string describe() const;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text);

  const Token& peek() const { return current_; }
  Token next();
  bool accept_punct(std::string_view p);
  Token expect_punct(std::string_view p);
  Token expect_identifier(std::string_view what = "identifier");
  [[noreturn]] void fail(std::string_view expected) const;

 private:
  Token scan();
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  Token current_;
};

/// Quotient num/den produced by the expression grammar ("/" is allowed).
struct ParsedFraction {
  Polynomial num;
  Polynomial den;
};

ParsedFraction parse_expression(Lexer& lexer, const Ring& ring);
/// The whole text must be one expression with a constant denominator.
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

}  // namespace locdec
