#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "locdec/groebner.hpp"

namespace locdec {

/// Element num/den of Q[x]_(x). The denominator is kept with constant term 1;
/// equality compares cross products, so no gcd reduction is ever required.
class LocalElement {
 public:
  explicit LocalElement(Ring ring);
  LocalElement(const Polynomial& num);  // NOLINT: polynomials embed implicitly
  /// Throws NotInvertible when den vanishes at the origin.
  LocalElement(Polynomial num, Polynomial den);

  static LocalElement constant(const Ring& ring, const Rational& c);

  const Ring& ring() const { return num_.ring(); }
  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_unit() const { return num_.constant_term() != 0; }
  bool is_polynomial() const { return den_.is_one(); }
  /// Value at the origin.
  Rational constant_term() const { return num_.constant_term(); }
  Valuation order_at_origin() const { return num_.order_at_origin(); }

  /// Taylor polynomial of degree <= order.
  Polynomial jet(std::size_t order) const;
  /// Drops common factors of num and den via poly_gcd.
  LocalElement reduced() const;

  LocalElement operator-() const;
  LocalElement& operator+=(const LocalElement& o);
  LocalElement& operator-=(const LocalElement& o);
  LocalElement& operator*=(const LocalElement& o);
  friend LocalElement operator+(LocalElement a, const LocalElement& b) { return a += b; }
  friend LocalElement operator-(LocalElement a, const LocalElement& b) { return a -= b; }
  friend LocalElement operator*(LocalElement a, const LocalElement& b) { return a *= b; }
  friend bool operator==(const LocalElement& a, const LocalElement& b);

  /// Division by a unit. Throws NotInvertible otherwise.
  LocalElement divided_by_unit(const LocalElement& u) const;

  /// "num" when the denominator is 1, "(num)/(den)" otherwise.
  std::string to_string() const;

 private:
  void normalize();
  void maybe_reduce();
  Polynomial num_;
  Polynomial den_;
};

Polynomial truncate_to_order(const Polynomial& p, std::size_t order);

/// a / b in the local ring when b divides a there.
std::optional<LocalElement> try_local_divide(const LocalElement& a, const LocalElement& b);

/// Standard basis for the local degree order (lowest degree first, ties by
/// degrevlex), obtained by homogenizing and dehomogenizing a Groebner basis.
/// When tracked, cofactors[j] writes elements[j] over the nonzero generators.
struct StandardBasis {
  std::vector<Polynomial> elements;
  std::vector<std::vector<Polynomial>> cofactors;
  bool tracked = false;
  /// Smallest k with m^k inside the leading ideal, if the ideal is m-primary.
  std::optional<unsigned> primary_exponent;
};

StandardBasis local_standard_basis(const Ideal& ideal, bool track_cofactors = true);

/// Leading term for the local degree order.
const Term& local_leading_term(const Polynomial& p);

/// Mora's weak normal form: unit * f = sum quotients_j * elements_j + remainder
/// with unit(0) = 1. The remainder is zero iff f lies in the local ideal.
/// Quotients are only filled for a tracked basis.
struct WeakNormalForm {
  Polynomial unit;
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

WeakNormalForm mora_normal_form(const Polynomial& f, const StandardBasis& basis);

std::optional<unsigned> leading_power_of_maximal_ideal(const StandardBasis& basis);
/// Decision only. For m-primary ideals this reduces modulo m^k instead of
/// running the full normal form, which keeps coefficients small.
bool in_local_ideal(const Polynomial& f, const StandardBasis& basis);

/// Q-span of (generators + m^k) / m^k, echelonized on local leading terms.
class TruncatedSpan {
 public:
  TruncatedSpan(const Ring& ring, std::span<const Polynomial> generators, unsigned k);
  /// f lies in the ideal generated by the generators plus m^k.
  bool contains(const Polynomial& f) const;

 private:
  // Reduces h in place; true when it becomes zero.
  bool reduce(Polynomial& h) const;
  unsigned k_;
  std::vector<std::pair<Monomial, Polynomial>> rows_;  // sorted by pivot
};

/// All monomials of total degree k in p variables.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned k);

/// Ideal of Q[x] read in the local ring. Standard bases are computed on first
/// use and shared between copies.
class LocalIdeal {
 public:
  explicit LocalIdeal(Ideal ideal) : ideal_(std::move(ideal)), cache_(std::make_shared<Cache>()) {}
  /// Denominators are dropped; they are units.
  LocalIdeal(const Ring& ring, const std::vector<LocalElement>& generators);

  const Ideal& ideal() const { return ideal_; }
  const Ring& ring() const { return ideal_.ring(); }
  const std::vector<Polynomial>& generators() const { return ideal_.generators(); }
  bool is_zero() const { return ideal_.is_zero(); }
  std::string to_string() const { return ideal_.to_string(); }

  const StandardBasis& standard_basis(bool tracked) const;
  /// Already computed basis, if any; never triggers a computation.
  const StandardBasis* cached_standard_basis() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::shared_ptr<const StandardBasis> plain;
    std::shared_ptr<const StandardBasis> tracked;
  };
  Ideal ideal_;
  std::shared_ptr<Cache> cache_;
};

/// u * num(f) = sum c_i g_i with u(0) != 0, so f = sum c_i / (u den(f)) g_i.
struct LocalCertificate {
  Polynomial unit;
  std::vector<Polynomial> coefficients;

  /// The coefficients of f itself as local elements.
  std::vector<LocalElement> local_coefficients(const LocalElement& f) const;
  bool verify(const LocalElement& f, const LocalIdeal& ideal) const;
};

/// Certificate from global membership, a unit generator, or Mora's normal form.
std::optional<LocalCertificate> local_member(const LocalElement& f, const LocalIdeal& ideal);
/// Independent route: f is locally in J iff (J : f) has a generator that is a
/// unit. Much slower on large ideals; kept for cross-checking.
std::optional<LocalCertificate> local_member_via_quotient(const LocalElement& f,
                                                          const LocalIdeal& ideal);
bool is_local_member(const LocalElement& f, const LocalIdeal& ideal);

/// small ⊆ big in the local ring.
bool local_ideal_contains(const LocalIdeal& big, const LocalIdeal& small);
bool local_ideal_equal(const LocalIdeal& a, const LocalIdeal& b);
/// First generator of `small` that is not locally in `big`.
std::optional<Polynomial> local_containment_witness(const LocalIdeal& big, const LocalIdeal& small);

LocalIdeal local_sum(const LocalIdeal& a, const LocalIdeal& b);
LocalIdeal local_product(const LocalIdeal& a, const LocalIdeal& b);

struct MutualPrimality {
  bool prime = false;
  /// Generator of the intersection that is not locally in the product.
  std::optional<Polynomial> witness;
  Ideal intersection;
};

/// J1 ∩ J2 = J1 J2 in the local ring.
MutualPrimality mutually_prime(const LocalIdeal& j1, const LocalIdeal& j2);

/// Largest p with J ⊆ m^p; infinity for the zero ideal.
Valuation ideal_order(const LocalIdeal& ideal);

/// Smallest k <= up_to with m^k ⊆ J locally.
std::optional<unsigned> contains_power_of_maximal_ideal(const LocalIdeal& ideal, unsigned up_to);

bool is_unit(const LocalElement& e);

/// Expression with an optional denominator that is a unit, e.g. "x/(1 - y)".
LocalElement parse_local_element(std::string_view text, const Ring& ring);

}  // namespace locdec
