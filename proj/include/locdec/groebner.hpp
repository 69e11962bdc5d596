#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "locdec/poly.hpp"

namespace locdec {

/// Caps that turn runaway Groebner computations into ResourceBound errors.
struct GbLimits {
  std::size_t max_pairs = 10000;
  std::size_t max_basis = 2000;
};

GbLimits default_gb_limits();
void set_default_gb_limits(GbLimits limits);

namespace detail {
struct OrderedBasis;
}

/// Reduced Groebner basis. When cofactors are tracked, row i expresses
/// elements()[i] as a combination of the generators the basis was built from.
class GroebnerBasis {
 public:
  const Ring& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  bool has_cofactors() const { return tracked_; }
  const std::vector<std::vector<Polynomial>>& cofactors() const { return cofactors_; }
  std::size_t generator_count() const { return generator_count_; }
  bool is_zero_ideal() const { return elements_.empty(); }
  bool is_unit_ideal() const;

  struct Division {
    std::vector<Polynomial> quotients;  // one per basis element
    Polynomial remainder;
  };
  /// Multivariate division: p = sum quotients[i] * elements()[i] + remainder.
  Division divide(const Polynomial& p) const;
  Polynomial normal_form(const Polynomial& p) const;
  bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }

 private:
  friend GroebnerBasis groebner(std::span<const Polynomial>, const Ring&, const MonomialOrder&,
                                bool, const GbLimits&);
  GroebnerBasis(Ring ring, MonomialOrder order) : ring_(std::move(ring)), order_(order) {}

  Ring ring_;
  MonomialOrder order_;
  std::vector<Polynomial> elements_;
  std::vector<std::vector<Polynomial>> cofactors_;
  std::size_t generator_count_ = 0;
  bool tracked_ = false;
  std::shared_ptr<const detail::OrderedBasis> ordered_;
};

GroebnerBasis groebner(std::span<const Polynomial> generators, const Ring& ring,
                       const MonomialOrder& order, bool track_cofactors = true,
                       const GbLimits& limits = default_gb_limits());

/// Finitely generated ideal of Q[x]. Zero generators are dropped; the zero
/// ideal keeps the single generator 0. The degrevlex basis is computed on
/// first use and shared by all copies.
class Ideal {
 public:
  Ideal(Ring ring, std::vector<Polynomial> generators);
  static Ideal zero(const Ring& ring);
  static Ideal unit(const Ring& ring);
  static Ideal principal(const Polynomial& f);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool is_zero() const;
  /// Generators with zero entries removed (empty for the zero ideal).
  std::span<const Polynomial> nonzero_generators() const;

  /// Cofactor-tracked degrevlex basis over nonzero_generators().
  const GroebnerBasis& basis() const;
  bool contains(const Polynomial& p) const { return basis().contains(p); }

  std::string to_string() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::shared_ptr<const GroebnerBasis> basis;
  };
  Ring ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

/// Coefficients c_i with sum c_i * g_i = member over the ideal's generators.
struct MembershipCertificate {
  Polynomial member;
  std::vector<Polynomial> coefficients;

  bool verify(const Ideal& ideal) const;
};

std::optional<MembershipCertificate> member_with_certificate(const Polynomial& p,
                                                            const Ideal& ideal);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, unsigned k);
/// Via t*I + (1-t)*J in Q[t,x] and elimination of t.
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
/// (I : f) = (I ∩ (f)) / f.
Ideal ideal_quotient(const Ideal& a, const Polynomial& f);
/// Global containment / equality by double membership.
bool ideal_contains(const Ideal& big, const Ideal& small);
bool ideal_equal(const Ideal& a, const Ideal& b);

/// Monic; computed with gcd_prs.
Polynomial poly_lcm(const Polynomial& f, const Polynomial& g);
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);
/// Same results through the intersection (f) ∩ (g); slower, kept as a check.
Polynomial poly_lcm_by_intersection(const Polynomial& f, const Polynomial& g);
Polynomial poly_gcd_by_intersection(const Polynomial& f, const Polynomial& g);

/// Column vectors of the same length m. Returns generators of
/// { v : sum_j v_j * columns[j] = 0 } (vectors of length columns.size()).
std::vector<std::vector<Polynomial>> syzygies(
    const std::vector<std::vector<Polynomial>>& columns, const Ring& ring,
    const GbLimits& limits = default_gb_limits());

/// Membership of v in the submodule of R^k spanned by `generators`.
bool module_contains(const std::vector<std::vector<Polynomial>>& generators,
                     const std::vector<Polynomial>& v, const Ring& ring,
                     const GbLimits& limits = default_gb_limits());

/// Buchberger's criterion checked directly: every S-polynomial of the basis
/// reduces to zero. Test helper; quadratic in the basis size.
bool satisfies_buchberger_criterion(const GroebnerBasis& basis);

}  // namespace locdec
