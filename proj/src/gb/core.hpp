#pragma once

// Buchberger core shared by ideal and module computations. Vectors of R^r
// are lists of (component, monomial, coefficient) sorted descending in the
// position-over-term extension of a monomial order: a lower component index
// is larger, ties are broken by the monomial order. Ideals are rank 1.

#include <compare>
#include <cstdint>
#include <vector>

#include "locdec/groebner.hpp"

namespace locdec::detail {

struct MTerm {
  std::uint32_t comp = 0;
  Monomial mono;
  Rational coef;
};

using MVec = std::vector<MTerm>;

struct PotOrder {
  MonomialOrder order;

  std::strong_ordering compare(std::uint32_t ca, const Monomial& a, std::uint32_t cb,
                               const Monomial& b) const {
    if (ca != cb) return cb <=> ca;
    return order.compare(a, b);
  }
  std::strong_ordering compare(const MTerm& a, const MTerm& b) const {
    return compare(a.comp, a.mono, b.comp, b.mono);
  }
};

struct OrderedBasis {
  PotOrder order;
  std::vector<MVec> elements;
};

MVec to_mvec(const Polynomial& p, const PotOrder& order, std::uint32_t comp = 0);
Polynomial from_mvec(const MVec& v, const Ring& ring);

/// p -= c * mono * g.
void sub_scaled(MVec& p, const Rational& c, const Monomial& mono, const MVec& g,
                const PotOrder& order);

/// Index of the first basis element whose leading term divides t, or -1.
long find_reducer(const MTerm& t, const std::vector<MVec>& basis);

struct CoreResult {
  std::vector<MVec> basis;
  std::vector<std::vector<Polynomial>> cofactors;  // empty unless tracked
};

/// Reduced Groebner basis of the given vectors. Cofactors refer to the
/// positions in `generators` (zero generators get zero rows).
CoreResult buchberger(const std::vector<MVec>& generators, const PotOrder& order, bool track,
                      const Ring& ring, const GbLimits& limits);

struct MDivision {
  std::vector<std::vector<Term>> quotients;
  MVec remainder;
};

MDivision divide(const MVec& p, const std::vector<MVec>& basis, const PotOrder& order,
                 bool track_quotients);

}  // namespace locdec::detail
