#include "locdec/local.hpp"

#include <algorithm>

namespace locdec {

namespace {

Polynomial homogenize(const Polynomial& p, const Ring& extended) {
  std::size_t d = *p.degree();
  std::vector<Term> terms;
  terms.reserve(p.size());
  std::vector<Monomial::Exponent> exps(extended.size());
  for (const auto& t : p.terms()) {
    exps[0] = static_cast<Monomial::Exponent>(d - t.mono.degree());
    for (std::size_t i = 0; i < t.mono.size(); ++i) exps[i + 1] = t.mono[i];
    terms.push_back({Monomial(std::span<const Monomial::Exponent>(exps)), t.coef});
  }
  return Polynomial::from_terms(extended, std::move(terms));
}

Polynomial dehomogenize(const Polynomial& p, const Ring& base) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back({t.mono.without_prefix(1), t.coef});
  return Polynomial::from_terms(base, std::move(terms));
}

std::size_t ecart(const Polynomial& p) {
  return p.terms().front().mono.degree() - p.terms().back().mono.degree();
}

}  // namespace

const Term& local_leading_term(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  // Storage is degrevlex descending, so the lowest degree block sits at the
  // end and its first entry is the degrevlex-largest of that block.
  const auto& terms = p.terms();
  std::size_t low = terms.back().mono.degree();
  std::size_t i = terms.size() - 1;
  while (i > 0 && terms[i - 1].mono.degree() == low) --i;
  return terms[i];
}

StandardBasis local_standard_basis(const Ideal& ideal, bool track_cofactors) {
  const Ring& ring = ideal.ring();
  StandardBasis sb{{}, {}, track_cofactors, std::nullopt};
  auto gens = ideal.nonzero_generators();
  if (gens.empty()) return sb;
  Ring extended = ring.with_leading_auxiliary();
  std::vector<Polynomial> hom;
  hom.reserve(gens.size());
  for (const auto& g : gens) hom.push_back(homogenize(g, extended));
  GroebnerBasis gb = groebner(hom, extended, MonomialOrder::homogenizing(), track_cofactors);
  for (std::size_t j = 0; j < gb.elements().size(); ++j) {
    sb.elements.push_back(dehomogenize(gb.elements()[j], ring));
    if (!track_cofactors) continue;
    std::vector<Polynomial> row;
    for (const auto& c : gb.cofactors()[j]) row.push_back(dehomogenize(c, ring));
    sb.cofactors.push_back(std::move(row));
  }
  sb.primary_exponent = leading_power_of_maximal_ideal(sb);
  return sb;
}

std::optional<unsigned> leading_power_of_maximal_ideal(const StandardBasis& sb) {
  if (sb.elements.empty()) return std::nullopt;
  const std::size_t p = sb.elements.front().ring().size();
  std::vector<Monomial> leads;
  for (const auto& e : sb.elements) leads.push_back(local_leading_term(e).mono);
  // Every variable needs a pure power among the leading monomials.
  unsigned bound = 1;
  for (std::size_t i = 0; i < p; ++i) {
    std::optional<unsigned> best;
    for (const auto& m : leads) {
      if (m.degree() != m[i]) continue;
      if (!best || m[i] < *best) best = m[i];
    }
    if (!best) return std::nullopt;
    bound += *best - 1;
  }
  auto covered = [&](const Monomial& m) {
    for (const auto& l : leads)
      if (l.divides(m)) return true;
    return false;
  };
  for (unsigned k = 0; k < bound; ++k) {
    bool all = true;
    for (const auto& m : monomials_of_degree(p, k)) {
      if (!covered(m)) {
        all = false;
        break;
      }
    }
    if (all) return k;
  }
  return bound;
}

bool in_local_ideal(const Polynomial& f, const StandardBasis& sb) {
  if (f.is_zero()) return true;
  if (sb.elements.empty()) return false;
  if (!sb.primary_exponent) return mora_normal_form(f, sb).remainder.is_zero();
  // m^k lies in the ideal, so terms of degree >= k can be dropped. Each step
  // then lowers the leading term among finitely many monomials.
  const std::size_t k = *sb.primary_exponent;
  if (k == 0) return true;
  std::vector<Polynomial> reducers;
  for (const auto& e : sb.elements) {
    auto t = truncate_to_order(e, k - 1);
    if (!t.is_zero()) reducers.push_back(std::move(t));
  }
  Polynomial h = truncate_to_order(f, k - 1);
  while (!h.is_zero()) {
    const Term lead = local_leading_term(h);
    const Polynomial* best = nullptr;
    for (const auto& r : reducers) {
      if (!local_leading_term(r).mono.divides(lead.mono)) continue;
      if (!best || r.size() < best->size()) best = &r;
    }
    if (!best) return false;
    const Term& g_lead = local_leading_term(*best);
    h.add_scaled(-(lead.coef / g_lead.coef), g_lead.mono.quotient_of(lead.mono), *best);
    h = truncate_to_order(h, k - 1);
  }
  return true;
}

WeakNormalForm mora_normal_form(const Polynomial& f, const StandardBasis& sb) {
  const Ring& ring = f.ring();
  const std::size_t k = sb.elements.size();
  const bool track = sb.tracked;

  struct Reducer {
    Polynomial poly;
    Polynomial unit;                 // zero for basis elements
    std::vector<Polynomial> coeffs;  // poly = unit * f + sum coeffs_j s_j
    std::size_t index;               // basis index, or k for stored remainders
    std::size_t ecart;
  };
  std::vector<Reducer> set;
  set.reserve(k);
  for (std::size_t j = 0; j < k; ++j)
    set.push_back({sb.elements[j], Polynomial(ring), {}, j, ecart(sb.elements[j])});

  Polynomial h = f;
  Polynomial u = Polynomial::constant(ring, 1);
  std::vector<Polynomial> b;
  if (track) b.assign(k, Polynomial(ring));

  while (!h.is_zero()) {
    const Term lead = local_leading_term(h);
    const Reducer* best = nullptr;
    for (const auto& r : set) {
      if (!local_leading_term(r.poly).mono.divides(lead.mono)) continue;
      if (!best || r.ecart < best->ecart) best = &r;
    }
    if (!best) break;
    std::size_t e = ecart(h);
    std::size_t chosen = static_cast<std::size_t>(best - set.data());
    if (best->ecart > e) {
      set.push_back({h, u, b, k, e});
      best = &set[chosen];
    }
    const Term& g_lead = local_leading_term(best->poly);
    Monomial m = g_lead.mono.quotient_of(lead.mono);
    Rational c = -(lead.coef / g_lead.coef);
    h.add_scaled(c, m, best->poly);
    if (track) {
      if (best->index < k) {
        b[best->index] += Polynomial::term(ring, m, c);
      } else {
        // m is never 1 here because leading terms strictly decrease, so u
        // stays a unit.
        u.add_scaled(c, m, best->unit);
        for (std::size_t j = 0; j < k; ++j)
          if (!best->coeffs[j].is_zero()) b[j].add_scaled(c, m, best->coeffs[j]);
      }
    }
  }

  WeakNormalForm out{u, {}, h};
  if (track)
    for (auto& q : b) out.quotients.push_back(-q);
  return out;
}

namespace {
bool pivot_less(const Monomial& a, const Monomial& b) {
  return MonomialOrder::degrevlex().compare(a, b) < 0;
}
}  // namespace

TruncatedSpan::TruncatedSpan(const Ring& ring, std::span<const Polynomial> generators, unsigned k)
    : k_(k) {
  if (k == 0) return;
  const std::size_t full = [&] {
    std::size_t n = 0;
    for (unsigned d = 0; d < k; ++d) n += monomials_of_degree(ring.size(), d).size();
    return n;
  }();
  for (unsigned d = 0; d < k && rows_.size() < full; ++d) {
    for (const auto& mono : monomials_of_degree(ring.size(), d)) {
      for (const auto& g : generators) {
        Polynomial h = truncate_to_order(Polynomial::term(ring, mono, 1) * g, k - 1);
        if (reduce(h)) continue;
        h = h.monic();
        Monomial pivot = local_leading_term(h).mono;
        auto at = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                                   [](const auto& row, const Monomial& m) {
                                     return pivot_less(row.first, m);
                                   });
        rows_.insert(at, {std::move(pivot), std::move(h)});
        if (rows_.size() == full) return;
      }
    }
  }
}

bool TruncatedSpan::reduce(Polynomial& h) const {
  while (!h.is_zero()) {
    const Term lead = local_leading_term(h);
    auto at = std::lower_bound(rows_.begin(), rows_.end(), lead.mono,
                               [](const auto& row, const Monomial& m) {
                                 return pivot_less(row.first, m);
                               });
    if (at == rows_.end() || !(at->first == lead.mono)) return false;
    const Term& row_lead = local_leading_term(at->second);
    h.add_scaled(-(lead.coef / row_lead.coef), Monomial(lead.mono.size()), at->second);
  }
  return true;
}

bool TruncatedSpan::contains(const Polynomial& f) const {
  if (k_ == 0) return true;
  Polynomial h = truncate_to_order(f, k_ - 1);
  return reduce(h);
}

}  // namespace locdec
