#include <sstream>

#include "core.hpp"

namespace locdec {

namespace {
std::mutex g_limits_mutex;
GbLimits g_limits;
}  // namespace

GbLimits default_gb_limits() {
  std::lock_guard lock(g_limits_mutex);
  return g_limits;
}

void set_default_gb_limits(GbLimits limits) {
  std::lock_guard lock(g_limits_mutex);
  g_limits = limits;
}

GroebnerBasis groebner(std::span<const Polynomial> generators, const Ring& ring,
                       const MonomialOrder& order, bool track_cofactors,
                       const GbLimits& limits) {
  detail::PotOrder pot{order};
  std::vector<detail::MVec> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) {
    if (!(g.ring() == ring)) throw RingMismatch();
    gens.push_back(detail::to_mvec(g, pot));
  }
  detail::CoreResult core = detail::buchberger(gens, pot, track_cofactors, ring, limits);

  GroebnerBasis gb(ring, order);
  gb.generator_count_ = generators.size();
  gb.tracked_ = track_cofactors;
  for (const auto& v : core.basis) gb.elements_.push_back(detail::from_mvec(v, ring));
  gb.cofactors_ = std::move(core.cofactors);
  gb.ordered_ = std::make_shared<detail::OrderedBasis>(
      detail::OrderedBasis{pot, std::move(core.basis)});
  return gb;
}

bool GroebnerBasis::is_unit_ideal() const {
  return elements_.size() == 1 && elements_[0].is_constant() && !elements_[0].is_zero();
}

GroebnerBasis::Division GroebnerBasis::divide(const Polynomial& p) const {
  if (!(p.ring() == ring_)) throw RingMismatch();
  auto d = detail::divide(detail::to_mvec(p, ordered_->order), ordered_->elements,
                          ordered_->order, true);
  Division out{{}, detail::from_mvec(d.remainder, ring_)};
  out.quotients.reserve(d.quotients.size());
  for (auto& q : d.quotients) out.quotients.push_back(Polynomial::from_terms(ring_, std::move(q)));
  return out;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& p) const {
  if (!(p.ring() == ring_)) throw RingMismatch();
  auto d = detail::divide(detail::to_mvec(p, ordered_->order), ordered_->elements,
                          ordered_->order, false);
  return detail::from_mvec(d.remainder, ring_);
}

// Uses the public Polynomial arithmetic rather than the engine's internal
// vectors, so it checks the engine through a separate code path.
bool satisfies_buchberger_criterion(const GroebnerBasis& basis) {
  const auto& els = basis.elements();
  const auto& order = basis.order();
  for (std::size_t i = 0; i < els.size(); ++i) {
    Term ti = els[i].leading_term(order);
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      Term tj = els[j].leading_term(order);
      Monomial l = ti.mono.lcm(tj.mono);
      Polynomial s(basis.ring());
      s.add_scaled(1 / ti.coef, ti.mono.quotient_of(l), els[i]);
      s.add_scaled(-1 / tj.coef, tj.mono.quotient_of(l), els[j]);
      if (!basis.normal_form(s).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace locdec
