#include <sstream>

#include "core.hpp"

namespace locdec {

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (!(g.ring() == ring_)) throw RingMismatch();
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
  if (generators_.empty()) generators_.emplace_back(ring_);
}

Ideal Ideal::zero(const Ring& ring) { return Ideal(ring, {}); }

Ideal Ideal::unit(const Ring& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

Ideal Ideal::principal(const Polynomial& f) { return Ideal(f.ring(), {f}); }

bool Ideal::is_zero() const { return generators_.size() == 1 && generators_[0].is_zero(); }

std::span<const Polynomial> Ideal::nonzero_generators() const {
  if (is_zero()) return {};
  return generators_;
}

const GroebnerBasis& Ideal::basis() const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->basis)
    cache_->basis = std::make_shared<const GroebnerBasis>(
        groebner(nonzero_generators(), ring_, MonomialOrder::degrevlex(), true));
  return *cache_->basis;
}

std::string Ideal::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out << ", ";
    out << generators_[i].to_string();
  }
  out << ")";
  return out.str();
}

bool MembershipCertificate::verify(const Ideal& ideal) const {
  const auto& gens = ideal.generators();
  if (coefficients.size() != gens.size()) return false;
  Polynomial sum(ideal.ring());
  for (std::size_t i = 0; i < gens.size(); ++i) sum += coefficients[i] * gens[i];
  return sum == member;
}

std::optional<MembershipCertificate> member_with_certificate(const Polynomial& p,
                                                            const Ideal& ideal) {
  if (!(p.ring() == ideal.ring())) throw RingMismatch();
  const Ring& ring = ideal.ring();
  std::size_t ngens = ideal.generators().size();
  MembershipCertificate cert{p, std::vector<Polynomial>(ngens, Polynomial(ring))};
  if (ideal.is_zero()) {
    if (!p.is_zero()) return std::nullopt;
    return cert;
  }
  const GroebnerBasis& gb = ideal.basis();
  auto div = gb.divide(p);
  if (!div.remainder.is_zero()) return std::nullopt;
  for (std::size_t k = 0; k < div.quotients.size(); ++k) {
    if (div.quotients[k].is_zero()) continue;
    for (std::size_t l = 0; l < ngens; ++l)
      cert.coefficients[l] += div.quotients[k] * gb.cofactors()[k][l];
  }
  return cert;
}

namespace {
void same_ring(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring())) throw RingMismatch();
}
}  // namespace

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  same_ring(a, b);
  std::vector<Polynomial> gens(a.generators());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  same_ring(a, b);
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) gens.push_back(g * h);
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, unsigned k) {
  Ideal r = Ideal::unit(a.ring());
  for (unsigned i = 0; i < k; ++i) r = ideal_product(r, a);
  return r;
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
  Ring ext = a.ring().with_leading_auxiliary();
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(t * g.embed_with_auxiliary(ext));
  for (const auto& h : b.generators()) gens.push_back(one_minus_t * h.embed_with_auxiliary(ext));
  GroebnerBasis gb = groebner(gens, ext, MonomialOrder::elimination(1), false);
  std::vector<Polynomial> out;
  for (const auto& e : gb.elements()) {
    bool has_t = false;
    for (const auto& term : e.terms()) has_t = has_t || term.mono[0] != 0;
    if (!has_t) out.push_back(e.drop_auxiliary(a.ring()));
  }
  return Ideal(a.ring(), std::move(out));
}

Ideal ideal_quotient(const Ideal& a, const Polynomial& f) {
  if (f.is_zero()) throw DivisionByZero();
  Ideal inter = ideal_intersection(a, Ideal::principal(f));
  std::vector<Polynomial> gens;
  for (const auto& g : inter.generators()) {
    auto q = g.try_exact_divide(f);
    if (!q) throw InternalInvariantViolation("intersection generator not divisible by " + f.to_string());
    gens.push_back(std::move(*q));
  }
  return Ideal(a.ring(), std::move(gens));
}

bool ideal_contains(const Ideal& big, const Ideal& small) {
  same_ring(big, small);
  for (const auto& g : small.nonzero_generators())
    if (!big.contains(g)) return false;
  return true;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  return ideal_contains(a, b) && ideal_contains(b, a);
}

Polynomial poly_lcm_by_intersection(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw ZeroPolynomial();
  if (f.is_constant()) return g.monic();
  if (g.is_constant()) return f.monic();
  Ideal inter = ideal_intersection(Ideal::principal(f), Ideal::principal(g));
  if (inter.generators().size() != 1)
    throw InternalInvariantViolation("intersection of principal ideals is not principal");
  return inter.generators()[0].monic();
}

Polynomial poly_gcd_by_intersection(const Polynomial& f, const Polynomial& g) {
  Polynomial l = poly_lcm_by_intersection(f, g);
  auto q = (f * g).try_exact_divide(l);
  if (!q) throw InternalInvariantViolation("lcm does not divide the product");
  return q->monic();
}

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw ZeroPolynomial();
  if (auto h = gcd_heuristic(f, g)) return *h;
  return gcd_prs(f, g);
}

Polynomial poly_lcm(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw ZeroPolynomial();
  return (*(f * g).try_exact_divide(poly_gcd(f, g))).monic();
}

std::vector<std::vector<Polynomial>> syzygies(const std::vector<std::vector<Polynomial>>& columns,
                                              const Ring& ring, const GbLimits& limits) {
  std::size_t n = columns.size();
  if (n == 0) return {};
  std::size_t m = columns[0].size();
  for (const auto& c : columns)
    if (c.size() != m) throw SemanticError("syzygies: columns of different lengths");
  detail::PotOrder pot{MonomialOrder::degrevlex()};
  // (column_j, e_j) in R^{m+n}; basis elements free of the first m components
  // are exactly the syzygies.
  std::vector<detail::MVec> gens;
  for (std::size_t j = 0; j < n; ++j) {
    detail::MVec v;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(columns[j][i].ring() == ring)) throw RingMismatch();
      auto part = detail::to_mvec(columns[j][i], pot, static_cast<std::uint32_t>(i));
      v.insert(v.end(), part.begin(), part.end());
    }
    v.push_back({static_cast<std::uint32_t>(m + j), Monomial(ring.size()), 1});
    gens.push_back(std::move(v));
  }
  auto core = detail::buchberger(gens, pot, false, ring, limits);
  std::vector<std::vector<Polynomial>> out;
  for (const auto& e : core.basis) {
    if (e.front().comp < m) continue;
    std::vector<std::vector<Term>> parts(n);
    for (const auto& t : e) parts[t.comp - m].push_back({t.mono, t.coef});
    std::vector<Polynomial> syz;
    for (auto& p : parts) syz.push_back(Polynomial::from_terms(ring, std::move(p)));
    out.push_back(std::move(syz));
  }
  return out;
}

namespace {
detail::MVec vector_to_mvec(const std::vector<Polynomial>& v, const detail::PotOrder& pot,
                            const Ring& ring) {
  detail::MVec out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(v[i].ring() == ring)) throw RingMismatch();
    auto part = detail::to_mvec(v[i], pot, static_cast<std::uint32_t>(i));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}
}  // namespace

bool module_contains(const std::vector<std::vector<Polynomial>>& generators,
                     const std::vector<Polynomial>& v, const Ring& ring, const GbLimits& limits) {
  detail::PotOrder pot{MonomialOrder::degrevlex()};
  std::vector<detail::MVec> gens;
  for (const auto& g : generators) {
    if (g.size() != v.size()) throw SemanticError("module_contains: vectors of different lengths");
    gens.push_back(vector_to_mvec(g, pot, ring));
  }
  auto core = detail::buchberger(gens, pot, false, ring, limits);
  return detail::divide(vector_to_mvec(v, pot, ring), core.basis, pot, false).remainder.empty();
}

}  // namespace locdec
