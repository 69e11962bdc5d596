#include "locdec/local.hpp"

#include <algorithm>

namespace locdec {

namespace {
constexpr std::size_t kReduceThreshold = 16;
}

LocalElement::LocalElement(Ring ring)
    : num_(ring), den_(Polynomial::constant(ring, 1)) {}

LocalElement::LocalElement(const Polynomial& num)
    : num_(num), den_(Polynomial::constant(num.ring(), 1)) {}

LocalElement::LocalElement(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (!(num_.ring() == den_.ring())) throw RingMismatch();
  normalize();
}

LocalElement LocalElement::constant(const Ring& ring, const Rational& c) {
  return LocalElement(Polynomial::constant(ring, c));
}

void LocalElement::normalize() {
  Rational c = den_.constant_term();
  if (c == 0) throw NotInvertible("denominator " + den_.to_string() + " vanishes at the origin");
  if (c != 1) {
    Rational inv = 1 / c;
    num_ = inv * num_;
    den_ = inv * den_;
  }
  if (num_.is_zero()) den_ = Polynomial::constant(num_.ring(), 1);
}

void LocalElement::maybe_reduce() {
  if (den_.size() > kReduceThreshold) *this = reduced();
}

LocalElement LocalElement::reduced() const {
  if (den_.is_constant() || num_.is_zero()) return *this;
  Polynomial g = poly_gcd(num_, den_);
  if (g.is_constant()) return *this;
  return LocalElement(*num_.try_exact_divide(g), *den_.try_exact_divide(g));
}

Polynomial truncate_to_order(const Polynomial& p, std::size_t order) {
  std::vector<Term> keep;
  for (const auto& t : p.terms())
    if (t.mono.degree() <= order) keep.push_back(t);
  return Polynomial::from_terms(p.ring(), std::move(keep));
}

Polynomial LocalElement::jet(std::size_t order) const {
  if (den_.is_one()) return truncate_to_order(num_, order);
  // den = 1 - h with h in m, so 1/den = sum h^k.
  Polynomial h = Polynomial::constant(ring(), 1) - den_;
  Polynomial inv = Polynomial::constant(ring(), 1);
  Polynomial power = inv;
  for (std::size_t k = 1; k <= order; ++k) {
    power = truncate_to_order(power * h, order);
    if (power.is_zero()) break;
    inv += power;
  }
  return truncate_to_order(truncate_to_order(num_, order) * inv, order);
}

LocalElement LocalElement::operator-() const {
  LocalElement r = *this;
  r.num_ = -r.num_;
  return r;
}

LocalElement& LocalElement::operator+=(const LocalElement& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  if (num_.is_zero()) den_ = Polynomial::constant(num_.ring(), 1);
  maybe_reduce();
  return *this;
}

LocalElement& LocalElement::operator-=(const LocalElement& o) { return *this += -o; }

LocalElement& LocalElement::operator*=(const LocalElement& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = o;
  num_ = num_ * o.num_;
  if (!o.den_.is_one()) den_ = den_ * o.den_;
  maybe_reduce();
  return *this;
}

bool operator==(const LocalElement& a, const LocalElement& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

LocalElement LocalElement::divided_by_unit(const LocalElement& u) const {
  if (!u.is_unit()) throw NotInvertible(u.to_string() + " is not a unit");
  LocalElement r(num_ * u.den_, den_ * u.num_);
  r.maybe_reduce();
  return r;
}

std::string LocalElement::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::optional<LocalElement> try_local_divide(const LocalElement& a, const LocalElement& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return LocalElement(a.ring());
  Polynomial target = a.num() * b.den();
  if (auto q = target.try_exact_divide(b.num())) return LocalElement(*q, a.den());
  auto cert = local_member(LocalElement(target), LocalIdeal(Ideal::principal(b.num())));
  if (!cert) return std::nullopt;
  // u * an * bd = c * bn, so a / b = c / (u * ad).
  return LocalElement(cert->coefficients[0], cert->unit * a.den());
}

LocalIdeal::LocalIdeal(const Ring& ring, const std::vector<LocalElement>& generators)
    : ideal_(Ideal::zero(ring)) {
  std::vector<Polynomial> nums;
  for (const auto& g : generators) nums.push_back(g.num());
  ideal_ = Ideal(ring, std::move(nums));
}

std::vector<LocalElement> LocalCertificate::local_coefficients(const LocalElement& f) const {
  std::vector<LocalElement> out;
  Polynomial d = unit * f.den();
  for (const auto& c : coefficients) out.emplace_back(c, d);
  return out;
}

bool LocalCertificate::verify(const LocalElement& f, const LocalIdeal& ideal) const {
  if (unit.constant_term() == 0) return false;
  const auto& gens = ideal.generators();
  if (coefficients.size() != gens.size()) return false;
  Polynomial sum(ideal.ring());
  for (std::size_t i = 0; i < gens.size(); ++i) sum += coefficients[i] * gens[i];
  return sum == unit * f.num();
}

namespace {

// Shared fast paths; returns true when `cert` has been decided.
bool trivial_membership(const LocalElement& f, const LocalIdeal& ideal,
                        std::optional<LocalCertificate>& cert) {
  if (!(f.ring() == ideal.ring())) throw RingMismatch();
  const Ring& ring = ideal.ring();
  const auto& gens = ideal.generators();
  LocalCertificate base{Polynomial::constant(ring, 1),
                        std::vector<Polynomial>(gens.size(), Polynomial(ring))};
  const Polynomial& fn = f.num();
  if (fn.is_zero()) {
    cert = std::move(base);
    return true;
  }
  if (ideal.is_zero()) {
    cert.reset();
    return true;
  }
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].constant_term() != 0) {
      base.unit = gens[k];
      base.coefficients[k] = fn;
      cert = std::move(base);
      return true;
    }
  }
  if (auto global = member_with_certificate(fn, ideal.ideal())) {
    base.coefficients = std::move(global->coefficients);
    cert = std::move(base);
    return true;
  }
  return false;
}

}  // namespace

const StandardBasis& LocalIdeal::standard_basis(bool tracked) const {
  std::lock_guard lock(cache_->mutex);
  auto& slot = tracked ? cache_->tracked : cache_->plain;
  if (!slot) {
    if (!tracked && cache_->tracked) return *cache_->tracked;
    slot = std::make_shared<const StandardBasis>(local_standard_basis(ideal_, tracked));
  }
  return *slot;
}

namespace {

// f in (g) locally iff g / gcd(f, g) is a unit; then w f = (f / d) g.
std::optional<LocalCertificate> principal_member(const Polynomial& f, const Polynomial& g) {
  Polynomial d = poly_gcd(f, g);
  Polynomial w = *g.try_exact_divide(d);
  if (w.constant_term() == 0) return std::nullopt;
  return LocalCertificate{w, {*f.try_exact_divide(d)}};
}

}  // namespace

const StandardBasis* LocalIdeal::cached_standard_basis() const {
  std::lock_guard lock(cache_->mutex);
  if (cache_->plain) return cache_->plain.get();
  return cache_->tracked.get();
}

std::optional<LocalCertificate> local_member(const LocalElement& f, const LocalIdeal& ideal) {
  std::optional<LocalCertificate> cert;
  if (trivial_membership(f, ideal, cert)) return cert;
  if (ideal.generators().size() == 1) return principal_member(f.num(), ideal.generators()[0]);
  const StandardBasis& sb = ideal.standard_basis(true);
  WeakNormalForm nf = mora_normal_form(f.num(), sb);
  if (!nf.remainder.is_zero()) return std::nullopt;
  const Ring& ring = ideal.ring();
  LocalCertificate out{nf.unit,
                       std::vector<Polynomial>(ideal.generators().size(), Polynomial(ring))};
  for (std::size_t j = 0; j < nf.quotients.size(); ++j) {
    if (nf.quotients[j].is_zero()) continue;
    for (std::size_t i = 0; i < sb.cofactors[j].size(); ++i)
      out.coefficients[i] += nf.quotients[j] * sb.cofactors[j][i];
  }
  if (!out.verify(f, ideal))
    throw InternalInvariantViolation("local normal form certificate does not verify");
  return out;
}

std::optional<LocalCertificate> local_member_via_quotient(const LocalElement& f,
                                                          const LocalIdeal& ideal) {
  std::optional<LocalCertificate> cert;
  if (trivial_membership(f, ideal, cert)) return cert;
  const Polynomial& fn = f.num();
  // f in J locally iff (J : f) contains an element with nonzero constant term.
  // Evaluation at 0 is a ring map, so it is enough to look at generators.
  Ideal quotient = ideal_quotient(ideal.ideal(), fn);
  const Polynomial* best = nullptr;
  for (const auto& q : quotient.generators()) {
    if (q.constant_term() == 0) continue;
    if (!best || q.size() < best->size() ||
        (q.size() == best->size() && q.degree() < best->degree()))
      best = &q;
  }
  if (!best) return std::nullopt;
  auto global = member_with_certificate(*best * fn, ideal.ideal());
  if (!global) throw InternalInvariantViolation("quotient element does not multiply f into J");
  return LocalCertificate{*best, std::move(global->coefficients)};
}

bool is_local_member(const LocalElement& f, const LocalIdeal& ideal) {
  if (!(f.ring() == ideal.ring())) throw RingMismatch();
  if (f.is_zero()) return true;
  if (ideal.is_zero()) return false;
  for (const auto& g : ideal.generators())
    if (g.constant_term() != 0) return true;
  if (ideal.generators().size() == 1)
    return principal_member(f.num(), ideal.generators()[0]).has_value();
  return in_local_ideal(f.num(), ideal.standard_basis(false));
}

std::optional<Polynomial> local_containment_witness(const LocalIdeal& big,
                                                    const LocalIdeal& small) {
  if (!(big.ring() == small.ring())) throw RingMismatch();
  // When small contains m^k and big has no basis yet, Nakayama reduces the
  // question to small ⊆ big + m^(k+1), which is finite linear algebra.
  const StandardBasis* known = small.cached_standard_basis();
  if (!big.cached_standard_basis() && known && known->primary_exponent && !big.is_zero()) {
    TruncatedSpan span(big.ring(), big.ideal().nonzero_generators(), *known->primary_exponent + 1);
    for (const auto& g : small.ideal().nonzero_generators())
      if (!span.contains(g)) return g;
    return std::nullopt;
  }
  for (const auto& g : small.ideal().nonzero_generators())
    if (!is_local_member(LocalElement(g), big)) return g;
  return std::nullopt;
}

bool local_ideal_contains(const LocalIdeal& big, const LocalIdeal& small) {
  return !local_containment_witness(big, small).has_value();
}

bool local_ideal_equal(const LocalIdeal& a, const LocalIdeal& b) {
  return local_ideal_contains(a, b) && local_ideal_contains(b, a);
}

LocalIdeal local_sum(const LocalIdeal& a, const LocalIdeal& b) {
  return LocalIdeal(ideal_sum(a.ideal(), b.ideal()));
}

LocalIdeal local_product(const LocalIdeal& a, const LocalIdeal& b) {
  return LocalIdeal(ideal_product(a.ideal(), b.ideal()));
}

MutualPrimality mutually_prime(const LocalIdeal& j1, const LocalIdeal& j2) {
  Ideal inter = ideal_intersection(j1.ideal(), j2.ideal());
  Ideal prod = ideal_product(j1.ideal(), j2.ideal());
  if (!ideal_contains(inter, prod))
    throw InternalInvariantViolation("product of ideals not contained in their intersection");
  MutualPrimality out{false, std::nullopt, inter};
  out.witness = local_containment_witness(LocalIdeal(prod), LocalIdeal(inter));
  out.prime = !out.witness.has_value();
  return out;
}

Valuation ideal_order(const LocalIdeal& ideal) {
  Valuation v = Valuation::infinity();
  for (const auto& g : ideal.generators()) v = std::min(v, g.order_at_origin());
  return v;
}

namespace {
void monomials_rec(std::size_t nvars, std::size_t var, unsigned remaining,
                   std::vector<Monomial::Exponent>& exps, std::vector<Monomial>& out) {
  if (var + 1 == nvars) {
    exps[var] = remaining;
    out.emplace_back(std::span<const Monomial::Exponent>(exps));
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    exps[var] = e;
    monomials_rec(nvars, var + 1, remaining - e, exps, out);
  }
  exps[var] = 0;
}
}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned k) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (k == 0) out.emplace_back(0);
    return out;
  }
  std::vector<Monomial::Exponent> exps(nvars, 0);
  monomials_rec(nvars, 0, k, exps, out);
  return out;
}

std::optional<unsigned> contains_power_of_maximal_ideal(const LocalIdeal& ideal, unsigned up_to) {
  const Ring& ring = ideal.ring();
  for (unsigned k = 0; k <= up_to; ++k) {
    bool all = true;
    for (const auto& m : monomials_of_degree(ring.size(), k)) {
      if (!is_local_member(LocalElement(Polynomial::term(ring, m, 1)), ideal)) {
        all = false;
        break;
      }
    }
    if (all) return k;
  }
  return std::nullopt;
}

bool is_unit(const LocalElement& e) { return e.is_unit(); }

LocalElement parse_local_element(std::string_view text, const Ring& ring) {
  Lexer lexer(text);
  ParsedFraction f = parse_expression(lexer, ring);
  if (lexer.peek().kind != Token::Kind::End) lexer.fail("operator or end of input");
  if (f.den.constant_term() == 0)
    throw NotInvertible("denominator " + f.den.to_string() +
                        " vanishes at the origin, so the expression is not in the local ring");
  return LocalElement(std::move(f.num), std::move(f.den));
}

}  // namespace locdec
