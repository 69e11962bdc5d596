#include <algorithm>
#include <map>
#include <sstream>

#include "locdec/poly.hpp"

namespace locdec {

namespace {

const MonomialOrder kStorageOrder = MonomialOrder::degrevlex();

bool storage_greater(const Monomial& a, const Monomial& b) {
  return kStorageOrder.compare(a, b) > 0;
}

struct StorageGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return storage_greater(a, b); }
};

}  // namespace

Polynomial Polynomial::constant(const Ring& ring, const Rational& c) {
  return term(ring, Monomial(ring.size()), c);
}

Polynomial Polynomial::variable(const Ring& ring, std::size_t index) {
  if (index >= ring.size()) throw IndexOutOfRange("variable index out of range");
  return term(ring, Monomial::variable(ring.size(), index), 1);
}

Polynomial Polynomial::variable(const Ring& ring, std::string_view name) {
  auto idx = ring.index_of(name);
  if (!idx) throw UnknownVariable(std::string(name));
  return variable(ring, *idx);
}

Polynomial Polynomial::term(const Ring& ring, const Monomial& mono, const Rational& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({mono, c});
  return p;
}

Polynomial Polynomial::from_terms(const Ring& ring, std::vector<Term> terms) {
  std::map<Monomial, Rational, StorageGreater> acc;
  for (auto& t : terms) {
    if (t.mono.size() != ring.size()) throw RingMismatch();
    acc[t.mono] += t.coef;
  }
  Polynomial p(ring);
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.push_back({m, c});
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coef == 1;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return 0;
}

std::optional<std::size_t> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().mono.degree();
}

Valuation Polynomial::order_at_origin() const {
  if (terms_.empty()) return Valuation::infinity();
  return Valuation::finite(terms_.back().mono.degree());
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw ZeroPolynomial();
  return terms_.front();
}

Term Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw ZeroPolynomial();
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (order.compare(t.mono, best->mono) > 0) best = &t;
  return *best;
}

void Polynomial::check_ring(const Polynomial& q) const {
  if (!(ring_ == q.ring_)) throw RingMismatch();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Polynomial& Polynomial::add_scaled(const Rational& c, const Monomial& mono,
                                   const Polynomial& q) {
  check_ring(q);
  if (c == 0 || q.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + q.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  // Multiplying by a monomial preserves a monomial order, so q's shifted terms
  // stay sorted and a single merge suffices.
  Monomial shifted;
  bool have_shifted = false;
  while (i < terms_.size() || j < q.terms_.size()) {
    if (j < q.terms_.size() && !have_shifted) {
      shifted = q.terms_[j].mono * mono;
      have_shifted = true;
    }
    if (j >= q.terms_.size()) {
      out.push_back(std::move(terms_[i++]));
      continue;
    }
    if (i >= terms_.size()) {
      out.push_back({shifted, c * q.terms_[j].coef});
      ++j;
      have_shifted = false;
      continue;
    }
    auto cmp = kStorageOrder.compare(terms_[i].mono, shifted);
    if (cmp > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (cmp < 0) {
      out.push_back({shifted, c * q.terms_[j].coef});
      ++j;
      have_shifted = false;
    } else {
      Rational s = terms_[i].coef + c * q.terms_[j].coef;
      if (s != 0) out.push_back({std::move(terms_[i].mono), std::move(s)});
      ++i;
      ++j;
      have_shifted = false;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  return add_scaled(1, Monomial(ring_.size()), q);
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  return add_scaled(-1, Monomial(ring_.size()), q);
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  p.check_ring(q);
  if (p.is_zero() || q.is_zero()) return Polynomial(p.ring_);
  const Polynomial& small = p.size() <= q.size() ? p : q;
  const Polynomial& large = p.size() <= q.size() ? q : p;
  if (small.size() == 1) {
    Polynomial r(p.ring_);
    return r.add_scaled(small.terms_[0].coef, small.terms_[0].mono, large);
  }
  std::map<Monomial, Rational, StorageGreater> acc;
  for (const auto& a : p.terms_)
    for (const auto& b : q.terms_) acc[a.mono * b.mono] += a.coef * b.coef;
  Polynomial r(p.ring_);
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.push_back({m, c});
  return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  Polynomial r(p.ring_);
  if (c == 0) return r;
  r.terms_ = p.terms_;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    auto e = t.mono[var];
    if (e == 0) continue;
    std::vector<Monomial::Exponent> exps(t.mono.size());
    for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = t.mono[i];
    exps[var] -= 1;
    out.push_back({Monomial(std::span<const Monomial::Exponent>(exps)), t.coef * e});
  }
  return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Rational inv = 1 / terms_.front().coef;
  return inv * *this;
}

std::optional<Polynomial> Polynomial::try_exact_divide(const Polynomial& d) const {
  check_ring(d);
  if (d.is_zero()) throw DivisionByZero();
  Polynomial quotient(ring_);
  Polynomial rem = *this;
  const Term& lead = d.terms_.front();
  std::vector<Term> q_terms;
  while (!rem.is_zero()) {
    const Term& r = rem.terms_.front();
    if (!lead.mono.divides(r.mono)) return std::nullopt;
    Monomial qm = lead.mono.quotient_of(r.mono);
    Rational qc = r.coef / lead.coef;
    q_terms.push_back({qm, qc});
    rem.add_scaled(-qc, qm, d);
  }
  // Quotient terms come out in descending storage order already.
  quotient.terms_ = std::move(q_terms);
  return quotient;
}

std::optional<Polynomial> try_exact_divide(const Polynomial& p, const Polynomial& d) {
  return p.try_exact_divide(d);
}

Polynomial Polynomial::embed_with_auxiliary(const Ring& extended) const {
  Polynomial r(extended);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono.with_prefix(1), t.coef});
  // Prefixing a zero exponent keeps the degrevlex order of the remaining
  // variables intact, so the storage order is preserved.
  return r;
}

Polynomial Polynomial::drop_auxiliary(const Ring& base) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (t.mono[0] != 0)
      throw InternalInvariantViolation("auxiliary variable survived elimination");
    out.push_back({t.mono.without_prefix(1), t.coef});
  }
  return from_terms(base, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(a.ring_ == b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef)
      return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational mag = abs(t.coef);
    bool negative = sgn(t.coef) < 0;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (t.mono.is_one() || mag != 1) {
      out << mag.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      auto e = t.mono[i];
      if (e == 0) continue;
      if (need_star) out << "*";
      out << ring_.variable(i);
      if (e > 1) out << "^" << e;
      need_star = true;
    }
  }
  return out.str();
}

}  // namespace locdec
