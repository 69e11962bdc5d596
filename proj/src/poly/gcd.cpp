#include <algorithm>
#include <map>
#include <optional>

#include "locdec/poly.hpp"

namespace locdec {

namespace {

using Coeffs = std::map<Monomial::Exponent, Polynomial>;

// p = sum_e coeffs[e] * x_v^e with coeffs free of x_v.
Coeffs split(const Polynomial& p, std::size_t v) {
  std::map<Monomial::Exponent, std::vector<Term>> parts;
  for (const auto& t : p.terms()) {
    std::vector<Monomial::Exponent> e(t.mono.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = t.mono[i];
    Monomial::Exponent k = e[v];
    e[v] = 0;
    parts[k].push_back({Monomial(std::span<const Monomial::Exponent>(e)), t.coef});
  }
  Coeffs out;
  for (auto& [k, terms] : parts) out.emplace(k, Polynomial::from_terms(p.ring(), std::move(terms)));
  return out;
}

Monomial::Exponent degree_in(const Polynomial& p, std::size_t v) {
  Monomial::Exponent d = 0;
  for (const auto& t : p.terms()) d = std::max(d, t.mono[v]);
  return d;
}

Polynomial leading_coefficient(const Polynomial& p, std::size_t v) {
  return split(p, v).rbegin()->second;
}

Polynomial divide(const Polynomial& p, const Polynomial& d) {
  auto q = p.try_exact_divide(d);
  if (!q) throw InternalInvariantViolation("gcd: content does not divide");
  return *q;
}

Polynomial gcd_from(const Polynomial& a, const Polynomial& b, std::size_t first);

Polynomial content(const Polynomial& p, std::size_t v) {
  Polynomial g(p.ring());
  for (const auto& [k, c] : split(p, v)) {
    g = g.is_zero() ? c.monic() : gcd_from(g, c, v + 1);
    if (g.is_constant()) break;
  }
  return g;
}

// lc(b)^k * a reduced by b as univariate polynomials in x_v.
Polynomial pseudo_remainder(Polynomial r, const Polynomial& b, std::size_t v) {
  const Monomial::Exponent db = degree_in(b, v);
  const Polynomial lb = leading_coefficient(b, v);
  const std::size_t n = r.ring().size();
  while (!r.is_zero()) {
    Monomial::Exponent dr = degree_in(r, v);
    if (dr < db) break;
    Polynomial lr = leading_coefficient(r, v);
    Polynomial shift = Polynomial::term(r.ring(), Monomial::variable(n, v, dr - db), 1);
    r = lb * r - lr * shift * b;
  }
  return r;
}

Polynomial gcd_from(const Polynomial& a, const Polynomial& b, std::size_t first) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  const Polynomial one = Polynomial::constant(a.ring(), 1);
  if (a.is_constant() || b.is_constant()) return one;
  std::size_t v = first;
  while (v < a.ring().size() && degree_in(a, v) == 0 && degree_in(b, v) == 0) ++v;
  if (v == a.ring().size()) return one;

  Polynomial ca = content(a, v), cb = content(b, v);
  Polynomial c = gcd_from(ca, cb, v + 1);
  Polynomial pa = divide(a, ca), pb = divide(b, cb);
  if (degree_in(pa, v) < degree_in(pb, v)) std::swap(pa, pb);
  Polynomial g = one;
  while (degree_in(pb, v) > 0) {
    Polynomial r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    pa = std::move(pb);
    pb = divide(r, content(r, v)).monic();
  }
  return (c * g).monic();
}

using Int = mpz_class;

Int max_norm(const Polynomial& p) {
  Int n = 0;
  for (const auto& t : p.terms()) n = std::max<Int>(n, abs(t.coef.get_num()));
  return n;
}

// gcd of the coefficients of an integer polynomial.
Int integer_content(const Polynomial& p) {
  Int g = 0;
  for (const auto& t : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num_mpz_t());
  return g;
}

// Integer coefficients with content 1 and positive leading coefficient.
Polynomial integer_primitive(const Polynomial& p) {
  if (p.is_zero()) return p;
  Int l = 1, g = 0;
  for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
  for (const auto& t : p.terms()) {
    Int c = t.coef.get_num() * (l / t.coef.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  Rational scale(l, g);
  scale.canonicalize();
  if (p.terms().front().coef < 0) scale = -scale;
  return scale * p;
}

Polynomial evaluate(const Polynomial& p, std::size_t v, const Int& at) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Int power;
    mpz_pow_ui(power.get_mpz_t(), at.get_mpz_t(), t.mono[v]);
    std::vector<Monomial::Exponent> e(t.mono.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = t.mono[i];
    e[v] = 0;
    out.push_back({Monomial(std::span<const Monomial::Exponent>(e)), t.coef * Rational(power)});
  }
  return Polynomial::from_terms(p.ring(), std::move(out));
}

// Inverse of evaluate: digits of h in base `at`, symmetric remainders.
Polynomial interpolate(Polynomial h, std::size_t v, const Int& at) {
  std::vector<Term> out;
  const Int half = at / 2;
  for (Monomial::Exponent i = 0; !h.is_zero(); ++i) {
    std::vector<Term> digit;
    for (const auto& t : h.terms()) {
      Int r = t.coef.get_num() % at;
      if (r > half) r -= at;
      if (r < -half) r += at;
      if (r != 0) digit.push_back({t.mono, Rational(r)});
    }
    Polynomial c = Polynomial::from_terms(h.ring(), digit);
    for (auto& t : digit) out.push_back({t.mono * Monomial::variable(h.ring().size(), v, i), t.coef});
    h = Rational(1, 1) / Rational(at) * (h - c);
  }
  return Polynomial::from_terms(h.ring(), std::move(out));
}

bool divides(const Polynomial& d, const Polynomial& p) {
  return !d.is_zero() && p.try_exact_divide(d).has_value();
}

// Heuristic gcd of integer polynomials in the variables vars[k..]; the other
// variables no longer occur. nullopt when the evaluation points did not work.
std::optional<Polynomial> heuristic_gcd(const Polynomial& f, const Polynomial& g,
                                        const std::vector<std::size_t>& vars, std::size_t k);

// The common integer content is split off first and multiplied back.
std::optional<Polynomial> heuristic_gcd_with_content(const Polynomial& f, const Polynomial& g,
                                                     const std::vector<std::size_t>& vars,
                                                     std::size_t k) {
  Int c;
  const Int cf = integer_content(f), cg = integer_content(g);
  mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  if (k == vars.size()) return Polynomial::constant(f.ring(), Rational(c));
  const Rational inv(Int(1), c);
  auto h = heuristic_gcd(inv * f, inv * g, vars, k);
  if (!h) return std::nullopt;
  return Rational(c) * *h;
}

std::optional<Polynomial> heuristic_gcd(const Polynomial& f, const Polynomial& g,
                                        const std::vector<std::size_t>& vars, std::size_t k) {
  const std::size_t v = vars[k];
  const Int nf = max_norm(f), ng = max_norm(g);
  const Int b = 2 * std::min(nf, ng) + 29;
  Int at = std::min<Int>(b, 99 * Int(sqrt(b)));
  Int lf = abs(f.terms().front().coef.get_num()), lg = abs(g.terms().front().coef.get_num());
  at = std::max<Int>(at, 2 * std::min<Int>(nf / lf, ng / lg) + 2);
  for (int attempt = 0; attempt < 6; ++attempt) {
    Polynomial ff = evaluate(f, v, at), gg = evaluate(g, v, at);
    if (!ff.is_zero() && !gg.is_zero()) {
      auto h = heuristic_gcd_with_content(ff, gg, vars, k + 1);
      if (!h) return std::nullopt;
      Polynomial cand = integer_primitive(interpolate(*h, v, at));
      if (divides(cand, f) && divides(cand, g)) return cand;
      Polynomial cff = integer_primitive(interpolate(*ff.try_exact_divide(*h), v, at));
      if (divides(cff, f)) {
        Polynomial other = integer_primitive(*f.try_exact_divide(cff));
        if (divides(other, g)) return other;
      }
    }
    at = at * 73794 * Int(sqrt(Int(sqrt(at)))) / 27011;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Polynomial> gcd_heuristic(const Polynomial& a, const Polynomial& b) {
  if (!(a.ring() == b.ring())) throw RingMismatch();
  if (a.is_zero() && b.is_zero()) return a;
  std::vector<std::size_t> vars;
  for (std::size_t v = 0; v < a.ring().size(); ++v)
    if (degree_in(a, v) > 0 || degree_in(b, v) > 0) vars.push_back(v);
  Polynomial fa = integer_primitive(a), fb = integer_primitive(b);
  if (fa.is_zero()) return fb.monic();
  if (fb.is_zero()) return fa.monic();
  auto h = heuristic_gcd_with_content(fa, fb, vars, 0);
  if (!h) return std::nullopt;
  return h->monic();
}

Polynomial gcd_prs(const Polynomial& a, const Polynomial& b) {
  if (!(a.ring() == b.ring())) throw RingMismatch();
  return gcd_from(a, b, 0);
}

}  // namespace locdec
