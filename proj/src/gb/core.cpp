#include "core.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace locdec::detail {

MVec to_mvec(const Polynomial& p, const PotOrder& order, std::uint32_t comp) {
  MVec v;
  v.reserve(p.size());
  for (const auto& t : p.terms()) v.push_back({comp, t.mono, t.coef});
  if (order.order.kind() != MonomialOrder::Kind::DegRevLex)
    std::sort(v.begin(), v.end(),
              [&](const MTerm& a, const MTerm& b) { return order.compare(a, b) > 0; });
  return v;
}

Polynomial from_mvec(const MVec& v, const Ring& ring) {
  std::vector<Term> terms;
  terms.reserve(v.size());
  for (const auto& t : v) {
    if (t.comp != 0) throw InternalInvariantViolation("module vector read as polynomial");
    terms.push_back({t.mono, t.coef});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

void sub_scaled(MVec& p, const Rational& c, const Monomial& mono, const MVec& g,
                const PotOrder& order) {
  if (c == 0 || g.empty()) return;
  MVec out;
  out.reserve(p.size() + g.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < p.size() || j < g.size()) {
    if (j >= g.size()) {
      out.push_back(std::move(p[i++]));
      continue;
    }
    Monomial shifted = g[j].mono * mono;
    if (i >= p.size()) {
      out.push_back({g[j].comp, std::move(shifted), -c * g[j].coef});
      ++j;
      continue;
    }
    auto cmp = order.compare(p[i].comp, p[i].mono, g[j].comp, shifted);
    if (cmp > 0) {
      out.push_back(std::move(p[i++]));
    } else if (cmp < 0) {
      out.push_back({g[j].comp, std::move(shifted), -c * g[j].coef});
      ++j;
    } else {
      Rational s = p[i].coef - c * g[j].coef;
      if (s != 0) out.push_back({p[i].comp, std::move(p[i].mono), std::move(s)});
      ++i;
      ++j;
    }
  }
  p = std::move(out);
}

long find_reducer(const MTerm& t, const std::vector<MVec>& basis) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const MTerm& lt = basis[k].front();
    if (lt.comp == t.comp && lt.mono.divides(t.mono)) return static_cast<long>(k);
  }
  return -1;
}

MDivision divide(const MVec& p, const std::vector<MVec>& basis, const PotOrder& order,
                 bool track_quotients) {
  MDivision d;
  if (track_quotients) d.quotients.resize(basis.size());
  MVec h = p;
  std::size_t i = 0;
  while (i < h.size()) {
    long k = find_reducer(h[i], basis);
    if (k < 0) {
      ++i;
      continue;
    }
    const MTerm& lt = basis[k].front();
    Rational c = h[i].coef / lt.coef;
    Monomial m = lt.mono.quotient_of(h[i].mono);
    if (track_quotients) d.quotients[k].push_back({m, c});
    sub_scaled(h, c, m, basis[k], order);
  }
  d.remainder = std::move(h);
  return d;
}

namespace {

using Cofactors = std::vector<Polynomial>;

class Engine {
 public:
  Engine(const PotOrder& order, bool track, const Ring& ring, const GbLimits& limits,
         std::size_t ngens)
      : order_(order), track_(track), ring_(ring), limits_(limits), ngens_(ngens) {}

  CoreResult run(const std::vector<MVec>& generators) {
    for (std::size_t l = 0; l < generators.size(); ++l) {
      if (generators[l].empty()) continue;
      Cofactors cof;
      if (track_) {
        cof.assign(ngens_, Polynomial(ring_));
        cof[l] = Polynomial::constant(ring_, 1);
      }
      MVec g = generators[l];
      reduce(g, cof);
      if (!g.empty()) insert(std::move(g), std::move(cof));
    }
    while (!pairs_.empty()) {
      auto it = pairs_.begin();
      Pair pr = *it;
      pairs_.erase(it);
      pending_.erase({pr.i, pr.j});
      if (chain_criterion(pr)) continue;
      if (++processed_ > limits_.max_pairs)
        throw ResourceBound("Groebner basis exceeded " + std::to_string(limits_.max_pairs) +
                            " S-pairs");
      auto [h, cof] = spoly(pr);
      reduce(h, cof);
      if (!h.empty()) insert(std::move(h), std::move(cof));
    }
    return finish();
  }

 private:
  struct Pair {
    std::size_t deg;
    std::uint32_t comp;
    Monomial lcm;
    std::size_t i;
    std::size_t j;
  };
  struct PairLess {
    const PotOrder* order;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.deg != b.deg) return a.deg < b.deg;
      auto c = order->compare(a.comp, a.lcm, b.comp, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    }
  };

  const Monomial& lm(std::size_t k) const { return basis_[k].front().mono; }
  std::uint32_t lcomp(std::size_t k) const { return basis_[k].front().comp; }

  // Full reduction of h against the current basis, updating cofactors.
  void reduce(MVec& h, Cofactors& cof) const {
    std::size_t i = 0;
    while (i < h.size()) {
      long k = find_reducer(h[i], basis_);
      if (k < 0) {
        ++i;
        continue;
      }
      const MTerm& lt = basis_[k].front();
      Rational c = h[i].coef / lt.coef;
      Monomial m = lt.mono.quotient_of(h[i].mono);
      sub_scaled(h, c, m, basis_[k], order_);
      if (track_)
        for (std::size_t l = 0; l < ngens_; ++l) cof[l].add_scaled(-c, m, cofs_[k][l]);
    }
  }

  void make_monic(MVec& h, Cofactors& cof) const {
    Rational inv = 1 / h.front().coef;
    if (inv == 1) return;
    for (auto& t : h) t.coef *= inv;
    if (track_)
      for (auto& c : cof) c = inv * c;
  }

  void insert(MVec h, Cofactors cof) {
    make_monic(h, cof);
    std::size_t n = basis_.size();
    if (n + 1 > limits_.max_basis)
      throw ResourceBound("Groebner basis exceeded " + std::to_string(limits_.max_basis) +
                          " elements");
    basis_.push_back(std::move(h));
    cofs_.push_back(std::move(cof));
    for (std::size_t k = 0; k < n; ++k) {
      if (lcomp(k) != lcomp(n)) continue;
      // Coprime leading monomials: the S-polynomial reduces to zero. Only valid
      // when both leading terms live in the same (and only) component.
      if (rank_one_ && lm(k).coprime(lm(n))) continue;
      Monomial l = lm(k).lcm(lm(n));
      std::size_t deg = l.degree();
      pairs_.insert({deg, lcomp(n), std::move(l), k, n});
      pending_.insert({k, n});
    }
  }

  bool is_pending(std::size_t a, std::size_t b) const {
    if (a > b) std::swap(a, b);
    return pending_.count({a, b}) != 0;
  }

  bool chain_criterion(const Pair& pr) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == pr.i || k == pr.j || lcomp(k) != pr.comp) continue;
      if (!lm(k).divides(pr.lcm)) continue;
      if (!is_pending(pr.i, k) && !is_pending(pr.j, k)) return true;
    }
    return false;
  }

  std::pair<MVec, Cofactors> spoly(const Pair& pr) const {
    const MVec& a = basis_[pr.i];
    const MVec& b = basis_[pr.j];
    Monomial ma = a.front().mono.quotient_of(pr.lcm);
    Monomial mb = b.front().mono.quotient_of(pr.lcm);
    MVec h;
    sub_scaled(h, -1, ma, a, order_);
    sub_scaled(h, 1, mb, b, order_);
    Cofactors cof;
    if (track_) {
      cof.assign(ngens_, Polynomial(ring_));
      for (std::size_t l = 0; l < ngens_; ++l) {
        cof[l].add_scaled(1, ma, cofs_[pr.i][l]);
        cof[l].add_scaled(-1, mb, cofs_[pr.j][l]);
      }
    }
    return {std::move(h), std::move(cof)};
  }

  CoreResult finish() {
    // Drop elements whose leading term is divisible by another one.
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      bool redundant = false;
      for (std::size_t o = 0; o < basis_.size() && !redundant; ++o) {
        if (o == k || lcomp(o) != lcomp(k) || !lm(o).divides(lm(k))) continue;
        redundant = !(lm(o) == lm(k)) || o < k;
      }
      if (!redundant) keep.push_back(k);
    }
    std::vector<MVec> basis;
    std::vector<Cofactors> cofs;
    for (auto k : keep) {
      basis.push_back(std::move(basis_[k]));
      cofs.push_back(std::move(cofs_[k]));
    }
    basis_ = std::move(basis);
    cofs_ = std::move(cofs);

    // Inter-reduce the tails; leading terms are untouched since the basis is minimal.
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      MVec h = std::move(basis_[k]);
      Cofactors cof = std::move(cofs_[k]);
      MTerm lead = h.front();
      MVec tail(std::make_move_iterator(h.begin() + 1), std::make_move_iterator(h.end()));
      basis_[k] = MVec{};
      // Reduce the tail against the others only.
      std::size_t i = 0;
      while (i < tail.size()) {
        long r = -1;
        for (std::size_t o = 0; o < basis_.size(); ++o) {
          if (o == k) continue;
          const MTerm& lt = basis_[o].front();
          if (lt.comp == tail[i].comp && lt.mono.divides(tail[i].mono)) {
            r = static_cast<long>(o);
            break;
          }
        }
        if (r < 0) {
          ++i;
          continue;
        }
        const MTerm& lt = basis_[r].front();
        Rational c = tail[i].coef / lt.coef;
        Monomial m = lt.mono.quotient_of(tail[i].mono);
        sub_scaled(tail, c, m, basis_[r], order_);
        if (track_)
          for (std::size_t l = 0; l < ngens_; ++l) cof[l].add_scaled(-c, m, cofs_[r][l]);
      }
      MVec full;
      full.reserve(tail.size() + 1);
      full.push_back(std::move(lead));
      for (auto& t : tail) full.push_back(std::move(t));
      basis_[k] = std::move(full);
      cofs_[k] = std::move(cof);
    }

    std::vector<std::size_t> idx(basis_.size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return order_.compare(basis_[a].front(), basis_[b].front()) < 0;
    });
    CoreResult out;
    for (auto k : idx) {
      out.basis.push_back(std::move(basis_[k]));
      if (track_) out.cofactors.push_back(std::move(cofs_[k]));
    }
    return out;
  }

 public:
  bool rank_one_ = true;

 private:
  PotOrder order_;
  bool track_;
  Ring ring_;
  GbLimits limits_;
  std::size_t ngens_;
  std::size_t processed_ = 0;
  std::vector<MVec> basis_;
  std::vector<Cofactors> cofs_;
  std::set<Pair, PairLess> pairs_{PairLess{&order_}};
  std::set<std::pair<std::size_t, std::size_t>> pending_;
};

}  // namespace

CoreResult buchberger(const std::vector<MVec>& generators, const PotOrder& order, bool track,
                      const Ring& ring, const GbLimits& limits) {
  Engine engine(order, track, ring, limits, generators.size());
  for (const auto& g : generators)
    for (const auto& t : g)
      if (t.comp != 0) engine.rank_one_ = false;
  return engine.run(generators);
}

}  // namespace locdec::detail
