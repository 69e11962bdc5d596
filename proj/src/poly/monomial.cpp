#include <algorithm>
#include <regex>
#include <set>

#include "locdec/poly.hpp"

namespace locdec {

bool is_valid_identifier(std::string_view name) {
  static const std::regex pattern("[a-zA-Z][a-zA-Z0-9_]*");
  return std::regex_match(name.begin(), name.end(), pattern);
}

Ring::Ring(std::vector<std::string> variables) {
  if (variables.empty()) throw InputError("a ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (!is_valid_identifier(v)) throw InputError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw InputError("duplicate variable name '" + v + "'");
  }
  vars_ = std::make_shared<const std::vector<std::string>>(std::move(variables));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  auto it = std::find(vars_->begin(), vars_->end(), name);
  if (it == vars_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_->begin());
}

Ring Ring::with_leading_auxiliary() const {
  std::string name = "t";
  while (index_of(name)) name += "_";
  std::vector<std::string> vars;
  vars.reserve(size() + 1);
  vars.push_back(name);
  vars.insert(vars.end(), vars_->begin(), vars_->end());
  return Ring(std::move(vars));
}

Monomial::Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {
  for (auto e : exps_) degree_ += e;
}

Monomial::Monomial(std::span<const Exponent> exps) : exps_(exps.begin(), exps.end()) {
  for (auto e : exps_) degree_ += e;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  Monomial m(nvars);
  m.exps_[index] = power;
  m.degree_ = power;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] = other.exps_[i] - exps_[i];
  q.degree_ = other.degree_ - degree_;
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial l(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    l.exps_[i] = std::max(exps_[i], other.exps_[i]);
    l.degree_ += l.exps_[i];
  }
  return l;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::with_prefix(std::size_t count) const {
  Monomial m(exps_.size() + count);
  std::copy(exps_.begin(), exps_.end(), m.exps_.begin() + count);
  m.degree_ = degree_;
  return m;
}

Monomial Monomial::without_prefix(std::size_t count) const {
  return Monomial(std::span<const Exponent>(exps_.data() + count, exps_.size() - count));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m(a.exps_.size());
  for (std::size_t i = 0; i < a.exps_.size(); ++i) m.exps_[i] = a.exps_[i] + b.exps_[i];
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

namespace {

// degrevlex restricted to variables [lo, hi).
std::strong_ordering degrevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                     std::size_t hi) {
  std::size_t da = 0;
  std::size_t db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::DegRevLex: {
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return b[i] <=> a[i];
      }
      return std::strong_ordering::equal;
    }
    case Kind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case Kind::Elimination: {
      auto first = degrevlex_range(a, b, 0, block_);
      if (first != 0) return first;
      return degrevlex_range(a, b, block_, a.size());
    }
    case Kind::Homogenizing: {
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      if (a[0] != b[0]) return a[0] <=> b[0];
      return degrevlex_range(a, b, 1, a.size());
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::DegRevLex: return "degrevlex";
    case Kind::Lex: return "lex";
    case Kind::Elimination: return "elimination(" + std::to_string(block_) + ")";
    case Kind::Homogenizing: return "homogenizing";
  }
  return "?";
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
  if (a.is_infinite()) return std::strong_ordering::greater;
  if (b.is_infinite()) return std::strong_ordering::less;
  return a.value() <=> b.value();
}

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) return Valuation::infinity();
  return Valuation::finite(a.value() + b.value());
}

std::string Valuation::to_string() const {
  return is_infinite() ? std::string("inf") : std::to_string(*value_);
}

}  // namespace locdec
