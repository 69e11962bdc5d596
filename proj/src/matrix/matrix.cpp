#include "locdec/matrix.hpp"

#include <algorithm>

namespace locdec {

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(QMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size();
  std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(QMatrix m) { return echelon(m).size(); }

std::vector<std::size_t> independent_columns(const QMatrix& m) {
  QMatrix copy = m;
  return echelon(copy);
}

LRMatrix::LRMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : LRMatrix(ring, rows, cols, std::vector<LocalElement>(rows * cols, LocalElement(ring))) {}

LRMatrix::LRMatrix(Ring ring, std::size_t rows, std::size_t cols,
                   std::vector<LocalElement> entries)
    : ring_(std::move(ring)),
      rows_(rows),
      cols_(cols),
      entries_(std::move(entries)),
      cache_(std::make_shared<Cache>()) {
  if (entries_.size() != rows * cols) throw SemanticError("matrix entry count does not match its shape");
  for (const auto& e : entries_)
    if (!(e.ring() == ring_)) throw RingMismatch();
}

LRMatrix LRMatrix::identity(const Ring& ring, std::size_t n) {
  LRMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = LocalElement::constant(ring, 1);
  return m;
}

LRMatrix LRMatrix::from_polynomials(const Ring& ring,
                                    const std::vector<std::vector<Polynomial>>& rows) {
  if (rows.empty() || rows[0].empty()) throw SemanticError("matrix must have at least one entry");
  std::size_t cols = rows[0].size();
  std::vector<LocalElement> entries;
  for (const auto& r : rows) {
    if (r.size() != cols) throw SemanticError("ragged matrix rows");
    for (const auto& p : r) entries.emplace_back(p);
  }
  return LRMatrix(ring, rows.size(), cols, std::move(entries));
}

void LRMatrix::set(std::size_t i, std::size_t j, LocalElement v) {
  if (i >= rows_ || j >= cols_) throw IndexOutOfRange("matrix index out of range");
  if (!(v.ring() == ring_)) throw RingMismatch();
  entries_[i * cols_ + j] = std::move(v);
  cache_ = std::make_shared<Cache>();
}

LRMatrix LRMatrix::transpose() const {
  LRMatrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.entries_[j * rows_ + i] = (*this)(i, j);
  return t;
}

LRMatrix LRMatrix::block(std::size_t row0, std::size_t col0, std::size_t rows,
                         std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) throw IndexOutOfRange("block out of range");
  LRMatrix b(ring_, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) b.entries_[i * cols + j] = (*this)(row0 + i, col0 + j);
  return b;
}

QMatrix LRMatrix::constant_part() const {
  QMatrix q(rows_, std::vector<Rational>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) q[i][j] = (*this)(i, j).constant_term();
  return q;
}

bool LRMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.is_zero(); });
}

bool LRMatrix::vanishes_at_origin() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const auto& e) { return e.constant_term() == 0; });
}

LRMatrix operator*(const LRMatrix& a, const LRMatrix& b) {
  if (a.cols_ != b.rows_) throw SemanticError("matrix product: inner dimensions differ");
  if (!(a.ring_ == b.ring_)) throw RingMismatch();
  LRMatrix c(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j).is_zero()) continue;
        c.entries_[i * b.cols_ + j] += aik * b(k, j);
      }
    }
  return c;
}

LRMatrix operator+(const LRMatrix& a, const LRMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw SemanticError("matrix sum: shapes differ");
  LRMatrix c(a.ring_, a.rows_, a.cols_, a.entries_);
  for (std::size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] += b.entries_[k];
  return c;
}

LRMatrix operator-(const LRMatrix& a, const LRMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw SemanticError("matrix difference: shapes differ");
  LRMatrix c(a.ring_, a.rows_, a.cols_, a.entries_);
  for (std::size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] -= b.entries_[k];
  return c;
}

LRMatrix operator*(const LocalElement& s, const LRMatrix& a) {
  LRMatrix c(a.ring_, a.rows_, a.cols_, a.entries_);
  for (auto& e : c.entries_) e *= s;
  return c;
}

bool operator==(const LRMatrix& a, const LRMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

LRMatrix LRMatrix::pow(unsigned k) const {
  if (!is_square()) throw NotSquare();
  LRMatrix r = identity(ring_, rows_);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::vector<std::vector<std::string>> LRMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back((*this)(i, j).to_string());
  return out;
}

const LocalIdeal& LRMatrix::fitting(std::size_t j) const {
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->fitting.find(j);
    if (it != cache_->fitting.end()) return *it->second;
  }
  // Computed outside the lock; a concurrent duplicate computes the same ideal.
  auto computed = std::make_shared<const LocalIdeal>(fitting_ideal(*this, j));
  std::lock_guard lock(cache_->mutex);
  return *cache_->fitting.emplace(j, computed).first->second;
}

// ---------------------------------------------------------------------------

namespace {
LRMatrix submatrix(const LRMatrix& a, const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols) {
  std::vector<LocalElement> e;
  e.reserve(rows.size() * cols.size());
  for (auto r : rows)
    for (auto c : cols) {
      if (r >= a.rows() || c >= a.cols()) throw IndexOutOfRange("minor index out of range");
      e.push_back(a(r, c));
    }
  return LRMatrix(a.ring(), rows.size(), cols.size(), std::move(e));
}

std::vector<std::size_t> all_but(std::size_t n, std::size_t skip) {
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i < n; ++i)
    if (i != skip) v.push_back(i);
  return v;
}
}  // namespace

LocalElement determinant_cofactor(const LRMatrix& a) {
  if (!a.is_square()) throw NotSquare();
  std::size_t n = a.rows();
  if (n == 1) return a(0, 0);
  if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  LocalElement det(a.ring());
  auto rows = all_but(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j).is_zero()) continue;
    LocalElement term = a(0, j) * determinant_cofactor(submatrix(a, rows, all_but(n, j)));
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

LocalElement determinant_bareiss(const LRMatrix& a) {
  if (!a.is_square()) throw NotSquare();
  const Ring& ring = a.ring();
  std::size_t n = a.rows();
  std::vector<std::vector<Polynomial>> m(n);
  Polynomial scale = Polynomial::constant(ring, 1);
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial d = Polynomial::constant(ring, 1);
    for (std::size_t j = 0; j < n; ++j) {
      const Polynomial& den = a(i, j).den();
      if (!den.is_one() && !d.try_exact_divide(den)) d = d * *den.try_exact_divide(poly_gcd(d, den));
    }
    for (std::size_t j = 0; j < n; ++j)
      m[i].push_back(a(i, j).num() * *d.try_exact_divide(a(i, j).den()));
    scale = scale * d;
  }
  Polynomial prev = Polynomial::constant(ring, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return LocalElement(ring);
      std::swap(m[p], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = v.try_exact_divide(prev);
        if (!q) throw InternalInvariantViolation("Bareiss step not exact");
        m[i][j] = std::move(*q);
      }
    }
    prev = m[k][k];
  }
  Polynomial det = m[n - 1][n - 1];
  if (negate) det = -det;
  return LocalElement(det, scale);
}

LocalElement determinant(const LRMatrix& a) {
  if (!a.is_square()) throw NotSquare();
  return a.rows() <= 4 ? determinant_cofactor(a) : determinant_bareiss(a);
}

LocalElement minor(const LRMatrix& a, const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols) {
  if (rows.size() != cols.size()) throw IndexOutOfRange("minor needs as many rows as columns");
  if (rows.empty()) return LocalElement::constant(a.ring(), 1);
  return determinant(submatrix(a, rows, cols));
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

LocalIdeal fitting_ideal(const LRMatrix& a, std::size_t j) {
  const Ring& ring = a.ring();
  if (j == 0) return LocalIdeal(Ideal::unit(ring));
  if (j > std::min(a.rows(), a.cols())) return LocalIdeal(Ideal::zero(ring));
  std::vector<Polynomial> gens;
  for (const auto& rows : subsets(a.rows(), j))
    for (const auto& cols : subsets(a.cols(), j)) {
      Polynomial g = minor(a, rows, cols).num();
      if (g.is_zero()) continue;
      if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(std::move(g));
    }
  return LocalIdeal(Ideal(ring, std::move(gens)));
}

LRMatrix adjugate(const LRMatrix& a) {
  if (!a.is_square()) throw NotSquare();
  std::size_t n = a.rows();
  LRMatrix adj(a.ring(), n, n);
  if (n == 1) {
    adj.set(0, 0, LocalElement::constant(a.ring(), 1));
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      LocalElement m = minor(a, all_but(n, i), all_but(n, j));
      adj.set(j, i, (i + j) % 2 == 0 ? m : -m);
    }
  return adj;
}

std::size_t corank_at_origin(const LRMatrix& a) {
  return std::min(a.rows(), a.cols()) - rank(a.constant_part());
}

bool is_maximal_corank_at_origin(const LRMatrix& a) {
  std::size_t m = std::min(a.rows(), a.cols());
  Valuation ord = ideal_order(a.fitting(m));
  return ord == Valuation::finite(corank_at_origin(a));
}

std::size_t corank_on_locus(const LRMatrix& a, const LocalIdeal& j) {
  for (const auto& g : j.generators())
    if (g.constant_term() != 0) throw PreconditionViolation("corank_on_locus: ideal is not proper");
  std::size_t m = std::min(a.rows(), a.cols());
  for (std::size_t c = m; c > 0; --c)
    if (local_ideal_contains(j, a.fitting(m - c + 1))) return c;
  return 0;
}

bool is_locally_square_free(const Polynomial& g) {
  if (g.is_zero()) return false;
  Polynomial d = g;
  for (std::size_t k = 0; k < g.ring().size() && !d.is_constant(); ++k) {
    Polynomial dk = g.derivative(k);
    if (dk.is_zero()) continue;
    d = poly_gcd(d, dk);
  }
  return d.constant_term() != 0;
}

ChainStep fitting_chain_step_check(const LRMatrix& a, const LocalIdeal& j, std::size_t i,
                                   unsigned l, ChainStepCase part) {
  if (part == ChainStepCase::PrincipalSquareFree) {
    auto gens = j.ideal().nonzero_generators();
    if (gens.size() != 1)
      throw SquareFreeCheckFailed("ideal " + j.to_string() + " is not principal");
    if (!is_locally_square_free(gens[0]))
      throw SquareFreeCheckFailed(gens[0].to_string() + " is not square-free");
  }
  LocalIdeal jl(ideal_power(j.ideal(), l));
  LocalIdeal jl1(ideal_power(j.ideal(), l + 1));
  return {local_ideal_contains(jl, a.fitting(i)), local_ideal_contains(jl1, a.fitting(i + 1))};
}

AuxiliaryB buchsbaum_rim_B(const LRMatrix& a) {
  std::size_t m = a.rows();
  std::size_t n = a.cols();
  if (m > n) throw PreconditionViolation("buchsbaum_rim_B needs rows <= cols");
  if (a.fitting(m).is_zero()) throw PreconditionViolation("maximal minors of A all vanish");
  auto blocks = subsets(n, m);
  LRMatrix b(a.ring(), n, m * blocks.size());
  std::vector<AuxiliaryB::Block> info;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const auto& cols = blocks[k];
    LRMatrix sq(a.ring(), m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t c = 0; c < m; ++c) sq.set(i, c, a(i, cols[c]));
    LRMatrix adj = adjugate(sq);
    LocalElement delta = determinant(sq);
    LRMatrix bk(a.ring(), n, m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) {
        bk.set(cols[r], c, adj(r, c));
        b.set(cols[r], k * m + c, adj(r, c));
      }
    if (!(a * bk == delta * LRMatrix::identity(a.ring(), m)))
      throw InternalInvariantViolation("A * B_block differs from delta * identity");
    info.push_back({cols, delta});
  }
  return {std::move(b), std::move(info)};
}

LRMatrix apply_equivalence(const LRMatrix& a, const LRMatrix& u, const LRMatrix& v) {
  if (!u.is_square() || u.rows() != a.rows())
    throw SemanticError("U must be " + std::to_string(a.rows()) + "x" + std::to_string(a.rows()));
  if (!v.is_square() || v.rows() != a.cols())
    throw SemanticError("V must be " + std::to_string(a.cols()) + "x" + std::to_string(a.cols()));
  LocalElement du = determinant(u);
  if (!du.is_unit()) throw NotInvertible("U is not invertible: det(U) = " + du.to_string());
  LocalElement dv = determinant(v);
  if (!dv.is_unit()) throw NotInvertible("V is not invertible: det(V) = " + dv.to_string());
  return u * a * v;
}

}  // namespace locdec
