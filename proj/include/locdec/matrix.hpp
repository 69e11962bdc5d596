#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "locdec/local.hpp"

namespace locdec {

/// Dense matrix over Q, used for constant parts and jets at the origin.
using QMatrix = std::vector<std::vector<Rational>>;

std::size_t rank(QMatrix m);
/// Indices of a maximal set of linearly independent columns (greedy, left to right).
std::vector<std::size_t> independent_columns(const QMatrix& m);

/// m x n matrix over the local ring. Fitting ideals are cached per index and
/// shared between copies; set() detaches the cache.
class LRMatrix {
 public:
  LRMatrix(Ring ring, std::size_t rows, std::size_t cols);
  LRMatrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<LocalElement> entries);
  static LRMatrix identity(const Ring& ring, std::size_t n);
  static LRMatrix from_polynomials(const Ring& ring,
                                   const std::vector<std::vector<Polynomial>>& rows);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const LocalElement& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  const std::vector<LocalElement>& entries() const { return entries_; }
  void set(std::size_t i, std::size_t j, LocalElement v);

  LRMatrix transpose() const;
  LRMatrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;
  QMatrix constant_part() const;
  bool is_zero() const;
  /// Every entry has zero constant term.
  bool vanishes_at_origin() const;

  friend LRMatrix operator*(const LRMatrix& a, const LRMatrix& b);
  friend LRMatrix operator+(const LRMatrix& a, const LRMatrix& b);
  friend LRMatrix operator-(const LRMatrix& a, const LRMatrix& b);
  friend LRMatrix operator*(const LocalElement& c, const LRMatrix& a);
  friend bool operator==(const LRMatrix& a, const LRMatrix& b);

  LRMatrix pow(unsigned k) const;

  /// Rows of canonical entry strings.
  std::vector<std::vector<std::string>> to_strings() const;

  /// Cached; see fitting_ideal().
  const LocalIdeal& fitting(std::size_t j) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::size_t, std::shared_ptr<const LocalIdeal>> fitting;
  };
  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<LocalElement> entries_;
  std::shared_ptr<Cache> cache_;
};

LocalElement determinant(const LRMatrix& a);
/// Laplace expansion along the first row.
LocalElement determinant_cofactor(const LRMatrix& a);
/// Fraction-free Bareiss elimination on row-cleared numerators.
LocalElement determinant_bareiss(const LRMatrix& a);

LocalElement minor(const LRMatrix& a, const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols);

/// Ideal of all j x j minors; I_0 = (1), and I_j = 0 beyond the matrix size.
LocalIdeal fitting_ideal(const LRMatrix& a, std::size_t j);
/// All k-element subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

LRMatrix adjugate(const LRMatrix& a);

std::size_t corank_at_origin(const LRMatrix& a);
bool is_maximal_corank_at_origin(const LRMatrix& a);

/// Largest c with I_{m-c+1}(A) ⊆ J locally. J is assumed radical by the caller.
std::size_t corank_on_locus(const LRMatrix& a, const LocalIdeal& j);

enum class ChainStepCase { RegularSequence, PrincipalSquareFree };

struct ChainStep {
  bool hypothesis;  // I_i(A) ⊆ J^l
  bool conclusion;  // I_{i+1}(A) ⊆ J^{l+1}
};

/// Evaluates both sides of the Fitting-chain step as local memberships. For
/// PrincipalSquareFree, J must be principal with a square-free generator.
ChainStep fitting_chain_step_check(const LRMatrix& a, const LocalIdeal& j, std::size_t i,
                                   unsigned l, ChainStepCase part);

/// g square-free in the local ring: gcd(g, dg/dx_1, ..., dg/dx_p) is a unit.
bool is_locally_square_free(const Polynomial& g);

struct AuxiliaryB {
  struct Block {
    std::vector<std::size_t> columns;
    LocalElement delta;
  };
  LRMatrix b;  // n x (m * number of blocks)
  std::vector<Block> blocks;
};

/// Block-adjugate matrix with A * B_block = delta_block * identity.
AuxiliaryB buchsbaum_rim_B(const LRMatrix& a);

/// U * A * V after checking that det U and det V are units.
LRMatrix apply_equivalence(const LRMatrix& a, const LRMatrix& u, const LRMatrix& v);

}  // namespace locdec
