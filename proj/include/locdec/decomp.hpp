#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locdec/matrix.hpp"

namespace locdec {

enum class Outcome { Decomposable, NotDecomposable, CriterionInapplicable };
std::string to_string(Outcome o);

enum class KernelStatus { Holds, Fails, Skipped };
std::string to_string(KernelStatus s);

struct MembershipCheck {
  LocalElement element;
  bool member;
};

/// Everything the decision procedures looked at. Checks that were not reached
/// (because an earlier hypothesis failed) stay empty.
struct DecompVerdict {
  Outcome outcome = Outcome::CriterionInapplicable;
  bool transposed = false;

  bool factorization = false;
  std::optional<Polynomial> factorization_witness;
  std::optional<MutualPrimality> primality;

  bool fitting_nonzero = true;
  KernelStatus kernel = KernelStatus::Skipped;
  std::optional<std::vector<Polynomial>> offending_syzygy;
  bool kernel_evaluated = false;

  /// Adjugate entries (square) or generators of I_{m-1} (rectangular).
  std::vector<MembershipCheck> memberships;
  std::optional<LocalElement> failing_member;
  bool memberships_evaluated = false;

  /// Printable summary of the evaluated checks, in a fixed order.
  struct Line {
    std::string name;
    bool passed;
    std::string witness;
  };
  std::vector<Line> lines() const;
};

/// Square criterion: det A = unit * f1 * f2, (f1), (f2) mutually prime, and
/// every adjugate entry locally in (f1, f2).
DecompVerdict check_square(const LRMatrix& a, const Polynomial& f1, const Polynomial& f2);

/// Rectangular criterion. A is transposed first when it has more rows than
/// columns.
DecompVerdict check_rectangular(const LRMatrix& a, const LocalIdeal& j1, const LocalIdeal& j2,
                                bool skip_kernel_check = false);

enum class Verification { Exact, JetVerified };
std::string to_string(Verification v);

struct Certificate {
  LRMatrix u;
  LRMatrix v;
  std::pair<std::size_t, std::size_t> block1;
  std::pair<std::size_t, std::size_t> block2;
  Verification verification = Verification::Exact;
  unsigned jet_order = 0;
  LRMatrix a1;
  LRMatrix a2;

  /// Recomputes U A V and compares it with the stored blocks.
  bool verify(const LRMatrix& a) const;
};

/// Intermediate objects of the projector construction. unit * f1 * f2 = det A,
/// and unit * f_i * P_i = A * B_i.
struct DecompTrace {
  LocalElement unit;
  LRMatrix b1, b2;
  LRMatrix p1, p2;
  LRMatrix q1, q2;
  LRMatrix z;  // P1 * P2 = A * Z
};

struct SquareDecomposition {
  Certificate certificate;
  DecompTrace trace;
};

constexpr unsigned kDefaultMaxOrder = 16;

/// Requires check_square(a, f1, f2) to be Decomposable. The first block
/// carries f1. Throws PrecisionExceeded when only a jet-level statement below
/// max_order is available.
SquareDecomposition construct_certificate_square(const LRMatrix& a, const Polynomial& f1,
                                                 const Polynomial& f2,
                                                 unsigned max_order = kDefaultMaxOrder);

struct SplitNode {
  LRMatrix matrix;
  std::vector<Polynomial> factors;
  /// Verdict of the grouping that was accepted, or of the last one tried.
  std::optional<DecompVerdict> verdict;
  std::optional<Certificate> certificate;
  /// Indices into `factors` that went to the first block.
  std::vector<std::size_t> first_group;
  std::vector<SplitNode> children;

  std::size_t leaf_count() const;
};

/// Tries every two-part grouping of the factors (bitmask order, the first
/// factor always in the first group) and recurses into the blocks.
SplitNode full_split(const LRMatrix& a, const std::vector<Polynomial>& factors,
                     unsigned max_order = kDefaultMaxOrder);

struct MfAugmentation {
  std::optional<LRMatrix> b;
  /// Position and value of the first adjugate entry that does not divide.
  std::optional<std::pair<std::size_t, std::size_t>> offending_position;
  std::optional<LocalElement> offending_entry;
  bool augmentable() const { return b.has_value(); }
};

/// B = adj(A) / prod f^(p-1), rescaled so that A B = B A = (prod f) * identity.
MfAugmentation mf_augment(const LRMatrix& a,
                          const std::vector<std::pair<Polynomial, unsigned>>& factors);

LRMatrix jacobian_matrix(const std::vector<Polynomial>& map, const Ring& ring);

struct JacobianReport {
  LRMatrix jacobian;
  DecompVerdict verdict;
  /// NotDecomposable is a proven obstruction; anything else is not.
  bool obstruction() const { return verdict.outcome == Outcome::NotDecomposable; }
};

JacobianReport jacobian_obstruction(const std::vector<Polynomial>& map, const LocalIdeal& j1,
                                    const LocalIdeal& j2, bool skip_kernel_check = false);

/// check_square(A^k, f1^k, f2^k) after confirming the k = 1 case.
DecompVerdict power_decomposability_check(const LRMatrix& a, const Polynomial& f1,
                                          const Polynomial& f2, unsigned k);

/// U A V = diag(identity_r, reduced) with reduced vanishing at the origin.
struct ChippedMatrix {
  LRMatrix u;
  LRMatrix v;
  std::size_t rank;
  LRMatrix reduced;
};
ChippedMatrix chip_constant_part(const LRMatrix& a);

struct AssumptionReport {
  bool transposed = false;
  bool vanishes_at_origin = false;
  std::size_t corank_at_origin = 0;
  bool maximal_corank = false;
  bool fitting_nonzero = false;
  KernelStatus kernel = KernelStatus::Skipped;
  std::optional<std::vector<Polynomial>> offending_syzygy;
};

/// Kernel condition: every syzygy of the columns has entries locally in I_m.
AssumptionReport check_assumptions(const LRMatrix& a, bool skip_kernel_check = false);

}  // namespace locdec
