#pragma once

#include <optional>
#include <vector>

#include "locdec/matrix.hpp"

namespace locdec::detail {

void require_vanishing_at_origin(const LRMatrix& a);
void require_proper_factor(const Polynomial& f, const char* name);
void require_proper_ideal(const LocalIdeal& j, const char* name);

/// (a) = (b) in the local ring.
bool locally_associate(const Polynomial& a, const Polynomial& b);

/// First syzygy of the columns with an entry outside I_m(A) locally.
std::optional<std::vector<Polynomial>> kernel_violation(const LRMatrix& a);

/// Entrywise exact local division; a failure is an engine bug.
LRMatrix divide_exactly(const LRMatrix& a, const LocalElement& d, const char* what);

LRMatrix block_diagonal(const LRMatrix& a1, const LRMatrix& a2);

}  // namespace locdec::detail
