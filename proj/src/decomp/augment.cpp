#include "internal.hpp"
#include "locdec/decomp.hpp"

namespace locdec {

MfAugmentation mf_augment(const LRMatrix& a,
                          const std::vector<std::pair<Polynomial, unsigned>>& factors) {
  if (!a.is_square()) throw NotSquare();
  if (factors.empty()) throw PreconditionViolation("mf_augment needs at least one factor");
  const Ring& ring = a.ring();
  const std::size_t m = a.rows();

  Polynomial target = Polynomial::constant(ring, 1);   // prod f^p
  Polynomial reduced = target;                          // prod f
  Polynomial excess = target;                           // prod f^(p-1)
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& [f, p] = factors[i];
    if (!(f.ring() == ring)) throw RingMismatch();
    detail::require_proper_factor(f, "factor");
    if (p == 0) throw PreconditionViolation("multiplicity of " + f.to_string() + " is zero");
    if (!is_locally_square_free(f))
      throw SquareFreeCheckFailed(f.to_string() + " is not square-free in the local ring");
    for (std::size_t j = 0; j < i; ++j)
      if (poly_gcd(f, factors[j].first).constant_term() == 0)
        throw PreconditionViolation(f.to_string() + " and " + factors[j].first.to_string() +
                                    " share a factor through the origin");
    target = target * f.pow(p);
    reduced = reduced * f;
    if (p > 1) excess = excess * f.pow(p - 1);
  }

  LocalElement det = determinant(a);
  auto unit = det.is_zero() ? std::nullopt : try_local_divide(det, LocalElement(target));
  if (!unit || !unit->is_unit())
    throw DetMismatch("det(A) = " + det.to_string() + " is not a unit multiple of " +
                      target.to_string());

  MfAugmentation out;
  LRMatrix adj = adjugate(a);
  LRMatrix b(ring, m, m);
  const LocalElement divisor(excess);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto q = try_local_divide(adj(i, j), divisor);
      if (!q) {
        out.offending_position = {i, j};
        out.offending_entry = adj(i, j);
        return out;
      }
      b.set(i, j, q->divided_by_unit(*unit));
    }
  }
  LRMatrix expected = LocalElement(reduced) * LRMatrix::identity(ring, m);
  if (!(a * b == expected) || !(b * a == expected))
    throw InternalInvariantViolation("augmented matrix does not factor prod f");
  out.b = std::move(b);
  return out;
}

namespace {

void swap_rows(LRMatrix& a, std::size_t i, std::size_t k) {
  if (i == k) return;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    LocalElement t = a(i, j);
    a.set(i, j, a(k, j));
    a.set(k, j, std::move(t));
  }
}

void swap_cols(LRMatrix& a, std::size_t j, std::size_t k) {
  if (j == k) return;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    LocalElement t = a(i, j);
    a.set(i, j, a(i, k));
    a.set(i, k, std::move(t));
  }
}

// row_i -= c * row_k
void row_update(LRMatrix& a, std::size_t i, std::size_t k, const LocalElement& c) {
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!a(k, j).is_zero()) a.set(i, j, a(i, j) - c * a(k, j));
}

// col_j -= c * col_k
void col_update(LRMatrix& a, std::size_t j, std::size_t k, const LocalElement& c) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (!a(i, k).is_zero()) a.set(i, j, a(i, j) - c * a(i, k));
}

}  // namespace

ChippedMatrix chip_constant_part(const LRMatrix& a) {
  const Ring& ring = a.ring();
  const std::size_t m = a.rows(), n = a.cols();
  LRMatrix work = a;
  LRMatrix u = LRMatrix::identity(ring, m);
  LRMatrix v = LRMatrix::identity(ring, n);
  std::size_t r = 0;
  while (r < m && r < n) {
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t i = r; i < m && !pivot; ++i)
      for (std::size_t j = r; j < n && !pivot; ++j)
        if (work(i, j).is_unit()) pivot = {i, j};
    if (!pivot) break;
    swap_rows(work, pivot->first, r);
    swap_rows(u, pivot->first, r);
    swap_cols(work, pivot->second, r);
    swap_cols(v, pivot->second, r);
    const LocalElement p = work(r, r);
    for (std::size_t j = 0; j < n; ++j) work.set(r, j, work(r, j).divided_by_unit(p));
    for (std::size_t j = 0; j < m; ++j) u.set(r, j, u(r, j).divided_by_unit(p));
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || work(i, r).is_zero()) continue;
      const LocalElement c = work(i, r);
      row_update(work, i, r, c);
      row_update(u, i, r, c);
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (j == r || work(r, j).is_zero()) continue;
      const LocalElement c = work(r, j);
      col_update(work, j, r, c);
      col_update(v, j, r, c);
    }
    ++r;
  }
  if (!(u * a * v == work)) throw InternalInvariantViolation("chipping lost track of U A V");
  return ChippedMatrix{std::move(u), std::move(v), r, work.block(r, r, m - r, n - r)};
}

}  // namespace locdec
