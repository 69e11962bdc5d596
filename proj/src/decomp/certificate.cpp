#include "internal.hpp"
#include "locdec/decomp.hpp"

namespace locdec {

std::string to_string(Verification v) {
  return v == Verification::Exact ? "exact" : "jet";
}

namespace detail {

LRMatrix divide_exactly(const LRMatrix& a, const LocalElement& d, const char* what) {
  LRMatrix out(a.ring(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      auto q = try_local_divide(a(i, j), d);
      if (!q)
        throw InternalInvariantViolation(std::string(what) + ": entry " + a(i, j).to_string() +
                                         " is not divisible by " + d.to_string());
      out.set(i, j, std::move(*q));
    }
  }
  return out;
}

LRMatrix block_diagonal(const LRMatrix& a1, const LRMatrix& a2) {
  LRMatrix out(a1.ring(), a1.rows() + a2.rows(), a1.cols() + a2.cols());
  for (std::size_t i = 0; i < a1.rows(); ++i)
    for (std::size_t j = 0; j < a1.cols(); ++j) out.set(i, j, a1(i, j));
  for (std::size_t i = 0; i < a2.rows(); ++i)
    for (std::size_t j = 0; j < a2.cols(); ++j) out.set(a1.rows() + i, a1.cols() + j, a2(i, j));
  return out;
}

}  // namespace detail

namespace {

LRMatrix inverse_of_invertible(const LRMatrix& a) {
  LocalElement d = determinant(a);
  LRMatrix adj = adjugate(a);
  LRMatrix out(a.ring(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, adj(i, j).divided_by_unit(d));
  return out;
}

LRMatrix select(const LRMatrix& a, std::size_t row0, std::size_t rows,
                const std::vector<std::size_t>& cols) {
  LRMatrix out(a.ring(), rows, cols.size());
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out.set(i, j, a(row0 + i, cols[j]));
  return out;
}

bool off_diagonal_zero(const LRMatrix& m, std::size_t r) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if ((i < r) != (j < r) && !m(i, j).is_zero()) return false;
  return true;
}

bool off_diagonal_order_above(const LRMatrix& m, std::size_t r, unsigned order) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if ((i < r) == (j < r)) continue;
      Valuation v = m(i, j).order_at_origin();
      if (!v.is_infinite() && v.value() <= order) return false;
    }
  }
  return true;
}

}  // namespace

bool Certificate::verify(const LRMatrix& a) const {
  if (!determinant(u).is_unit() || !determinant(v).is_unit()) return false;
  LRMatrix product = u * a * v;
  if (verification == Verification::Exact) return product == detail::block_diagonal(a1, a2);
  const std::size_t r = block1.first;
  if (!off_diagonal_order_above(product, r, jet_order)) return false;
  return product.block(0, 0, r, block1.second) == a1 &&
         product.block(r, block1.second, block2.first, block2.second) == a2;
}

SquareDecomposition construct_certificate_square(const LRMatrix& a, const Polynomial& f1,
                                                 const Polynomial& f2, unsigned max_order) {
  DecompVerdict verdict = check_square(a, f1, f2);
  if (verdict.outcome != Outcome::Decomposable)
    throw PreconditionViolation("the decomposability criterion does not hold (" +
                                to_string(verdict.outcome) + ")");
  const Ring& ring = a.ring();
  const std::size_t m = a.rows();
  const LRMatrix id = LRMatrix::identity(ring, m);

  LocalElement det = determinant(a);
  auto unit = try_local_divide(det, LocalElement(f1 * f2));
  if (!unit || !unit->is_unit())
    throw InternalInvariantViolation("det(A) is not a unit multiple of f1*f2");
  const LocalElement e1 = *unit * LocalElement(f1);
  const LocalElement e2 = *unit * LocalElement(f2);

  // adj(A) = f2 B1 + f1 B2, entry by entry from membership certificates.
  LRMatrix adj = adjugate(a);
  LocalIdeal sum(Ideal(ring, {f1, f2}));
  LRMatrix b1(ring, m, m), b2(ring, m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto cert = local_member(adj(i, j), sum);
      if (!cert) throw InternalInvariantViolation("adjugate entry left the ideal (f1, f2)");
      auto coeffs = cert->local_coefficients(adj(i, j));
      b1.set(i, j, coeffs[1]);
      b2.set(i, j, coeffs[0]);
    }
  }
  if (!(adj == LocalElement(f2) * b1 + LocalElement(f1) * b2))
    throw InternalInvariantViolation("adjugate split does not recombine");

  DecompTrace trace{*unit,
                    b1,
                    b2,
                    detail::divide_exactly(a * b1, e1, "P1"),
                    detail::divide_exactly(a * b2, e2, "P2"),
                    detail::divide_exactly(b1 * a, e1, "Q1"),
                    detail::divide_exactly(b2 * a, e2, "Q2"),
                    id};
  if (!(trace.p1 + trace.p2 == id) || !(trace.q1 + trace.q2 == id))
    throw InternalInvariantViolation("projectors do not sum to the identity");
  LRMatrix p12 = trace.p1 * trace.p2;
  trace.z = detail::divide_exactly(adj * p12, det, "Z");
  if (!(a * trace.z == p12)) throw InternalInvariantViolation("P1 P2 != A Z");

  // Frame: columns of P1 and P2 whose values at the origin are independent.
  // f_i kills their span modulo Im A, so Im A splits along the frame.
  auto cols1 = independent_columns(trace.p1.constant_part());
  auto cols2 = independent_columns(trace.p2.constant_part());
  const std::size_t r = cols1.size();
  if (r == 0 || r == m || cols2.size() != m - r)
    throw InternalInvariantViolation("projector ranks at the origin are not complementary");
  LRMatrix frame(ring, m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < r; ++k) frame.set(i, k, trace.p1(i, cols1[k]));
    for (std::size_t k = 0; k < m - r; ++k) frame.set(i, r + k, trace.p2(i, cols2[k]));
  }
  if (!determinant(frame).is_unit())
    throw InternalInvariantViolation("projector frame is singular at the origin");
  LRMatrix u = inverse_of_invertible(frame);
  LRMatrix ua = u * a;
  LocalElement det_ua = determinant(ua);

  // Pick columns of the two projections of UA forming bases of the summands.
  std::optional<LRMatrix> target;
  for (const auto& s1 : subsets(m, r)) {
    LRMatrix c1 = select(ua, 0, r, s1);
    LocalElement d1 = determinant(c1);
    if (d1.is_zero()) continue;
    for (const auto& s2 : subsets(m, m - r)) {
      LRMatrix c2 = select(ua, r, m - r, s2);
      LocalElement d2 = determinant(c2);
      if (d2.is_zero()) continue;
      auto ratio = try_local_divide(d1 * d2, det_ua);
      if (!ratio || !ratio->is_unit()) continue;
      target = detail::block_diagonal(c1, c2);
      break;
    }
    if (target) break;
  }
  if (!target)
    throw PrecisionExceeded("no block basis found for the split image; criterion holds but no "
                            "certificate below order " + std::to_string(max_order));

  LRMatrix v = detail::divide_exactly(adjugate(ua) * *target, det_ua, "V");
  LRMatrix product = ua * v;
  Certificate cert{u,
                   v,
                   {r, r},
                   {m - r, m - r},
                   Verification::Exact,
                   0,
                   product.block(0, 0, r, r),
                   product.block(r, r, m - r, m - r)};
  if (!off_diagonal_zero(product, r)) {
    if (!off_diagonal_order_above(product, r, max_order))
      throw PrecisionExceeded("off-diagonal blocks do not vanish to order " +
                              std::to_string(max_order));
    cert.verification = Verification::JetVerified;
    cert.jet_order = max_order;
  }
  if (!detail::locally_associate(determinant(cert.a1).num(), f1) ||
      !detail::locally_associate(determinant(cert.a2).num(), f2))
    throw InternalInvariantViolation("block determinants do not match the factors");
  return SquareDecomposition{std::move(cert), std::move(trace)};
}

std::size_t SplitNode::leaf_count() const {
  if (children.empty()) return 1;
  std::size_t n = 0;
  for (const auto& c : children) n += c.leaf_count();
  return n;
}

SplitNode full_split(const LRMatrix& a, const std::vector<Polynomial>& factors,
                     unsigned max_order) {
  if (!a.is_square()) throw NotSquare();
  SplitNode node{a, factors, std::nullopt, std::nullopt, {}, {}};
  const std::size_t k = factors.size();
  if (a.rows() < 2 || k < 2) return node;
  if (k > 16) throw PreconditionViolation("too many factors to enumerate groupings");
  const std::size_t full = (std::size_t{1} << k) - 1;
  for (std::size_t mask = 1; mask < full; mask += 2) {
    std::vector<Polynomial> g1, g2;
    std::vector<std::size_t> idx;
    Polynomial f1 = Polynomial::constant(a.ring(), 1), f2 = f1;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1) {
        g1.push_back(factors[i]);
        idx.push_back(i);
        f1 = f1 * factors[i];
      } else {
        g2.push_back(factors[i]);
        f2 = f2 * factors[i];
      }
    }
    node.verdict = check_square(a, f1, f2);
    if (node.verdict->outcome != Outcome::Decomposable) continue;
    auto dec = construct_certificate_square(a, f1, f2, max_order);
    node.first_group = std::move(idx);
    node.children.push_back(full_split(dec.certificate.a1, g1, max_order));
    node.children.push_back(full_split(dec.certificate.a2, g2, max_order));
    node.certificate = std::move(dec.certificate);
    return node;
  }
  return node;
}

}  // namespace locdec
