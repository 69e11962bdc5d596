#include "internal.hpp"
#include "locdec/decomp.hpp"

namespace locdec {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Decomposable: return "Decomposable";
    case Outcome::NotDecomposable: return "NotDecomposable";
    case Outcome::CriterionInapplicable: return "CriterionInapplicable";
  }
  return "?";
}

std::string to_string(KernelStatus s) {
  switch (s) {
    case KernelStatus::Holds: return "holds";
    case KernelStatus::Fails: return "fails";
    case KernelStatus::Skipped: return "skipped";
  }
  return "?";
}

namespace detail {

void require_vanishing_at_origin(const LRMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).constant_term() == 0) continue;
      throw ConstantPartNonzero("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                ") = " + a(i, j).to_string() +
                                " does not vanish at the origin; chip off the constant part "
                                "first (chip_constant_part)");
    }
  }
}

void require_proper_factor(const Polynomial& f, const char* name) {
  if (f.is_zero() || f.constant_term() != 0)
    throw PreconditionViolation(std::string(name) + " must be a nonzero non-unit, got " +
                                f.to_string());
}

void require_proper_ideal(const LocalIdeal& j, const char* name) {
  if (j.is_zero()) throw PreconditionViolation(std::string(name) + " is the zero ideal");
  for (const auto& g : j.generators())
    if (g.constant_term() != 0)
      throw PreconditionViolation(std::string(name) + " contains the unit " + g.to_string());
}

bool locally_associate(const Polynomial& a, const Polynomial& b) {
  return local_ideal_equal(LocalIdeal(Ideal::principal(a)), LocalIdeal(Ideal::principal(b)));
}

std::optional<std::vector<Polynomial>> kernel_violation(const LRMatrix& a) {
  const Ring& ring = a.ring();
  // Column j is scaled by a unit d_j so that it becomes polynomial; a syzygy s
  // of the scaled columns gives the syzygy (s_j d_j) of A.
  std::vector<std::vector<Polynomial>> columns;
  std::vector<Polynomial> scale;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Polynomial d = Polynomial::constant(ring, 1);
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (!d.try_exact_divide(a(i, j).den())) d = d * a(i, j).den();
    std::vector<Polynomial> col;
    for (std::size_t i = 0; i < a.rows(); ++i)
      col.push_back(a(i, j).num() * *d.try_exact_divide(a(i, j).den()));
    columns.push_back(std::move(col));
    scale.push_back(std::move(d));
  }
  const LocalIdeal& top = a.fitting(a.rows());
  for (const auto& s : syzygies(columns, ring)) {
    for (const auto& e : s) {
      if (is_local_member(LocalElement(e), top)) continue;
      std::vector<Polynomial> out;
      for (std::size_t j = 0; j < s.size(); ++j) out.push_back(s[j] * scale[j]);
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace detail

std::vector<DecompVerdict::Line> DecompVerdict::lines() const {
  std::vector<Line> out;
  out.push_back({"factorization", factorization,
                 factorization_witness ? factorization_witness->to_string() : ""});
  if (primality) {
    out.push_back({"mutually_prime", primality->prime,
                   primality->witness ? primality->witness->to_string() : ""});
  }
  if (kernel_evaluated) {
    out.push_back({"fitting_nonzero", fitting_nonzero, ""});
    std::string w;
    if (offending_syzygy) {
      w = "(";
      for (std::size_t i = 0; i < offending_syzygy->size(); ++i)
        w += (i ? ", " : "") + (*offending_syzygy)[i].to_string();
      w += ")";
    } else if (kernel == KernelStatus::Skipped) {
      w = "skipped";
    }
    out.push_back({"kernel_condition", kernel != KernelStatus::Fails, w});
  }
  if (memberships_evaluated) {
    out.push_back({"membership", !failing_member.has_value(),
                   failing_member ? failing_member->to_string() : ""});
  }
  return out;
}

DecompVerdict check_square(const LRMatrix& a, const Polynomial& f1, const Polynomial& f2) {
  if (!a.is_square()) throw NotSquare();
  if (a.rows() < 2) throw PreconditionViolation("check_square needs a matrix of size at least 2");
  if (!(f1.ring() == a.ring()) || !(f2.ring() == a.ring())) throw RingMismatch();
  detail::require_vanishing_at_origin(a);
  detail::require_proper_factor(f1, "f1");
  detail::require_proper_factor(f2, "f2");

  DecompVerdict v;
  LocalElement det = determinant(a);
  v.fitting_nonzero = !det.is_zero();
  v.factorization = v.fitting_nonzero && detail::locally_associate(det.num(), f1 * f2);
  if (!v.factorization) v.factorization_witness = det.num();
  v.primality = mutually_prime(LocalIdeal(Ideal::principal(f1)), LocalIdeal(Ideal::principal(f2)));
  if (!v.factorization || !v.primality->prime) return v;

  LocalIdeal sum(Ideal(a.ring(), {f1, f2}));
  LRMatrix adj = adjugate(a);
  v.memberships_evaluated = true;
  for (const auto& e : adj.entries()) {
    bool member = is_local_member(e, sum);
    v.memberships.push_back({e, member});
    if (!member && !v.failing_member) v.failing_member = e;
  }
  v.outcome = v.failing_member ? Outcome::NotDecomposable : Outcome::Decomposable;
  return v;
}

DecompVerdict check_rectangular(const LRMatrix& input, const LocalIdeal& j1, const LocalIdeal& j2,
                                bool skip_kernel_check) {
  if (!(j1.ring() == input.ring()) || !(j2.ring() == input.ring())) throw RingMismatch();
  DecompVerdict v;
  v.transposed = input.rows() > input.cols();
  const LRMatrix a = v.transposed ? input.transpose() : input;
  detail::require_vanishing_at_origin(a);
  detail::require_proper_ideal(j1, "J1");
  detail::require_proper_ideal(j2, "J2");
  const std::size_t m = a.rows();

  const LocalIdeal& top = a.fitting(m);
  LocalIdeal product = local_product(j1, j2);
  v.factorization_witness = local_containment_witness(product, top);
  if (!v.factorization_witness) v.factorization_witness = local_containment_witness(top, product);
  v.factorization = !v.factorization_witness;
  v.primality = mutually_prime(j1, j2);

  v.kernel_evaluated = true;
  v.fitting_nonzero = !top.is_zero();
  if (skip_kernel_check) {
    v.kernel = KernelStatus::Skipped;
  } else if (v.fitting_nonzero) {
    v.offending_syzygy = detail::kernel_violation(a);
    v.kernel = v.offending_syzygy ? KernelStatus::Fails : KernelStatus::Holds;
  } else {
    v.kernel = KernelStatus::Fails;
  }
  if (!v.factorization || !v.primality->prime || !v.fitting_nonzero ||
      v.kernel == KernelStatus::Fails)
    return v;

  LocalIdeal sum = local_sum(j1, j2);
  v.memberships_evaluated = true;
  for (const auto& g : a.fitting(m - 1).ideal().nonzero_generators()) {
    bool member = is_local_member(LocalElement(g), sum);
    v.memberships.push_back({LocalElement(g), member});
    if (!member && !v.failing_member) v.failing_member = LocalElement(g);
  }
  v.outcome = v.failing_member ? Outcome::NotDecomposable : Outcome::Decomposable;
  return v;
}

LRMatrix jacobian_matrix(const std::vector<Polynomial>& map, const Ring& ring) {
  LRMatrix jac(ring, map.size(), ring.size());
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (!(map[i].ring() == ring)) throw RingMismatch();
    for (std::size_t j = 0; j < ring.size(); ++j) jac.set(i, j, LocalElement(map[i].derivative(j)));
  }
  return jac;
}

JacobianReport jacobian_obstruction(const std::vector<Polynomial>& map, const LocalIdeal& j1,
                                    const LocalIdeal& j2, bool skip_kernel_check) {
  if (map.empty()) throw PreconditionViolation("the map has no components");
  for (const auto& f : map)
    if (f.constant_term() != 0)
      throw PreconditionViolation("map component " + f.to_string() +
                                  " does not vanish at the origin");
  LRMatrix jac = jacobian_matrix(map, j1.ring());
  DecompVerdict verdict = check_rectangular(jac, j1, j2, skip_kernel_check);
  return JacobianReport{std::move(jac), std::move(verdict)};
}

DecompVerdict power_decomposability_check(const LRMatrix& a, const Polynomial& f1,
                                          const Polynomial& f2, unsigned k) {
  if (k == 0) throw PreconditionViolation("power must be at least 1");
  DecompVerdict base = check_square(a, f1, f2);
  if (k == 1) return base;
  if (base.outcome != Outcome::Decomposable)
    throw PreconditionViolation("A itself is not decomposable for this factor pair (" +
                                to_string(base.outcome) + ")");
  return check_square(a.pow(k), f1.pow(k), f2.pow(k));
}

AssumptionReport check_assumptions(const LRMatrix& input, bool skip_kernel_check) {
  AssumptionReport r;
  r.transposed = input.rows() > input.cols();
  const LRMatrix a = r.transposed ? input.transpose() : input;
  r.vanishes_at_origin = a.vanishes_at_origin();
  r.corank_at_origin = corank_at_origin(a);
  r.maximal_corank = is_maximal_corank_at_origin(a);
  r.fitting_nonzero = !a.fitting(a.rows()).is_zero();
  if (skip_kernel_check) {
    r.kernel = KernelStatus::Skipped;
  } else if (!r.fitting_nonzero) {
    r.kernel = KernelStatus::Fails;
  } else {
    r.offending_syzygy = detail::kernel_violation(a);
    r.kernel = r.offending_syzygy ? KernelStatus::Fails : KernelStatus::Holds;
  }
  return r;
}

}  // namespace locdec
