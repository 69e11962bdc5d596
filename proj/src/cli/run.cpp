#include <algorithm>
#include <chrono>

#include "locdec/cli.hpp"

namespace locdec::cli {

using nlohmann::ordered_json;

namespace {

constexpr std::pair<Command, const char*> kCommands[] = {
    {Command::Fitting, "fitting"}, {Command::Check, "check"},
    {Command::Decompose, "decompose"}, {Command::Split, "split"},
    {Command::Mf, "mf"}, {Command::Jacobian, "jacobian"},
    {Command::Assumptions, "assumptions"}};

ordered_json strings(const LRMatrix& m) { return m.to_strings(); }

ordered_json strings(std::span<const Polynomial> ps) {
  ordered_json out = ordered_json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

// Standard basis elements, monic and sorted, so that (y - x^2, y + x^2)
// prints as (y, x^2).
std::string display(const LocalIdeal& j) {
  std::vector<Polynomial> els;
  for (const auto& g : j.standard_basis(false).elements) els.push_back(g.monic());
  std::sort(els.begin(), els.end(), [](const Polynomial& a, const Polynomial& b) {
    auto da = a.degree().value_or(0), db = b.degree().value_or(0);
    if (da != db) return da < db;
    return a.to_string() < b.to_string();
  });
  std::string s = "(";
  for (std::size_t i = 0; i < els.size(); ++i) s += (i ? ", " : "") + els[i].to_string();
  return s + ")";
}

int exit_for(Outcome o) {
  switch (o) {
    case Outcome::Decomposable: return exit_code::kOk;
    case Outcome::NotDecomposable: return exit_code::kNegative;
    case Outcome::CriterionInapplicable: return exit_code::kInapplicable;
  }
  return exit_code::kInternalError;
}

void add_verdict_checks(ReportDocument& r, const DecompVerdict& v, const LocalIdeal& sum) {
  for (auto& line : v.lines()) {
    if (line.name == "membership" && !line.passed) line.witness += " not in " + display(sum);
    r.checks.push_back({line.name, line.passed, line.witness});
  }
}

ordered_json memberships(const DecompVerdict& v) {
  ordered_json out = ordered_json::array();
  for (const auto& m : v.memberships)
    out.push_back({{"element", m.element.to_string()}, {"member", m.member}});
  return out;
}

ReportDocument::CertificateDoc certificate_doc(const Certificate& c) {
  return {c.u.to_strings(), c.v.to_strings(), {c.block1, c.block2}, to_string(c.verification),
          c.jet_order};
}

ordered_json certificate_json(const ReportDocument::CertificateDoc& c) {
  ordered_json blocks = ordered_json::array();
  for (const auto& [r, k] : c.blocks) blocks.push_back({r, k});
  return {{"U", c.u},
          {"V", c.v},
          {"blocks", blocks},
          {"verification", c.verification},
          {"jet_order", c.jet_order}};
}

void require_pair(const std::string& a, const std::string& b, const char* flags) {
  if (a.empty() || b.empty()) throw SemanticError(std::string("missing ") + flags);
}

void run_fitting(ReportDocument& r, const ProblemFile& p, const Flags& f) {
  if (!f.fitting_index) throw SemanticError("fitting needs the index -j");
  const LRMatrix& a = p.matrix(f.matrix);
  LocalIdeal j = fitting_ideal(a, *f.fitting_index);
  r.verdict = "ok";
  r.result = {{"index", *f.fitting_index},
              {"generators", strings(j.ideal().nonzero_generators())},
              {"zero", j.is_zero()}};
}

void run_check(ReportDocument& r, const ProblemFile& p, const Flags& f) {
  const LRMatrix& a = p.matrix(f.matrix);
  const bool square = !f.f1.empty() || !f.f2.empty();
  const bool rect = !f.j1.empty() || !f.j2.empty();
  if (square == rect) throw SemanticError("check needs either --f1/--f2 or --j1/--j2");
  DecompVerdict v;
  if (square) {
    require_pair(f.f1, f.f2, "--f1/--f2");
    const Polynomial &f1 = p.poly(f.f1), &f2 = p.poly(f.f2);
    v = check_square(a, f1, f2);
    add_verdict_checks(r, v, LocalIdeal(Ideal(p.ring, {f1, f2})));
  } else {
    require_pair(f.j1, f.j2, "--j1/--j2");
    LocalIdeal j1 = p.ideal(f.j1), j2 = p.ideal(f.j2);
    v = check_rectangular(a, j1, j2, f.skip_kernel_check);
    add_verdict_checks(r, v, local_sum(j1, j2));
  }
  r.verdict = to_string(v.outcome);
  r.exit_code = exit_for(v.outcome);
  r.result = {{"transposed", v.transposed}, {"memberships", memberships(v)}};
}

void run_decompose(ReportDocument& r, const ProblemFile& p, const Flags& f) {
  require_pair(f.f1, f.f2, "--f1/--f2");
  const LRMatrix& a = p.matrix(f.matrix);
  const Polynomial &f1 = p.poly(f.f1), &f2 = p.poly(f.f2);
  DecompVerdict v = check_square(a, f1, f2);
  add_verdict_checks(r, v, LocalIdeal(Ideal(p.ring, {f1, f2})));
  r.verdict = to_string(v.outcome);
  r.exit_code = exit_for(v.outcome);
  if (v.outcome != Outcome::Decomposable) return;
  auto dec = construct_certificate_square(a, f1, f2, f.max_order);
  const bool ok = dec.certificate.verify(a);
  r.checks.push_back({"certificate_verifies", ok, ok ? "" : "U A V differs from the blocks"});
  if (!ok) throw InternalInvariantViolation("certificate failed verification");
  r.certificate = certificate_doc(dec.certificate);
  r.result = {{"A1", strings(dec.certificate.a1)},
              {"A2", strings(dec.certificate.a2)},
              {"unit", dec.trace.unit.to_string()}};
}

ordered_json split_json(const SplitNode& n) {
  ordered_json out;
  out["matrix"] = strings(n.matrix);
  out["factors"] = strings(n.factors);
  ordered_json group = ordered_json::array();
  for (auto i : n.first_group) group.push_back(i + 1);
  out["first_group"] = group;
  out["certificate"] = n.certificate ? certificate_json(certificate_doc(*n.certificate))
                                     : ordered_json(nullptr);
  ordered_json children = ordered_json::array();
  for (const auto& c : n.children) children.push_back(split_json(c));
  out["children"] = children;
  return out;
}

void run_split(ReportDocument& r, const ProblemFile& p, const Flags& f) {
  if (f.factors.size() < 2) throw SemanticError("split needs at least two --factors");
  std::vector<Polynomial> factors;
  for (const auto& name : f.factors) factors.push_back(p.poly(name));
  SplitNode root = full_split(p.matrix(f.matrix), factors, f.max_order);
  if (root.verdict) {
    r.exit_code = exit_for(root.verdict->outcome);
    r.verdict = to_string(root.verdict->outcome);
    for (const auto& line : root.verdict->lines())
      r.checks.push_back({line.name, line.passed, line.witness});
  } else {
    r.verdict = "NotDecomposable";
    r.exit_code = exit_code::kNegative;
  }
  r.result = {{"leaves", root.leaf_count()}, {"tree", split_json(root)}};
}

std::pair<std::string, unsigned> factor_with_multiplicity(const std::string& token) {
  auto caret = token.find('^');
  if (caret == std::string::npos) return {token, 1};
  const std::string exp = token.substr(caret + 1);
  if (exp.empty() || !std::all_of(exp.begin(), exp.end(), ::isdigit) || exp.size() > 6)
    throw SemanticError("bad multiplicity in factor '" + token + "'");
  return {token.substr(0, caret), static_cast<unsigned>(std::stoul(exp))};
}

void run_mf(ReportDocument& r, const ProblemFile& p, const Flags& f) {
  if (f.factors.empty()) throw SemanticError("mf needs --factors");
  std::vector<std::pair<Polynomial, unsigned>> factors;
  for (const auto& token : f.factors) {
    auto [name, mult] = factor_with_multiplicity(token);
    factors.emplace_back(p.poly(name), mult);
  }
  const LRMatrix& a = p.matrix(f.matrix);
  MfAugmentation aug = mf_augment(a, factors);
  if (aug.augmentable()) {
    r.verdict = "Augmentable";
    r.checks.push_back({"adjugate_divisible", true, ""});
    r.checks.push_back({"product_identity", true, ""});
    r.result = {{"B", strings(*aug.b)}};
  } else {
    const auto [i, j] = *aug.offending_position;
    r.verdict = "NotAugmentable";
    r.exit_code = exit_code::kNegative;
    r.checks.push_back({"adjugate_divisible", false,
                        "adj(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                            ") = " + aug.offending_entry->to_string()});
    r.result = {{"offending_position", {i + 1, j + 1}},
                {"offending_entry", aug.offending_entry->to_string()}};
  }
}

void run_jacobian(ReportDocument& r, const ProblemFile& p, const Flags& f) {
  require_pair(f.j1, f.j2, "--j1/--j2");
  LocalIdeal j1 = p.ideal(f.j1), j2 = p.ideal(f.j2);
  JacobianReport rep = jacobian_obstruction(p.map(f.map), j1, j2, f.skip_kernel_check);
  add_verdict_checks(r, rep.verdict, local_sum(j1, j2));
  switch (rep.verdict.outcome) {
    case Outcome::NotDecomposable:
      r.verdict = "Obstruction";
      r.exit_code = exit_code::kNegative;
      break;
    case Outcome::Decomposable: r.verdict = "NoObstruction"; break;
    case Outcome::CriterionInapplicable:
      r.verdict = to_string(Outcome::CriterionInapplicable);
      r.exit_code = exit_code::kInapplicable;
      break;
  }
  r.result = {{"jacobian", strings(rep.jacobian)},
              {"criterion", to_string(rep.verdict.outcome)},
              {"transposed", rep.verdict.transposed}};
}

void run_assumptions(ReportDocument& r, const ProblemFile& p, const Flags& f) {
  AssumptionReport a = check_assumptions(p.matrix(f.matrix), f.skip_kernel_check);
  std::string syz;
  if (a.offending_syzygy) {
    syz = "(";
    for (std::size_t i = 0; i < a.offending_syzygy->size(); ++i)
      syz += (i ? ", " : "") + (*a.offending_syzygy)[i].to_string();
    syz += ")";
  }
  r.checks.push_back({"vanishes_at_origin", a.vanishes_at_origin, ""});
  r.checks.push_back({"fitting_nonzero", a.fitting_nonzero, ""});
  r.checks.push_back({"kernel_condition", a.kernel != KernelStatus::Fails,
                      a.kernel == KernelStatus::Skipped ? "skipped" : syz});
  const bool hold = std::all_of(r.checks.begin(), r.checks.end(),
                                [](const auto& c) { return c.passed; });
  r.verdict = hold ? "AssumptionsHold" : "AssumptionsFail";
  r.exit_code = hold ? exit_code::kOk : exit_code::kNegative;
  r.result = {{"transposed", a.transposed},
              {"corank_at_origin", a.corank_at_origin},
              {"maximal_corank", a.maximal_corank},
              {"kernel", to_string(a.kernel)}};
}

ordered_json config_json(const Flags& f) {
  auto opt = [](const std::string& s) { return s.empty() ? ordered_json(nullptr) : ordered_json(s); };
  return {{"global_order", "degrevlex"},
          {"local_order", "lowest degree first, ties by degrevlex"},
          {"matrix", opt(f.matrix)},
          {"fitting_index", f.fitting_index ? ordered_json(*f.fitting_index) : ordered_json(nullptr)},
          {"f1", opt(f.f1)},
          {"f2", opt(f.f2)},
          {"j1", opt(f.j1)},
          {"j2", opt(f.j2)},
          {"factors", f.factors},
          {"map", opt(f.map)},
          {"skip_kernel_check", f.skip_kernel_check},
          {"max_order", f.max_order},
          {"seed", f.seed ? ordered_json(*f.seed) : ordered_json(nullptr)}};
}

void fail(ReportDocument& r, const char* verdict, int code, const std::string& message) {
  r.verdict = verdict;
  r.exit_code = code;
  r.checks.clear();
  r.certificate.reset();
  r.result = {{"error", message}};
}

template <class Body>
ReportDocument guarded(Command command, const Flags& flags, Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  ReportDocument r;
  r.command = to_string(command);
  r.result = ordered_json::object();
  r.config = config_json(flags);
  try {
    body(r);
  } catch (const InputError& e) {
    fail(r, "InputError", exit_code::kInputError, e.what());
  } catch (const ResourceBound& e) {
    fail(r, "ResourceBound", exit_code::kResourceBound, e.what());
  } catch (const PrecisionExceeded& e) {
    fail(r, "ResourceBound", exit_code::kResourceBound, e.what());
  } catch (const std::exception& e) {
    fail(r, "InternalError", exit_code::kInternalError, e.what());
  }
  if (flags.timing)
    r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                      .count();
  return r;
}

void dispatch(ReportDocument& r, Command command, const ProblemFile& p, const Flags& f) {
  r.ring = ring_to_string(p.ring);
  switch (command) {
    case Command::Fitting: return run_fitting(r, p, f);
    case Command::Check: return run_check(r, p, f);
    case Command::Decompose: return run_decompose(r, p, f);
    case Command::Split: return run_split(r, p, f);
    case Command::Mf: return run_mf(r, p, f);
    case Command::Jacobian: return run_jacobian(r, p, f);
    case Command::Assumptions: return run_assumptions(r, p, f);
  }
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [c, n] : kCommands)
    if (name == n) return c;
  return std::nullopt;
}

std::string to_string(Command c) {
  for (const auto& [k, n] : kCommands)
    if (k == c) return n;
  return "?";
}

ReportDocument run_command(Command command, const ProblemFile& problem, const Flags& flags) {
  return guarded(command, flags, [&](ReportDocument& r) { dispatch(r, command, problem, flags); });
}

ReportDocument run_command(Command command, std::string_view problem_text, const Flags& flags) {
  return guarded(command, flags, [&](ReportDocument& r) {
    ProblemFile p = parse_problem(problem_text);
    dispatch(r, command, p, flags);
  });
}

std::string emit_json(const ReportDocument& r) {
  ordered_json doc;
  doc["command"] = r.command;
  doc["ring"] = r.ring.empty() ? ordered_json(nullptr) : ordered_json(r.ring);
  doc["verdict"] = r.verdict;
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"witness", c.witness.empty() ? ordered_json(nullptr) : ordered_json(c.witness)}});
  doc["checks"] = checks;
  doc["certificate"] = r.certificate ? certificate_json(*r.certificate) : ordered_json(nullptr);
  doc["result"] = r.result;
  doc["config"] = r.config;
  doc["timing_ms"] = r.timing_ms ? ordered_json(*r.timing_ms) : ordered_json(nullptr);
  return doc.dump(2) + "\n";
}

namespace {

std::string matrix_text(const std::vector<std::vector<std::string>>& m, const std::string& indent) {
  std::string s;
  for (const auto& row : m) {
    s += indent + "[";
    for (std::size_t j = 0; j < row.size(); ++j) s += (j ? ", " : "") + row[j];
    s += "]\n";
  }
  return s;
}

}  // namespace

std::string emit_text(const ReportDocument& r) {
  std::string s = r.command + (r.ring.empty() ? "" : " over " + r.ring) + ": " + r.verdict + "\n";
  for (const auto& c : r.checks) {
    s += std::string("  [") + (c.passed ? "pass" : "FAIL") + "] " + c.name;
    if (!c.witness.empty()) s += ": " + c.witness;
    s += "\n";
  }
  if (r.certificate) {
    s += "certificate (" + r.certificate->verification;
    if (r.certificate->verification == "jet")
      s += ", order " + std::to_string(r.certificate->jet_order);
    s += ")\n  U =\n" + matrix_text(r.certificate->u, "    ");
    s += "  V =\n" + matrix_text(r.certificate->v, "    ");
  }
  if (r.result.contains("error")) {
    s += "error: " + r.result["error"].get<std::string>() + "\n";
  } else if (!r.result.empty()) {
    s += "result: " + r.result.dump() + "\n";
  }
  if (r.timing_ms) s += "time: " + std::to_string(*r.timing_ms) + " ms\n";
  return s;
}

}  // namespace locdec::cli
