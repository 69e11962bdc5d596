#include <doctest.h>

#include <fstream>
#include <sstream>

#include "locdec/cli.hpp"

using namespace locdec;
using namespace locdec::cli;
using nlohmann::json;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(LOCDEC_FIXTURE_DIR) + "/" + name);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Flags square(const char* f1 = "f1", const char* f2 = "f2") {
  Flags f;
  f.f1 = f1;
  f.f2 = f2;
  return f;
}

Flags ideals(const char* j1, const char* j2) {
  Flags f;
  f.j1 = j1;
  f.j2 = j2;
  return f;
}

const ReportDocument::Check* find(const ReportDocument& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

LRMatrix from_strings(const json& rows, const Ring& ring) {
  std::vector<LocalElement> entries;
  for (const auto& row : rows)
    for (const auto& e : row) entries.push_back(parse_local_element(e.get<std::string>(), ring));
  return LRMatrix(ring, rows.size(), rows[0].size(), std::move(entries));
}

}  // namespace

TEST_CASE("problem files") {
  auto p = parse_problem(fixture("family_1_1.loc"));
  CHECK(ring_to_string(p.ring) == "Q[x,y]");
  REQUIRE(p.matrices.size() == 1);
  CHECK(p.matrix("").to_strings() == std::vector<std::vector<std::string>>{{"y", "x"}, {"x", "y"}});
  CHECK(p.poly("f1").to_string() == "-x + y");
  CHECK(p.ideal("f2").generators().size() == 1);

  auto q = parse_problem("ring Q[x,y];  # comment\nmatrix B = [[1/(1+x), x]];\nideal J = (x, y^2);\n"
                         "map F = (x*y, x);\n");
  CHECK(q.matrix("B")(0, 0).den().to_string() == "x + 1");
  CHECK(q.ideal("J").generators().size() == 2);
  CHECK(q.map("").size() == 2);

  CHECK_THROWS_AS(parse_problem("ring Q[x];\nmatrix A = [[x]];\nmatrix A = [[x]];\n"), SemanticError);
  CHECK_THROWS_AS(parse_problem("ring Q[x];\nmatrix A = [[x], [x, x]];\n"), SemanticError);
  CHECK_THROWS_AS(parse_problem("ring Q[x];\npoly x = 1;\n"), SemanticError);
  CHECK_THROWS_AS(parse_problem("ring Q[x];\nmatrix A = [[1/x]];\n"), SemanticError);
  CHECK_THROWS_AS(parse_problem("ring Q[x];\npoly f = 1/(1+x);\n"), SemanticError);
  CHECK_THROWS_AS(parse_problem("ring Z[x];\n"), SemanticError);
  CHECK_THROWS_AS(parse_problem("ring Q[x,x];\n"), SemanticError);
  CHECK_THROWS_AS(parse_problem("ring Q[x];\nmatrix A = [[x + ]];\n"), SyntaxError);
  CHECK_THROWS_AS(parse_problem("ring Q[x];\nvector v = (x);\n"), SyntaxError);
  CHECK_THROWS_AS(parse_problem("ring Q[x];\nmatrix A = [[y]];\n"), UnknownVariable);
  CHECK_THROWS_AS(q.matrix("A"), SemanticError);
  CHECK_THROWS_AS(q.poly("J"), SemanticError);
}

TEST_CASE("square checks and exit codes") {
  auto d = run_command(Command::Check, fixture("family_1_1.loc"), square());
  CHECK(d.exit_code == exit_code::kOk);
  CHECK(d.verdict == "Decomposable");

  auto nd = run_command(Command::Check, fixture("family_1_3.loc"), square());
  CHECK(nd.exit_code == exit_code::kNegative);
  CHECK(nd.verdict == "NotDecomposable");
  REQUIRE(find(nd, "membership"));
  CHECK(find(nd, "membership")->witness == "-x not in (y, x^2)");

  auto t = run_command(Command::Check, fixture("triangular.loc"), square());
  CHECK(t.exit_code == exit_code::kNegative);
  CHECK(find(t, "membership")->witness == "-y not in (x, z)");

  auto e8 = run_command(Command::Check, fixture("e8.loc"), square());
  CHECK(e8.exit_code == exit_code::kInapplicable);
  auto doc = json::parse(emit_json(e8));
  bool found = false;
  for (const auto& c : doc["checks"])
    if (c["name"] == "mutually_prime") found = !c["passed"].get<bool>();
  CHECK(found);
  CHECK(doc["certificate"].is_null());
}

TEST_CASE("rectangular, fitting, mf, jacobian, split, assumptions") {
  auto r = run_command(Command::Check, fixture("rectangular.loc"), ideals("J1", "J2"));
  CHECK(r.verdict == "NotDecomposable");
  CHECK(run_command(Command::Check, fixture("rectangular_y4.loc"), ideals("J1", "J2")).exit_code ==
        exit_code::kNegative);
  CHECK(run_command(Command::Check, fixture("rectangular_y4.loc"), ideals("J1", "J2_literal"))
            .exit_code == exit_code::kInapplicable);

  Flags fit;
  fit.fitting_index = 1;
  auto fr = run_command(Command::Fitting, fixture("triangular.loc"), fit);
  CHECK(fr.result["generators"] == json::array({"x", "y", "z"}));

  Flags mf;
  mf.factors = {"f^2"};
  auto m1 = run_command(Command::Mf, fixture("mf_nilpotent.loc"), mf);
  CHECK(m1.verdict == "NotAugmentable");
  CHECK(m1.exit_code == exit_code::kNegative);
  CHECK(m1.result["offending_entry"] == "-x");
  mf.factors = {"g1", "g2"};
  auto m2 = run_command(Command::Mf, fixture("mf_split.loc"), mf);
  CHECK(m2.verdict == "Augmentable");
  CHECK(m2.result["B"] == json::array({json::array({"y", "-x"}), json::array({"-x", "y"})}));

  auto jac = run_command(Command::Jacobian, fixture("jacobian.loc"), ideals("J1", "J2"));
  CHECK(jac.verdict == "Obstruction");
  CHECK(jac.exit_code == exit_code::kNegative);

  Flags split;
  split.factors = {"a", "b", "c"};
  auto sp = run_command(Command::Split, fixture("diagonal3.loc"), split);
  CHECK(sp.exit_code == exit_code::kOk);
  CHECK(sp.result["leaves"] == 3);

  auto as = run_command(Command::Assumptions, fixture("rectangular.loc"), Flags{});
  CHECK(as.verdict == "AssumptionsHold");
}

TEST_CASE("input errors never escape") {
  CHECK(run_command(Command::Check, "ring Q[x];\nmatrix A = [[x +]];\n", square()).exit_code ==
        exit_code::kInputError);
  CHECK(run_command(Command::Check, fixture("family_1_1.loc"), square("f1", "nope")).exit_code ==
        exit_code::kInputError);
  CHECK(run_command(Command::Check, fixture("family_1_1.loc"), Flags{}).exit_code ==
        exit_code::kInputError);
  CHECK(run_command(Command::Fitting, fixture("family_1_1.loc"), Flags{}).exit_code ==
        exit_code::kInputError);
  auto cp = run_command(Command::Check, "ring Q[x,y];\nmatrix A = [[1+x, y],[y, x]];\npoly f = x;\n"
                        "poly g = y;\n", square("f", "g"));
  CHECK(cp.exit_code == exit_code::kInputError);
  CHECK(cp.result["error"].get<std::string>().find("chip_constant_part") != std::string::npos);
  Flags mf;
  mf.factors = {"f^x"};
  CHECK(run_command(Command::Mf, fixture("mf_nilpotent.loc"), mf).exit_code ==
        exit_code::kInputError);
  mf.factors = {"f"};
  CHECK(run_command(Command::Mf, fixture("mf_nilpotent.loc"), mf).exit_code ==
        exit_code::kInputError);  // det y^2 is not a unit times y
}

TEST_CASE("json layout, certificate round trip, determinism") {
  auto rep = run_command(Command::Decompose, fixture("family_2_2.loc"), square());
  REQUIRE(rep.exit_code == exit_code::kOk);
  const std::string text = emit_json(rep);
  CHECK(text == emit_json(run_command(Command::Decompose, fixture("family_2_2.loc"), square())));
  auto doc = nlohmann::ordered_json::parse(text);
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"command", "ring", "verdict", "checks", "certificate",
                                         "result", "config", "timing_ms"});
  CHECK(doc["timing_ms"].is_null());
  const auto& cert = doc["certificate"];
  CHECK(cert["verification"] == "exact");

  auto p = parse_problem(fixture("family_2_2.loc"));
  const LRMatrix& a = p.matrix("");
  LRMatrix u = from_strings(cert["U"], p.ring), v = from_strings(cert["V"], p.ring);
  LRMatrix b = apply_equivalence(a, u, v);
  CHECK(b(0, 1).is_zero());
  CHECK(b(1, 0).is_zero());
  CHECK(b(0, 0) * b(1, 1) == LocalElement(determinant(a)) * determinant(u) * determinant(v));

  Flags timed = square();
  timed.timing = true;
  CHECK(run_command(Command::Check, fixture("family_1_1.loc"), timed).timing_ms.has_value());
}
