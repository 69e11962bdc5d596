// One line per acceptance criterion. Exits nonzero only when a criterion
// fails that is not listed as unattainable.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>

#include "gb_oracle_values.hpp"
#include "locdec/cli.hpp"
#include "support/random_matrix.hpp"

using namespace locdec;

namespace {

const Ring R2({"x", "y"});
const Ring R3({"x", "y", "z"});

Polynomial P(std::string_view s, const Ring& r = R2) { return parse_polynomial(s, r); }

LRMatrix M(std::vector<std::vector<std::string>> rows, const Ring& r = R2) {
  std::vector<std::vector<Polynomial>> ps;
  for (const auto& row : rows) {
    ps.emplace_back();
    for (const auto& e : row) ps.back().push_back(P(e, r));
  }
  return LRMatrix::from_polynomials(r, ps);
}

LocalIdeal J(std::initializer_list<const char*> gens, const Ring& r = R2) {
  std::vector<Polynomial> v;
  for (auto g : gens) v.push_back(P(g, r));
  return LocalIdeal(Ideal(r, v));
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

struct Result {
  bool passed;
  std::string detail;
};

int unexpected_failures = 0;

// `unattainable` marks a criterion whose failure is analysed in the README.
void report(const std::string& id, const std::string& title, const std::function<Result()>& run,
            bool unattainable = false) {
  Result o;
  try {
    o = run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  std::string status = o.passed ? "PASS" : (unattainable ? "FAIL (unattainable)" : "FAIL");
  if (!o.passed && !unattainable) ++unexpected_failures;
  std::cout << status << "  " << id << "  " << title << "  [" << o.detail << "]" << std::endl;
}

LRMatrix family(int k, int l) {
  return M({{"y", "x^" + std::to_string(k)}, {"x^" + std::to_string(l), "y"}});
}

bool associate(const LocalElement& d, const Polynomial& f) {
  return local_ideal_equal(LocalIdeal(Ideal::principal(d.num())), LocalIdeal(Ideal::principal(f)));
}

std::size_t max_entry_degree(const LRMatrix& a) {
  std::size_t d = 0;
  for (const auto& e : a.entries()) d = std::max(d, e.num().degree().value_or(0));
  return d;
}

// Scrambled block-diagonal corpus: m <= 3, entry degrees <= 3. One side of
// the scramble is linear, the other constant, so degrees stay at most 3.
std::vector<testgen::ScrambledInstance> decomposable_corpus(std::size_t count) {
  testgen::Gen g(2024);
  std::vector<testgen::ScrambledInstance> out;
  while (out.size() < count) {
    std::size_t m1 = static_cast<std::size_t>(g.integer(1, 2));
    std::size_t m2 = m1 == 2 ? 1 : static_cast<std::size_t>(g.integer(1, 2));
    const bool left = g.coin();
    auto inst = testgen::scrambled_block_diagonal(g, R2, m1, m2, 2, left ? 1 : 0, left ? 0 : 1);
    if (max_entry_degree(inst.a) > 3) continue;
    out.push_back(std::move(inst));
  }
  return out;
}

// Equivalent to one of four indecomposable 2x2 matrices.
struct NonDecomposable {
  LRMatrix a;
  Polynomial f1, f2;
};

std::vector<NonDecomposable> non_decomposable_corpus(std::size_t count) {
  const std::array<NonDecomposable, 4> bases = {{
      {family(1, 3), P("y - x^2"), P("y + x^2")},
      {family(3, 1), P("y - x^2"), P("y + x^2")},
      {M({{"x", "y"}, {"y^3", "x"}}), P("x - y^2"), P("x + y^2")},
      {M({{"x", "y^3"}, {"y", "x"}}), P("x - y^2"), P("x + y^2")},
  }};
  testgen::Gen g(2025);
  std::vector<NonDecomposable> out;
  for (std::size_t i = 0; i < count; ++i) {
    const auto& b = bases[i % bases.size()];
    auto u = testgen::random_invertible(g, R2, 2);
    auto v = testgen::random_invertible(g, R2, 2);
    out.push_back({apply_equivalence(b.a, u, v), b.f1, b.f2});
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string run_binary(const std::string& args) {
  std::string cmd = std::string(LOCDEC_BINARY) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) throw std::runtime_error("cannot start " + cmd);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  return out;
}

}  // namespace

int main() {
  const double kFixtureLimit = 5.0;

  report("1a", "family [[y,x^k],[x^l,y]]: (1,1) D, (1,3) ND, (2,2) D", [&]() -> Result {
    auto t = std::chrono::steady_clock::now();
    bool ok = check_square(family(1, 1), P("y - x"), P("y + x")).outcome == Outcome::Decomposable &&
              check_square(family(1, 3), P("y - x^2"), P("y + x^2")).outcome ==
                  Outcome::NotDecomposable &&
              check_square(family(2, 2), P("y - x^2"), P("y + x^2")).outcome ==
                  Outcome::Decomposable;
    double s = seconds_since(t);
    return {ok && s < kFixtureLimit, fmt(s) + ", limit 5 s"};
  });

  report("1b", "[[x,y],[0,z]], f1 = x, f2 = z: ND with witness y outside (x,z)", [&]() -> Result {
    auto t = std::chrono::steady_clock::now();
    auto v = check_square(M({{"x", "y"}, {"0", "z"}}, R3), P("x", R3), P("z", R3));
    double s = seconds_since(t);
    bool witness = v.failing_member && (v.failing_member->num() == P("y", R3) ||
                                        v.failing_member->num() == P("-y", R3));
    return {v.outcome == Outcome::NotDecomposable && witness && s < kFixtureLimit,
            "witness " + (v.failing_member ? v.failing_member->to_string() : "none") + ", " + fmt(s)};
  });

  report("1c", "rectangular instance with J1 = (y): ND", [&]() -> Result {
    auto t = std::chrono::steady_clock::now();
    auto paper = check_rectangular(M({{"x", "y^2"}, {"y^2", "x*y"}}), J({"y"}), J({"x^2 - y^3"}));
    auto spec = check_rectangular(M({{"x", "y^3"}, {"y^2", "x*y"}}), J({"y"}), J({"x^2 - y^4"}));
    auto literal = check_rectangular(M({{"x", "y^3"}, {"y^2", "x*y"}}), J({"y"}), J({"x^2 - y^3"}));
    double s = seconds_since(t);
    bool ok = paper.outcome == Outcome::NotDecomposable &&
              spec.outcome == Outcome::NotDecomposable;
    return {ok && s < kFixtureLimit,
            "[[x,y^2],[y^2,xy]] with x^2-y^3: " + to_string(paper.outcome) +
                "; [[x,y^3],[y^2,xy]] with x^2-y^4: " + to_string(spec.outcome) +
                "; same matrix with x^2-y^3: " + to_string(literal.outcome) +
                " (det is y(x^2-y^4)); " + fmt(s)};
  });

  report("1d", "p = 3 matrix with a coprime factor pair of its determinant: ND", [&]() -> Result {
    auto a = M({{"x^2*y", "x^3 - y^3"}, {"x^3 + y^3", "x*y^2"}});
    Polynomial det = determinant(a).num();
    // The determinant is irreducible over Q, so up to units its only
    // factorization is det * 1 and no coprime pair of non-units exists.
    std::string got;
    bool nd = false;
    try {
      auto v = check_square(a, det, Polynomial::constant(R2, 1));
      nd = v.outcome == Outcome::NotDecomposable;
      got = to_string(v.outcome);
    } catch (const PreconditionViolation& e) {
      got = std::string("rejected: ") + e.what();
    }
    return {nd, "det = " + det.to_string() + " irreducible over Q; pair (det, 1) " + got};
  }, true);

  report("1e", "4x4 E8 factorization, f1 = f2 = x^2+y^3+z^5: CriterionInapplicable", [&]() -> Result {
    auto t = std::chrono::steady_clock::now();
    auto a = M({{"x", "0", "y", "-z^4"},
                {"0", "x", "z", "y^2"},
                {"y^2", "z^4", "-x", "0"},
                {"-z", "y", "0", "-x"}},
               R3);
    Polynomial f = P("x^2 + y^3 + z^5", R3);
    auto v = check_square(a, f, f);
    double s = seconds_since(t);
    bool ok = v.outcome == Outcome::CriterionInapplicable && v.factorization &&
              v.primality && !v.primality->prime;
    return {ok && s < kFixtureLimit, "mutually_prime fails, " + fmt(s)};
  });

  report("1f", "mf_augment: [[y,x],[0,y]] with (y,2) not augmentable; [[y,x],[x,y]] gives B", [&]() -> Result {
    auto t = std::chrono::steady_clock::now();
    auto nil = mf_augment(M({{"y", "x"}, {"0", "y"}}), {{P("y"), 2}});
    auto a = M({{"y", "x"}, {"x", "y"}});
    auto sp = mf_augment(a, {{P("y - x"), 1}, {P("y + x"), 1}});
    double s = seconds_since(t);
    LRMatrix target = LocalElement(P("y^2 - x^2")) * LRMatrix::identity(R2, 2);
    bool ok = !nil.augmentable() && sp.augmentable() && a * *sp.b == target && *sp.b * a == target;
    return {ok && s < kFixtureLimit,
            "offending entry " + (nil.offending_entry ? nil.offending_entry->to_string() : "none") +
                ", " + fmt(s)};
  });

  const auto corpus = decomposable_corpus(50);

  report("2", "round trip on 50 scrambled block-diagonal matrices (m <= 3, degree <= 3)", [&]() -> Result {
    auto t = std::chrono::steady_clock::now();
    std::size_t decomposable = 0, certified = 0, verified = 0, exact = 0, dets = 0;
    for (const auto& inst : corpus) {
      auto v = check_square(inst.a, inst.f1, inst.f2);
      if (v.outcome != Outcome::Decomposable) continue;
      ++decomposable;
      auto dec = construct_certificate_square(inst.a, inst.f1, inst.f2, kDefaultMaxOrder);
      ++certified;
      const auto& c = dec.certificate;
      if (c.verify(inst.a)) ++verified;
      if (c.verification == Verification::Exact) ++exact;
      if (associate(determinant(c.a1), inst.f1) && associate(determinant(c.a2), inst.f2)) ++dets;
    }
    double s = seconds_since(t);
    const std::size_t n = corpus.size();
    bool ok = decomposable == n && certified == n && verified == n && dets == n && s < 120;
    return {ok, std::to_string(decomposable) + "/" + std::to_string(n) + " decomposable, " +
                    std::to_string(verified) + "/" + std::to_string(n) + " verified (" +
                    std::to_string(exact) + " exact), block dets match " + std::to_string(dets) +
                    "/" + std::to_string(n) + ", " + fmt(s) + ", limit 120 s"};
  });

  report("3", "invariants on 50 + 50 matrices, 20 equivalences each", [&]() -> Result {
    auto t = std::chrono::steady_clock::now();
    std::vector<LRMatrix> mats;
    for (const auto& inst : corpus) mats.push_back(inst.a);
    std::size_t nd_verdicts = 0;
    for (const auto& nd : non_decomposable_corpus(50)) {
      mats.push_back(nd.a);
      if (check_square(nd.a, nd.f1, nd.f2).outcome == Outcome::NotDecomposable) ++nd_verdicts;
    }
    testgen::Gen g(2026);
    std::size_t violations = 0, checks = 0;
    for (const auto& a : mats) {
      const std::size_t m = a.rows();
      for (std::size_t j = 0; j < m; ++j, ++checks)
        if (!local_ideal_contains(a.fitting(j), a.fitting(j + 1))) ++violations;
      LRMatrix adj = adjugate(a);
      LRMatrix scaled = determinant(a) * LRMatrix::identity(R2, m);
      ++checks;
      if (!(a * adj == scaled) || !(adj * a == scaled)) ++violations;
      const LRMatrix ab = a * buchsbaum_rim_B(a).b;
      for (const auto& e : ab.entries()) {
        ++checks;
        if (!is_local_member(e, a.fitting(m))) ++violations;
      }
      for (int k = 0; k < 20; ++k) {
        auto b = apply_equivalence(a, testgen::random_invertible(g, R2, m),
                                   testgen::random_invertible(g, R2, m));
        for (std::size_t j = 1; j <= m; ++j, ++checks)
          if (!local_ideal_equal(a.fitting(j), b.fitting(j))) ++violations;
      }
    }
    double s = seconds_since(t);
    return {violations == 0 && nd_verdicts == 50,
            std::to_string(violations) + " violations in " + std::to_string(checks) + " checks, " +
                std::to_string(nd_verdicts) + "/50 non-decomposable verdicts, " + fmt(s)};
  });

  report("4a", "powers k = 2, 3 of 20 decomposable matrices stay decomposable", [&]() -> Result {
    auto t = std::chrono::steady_clock::now();
    testgen::Gen g(2027);
    std::size_t powers = 0, conjugated = 0;
    for (std::size_t i = 0; i < 20; ++i) {
      const auto& inst = corpus[i];
      const std::size_t m = inst.a.rows();
      LRMatrix d(R2, m, m);
      for (std::size_t r = 0; r < inst.a1.rows(); ++r)
        for (std::size_t c = 0; c < inst.a1.cols(); ++c) d.set(r, c, inst.a1(r, c));
      const std::size_t o = inst.a1.rows();
      for (std::size_t r = 0; r < inst.a2.rows(); ++r)
        for (std::size_t c = 0; c < inst.a2.cols(); ++c) d.set(o + r, o + c, inst.a2(r, c));
      // W D W^-1: the power of a conjugate is the conjugate of the power.
      LRMatrix w = testgen::random_invertible(g, R2, m);
      LRMatrix w_inv = adjugate(w);
      const LocalElement det_w = determinant(w);
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) w_inv.set(r, c, w_inv(r, c).divided_by_unit(det_w));
      const LRMatrix conj = w * d * w_inv;
      for (unsigned k : {2u, 3u}) {
        if (power_decomposability_check(inst.a, inst.f1, inst.f2, k).outcome == Outcome::Decomposable)
          ++powers;
        if (power_decomposability_check(conj, inst.f1, inst.f2, k).outcome == Outcome::Decomposable)
          ++conjugated;
      }
    }
    // diag(x,y) W diag(x,y) with W = [[1,1],[0,1]] is the square of an
    // equivalent of diag(x,y); its I_1 = m^2 needs three generators.
    auto counter = check_square(M({{"x^2", "x*y"}, {"0", "y^2"}}), P("x^2"), P("y^2"));
    double s = seconds_since(t);
    return {powers == 40,
            "two-sided scrambles " + std::to_string(powers) + "/40, conjugation scrambles " +
                std::to_string(conjugated) + "/40, [[x^2,xy],[0,y^2]] with (x^2, y^2): " +
                to_string(counter.outcome) + " witness " +
                (counter.failing_member ? counter.failing_member->to_string() : "none") + ", " + fmt(s)};
  }, true);

  report("4b", "20 instances with m^(m-1) in J1+J2 are decomposable", [&]() -> Result {
    auto t = std::chrono::steady_clock::now();
    testgen::Gen g(2028);
    std::size_t tried = 0, found = 0, decomposable = 0;
    while (found < 20 && tried < 400) {
      ++tried;
      std::size_t m1 = static_cast<std::size_t>(g.integer(1, 2));
      std::size_t m2 = m1 == 2 ? 1 : static_cast<std::size_t>(g.integer(1, 2));
      auto inst = testgen::scrambled_block_diagonal(g, R2, m1, m2, 2, 1, 0);
      const unsigned m = static_cast<unsigned>(inst.a.rows());
      LocalIdeal sum(Ideal(R2, {inst.f1, inst.f2}));
      if (!contains_power_of_maximal_ideal(sum, m - 1)) continue;
      ++found;
      if (check_square(inst.a, inst.f1, inst.f2).outcome == Outcome::Decomposable) ++decomposable;
    }
    double s = seconds_since(t);
    return {found == 20 && decomposable == 20,
            std::to_string(decomposable) + "/" + std::to_string(found) + " decomposable (from " +
                std::to_string(tried) + " draws), " + fmt(s)};
  });

  report("5", "byte-identical JSON over 3 runs of the fixture suite", [&]() -> Result {
    const std::string dir = LOCDEC_FIXTURE_DIR;
    const std::vector<std::string> runs = {
        "check " + dir + "/family_1_1.loc --f1 f1 --f2 f2",
        "check " + dir + "/family_1_3.loc --f1 f1 --f2 f2",
        "decompose " + dir + "/family_2_2.loc --f1 f1 --f2 f2",
        "check " + dir + "/triangular.loc --f1 f1 --f2 f2",
        "check " + dir + "/rectangular.loc --j1 J1 --j2 J2",
        "check " + dir + "/rectangular_y4.loc --j1 J1 --j2 J2",
        "check " + dir + "/upper_triangular_p3.loc --f1 f1 --f2 f2",
        "check " + dir + "/e8.loc --f1 f1 --f2 f2",
        "mf " + dir + "/mf_nilpotent.loc --factors f^2",
        "mf " + dir + "/mf_split.loc --factors g1,g2",
        "jacobian " + dir + "/jacobian.loc --j1 J1 --j2 J2",
        "split " + dir + "/diagonal3.loc --factors a,b,c",
        "fitting " + dir + "/triangular.loc -j 1",
        "assumptions " + dir + "/rectangular.loc",
    };
    std::vector<std::string> outputs;
    for (int rep = 0; rep < 3; ++rep) {
      std::string all;
      for (const auto& r : runs) all += run_binary(r + " --json");
      outputs.push_back(std::move(all));
    }
    bool same = outputs[0] == outputs[1] && outputs[1] == outputs[2] && !outputs[0].empty();
    return {same, std::to_string(runs.size()) + " commands, " + std::to_string(outputs[0].size()) +
                      " bytes per run"};
  });

  report("6", "oracle constants reproduced by the engine", [&]() -> Result {
    std::size_t ok = 0, total = 0;
    auto expect = [&](bool b) { ++total; ok += b; };
    const Ideal gb_ideal(R2, {P("x^2"), P("x*y + y^2")});
    const auto& gb = gb_ideal.basis();
    expect(gb.elements().size() == oracle::kGbX2XyY2.size());
    for (std::size_t i = 0; i < std::min(gb.elements().size(), oracle::kGbX2XyY2.size()); ++i)
      expect(gb.elements()[i] == P(oracle::kGbX2XyY2[i]));
    Ideal inter = ideal_intersection(Ideal::principal(P("y - x")), Ideal::principal(P("y + x")));
    expect(inter.generators().size() == 1 &&
           inter.generators()[0] == P(oracle::kIntersectYmXYpX));
    expect(ideal_intersection(Ideal::principal(P("x")), Ideal::principal(P("y"))).generators()[0] ==
           P(oracle::kIntersectXY));
    expect(ideal_equal(ideal_quotient(Ideal::principal(P("x*y")), P("x")),
                       Ideal::principal(P(oracle::kQuotXyByX))));
    expect(ideal_equal(ideal_quotient(Ideal::principal(P("x^2")), P("x")),
                       Ideal::principal(P(oracle::kQuotX2ByX))));
    expect(ideal_equal(ideal_quotient(Ideal::principal(P("x + x^2")), P("x")),
                       Ideal::principal(P(oracle::kQuotXpX2ByX))));
    expect(ideal_equal(ideal_quotient(Ideal(R2, {P("y"), P("x^2")}), P("x")),
                       Ideal(R2, {P(oracle::kQuotYX2ByX[0]), P(oracle::kQuotYX2ByX[1])})));
    auto syz = syzygies({{P("x", R3)}, {P("y", R3)}}, R3);
    expect(syz.size() == 1 && (syz[0] == std::vector<Polynomial>{P("y", R3), P("-x", R3)} ||
                               syz[0] == std::vector<Polynomial>{P("-y", R3), P("x", R3)}));
    expect(poly_gcd(P("x^2 - y^2"), P("x - y")) == P(oracle::kGcdX2mY2XmY));
    expect(is_local_member(LocalElement(P("x")), J({"x + x^2"})) == oracle::kLocalXInXpX2);
    expect(is_local_member(LocalElement(P("x")), J({"y", "x^2"})) == oracle::kLocalXInYX2);
    expect(is_local_member(LocalElement(P("x")), J({"y - x^2", "y + x^2"})) ==
           oracle::kLocalXInYmX2YpX2);
    auto k = contains_power_of_maximal_ideal(J({"x", "y^2"}), 4);
    expect(k && static_cast<int>(*k) == oracle::kPowerMaxIdealXY2);
    return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " values match"};
  });

  return unexpected_failures == 0 ? 0 : 1;
}
