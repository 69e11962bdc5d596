#include <doctest.h>

#include "gb_oracle_values.hpp"
#include "locdec/groebner.hpp"
#include "support/random.hpp"

using namespace locdec;

namespace {
const Ring R2({"x", "y"});
const Ring R3({"x", "y", "z"});
Polynomial P(std::string_view s, const Ring& r = R2) { return parse_polynomial(s, r); }
Ideal I(std::initializer_list<const char*> gens, const Ring& r = R2) {
  std::vector<Polynomial> v;
  for (auto g : gens) v.push_back(P(g, r));
  return Ideal(r, v);
}

void check_cofactors(const GroebnerBasis& gb, std::span<const Polynomial> gens) {
  REQUIRE(gb.has_cofactors());
  for (std::size_t i = 0; i < gb.elements().size(); ++i) {
    Polynomial sum(gb.ring());
    for (std::size_t l = 0; l < gens.size(); ++l) sum += gb.cofactors()[i][l] * gens[l];
    CHECK(sum == gb.elements()[i]);
  }
}

bool same_up_to_unit(const std::vector<Polynomial>& v, std::span<const std::string_view> expect,
                     const Ring& r) {
  for (Rational c : {Rational(1), Rational(-1)}) {
    bool ok = true;
    for (std::size_t i = 0; i < v.size(); ++i) ok = ok && v[i] == c * P(expect[i], r);
    if (ok) return true;
  }
  return false;
}
}  // namespace

TEST_CASE("groebner examples") {
  Ideal a = I({"x^2", "x*y + y^2"});
  const auto& gb = a.basis();
  REQUIRE(gb.elements().size() == oracle::kGbX2XyY2.size());
  for (std::size_t i = 0; i < gb.elements().size(); ++i)
    CHECK(gb.elements()[i] == P(oracle::kGbX2XyY2[i]));
  CHECK(satisfies_buchberger_criterion(gb));
  check_cofactors(gb, a.generators());

  GroebnerBasis gx = I({"x"}).basis();
  REQUIRE(gx.elements().size() == 1);
  CHECK(gx.elements()[0] == P("x"));

  Ideal z = Ideal::zero(R2);
  CHECK(z.is_zero());
  CHECK(z.generators().size() == 1);
  CHECK(z.basis().is_zero_ideal());
  CHECK(I({"x", "1 + x"}).basis().is_unit_ideal());
}

TEST_CASE("normal form") {
  Ideal a = I({"x^2", "x*y + y^2"});
  const auto& gb = a.basis();
  CHECK(gb.normal_form(P("y^3")).is_zero());
  CHECK(I({"y"}).basis().normal_form(P("x")) == P("x"));
  CHECK(gb.normal_form(P("0")).is_zero());
  auto div = gb.divide(P("x^3 + x*y^2 + y"));
  Polynomial back = div.remainder;
  for (std::size_t i = 0; i < div.quotients.size(); ++i) back += div.quotients[i] * gb.elements()[i];
  CHECK(back == P("x^3 + x*y^2 + y"));
}

TEST_CASE("membership certificates") {
  Ideal a = I({"x^2", "x*y + y^2"});
  auto cert = member_with_certificate(P("y^3"), a);
  REQUIRE(cert.has_value());
  CHECK(cert->verify(a));
  auto first = member_with_certificate(a.generators()[0], a);
  REQUIRE(first.has_value());
  CHECK(first->coefficients[0] == P("1"));
  CHECK(first->coefficients[1].is_zero());
  CHECK_FALSE(member_with_certificate(P("x"), I({"y"})).has_value());
  auto zero = member_with_certificate(P("0"), Ideal::zero(R2));
  REQUIRE(zero.has_value());
  CHECK(zero->verify(Ideal::zero(R2)));
}

TEST_CASE("sum and product") {
  CHECK(ideal_sum(I({"x"}), I({"y"})).generators() == I({"x", "y"}).generators());
  CHECK(ideal_product(I({"x"}), I({"y"})).generators() == I({"x*y"}).generators());
  Ring r({"x", "y", "w"});
  auto prod = ideal_product(I({"x", "y"}, r), I({"y", "w"}, r));
  CHECK(prod.generators() == I({"x*y", "x*w", "y^2", "y*w"}, r).generators());
  CHECK(ideal_power(I({"x", "y"}), 2).generators().size() == 4);
}

TEST_CASE("intersection") {
  auto k = ideal_intersection(I({"y - x"}), I({"y + x"}));
  REQUIRE(k.generators().size() == 1);
  CHECK(k.generators()[0] == P(oracle::kIntersectYmXYpX));
  CHECK(ideal_equal(k, I({"y^2 - x^2"})));
  CHECK(ideal_intersection(I({"x"}), I({"y"})).generators()[0] == P(oracle::kIntersectXY));
  CHECK(ideal_equal(ideal_intersection(I({"x"}), I({"x"})), I({"x"})));
  CHECK(ideal_intersection(I({"x"}), Ideal::zero(R2)).is_zero());
}

TEST_CASE("quotient") {
  CHECK(ideal_equal(ideal_quotient(I({"x*y"}), P("x")), I({oracle::kQuotXyByX.data()})));
  CHECK(ideal_equal(ideal_quotient(I({"x"}), P("y")), I({oracle::kQuotXByY.data()})));
  CHECK(ideal_equal(ideal_quotient(I({"x^2"}), P("x")), I({oracle::kQuotX2ByX.data()})));
  CHECK(ideal_equal(ideal_quotient(I({"y", "x^2"}), P("x")),
                    I({oracle::kQuotYX2ByX[0].data(), oracle::kQuotYX2ByX[1].data()})));
  CHECK(ideal_equal(ideal_quotient(I({"x + x^2"}), P("x")), I({oracle::kQuotXpX2ByX.data()})));
  CHECK_THROWS_AS(ideal_quotient(I({"x"}), P("0")), DivisionByZero);
}

TEST_CASE("lcm and gcd") {
  CHECK(poly_lcm(P("x"), P("y")) == P("x*y"));
  CHECK(poly_gcd(P("x^2 - y^2"), P("x - y")) == P(oracle::kGcdX2mY2XmY));
  CHECK(poly_gcd(P("x"), P("y")) == P("1"));
  CHECK(poly_gcd(P("2*x^2 + 2*x*y"), P("3*x")) == P("x"));
  CHECK(poly_gcd_by_intersection(P("x^2 - y^2"), P("x - y")) == P(oracle::kGcdX2mY2XmY));
  CHECK(poly_lcm_by_intersection(P("x"), P("y")) == P("x*y"));
}

TEST_CASE("remainder sequence gcd agrees with the intersection route") {
  testgen::Gen g(23);
  for (int it = 0; it < 30; ++it) {
    Polynomial common = g.poly(R3, 3, 0, 2);
    Polynomial a = common * g.poly(R3, 3, 0, 2);
    Polynomial b = common * g.poly(R3, 3, 0, 2);
    if (a.is_zero() || b.is_zero()) continue;
    Polynomial d = poly_gcd(a, b);
    CHECK(d == poly_gcd_by_intersection(a, b));
    CHECK(d == gcd_prs(a, b));
    CHECK(a.try_exact_divide(d).has_value());
    CHECK(b.try_exact_divide(d).has_value());
    CHECK(d.try_exact_divide(common).has_value());
    CHECK(poly_lcm(a, b) == poly_lcm_by_intersection(a, b));
  }
}

TEST_CASE("syzygies") {
  auto s1 = syzygies({{P("x", R3)}, {P("y", R3)}}, R3);
  REQUIRE(s1.size() == 1);
  CHECK(same_up_to_unit(s1[0], oracle::kSyzRowXY, R3));

  auto s2 = syzygies({{P("x", R3), P("0", R3)}, {P("0", R3), P("y", R3)}}, R3);
  CHECK(s2.empty());

  auto s3 = syzygies({{P("x", R3), P("0", R3)}, {P("y", R3), P("0", R3)}, {P("0", R3), P("z", R3)}},
                     R3);
  REQUIRE(s3.size() == 1);
  CHECK(same_up_to_unit(s3[0], oracle::kSyzXY0_00Z, R3));

  auto s4 = syzygies({{P("x", R3), P("0", R3)}, {P("0", R3), P("y", R3)}, {P("0", R3), P("z", R3)}},
                     R3);
  REQUIRE(s4.size() == 1);
  CHECK(same_up_to_unit(s4[0], oracle::kSyzX00_0YZ, R3));
}

TEST_CASE("resource bound") {
  GbLimits tiny{3, 2};
  std::vector<Polynomial> gens{P("x^3 - y", R2), P("x*y - 1", R2), P("y^2 - x", R2)};
  CHECK_THROWS_AS(groebner(gens, R2, MonomialOrder::degrevlex(), true, tiny), ResourceBound);
}

TEST_CASE("random ideals: Buchberger criterion, cofactors, product in intersection") {
  testgen::Gen g(21);
  for (int it = 0; it < 25; ++it) {
    std::vector<Polynomial> ga{g.poly(R3, 3, 1, 2), g.poly(R3, 3, 1, 2)};
    std::vector<Polynomial> gb{g.poly(R3, 3, 1, 2)};
    Ideal a(R3, ga);
    Ideal b(R3, gb);
    const auto& basis = a.basis();
    CHECK(satisfies_buchberger_criterion(basis));
    check_cofactors(basis, a.nonzero_generators());
    for (auto order : {MonomialOrder::lex(), MonomialOrder::elimination(1)}) {
      auto other = groebner(a.nonzero_generators(), R3, order);
      CHECK(satisfies_buchberger_criterion(other));
      check_cofactors(other, a.nonzero_generators());
    }
    Ideal inter = ideal_intersection(a, b);
    Ideal prod = ideal_product(a, b);
    for (const auto& p : prod.generators()) CHECK(inter.contains(p));
    for (const auto& p : inter.generators()) {
      CHECK(a.contains(p));
      CHECK(b.contains(p));
    }
    auto probe = g.poly(R3, 4, 0, 3);
    auto cert = member_with_certificate(probe, a);
    CHECK(cert.has_value() == basis.normal_form(probe).is_zero());
    auto inside = probe * ga[0] + g.poly(R3, 2, 0, 1) * ga[1];
    auto cert2 = member_with_certificate(inside, a);
    REQUIRE(cert2.has_value());
    CHECK(cert2->verify(a));
  }
}

TEST_CASE("random syzygies annihilate and are complete on Koszul relations") {
  testgen::Gen g(22);
  for (int it = 0; it < 10; ++it) {
    std::size_t n = 3;
    std::vector<std::vector<Polynomial>> cols(n);
    for (auto& c : cols) c.push_back(g.poly(R3, 2, 1, 2));
    auto syz = syzygies(cols, R3);
    for (const auto& v : syz) {
      Polynomial s(R3);
      for (std::size_t j = 0; j < n; ++j) s += v[j] * cols[j][0];
      CHECK(s.is_zero());
    }
    // Koszul relations and random combinations of them are syzygies, so they
    // must lie in the module spanned by the returned generators.
    const auto& a = cols[0][0];
    const auto& b = cols[1][0];
    const auto& c = cols[2][0];
    Polynomial zero(R3);
    std::vector<std::vector<Polynomial>> koszul{{b, -a, zero}, {c, zero, -a}, {zero, c, -b}};
    std::vector<Polynomial> combo(n, zero);
    for (const auto& k : koszul) {
      CHECK(module_contains(syz, k, R3));
      auto coef = g.poly(R3, 2, 0, 1);
      for (std::size_t j = 0; j < n; ++j) combo[j] += coef * k[j];
    }
    CHECK(module_contains(syz, combo, R3));
    CHECK_FALSE(module_contains(syz, {Polynomial::constant(R3, 1), zero, zero}, R3));
  }
}
