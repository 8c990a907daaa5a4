#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "rkstab/polynomial.hpp"
#include "rkstab/presets.hpp"
#include "rkstab/tableau_io.hpp"

using namespace rkstab;
using rkstab::testing::q;
using rkstab::testing::qs;

TEST_CASE("StabilityPolynomial enforces alpha_0 = 1 and trims trailing zeros") {
  const StabilityPolynomial r({q(1), q(1), q(1, 2), q(0), q(0)});
  CHECK(r.degree() == 2);
  CHECK(r.coefficient(5) == 0);
  CHECK_THROWS_AS(StabilityPolynomial({q(2), q(1)}), InvalidMethod);
  CHECK_THROWS_AS(StabilityPolynomial({q(1)}), InvalidMethod);
  CHECK_THROWS_AS(StabilityPolynomial({q(1), q(0), q(0)}), InvalidMethod);
  CHECK_THROWS_AS(StabilityPolynomial(std::vector<Rational>{}), InvalidMethod);
}

TEST_CASE("tableau reduction") {
  SUBCASE("forward Euler") {
    ButcherTableau euler{RationalMatrix(1, 1), {q(1)}, {q(0)}, std::nullopt};
    CHECK(tableau_stability_coefficients(euler).coefficients() == qs({{1, 1}, {1, 1}}));
  }
  SUBCASE("2(1) main weights give the two-stage second-order polynomial") {
    const auto t = preset_tableau("pair2(1)");
    CHECK(tableau_stability_coefficients(t).coefficients() == qs({{1, 1}, {1, 1}, {1, 2}}));
    // hand reduction: bhat = (1, -1/6, 1/6), A1 = (0,1,1), A^2 1 = (0,0,1/2)
    CHECK(tableau_stability_coefficients(t, Weights::Embedded).coefficients() ==
          qs({{1, 1}, {1, 1}, {0, 1}, {1, 12}}));
  }
  SUBCASE("4(3) main weights equal the classic fourth-order polynomial") {
    const auto t = preset_tableau("pair4(3)");
    CHECK(tableau_stability_coefficients(t) == taylor_polynomial(4));
    CHECK(tableau_stability_coefficients(t, Weights::Embedded).coefficients() ==
          qs({{1, 1}, {1, 1}, {1, 2}, {1, 6}, {254747, 8970912}, {119041, 17941824}}));
  }
  SUBCASE("3(2) embedded weights: sqrt(82) cancels in alpha_1 and alpha_2") {
    const auto r = tableau_stability_coefficients(preset_tableau("pair3(2)"), Weights::Embedded);
    CHECK(r[1] == 1);
    CHECK(r[2] == q(1, 2));
    const Rational root = sqrt82_approximation();
    CHECK(r[3] == (40 - root) / 288);
    CHECK(r[4] == (16 - root) / 288);
  }
}

TEST_CASE("tableau errors") {
  ButcherTableau implicit{RationalMatrix(2, 2), {q(1, 2), q(1, 2)}, {q(0), q(1)}, std::nullopt};
  implicit.a(0, 0) = q(1, 2);
  CHECK_THROWS_AS(tableau_stability_coefficients(implicit), InvalidMethod);

  ButcherTableau upper{RationalMatrix(2, 2), {q(1, 2), q(1, 2)}, {q(0), q(1)}, std::nullopt};
  upper.a(0, 1) = q(1);
  CHECK_THROWS_AS(tableau_stability_coefficients(upper), InvalidMethod);

  ButcherTableau no_embedded{RationalMatrix(1, 1), {q(1)}, {q(0)}, std::nullopt};
  CHECK_THROWS_AS(tableau_stability_coefficients(no_embedded, Weights::Embedded), InvalidMethod);

  ButcherTableau zero_weights{RationalMatrix(2, 2), {q(0), q(0)}, {q(0), q(1)}, std::nullopt};
  zero_weights.a(1, 0) = q(1);
  CHECK_THROWS_AS(tableau_stability_coefficients(zero_weights), InvalidMethod);
}

TEST_CASE("row-sum inconsistency is a warning only") {
  auto t = preset_tableau("pair2(1)");
  CHECK(tableau_warnings(t).empty());
  t.c[1] = q(1, 3);
  const auto warnings = tableau_warnings(t);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("c_2") != std::string::npos);
  CHECK(tableau_stability_coefficients(t).coefficients() == qs({{1, 1}, {1, 1}, {1, 2}}));
}

TEST_CASE("reduction is invariant under stage relabelling that keeps A strictly lower triangular") {
  // Every stage of the 4(3) tableau feeds the next, so the only relabellings
  // that keep A strictly lower triangular move an independent stage. Add a
  // zero-weight stage fed only by stage 1 and slide it through every slot.
  auto t = preset_tableau("pair4(3)");
  const auto base_main = tableau_stability_coefficients(t);
  const auto base_embedded = tableau_stability_coefficients(t, Weights::Embedded);

  const std::size_t s = 5;
  for (std::size_t slot = 1; slot <= s; ++slot) {
    std::vector<std::size_t> order(s);
    std::iota(order.begin(), order.end(), 0);
    // order[new] = old; the extra stage has index s.
    order.insert(order.begin() + static_cast<long>(slot), s);
    ButcherTableau u{RationalMatrix(s + 1, s + 1), {}, {}, std::vector<Rational>{}};
    for (std::size_t i = 0; i <= s; ++i) {
      const std::size_t oi = order[i];
      u.b.push_back(oi == s ? q(0) : t.b[oi]);
      u.bhat->push_back(oi == s ? q(0) : (*t.bhat)[oi]);
      u.c.push_back(oi == s ? q(1, 3) : t.c[oi]);
      for (std::size_t j = 0; j < i; ++j) {
        const std::size_t oj = order[j];
        if (oi == s) {
          u.a(i, j) = oj == 0 ? q(1, 3) : q(0);
        } else if (oj != s) {
          u.a(i, j) = t.a(oi, oj);
        }
      }
    }
    CAPTURE(slot);
    CHECK(tableau_stability_coefficients(u) == base_main);
    CHECK(tableau_stability_coefficients(u, Weights::Embedded) == base_embedded);
  }
}

TEST_CASE("taylor polynomials") {
  CHECK(taylor_polynomial(1).coefficients() == qs({{1, 1}, {1, 1}}));
  CHECK(taylor_polynomial(3).coefficients() == qs({{1, 1}, {1, 1}, {1, 2}, {1, 6}}));
  CHECK(taylor_polynomial(12)[12] == q(1, 479001600));
  CHECK_THROWS_AS(taylor_polynomial(0), InvalidMethod);
}

TEST_CASE("compose_steps") {
  const auto p4 = taylor_polynomial(4);
  CHECK(compose_steps(p4, 1) == p4);
  const auto p4sq = compose_steps(p4, 2);
  CHECK(p4sq.degree() == 8);
  CHECK(p4sq[8] == q(1, 576));
  CHECK(p4sq[0] == 1);
  CHECK_THROWS(compose_steps(p4, 0));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const auto r = rkstab::testing::random_polynomial_with_order(rng, 1 + trial % 3, 4);
    for (auto [m1, m2] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{1, 4}}) {
      CHECK(compose_steps(r, m1 * m2) == compose_steps(compose_steps(r, m1), m2));
    }
  }
}

TEST_CASE("linear_order") {
  for (int p = 1; p <= 12; ++p) CHECK(linear_order(taylor_polynomial(p)) == p);
  CHECK(linear_order(StabilityPolynomial(qs({{1, 1}, {1, 1}, {1, 2}, {1, 6}, {1, 48}}))) == 3);
  CHECK(linear_order(preset("ssprk(10,4)").polynomial) == 4);
  CHECK(linear_order(preset("ssprk(4,3)").polynomial) == 3);
  CHECK(linear_order(StabilityPolynomial(qs({{1, 1}, {2, 1}}))) == 0);
  // two steps approximate exp(2 tau L), so alpha_1 = 2
  CHECK(linear_order(compose_steps(taylor_polynomial(4), 2)) == 0);
}

TEST_CASE("preset catalog matches the reference polynomials") {
  CHECK(preset("taylor(4)").polynomial.coefficients() == qs({{1, 1}, {1, 1}, {1, 2}, {1, 6}, {1, 24}}));
  CHECK(preset("euler").polynomial == taylor_polynomial(1));
  CHECK(preset("ssprk(4,3)").polynomial.coefficients() == qs({{1, 1}, {1, 1}, {1, 2}, {1, 6}, {1, 48}}));

  const auto ssprk104 = preset("ssprk(10,4)").polynomial;
  CHECK(ssprk104.coefficients() == qs({{1, 1},
                                        {1, 1},
                                        {1, 2},
                                        {1, 6},
                                        {1, 24},
                                        {17, 2160},
                                        {7, 6480},
                                        {1, 9720},
                                        {1, 155520},
                                        {1, 4199040},
                                        {1, 251942400}}));
  CHECK(ssprk104[7] == q(1, 9720));

  const auto ssprk54 = preset("ssprk(5,4)").polynomial;
  CHECK(ssprk54.degree() == 5);
  CHECK(to_string(ssprk54[5]) == "4477718303076007/1000000000000000000");

  CHECK(preset(" SSPRK( 10 , 4 ) ").name == "ssprk(10,4)");
  CHECK(preset("pair4(3)").name == "pair4(3).main");
  CHECK(preset("pair4(3).embedded").tableau.has_value());
  CHECK_FALSE(preset("pair3(2).main").approximate_input);
  CHECK(preset("pair3(2).embedded").approximate_input);

  CHECK_THROWS_AS(preset("rk45"), UnknownPreset);
  CHECK_THROWS_AS(preset("taylor(0)"), UnknownPreset);
  CHECK_THROWS_AS(preset("pair5(4)"), UnknownPreset);
  CHECK_THROWS_AS(preset("pair2(1).hat"), UnknownPreset);
  for (const auto& name : preset_names()) CHECK_NOTHROW(preset(name));
}

TEST_CASE("sqrt(82) approximation is correct to 40 decimals") {
  const Rational root = sqrt82_approximation();
  const Rational eps(Integer(1), boost::multiprecision::pow(Integer(10), 40));
  CHECK(root * root <= 82);
  CHECK((root + eps) * (root + eps) > 82);
}

TEST_CASE("tableau documents") {
  const char* doc = R"({
    "s": 3,
    "A": [["0","0","0"], ["1","0","0"], ["1/2","0.5","0"]],
    "b": ["1/2","1/2","0"],
    "c": ["0","1", 1],
    "bhat": ["1","-1/6","1/6"],
    "name": "ignored"
  })";
  const auto t = parse_tableau(doc);
  CHECK(t.stages() == 3);
  CHECK(t.a(2, 1) == q(1, 2));
  REQUIRE(t.bhat);
  CHECK((*t.bhat)[1] == q(-1, 6));

  const auto again = parse_tableau(serialize_tableau(t));
  CHECK(again.a == t.a);
  CHECK(again.b == t.b);
  CHECK(again.c == t.c);
  CHECK(again.bhat == t.bhat);

  CHECK_THROWS_AS(parse_tableau("{"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tableau(R"({"s":1,"A":[["0"]],"b":["1"]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tableau(R"({"s":1,"A":[["0"]],"b":[0.5],"c":["0"]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tableau(R"({"s":2,"A":[["0","0"]],"b":["1","0"],"c":["0","0"]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tableau(R"({"s":1,"A":[["1"]],"b":["1"],"c":["1"]})"), InvalidMethod);
  CHECK_THROWS_AS(parse_tableau(R"({"s":1,"A":[["0"]],"b":["x"],"c":["0"]})"), std::invalid_argument);
}
