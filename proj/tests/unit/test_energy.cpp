#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rkstab/energy.hpp"
#include "rkstab/presets.hpp"
#include "rkstab/verify.hpp"

using namespace rkstab;
using rkstab::testing::q;

namespace {

RationalMatrix neg(std::initializer_list<std::initializer_list<Rational>> rows) {
  RationalMatrix m(rows.size(), rows.size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const auto& v : row) m(i, j++) = -v;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("expansion of low-order Taylor methods") {
  SUBCASE("p = 1") {
    const auto e = expand_energy(taylor_polynomial(1));
    CHECK(e.beta == std::vector<Rational>{q(1), q(1)});
    CHECK(e.gamma == neg({{q(1)}}));
  }
  SUBCASE("p = 2") {
    const auto e = expand_energy(taylor_polynomial(2));
    CHECK(e.beta == std::vector<Rational>{q(1), q(0), q(1, 4)});
    CHECK(e.gamma == neg({{q(1), q(1, 2)}, {q(1, 2), q(1, 2)}}));
  }
  SUBCASE("p = 3") {
    const auto lead = leading_data(expand_energy(taylor_polynomial(3)));
    CHECK(lead.k_star == 2);
    CHECK(lead.beta_star == q(-1, 12));
    CHECK(lead.gamma_star == neg({{q(1), q(1, 2)}, {q(1, 2), q(1, 3)}}));
  }
}

TEST_CASE("expansion matches the looping update rule") {
  std::mt19937_64 rng(5);
  std::vector<StabilityPolynomial> cases;
  for (const auto& name : preset_names()) cases.push_back(preset(name).polynomial);
  for (int trial = 0; trial < 40; ++trial) {
    const int p = 1 + trial % 6;
    cases.push_back(rkstab::testing::random_polynomial_with_order(rng, p, p + trial % 4));
  }
  for (const auto& r : cases) {
    const auto direct = expand_energy(r);
    const auto looped = rkstab::testing::expand_by_update_rule(r);
    CHECK(direct.beta == looped.beta);
    CHECK(direct.gamma == looped.gamma);
  }
}

TEST_CASE("structural invariants of every expansion") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int p = 1 + trial % 7;
    const auto r = rkstab::testing::random_polynomial_with_order(rng, p, std::min(8, p + 1 + trial % 3));
    const auto e = expand_energy(r);
    CHECK(e.beta.front() == 1);
    CHECK(e.beta.back() == r[static_cast<std::size_t>(r.degree())] * r[static_cast<std::size_t>(r.degree())]);
    CHECK(e.gamma.is_symmetric());
    CHECK(e.gamma.rows() == static_cast<std::size_t>(r.degree()));
  }
}

TEST_CASE("leading data") {
  auto lead = leading_data(expand_energy(taylor_polynomial(7)));
  CHECK(lead.k_star == 4);
  CHECK(lead.beta_star == q(-1, 20160));

  lead = leading_data(expand_energy(taylor_polynomial(12)));
  CHECK(lead.k_star == 7);
  CHECK(lead.beta_star == q(-1, 3353011200));

  lead = leading_data(expand_energy(compose_steps(taylor_polynomial(4), 3)));
  CHECK(lead.k_star == 3);
  CHECK(lead.beta_star == q(-1, 24));
  CHECK(lead.gamma_star == neg({{q(3), q(9, 2), q(9, 2)}, {q(9, 2), q(9), q(81, 8)}, {q(9, 2), q(81, 8), q(97, 8)}}));

  lead = leading_data(expand_energy(preset("ssprk(10,4)").polynomial));
  CHECK(lead.gamma_star(2, 2) == q(-107, 2160));
}

TEST_CASE("energy accuracy is 2k* - 1") {
  CHECK(energy_accuracy(leading_data(expand_energy(taylor_polynomial(3)))) == 3);
  CHECK(energy_accuracy(leading_data(expand_energy(taylor_polynomial(4)))) == 5);
  CHECK(energy_accuracy(leading_data(expand_energy(taylor_polynomial(1)))) == 1);
}

TEST_CASE("closed forms") {
  SUBCASE("odd order, Taylor") {
    const auto pred = closed_form_leading(taylor_polynomial(3));
    REQUIRE(pred);
    CHECK(pred->beta_index == 2);
    CHECK(pred->beta == q(-1, 12));
  }
  SUBCASE("even order, SSPRK(10,4)") {
    const auto pred = closed_form_leading(preset("ssprk(10,4)").polynomial);
    REQUIRE(pred);
    CHECK(pred->linear_order == 4);
    CHECK(pred->beta_index == 3);
    CHECK(pred->beta == q(-1, 3240));
    CHECK(pred->gamma_block(2, 2) == q(-107, 2160));
  }
  SUBCASE("even order with vanishing predicted beta is non-predictive") {
    // alpha_{p+2} = alpha_{p+1} - 1/(p!(p+2)) with p = 2: alpha_4 = alpha_3 - 1/8.
    const StabilityPolynomial r({q(1), q(1), q(1, 2), q(1, 5), q(1, 5) - q(1, 8)});
    const auto pred = closed_form_leading(r);
    REQUIRE(pred);
    CHECK_FALSE(pred->determines_leading_index());
    CHECK_FALSE(pred->leading().has_value());
    const auto lead = leading_data(expand_energy(r));
    CHECK(lead.k_star > 2);
    CHECK(lead.gamma_star.leading_block(2) == pred->gamma_block);
  }
  SUBCASE("linear order zero has no prediction") {
    CHECK_FALSE(closed_form_leading(StabilityPolynomial({q(1), q(2)})).has_value());
  }
}

TEST_CASE("closed forms agree with the expansion on random polynomials") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    const int p = 1 + trial % 7;
    const int s = std::min(8, p + trial % 3);
    const auto r = rkstab::testing::random_polynomial_with_order(rng, std::min(p, s), s);
    const auto pred = closed_form_leading(r);
    REQUIRE(pred);
    const auto e = expand_energy(r);
    CHECK(e.beta[static_cast<std::size_t>(pred->beta_index)] == pred->beta);
    for (int k = 1; k < pred->beta_index; ++k) CHECK(e.beta[static_cast<std::size_t>(k)] == 0);
    CHECK(e.gamma.leading_block(pred->gamma_block.rows()) == pred->gamma_block);
  }
}

TEST_CASE("energy equality holds numerically on semi-negative systems") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const auto r = rkstab::testing::random_polynomial_with_order(rng, 1 + trial % 4, 4);
    const auto e = expand_energy(r);
    const auto sys = make_random_semi_negative(6, 1000 + static_cast<std::uint64_t>(trial), 0.5 * (trial % 3));
    const auto u = rkstab::testing::random_state(rng, 6);
    for (double tau : {0.01, 0.1}) {
      const auto sides = rkstab::testing::energy_sides(r, e, sys, u, tau);
      CHECK(sides.assembled == doctest::Approx(sides.direct).epsilon(1e-10));
    }
  }
}
