#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rkstab/classify.hpp"
#include "rkstab/presets.hpp"

using namespace rkstab;
using rkstab::testing::q;

namespace {

RationalMatrix matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  RationalMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const auto& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

StabilityStatus status_of(const StabilityPolynomial& r) {
  return classify_strong_stability(expand_energy(r)).status;
}

}  // namespace

TEST_CASE("exact negative definiteness") {
  CHECK(is_negative_definite_exact(matrix({{q(-1), q(-1, 2)}, {q(-1, 2), q(-1, 3)}})));
  CHECK_FALSE(is_negative_definite_exact(matrix({{q(-1), q(-1, 2), q(-1, 6)},
                                                 {q(-1, 2), q(-1, 3), q(-1, 8)},
                                                 {q(-1, 6), q(-1, 8), q(-1, 24)}})));
  for (std::size_t n = 1; n <= 6; ++n) {
    RationalMatrix id(n, n);
    for (std::size_t i = 0; i < n; ++i) id(i, i) = -1;
    CHECK(is_negative_definite_exact(id));
  }
  // semi-definite: singular leading minor
  CHECK_FALSE(is_negative_definite_exact(matrix({{q(-1), q(-1)}, {q(-1), q(-1)}})));
  CHECK_FALSE(is_negative_definite_exact(matrix({{q(0), q(0)}, {q(0), q(-1)}})));
  CHECK_FALSE(is_negative_definite_exact(matrix({{q(1)}})));
  CHECK_THROWS_AS(is_negative_definite_exact(matrix({{q(-1), q(0)}, {q(1), q(-1)}})), std::invalid_argument);
  CHECK_THROWS_AS(is_negative_definite_exact(matrix({{q(-1), q(0)}})), std::invalid_argument);
}

TEST_CASE("symmetric eigenvalues") {
  auto eig = symmetric_eigenvalues(matrix({{q(-1), q(0)}, {q(0), q(-2)}}));
  REQUIRE(eig.size() == 2);
  CHECK(eig[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(eig[1] == doctest::Approx(-2.0).epsilon(1e-14));

  eig = symmetric_eigenvalues(leading_data(expand_energy(taylor_polynomial(3))).gamma_star);
  CHECK(eig[0] == doctest::Approx(-6.57415e-2).epsilon(1e-5));
  CHECK(eig[1] == doctest::Approx(-1.26759).epsilon(1e-5));

  eig = symmetric_eigenvalues(leading_data(expand_energy(taylor_polynomial(11))).gamma_star);
  CHECK(eig.back() == doctest::Approx(-1.30384).epsilon(1e-5));
  CHECK(eig.front() == doctest::Approx(-7.87018e-11).epsilon(1e-5));
}

TEST_CASE("Hilbert matrix smallest eigenvalue") {
  CHECK(hilbert_min_eigenvalue(1) == doctest::Approx(1.0));
  CHECK(hilbert_min_eigenvalue(2) == doctest::Approx((4.0 - std::sqrt(13.0)) / 6.0).epsilon(1e-12));
  CHECK(hilbert_min_eigenvalue(3) == doctest::Approx(2.687340355773538e-3).epsilon(1e-10));
}

TEST_CASE("classification of Taylor methods") {
  CHECK(status_of(taylor_polynomial(3)) == StabilityStatus::StronglyStable);
  const auto v5 = classify_strong_stability(expand_energy(taylor_polynomial(5)));
  CHECK(v5.status == StabilityStatus::NotStronglyStable);
  CHECK(v5.beta_star == q(1, 360));
  const auto v4 = classify_strong_stability(expand_energy(taylor_polynomial(4)));
  CHECK(v4.status == StabilityStatus::Undetermined);
  CHECK_FALSE(v4.gamma_star_definite);
  CHECK(status_of(taylor_polynomial(8)) == StabilityStatus::Undetermined);

  for (int p = 1; p <= 12; ++p) {
    CAPTURE(p);
    const auto expected = p % 4 == 3   ? StabilityStatus::StronglyStable
                          : p % 4 == 0 ? StabilityStatus::Undetermined
                                       : StabilityStatus::NotStronglyStable;
    CHECK(status_of(taylor_polynomial(p)) == expected);
  }
}

TEST_CASE("verdict invariants") {
  std::vector<StabilityPolynomial> cases;
  for (const auto& name : preset_names()) cases.push_back(preset(name).polynomial);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    cases.push_back(rkstab::testing::random_polynomial_with_order(rng, 1 + trial % 6, 2 + trial % 6 + trial % 2));
  }
  for (const auto& r : cases) {
    const auto v = classify_strong_stability(expand_energy(r));
    switch (v.status) {
      case StabilityStatus::NotStronglyStable:
        CHECK(v.beta_star > 0);
        break;
      case StabilityStatus::StronglyStable:
        CHECK(v.beta_star < 0);
        CHECK(v.gamma_star_definite);
        break;
      case StabilityStatus::Undetermined:
        CHECK(v.beta_star < 0);
        CHECK_FALSE(v.gamma_star_definite);
        break;
    }
    // exact/float agreement wherever the float margin is comfortable
    const double top = v.gamma_star_eigenvalues.front();
    if (std::abs(top) > 1e-9) CHECK(v.gamma_star_definite == (top < 0));
  }
}

TEST_CASE("odd-order criterion") {
  CHECK(odd_order_criterion(preset("ssprk(4,3)").polynomial));
  CHECK(odd_order_criterion(taylor_polynomial(3)));
  CHECK_FALSE(odd_order_criterion(taylor_polynomial(5)));
  CHECK_THROWS_AS(odd_order_criterion(taylor_polynomial(4)), std::invalid_argument);
  CHECK_THROWS_AS(odd_order_criterion(StabilityPolynomial({q(1), q(3)})), std::invalid_argument);

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const int p = 1 + 2 * (trial % 4);
    const auto r = rkstab::testing::random_polynomial_with_order(rng, p, p + 1 + trial % 3);
    CHECK(odd_order_criterion(r) == (status_of(r) == StabilityStatus::StronglyStable));
  }
}

TEST_CASE("even-order sufficient condition") {
  SUBCASE("SSPRK(10,4): both inequalities hold") {
    const auto check = even_order_check(preset("ssprk(10,4)").polynomial);
    CHECK(check.leading_negative);
    CHECK(check.block_lhs == q(1, 540));
    CHECK(check.hilbert_epsilon == doctest::Approx(2.687340355773538e-3).epsilon(1e-10));
    CHECK(check.block_condition);
    CHECK_FALSE(check.borderline);
    CHECK(check.holds());
    CHECK(status_of(preset("ssprk(10,4)").polynomial) == StabilityStatus::StronglyStable);
  }
  SUBCASE("Taylor(4): the block inequality fails") {
    const auto check = even_order_check(taylor_polynomial(4));
    CHECK(check.leading_negative);
    CHECK(check.block_lhs == q(1, 30));
    CHECK_FALSE(check.block_condition);
    CHECK_FALSE(even_order_sufficient(taylor_polynomial(4)));
  }
  SUBCASE("negative block term satisfies the block inequality exactly") {
    // p = 2, block term (alpha_3 - 1/6) = -1/12; leading term 1/48 - 1/12 + 1/8 > 0.
    const StabilityPolynomial r({q(1), q(1), q(1, 2), q(1, 12), q(1, 48)});
    const auto check = even_order_check(r);
    CHECK(check.block_lhs == q(-1, 12));
    CHECK(check.block_condition);
    CHECK_FALSE(check.leading_negative);
    CHECK_FALSE(check.holds());
  }
  SUBCASE("synthetic method satisfying both") {
    // p = 2: need alpha_4 - alpha_3 + 1/8 < 0 and alpha_3 - 1/6 < eps(H_2).
    const StabilityPolynomial r({q(1), q(1), q(1, 2), q(1, 12), q(-1, 12)});
    CHECK(linear_order(r) == 2);
    CHECK(even_order_sufficient(r));
    CHECK(status_of(r) == StabilityStatus::StronglyStable);
  }
  CHECK_THROWS_AS(even_order_check(taylor_polynomial(3)), std::invalid_argument);
}

TEST_CASE("even-order criterion is sound on random polynomials") {
  std::mt19937_64 rng(77);
  int confirmed = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const int p = 2 + 2 * (trial % 3);
    const auto r = rkstab::testing::random_polynomial_with_order(rng, p, p + 2 + trial % 2);
    if (even_order_sufficient(r)) {
      ++confirmed;
      CHECK(status_of(r) == StabilityStatus::StronglyStable);
    }
  }
  CHECK(confirmed > 0);
}
