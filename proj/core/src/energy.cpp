#include "rkstab/energy.hpp"

#include <cassert>
#include <stdexcept>

namespace rkstab {
namespace {

int parity_sign(int n) { return n % 2 == 0 ? 1 : -1; }

void add_symmetric(RationalMatrix& gamma, std::size_t i, std::size_t j, const Rational& amount) {
  if (i == j) {
    gamma(i, i) += amount;
  } else {
    const Rational half = amount / 2;
    gamma(i, j) += half;
    gamma(j, i) += half;
  }
}

}  // namespace

EnergyEquality expand_energy(const StabilityPolynomial& r) {
  const int s = r.degree();
  EnergyEquality e;
  e.beta.assign(static_cast<std::size_t>(s) + 1, Rational(0));
  e.gamma = RationalMatrix::square(static_cast<std::size_t>(s));

  for (int i = 0; i <= s; ++i) {
    for (int j = i; j <= s; ++j) {
      Rational weight = r[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(j)];
      if (weight == 0) continue;
      if (i < j) weight *= 2;

      const int gap = j - i;
      if ((i + j) % 2 == 0) {
        e.beta[static_cast<std::size_t>((i + j) / 2)] += parity_sign(gap / 2) * weight;
      } else {
        const auto m = static_cast<std::size_t>((i + j - 1) / 2);
        e.gamma(m, m) += parity_sign((gap + 1) / 2) * weight / 2;
      }
      for (int k = 0; k < gap / 2; ++k) {
        add_symmetric(e.gamma, static_cast<std::size_t>(i + k), static_cast<std::size_t>(j - 1 - k),
                      -parity_sign(k) * weight);
      }
    }
  }
  return e;
}

LeadingData leading_data(const EnergyEquality& e) {
  for (std::size_t k = 1; k < e.beta.size(); ++k) {
    if (e.beta[k] != 0) return {static_cast<int>(k), e.beta[k], e.gamma.leading_block(k)};
  }
  // beta_s = alpha_s^2 and alpha_s != 0 for every valid polynomial.
  throw std::logic_error("energy equality has no nonzero beta_k for k >= 1");
}

std::optional<LeadingData> ClosedFormLeading::leading() const {
  if (!determines_leading_index()) return std::nullopt;
  return LeadingData{beta_index, beta, gamma_block};
}

std::optional<ClosedFormLeading> closed_form_leading(const StabilityPolynomial& r) {
  const int p = linear_order(r);
  if (p < 1) return std::nullopt;

  const auto up = static_cast<unsigned>(p);
  const int half = p / 2;
  const bool odd = p % 2 == 1;

  ClosedFormLeading out;
  out.linear_order = p;
  const Rational defect = r.coefficient(p + 1) - inverse_factorial(up + 1);
  std::size_t block;
  if (odd) {
    out.beta_index = (p + 1) / 2;
    out.beta = parity_sign(out.beta_index) * 2 * defect;
    block = static_cast<std::size_t>(out.beta_index);
  } else {
    out.beta_index = half + 1;
    const Rational tail = Rational(Integer(1), factorial(up) * (p + 2));
    out.beta = parity_sign(half + 1) * 2 * (r.coefficient(p + 2) - r.coefficient(p + 1) + tail);
    block = static_cast<std::size_t>(half) + 1;
  }

  out.gamma_block = RationalMatrix::square(block);
  for (std::size_t i = 0; i < block; ++i) {
    for (std::size_t j = 0; j < block; ++j) {
      out.gamma_block(i, j) =
          -Rational(Integer(1), factorial(static_cast<unsigned>(i)) * factorial(static_cast<unsigned>(j)) *
                                    static_cast<unsigned>(i + j + 1));
    }
  }
  if (!odd) {
    const auto c = static_cast<std::size_t>(half);
    out.gamma_block(c, c) += parity_sign(half + 1) * defect;
  }
  return out;
}

int energy_accuracy(const LeadingData& leading) { return 2 * leading.k_star - 1; }

}  // namespace rkstab
