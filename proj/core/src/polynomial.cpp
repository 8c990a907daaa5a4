#include "rkstab/polynomial.hpp"

#include <sstream>

namespace rkstab {

StabilityPolynomial::StabilityPolynomial(std::vector<Rational> alpha) : alpha_(std::move(alpha)) {
  if (alpha_.empty() || alpha_.front() != 1) {
    throw InvalidMethod("stability polynomial must start with alpha_0 = 1");
  }
  while (alpha_.size() > 1 && alpha_.back() == 0) alpha_.pop_back();
  if (alpha_.size() < 2) {
    throw InvalidMethod("degenerate method: all coefficients beyond alpha_0 are zero");
  }
}

Rational StabilityPolynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return alpha_[static_cast<std::size_t>(k)];
}

void validate_tableau(const ButcherTableau& t) {
  const auto s = static_cast<std::size_t>(t.stages());
  if (s == 0) throw InvalidMethod("tableau has no stages");
  if (t.a.rows() != s || t.a.cols() != s) throw InvalidMethod("tableau A must be s x s");
  if (t.c.size() != s) throw InvalidMethod("tableau c must have length s");
  if (t.bhat && t.bhat->size() != s) throw InvalidMethod("tableau bhat must have length s");
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = i; j < s; ++j) {
      if (t.a(i, j) != 0) {
        throw InvalidMethod("tableau is not explicit: A(" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ") is nonzero on or above the diagonal");
      }
    }
  }
}

std::vector<std::string> tableau_warnings(const ButcherTableau& t) {
  std::vector<std::string> warnings;
  const auto s = static_cast<std::size_t>(t.stages());
  for (std::size_t i = 0; i < s && i < t.c.size(); ++i) {
    Rational row_sum = 0;
    for (std::size_t j = 0; j < t.a.cols(); ++j) row_sum += t.a(i, j);
    if (row_sum != t.c[i]) {
      warnings.push_back("c_" + std::to_string(i + 1) + " = " + to_string(t.c[i]) +
                         " differs from row sum " + to_string(row_sum));
    }
  }
  return warnings;
}

StabilityPolynomial tableau_stability_coefficients(const ButcherTableau& t, Weights which) {
  validate_tableau(t);
  if (which == Weights::Embedded && !t.bhat) {
    throw InvalidMethod("tableau has no embedded weights");
  }
  const auto& w = which == Weights::Main ? t.b : *t.bhat;
  const auto s = static_cast<std::size_t>(t.stages());

  std::vector<Rational> alpha{Rational(1)};
  std::vector<Rational> v(s, Rational(1));  // A^{k-1} 1
  for (std::size_t k = 1; k <= s; ++k) {
    Rational dot = 0;
    for (std::size_t i = 0; i < s; ++i) dot += w[i] * v[i];
    alpha.push_back(dot);
    std::vector<Rational> next(s);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < i; ++j) next[i] += t.a(i, j) * v[j];
    v = std::move(next);
  }
  return StabilityPolynomial(std::move(alpha));
}

StabilityPolynomial taylor_polynomial(int p) {
  if (p < 1) throw InvalidMethod("taylor polynomial needs order p >= 1");
  std::vector<Rational> alpha;
  alpha.reserve(static_cast<std::size_t>(p) + 1);
  for (int k = 0; k <= p; ++k) alpha.push_back(inverse_factorial(static_cast<unsigned>(k)));
  return StabilityPolynomial(std::move(alpha));
}

StabilityPolynomial compose_steps(const StabilityPolynomial& r, int m) {
  if (m < 1) throw std::invalid_argument("step count must be >= 1");
  std::vector<Rational> product = r.coefficients();
  for (int step = 1; step < m; ++step) {
    std::vector<Rational> next(product.size() + r.coefficients().size() - 1);
    for (std::size_t i = 0; i < product.size(); ++i)
      for (std::size_t j = 0; j < r.coefficients().size(); ++j) next[i + j] += product[i] * r[j];
    product = std::move(next);
  }
  return StabilityPolynomial(std::move(product));
}

int linear_order(const StabilityPolynomial& r) {
  int p = 0;
  while (p < r.degree() && r[static_cast<std::size_t>(p) + 1] == inverse_factorial(static_cast<unsigned>(p) + 1)) ++p;
  return p;
}

std::string to_string(const StabilityPolynomial& r) {
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < r.coefficients().size(); ++k) {
    if (k) out << ", ";
    out << to_string(r[k]);
  }
  out << ')';
  return out.str();
}

}  // namespace rkstab
