#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rkstab/matrix.hpp"
#include "rkstab/rational.hpp"

namespace rkstab {

/// Raised for inputs that do not describe a usable explicit method: an
/// implicit tableau, alpha_0 != 1, or a polynomial with nothing past alpha_0.
class InvalidMethod : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// R(z) = sum_k alpha_k z^k, the map u -> R(tau L) u of one step on u' = Lu.
///
/// Construction trims trailing zero coefficients, so degree() is the index of
/// the last nonzero coefficient and alpha_0 == 1 always holds.
class StabilityPolynomial {
 public:
  explicit StabilityPolynomial(std::vector<Rational> alpha);

  const std::vector<Rational>& coefficients() const { return alpha_; }
  int degree() const { return static_cast<int>(alpha_.size()) - 1; }

  /// alpha_k, with zero for k past the degree.
  Rational coefficient(int k) const;
  const Rational& operator[](std::size_t k) const { return alpha_[k]; }

  friend bool operator==(const StabilityPolynomial&, const StabilityPolynomial&) = default;

 private:
  std::vector<Rational> alpha_;
};

/// Explicit Butcher tableau with an optional embedded weight vector.
struct ButcherTableau {
  RationalMatrix a;
  std::vector<Rational> b;
  std::vector<Rational> c;
  std::optional<std::vector<Rational>> bhat;

  int stages() const { return static_cast<int>(b.size()); }
};

enum class Weights { Main, Embedded };

/// Throws InvalidMethod unless the tableau is square, consistently sized and
/// strictly lower triangular.
void validate_tableau(const ButcherTableau& tableau);

/// Rows i where c_i != sum_j a_ij, formatted for display. Empty when
/// consistent. Inconsistency is not an error for linear autonomous problems.
std::vector<std::string> tableau_warnings(const ButcherTableau& tableau);

/// alpha_0 = 1, alpha_k = w^T A^{k-1} 1 for the selected weights w.
StabilityPolynomial tableau_stability_coefficients(const ButcherTableau& tableau,
                                                   Weights which = Weights::Main);

/// Truncated exponential sum_{k<=p} z^k / k!.
StabilityPolynomial taylor_polynomial(int p);

/// r^m: the polynomial of m consecutive steps with the same tau.
StabilityPolynomial compose_steps(const StabilityPolynomial& r, int m);

/// Largest p <= degree with alpha_k = 1/k! for all k <= p.
int linear_order(const StabilityPolynomial& r);

std::string to_string(const StabilityPolynomial& r);

}  // namespace rkstab
