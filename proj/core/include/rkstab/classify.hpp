#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rkstab/energy.hpp"
#include "rkstab/matrix.hpp"
#include "rkstab/polynomial.hpp"

namespace rkstab {

enum class StabilityStatus { StronglyStable, NotStronglyStable, Undetermined };

std::string_view to_string(StabilityStatus status);

/// Verdict with the evidence it rests on.
///
/// NotStronglyStable  <=> beta* > 0
/// StronglyStable     <=> beta* < 0 and Gamma* negative definite (exact test)
/// Undetermined       otherwise
struct StabilityVerdict {
  StabilityStatus status = StabilityStatus::Undetermined;
  int k_star = 0;
  Rational beta_star;
  bool gamma_star_definite = false;
  std::vector<double> gamma_star_eigenvalues;  // descending, diagnostic only
  std::vector<std::string> notes;
};

/// Sylvester's criterion with fraction-free elimination: true iff every
/// leading principal minor of -G is positive. Throws std::invalid_argument
/// for non-square or non-symmetric input.
bool is_negative_definite_exact(const RationalMatrix& g);

/// Eigenvalues in descending order. Computed by Jacobi rotations in 50-digit
/// binary floating point so tiny eigenvalues next to O(1) entries survive the
/// rounding to double.
std::vector<double> symmetric_eigenvalues(const RationalMatrix& g);

/// Smallest eigenvalue of the order-n Hilbert matrix 1/(i+j+1).
double hilbert_min_eigenvalue(int order);

StabilityVerdict classify_strong_stability(const EnergyEquality& e);

/// Odd linear order p: strongly stable iff
///   (-1)^{(p+1)/2} (alpha_{p+1} - 1/(p+1)!) < 0.
/// Throws std::invalid_argument when the linear order is even (or zero).
bool odd_order_criterion(const StabilityPolynomial& r);

/// Even-order sufficient condition, split into its two inequalities.
struct EvenOrderCheck {
  int linear_order = 0;
  /// (-1)^{p/2+1} (alpha_{p+2} - alpha_{p+1} + 1/(p!(p+2))) < 0, exact.
  bool leading_negative = false;
  /// (-1)^{p/2+1} ((p/2)!)^2 (alpha_{p+1} - 1/(p+1)!), exact.
  Rational block_lhs;
  /// Smallest eigenvalue of the Hilbert matrix of order p/2 + 1.
  double hilbert_epsilon = 0.0;
  /// block_lhs < epsilon with a 1e-9 relative guard band.
  bool block_condition = false;
  /// block_lhs lies within the guard band; block_condition is then false.
  bool borderline = false;

  bool holds() const { return leading_negative && block_condition; }
};

/// Throws std::invalid_argument when the linear order is odd or zero.
EvenOrderCheck even_order_check(const StabilityPolynomial& r);

inline bool even_order_sufficient(const StabilityPolynomial& r) { return even_order_check(r).holds(); }

}  // namespace rkstab
