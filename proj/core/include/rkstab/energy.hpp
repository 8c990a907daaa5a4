#pragma once

#include <optional>
#include <vector>

#include "rkstab/matrix.hpp"
#include "rkstab/polynomial.hpp"

namespace rkstab {

/// Coefficients of the energy equality
///
///   |R u|_H^2 = sum_k beta_k tau^{2k} |L^k u|_H^2
///             + sum_{i,j} gamma_ij tau^{i+j+1} [L^i u, L^j u],
///
/// where [v, w] = -<v, (L^T H + H L) w> is the dissipation semi-inner
/// product. beta has s+1 entries, gamma is s x s and exactly symmetric.
struct EnergyEquality {
  std::vector<Rational> beta;
  RationalMatrix gamma;

  int degree() const { return static_cast<int>(beta.size()) - 1; }
};

/// Leading index k*, leading coefficient beta_{k*} and the k* x k* leading
/// block of gamma.
struct LeadingData {
  int k_star = 0;
  Rational beta_star;
  RationalMatrix gamma_star;
};

/// Expands |R u|_H^2 term by term. Each <L^i u, L^j u>_H (i <= j) is reduced
/// by repeated summation by parts:
///
///   <L^i u, L^j u> = zeta_ij - sum_{k < floor((j-i)/2)} (-1)^k [L^{i+k} u, L^{j-1-k} u]
///
///   zeta_ij = (-1)^{(j-i)/2}        |L^{(i+j)/2} u|^2            (i+j even)
///           = (-1)^{(j-i+1)/2} 1/2  [L^{(i+j-1)/2} u]^2          (i+j odd)
///
/// Off-diagonal [.,.] contributions are split evenly between (i', j') and
/// (j', i') so gamma comes out symmetric.
EnergyEquality expand_energy(const StabilityPolynomial& r);

/// k* is the first k >= 1 with beta_k != 0 (all earlier beta_k vanish).
LeadingData leading_data(const EnergyEquality& e);

/// Closed-form prediction of the leading data from the linear order p.
///
/// Odd p: k* = (p+1)/2, beta_{k*} = (-1)^{k*} 2 (alpha_{p+1} - 1/(p+1)!),
///        gamma_ij = -1/(i! j! (i+j+1)) on the k* x k* block.
/// Even p: beta_{p/2+1} = (-1)^{p/2+1} 2 (alpha_{p+2} - alpha_{p+1} + 1/(p! (p+2))),
///        gamma as above on the (p/2+1) block, plus
///        (-1)^{p/2+1} (alpha_{p+1} - 1/(p+1)!) at (p/2, p/2).
///        k* = p/2+1 only when that beta is nonzero; otherwise k* > p/2+1 and
///        only the gamma block is predicted.
struct ClosedFormLeading {
  int linear_order = 0;
  int beta_index = 0;
  Rational beta;
  RationalMatrix gamma_block;

  /// True when the prediction pins down k* (always for odd p).
  bool determines_leading_index() const { return beta != 0; }
  std::optional<LeadingData> leading() const;
};

/// nullopt when the linear order is 0 (the closed forms need p >= 1).
std::optional<ClosedFormLeading> closed_form_leading(const StabilityPolynomial& r);

/// Order of energy accuracy on conserving systems, 2 k* - 1.
int energy_accuracy(const LeadingData& leading);

}  // namespace rkstab
