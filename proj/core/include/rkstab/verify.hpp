#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rkstab/polynomial.hpp"

namespace rkstab {

/// ||R||_H <= 1 + kStableTolerance counts as a contraction; the slack only
/// absorbs Cholesky and eigensolver round-off.
inline constexpr double kStableTolerance = 1e-12;

/// u' = L u together with the SPD weight H of the energy |u|_H^2 = u^T H u.
/// Valid systems satisfy L^T H + H L <= 0.
struct SemiNegativeSystem {
  Eigen::MatrixXd generator;  // L
  Eigen::MatrixXd weight;     // H
  std::string label;

  Eigen::Index dimension() const { return generator.rows(); }
  /// L^T H + H L
  Eigen::MatrixXd dissipation_form() const;
};

/// Largest eigenvalue of L^T H + H L divided by ||H||_F ||L||_F. Semi-negative
/// systems return at most about 1e-16.
double semi_negativity_defect(const SemiNegativeSystem& sys);

/// Throws std::invalid_argument if H is not SPD or the defect exceeds 1e-10.
void validate_system(const SemiNegativeSystem& sys);

/// ||L^T H + H L||_F <= 1e-10 ||H||_F ||L||_F.
bool is_conserving(const SemiNegativeSystem& sys);

/// Seeded random semi-negative system. With S skew, B a rank-deficient
/// (n/2 x n) draw, C a square draw:
///   D = dissipation B^T B,  H = C^T C + 0.1 I,  L = H^{-1} (S - D),
/// so L^T H + H L = -2D. L is then rescaled to ||L||_H = 1. A rank-deficient
/// D leaves undamped directions, as spatial upwinding does. With
/// `identity_weight` H is forced to I. dissipation = 0 gives a conserving
/// system.
SemiNegativeSystem make_random_semi_negative(int n, std::uint64_t seed, double dissipation,
                                             bool identity_weight = false);

/// Periodic first-order upwind advection on n cells: L_ii = -n,
/// L_{i,i-1} = n (indices mod n), H = I / n.
SemiNegativeSystem make_upwind_advection(int n);

/// H = I, L = -[[1,2,2],[0,1,2],[0,0,1]]: semi-negative, yet the classic
/// four-stage method expands the norm for every small tau.
SemiNegativeSystem counterexample_rk4();

/// Dense R(tau L).
Eigen::MatrixXd evaluate_polynomial(const StabilityPolynomial& r, const Eigen::MatrixXd& l, double tau);

/// ||R(tau L)||_H via H = C^T C: the spectral norm of C R C^{-1}, taken as
/// sqrt(lambda_max(M^T M)) from a Jacobi eigensolve.
double h_operator_norm(const StabilityPolynomial& r, const SemiNegativeSystem& sys, double tau);

struct SweepReport {
  std::vector<double> tau_grid;
  std::vector<double> h_norms;
  /// Largest grid tau such that it and every smaller grid tau are stable.
  std::optional<double> max_stable_tau;

  double max_norm() const;
  bool exceeds(double threshold) const { return max_norm() > threshold; }
};

/// Geometric grid of `points` values from tau_min to tau_max inclusive.
std::vector<double> geometric_grid(double tau_min, double tau_max, int points);

SweepReport stability_sweep(const StabilityPolynomial& r, const SemiNegativeSystem& sys, double tau_min,
                            double tau_max, int points);

struct DecayFit {
  std::vector<double> taus;      // actual step sizes, T / steps
  std::vector<double> deficits;  // |u0|_H^2 - |u_n|_H^2
  double slope = 0.0;            // least-squares slope of log|deficit| vs log tau
  /// +1 when energy is lost (deficits positive), -1 when it grows.
  int deficit_sign = 0;
};

/// Integrates a conserving system to `final_time` with each tau (rounded so
/// that final_time / tau is an integer) and fits the energy-deficit order.
/// Requires at least 4 geometric step sizes; throws std::invalid_argument
/// for dissipative systems.
DecayFit energy_decay_order(const StabilityPolynomial& r, const SemiNegativeSystem& sys,
                            const Eigen::VectorXd& u0, const std::vector<double>& taus, double final_time = 1.0);

/// Same on make_random_semi_negative(8, seed, 0) with a seeded initial state.
DecayFit energy_decay_order(const StabilityPolynomial& r, std::uint64_t seed, const std::vector<double>& taus);

/// 0.2, 0.1, 0.05, 0.025, 0.0125
std::vector<double> default_decay_taus();

}  // namespace rkstab
