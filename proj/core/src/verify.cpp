#include "rkstab/verify.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "rkstab/jacobi.hpp"

namespace rkstab {
namespace {

std::vector<double> symmetric_spectrum(const Eigen::MatrixXd& m) {
  const auto n = static_cast<std::size_t>(m.rows());
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto ii = static_cast<Eigen::Index>(i);
      const auto jj = static_cast<Eigen::Index>(j);
      a[i * n + j] = 0.5 * (m(ii, jj) + m(jj, ii));
    }
  return jacobi_eigenvalues(std::move(a), n, 1e-15);
}

// Upper-triangular C with H = C^T C.
Eigen::MatrixXd weight_factor(const Eigen::MatrixXd& h) {
  Eigen::LLT<Eigen::MatrixXd> llt(h);
  if (llt.info() != Eigen::Success) throw std::invalid_argument("weight matrix H is not symmetric positive definite");
  return llt.matrixU();
}

double spectral_norm_similar(const Eigen::MatrixXd& c, const Eigen::MatrixXd& r) {
  // M = C R C^{-1}; solve M C = C R as C^T M^T = (C R)^T.
  const Eigen::MatrixXd cr = c * r;
  const Eigen::MatrixXd mt = c.transpose().triangularView<Eigen::Lower>().solve(cr.transpose());
  const Eigen::MatrixXd m = mt.transpose();
  const auto eig = symmetric_spectrum(m.transpose() * m);
  return std::sqrt(std::max(eig.front(), 0.0));
}

Eigen::MatrixXd draw(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = normal(rng);
  return m;
}

}  // namespace

Eigen::MatrixXd SemiNegativeSystem::dissipation_form() const {
  return generator.transpose() * weight + weight * generator;
}

double semi_negativity_defect(const SemiNegativeSystem& sys) {
  const double scale = sys.weight.norm() * sys.generator.norm();
  if (scale == 0.0) return 0.0;
  return symmetric_spectrum(sys.dissipation_form()).front() / scale;
}

void validate_system(const SemiNegativeSystem& sys) {
  if (sys.generator.rows() != sys.generator.cols() || sys.weight.rows() != sys.weight.cols() ||
      sys.generator.rows() != sys.weight.rows()) {
    throw std::invalid_argument("system matrices L and H must be square and of equal size");
  }
  if ((sys.weight - sys.weight.transpose()).norm() > 1e-12 * sys.weight.norm()) {
    throw std::invalid_argument("weight matrix H must be symmetric");
  }
  weight_factor(sys.weight);
  if (semi_negativity_defect(sys) > 1e-10) {
    throw std::invalid_argument("system \"" + sys.label + "\" is not semi-negative: L^T H + H L has a positive eigenvalue");
  }
}

bool is_conserving(const SemiNegativeSystem& sys) {
  return sys.dissipation_form().norm() <= 1e-10 * sys.weight.norm() * sys.generator.norm();
}

SemiNegativeSystem make_random_semi_negative(int n, std::uint64_t seed, double dissipation, bool identity_weight) {
  if (n < 2) throw std::invalid_argument("random system dimension must be >= 2");
  if (!(dissipation >= 0.0)) throw std::invalid_argument("dissipation must be >= 0");

  std::mt19937_64 rng(seed);
  const Eigen::MatrixXd x = draw(rng, n, n);
  const Eigen::MatrixXd skew = x - x.transpose();
  const Eigen::MatrixXd b = draw(rng, std::max(1, n / 2), n);
  const Eigen::MatrixXd damping = dissipation * (b.transpose() * b);
  const Eigen::MatrixXd c = draw(rng, n, n);

  SemiNegativeSystem sys;
  sys.weight = identity_weight ? Eigen::MatrixXd::Identity(n, n)
                               : Eigen::MatrixXd(c.transpose() * c + 0.1 * Eigen::MatrixXd::Identity(n, n));
  sys.weight = 0.5 * (sys.weight + sys.weight.transpose());
  sys.generator = sys.weight.llt().solve(skew - damping);

  const Eigen::MatrixXd factor = weight_factor(sys.weight);
  const double norm = spectral_norm_similar(factor, sys.generator);
  if (norm > 0.0) sys.generator /= norm;

  sys.label = "random(n=" + std::to_string(n) + ", seed=" + std::to_string(seed) +
              ", dissipation=" + std::to_string(dissipation) + ")";
  validate_system(sys);
  return sys;
}

SemiNegativeSystem make_upwind_advection(int n) {
  if (n < 3) throw std::invalid_argument("upwind grid needs n >= 3");
  SemiNegativeSystem sys;
  sys.generator = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    sys.generator(i, i) = -n;
    sys.generator(i, (i + n - 1) % n) = n;
  }
  sys.weight = Eigen::MatrixXd::Identity(n, n) / n;
  sys.label = "upwind(n=" + std::to_string(n) + ")";
  validate_system(sys);
  return sys;
}

SemiNegativeSystem counterexample_rk4() {
  SemiNegativeSystem sys;
  sys.generator.resize(3, 3);
  sys.generator << -1, -2, -2,  //
      0, -1, -2,                //
      0, 0, -1;
  sys.weight = Eigen::MatrixXd::Identity(3, 3);
  sys.label = "rk4-counterexample";
  validate_system(sys);
  return sys;
}

Eigen::MatrixXd evaluate_polynomial(const StabilityPolynomial& r, const Eigen::MatrixXd& l, double tau) {
  const Eigen::MatrixXd step = tau * l;
  const auto n = l.rows();
  const auto& alpha = r.coefficients();
  Eigen::MatrixXd acc = to_double(alpha.back()) * Eigen::MatrixXd::Identity(n, n);
  for (auto k = alpha.size() - 1; k-- > 0;) {
    acc = acc * step;
    acc.diagonal().array() += to_double(alpha[k]);
  }
  return acc;
}

double h_operator_norm(const StabilityPolynomial& r, const SemiNegativeSystem& sys, double tau) {
  if (!(tau >= 0.0)) throw std::invalid_argument("tau must be >= 0");
  const Eigen::MatrixXd factor = weight_factor(sys.weight);
  return spectral_norm_similar(factor, evaluate_polynomial(r, sys.generator, tau));
}

double SweepReport::max_norm() const {
  double best = 0.0;
  for (double v : h_norms) best = std::max(best, v);
  return best;
}

std::vector<double> geometric_grid(double tau_min, double tau_max, int points) {
  if (!(tau_min > 0.0) || !(tau_max > tau_min) || points < 2) {
    throw std::invalid_argument("sweep needs 0 < tau_min < tau_max and at least 2 points");
  }
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double ratio = std::log(tau_max / tau_min) / (points - 1);
  for (int i = 0; i < points; ++i) grid[static_cast<std::size_t>(i)] = tau_min * std::exp(ratio * i);
  grid.front() = tau_min;
  grid.back() = tau_max;
  return grid;
}

SweepReport stability_sweep(const StabilityPolynomial& r, const SemiNegativeSystem& sys, double tau_min,
                            double tau_max, int points) {
  SweepReport report;
  report.tau_grid = geometric_grid(tau_min, tau_max, points);
  const Eigen::MatrixXd factor = weight_factor(sys.weight);
  report.h_norms.reserve(report.tau_grid.size());
  bool stable_so_far = true;
  for (double tau : report.tau_grid) {
    const double norm = spectral_norm_similar(factor, evaluate_polynomial(r, sys.generator, tau));
    report.h_norms.push_back(norm);
    if (stable_so_far && norm <= 1.0 + kStableTolerance) {
      report.max_stable_tau = tau;
    } else {
      stable_so_far = false;
    }
  }
  return report;
}

DecayFit energy_decay_order(const StabilityPolynomial& r, const SemiNegativeSystem& sys, const Eigen::VectorXd& u0,
                            const std::vector<double>& taus, double final_time) {
  if (!is_conserving(sys)) {
    throw std::invalid_argument("energy decay order needs a conserving system (L^T H + H L = 0)");
  }
  if (taus.size() < 4) throw std::invalid_argument("energy decay fit needs at least 4 step sizes");
  for (double tau : taus) {
    if (!(tau > 0.0) || tau > final_time) throw std::invalid_argument("step sizes must lie in (0, T]");
  }
  const double ratio = taus[1] / taus[0];
  for (std::size_t i = 1; i < taus.size(); ++i) {
    if (std::abs(taus[i] / taus[i - 1] - ratio) > 1e-6 * std::abs(ratio) || ratio == 1.0) {
      throw std::invalid_argument("step sizes must form a geometric sequence");
    }
  }

  using Wide = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  using WideVector = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
  const Wide h = sys.weight.cast<long double>();
  const WideVector start = u0.cast<long double>();
  const long double energy0 = start.dot(h * start);

  DecayFit fit;
  for (double requested : taus) {
    const auto steps = static_cast<long>(std::llround(final_time / requested));
    const double tau = final_time / static_cast<double>(steps);
    const Wide step = evaluate_polynomial(r, sys.generator, tau).cast<long double>();
    WideVector u = start;
    for (long n = 0; n < steps; ++n) u = step * u;
    fit.taus.push_back(tau);
    fit.deficits.push_back(static_cast<double>(energy0 - u.dot(h * u)));
  }

  int positive = 0;
  for (double d : fit.deficits) positive += d > 0 ? 1 : 0;
  fit.deficit_sign = 2 * positive >= static_cast<int>(fit.deficits.size()) ? 1 : -1;

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double count = static_cast<double>(fit.taus.size());
  for (std::size_t i = 0; i < fit.taus.size(); ++i) {
    const double x = std::log(fit.taus[i]);
    const double y = std::log(std::abs(fit.deficits[i]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  fit.slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  return fit;
}

DecayFit energy_decay_order(const StabilityPolynomial& r, std::uint64_t seed, const std::vector<double>& taus) {
  const auto sys = make_random_semi_negative(8, seed, 0.0);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd u0(sys.dimension());
  for (Eigen::Index i = 0; i < u0.size(); ++i) u0(i) = normal(rng);
  u0 /= std::sqrt(u0.dot(sys.weight * u0));
  return energy_decay_order(r, sys, u0, taus);
}

std::vector<double> default_decay_taus() { return {0.2, 0.1, 0.05, 0.025, 0.0125}; }

}  // namespace rkstab
