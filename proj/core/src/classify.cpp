#include "rkstab/classify.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include "rkstab/jacobi.hpp"

namespace rkstab {
namespace {

using Wide = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<50>,
                                           boost::multiprecision::et_off>;

void require_symmetric(const RationalMatrix& g) {
  if (g.rows() != g.cols()) throw std::invalid_argument("matrix must be square");
  if (!g.is_symmetric()) throw std::invalid_argument("matrix must be symmetric");
}

int parity_sign(int n) { return n % 2 == 0 ? 1 : -1; }

}  // namespace

std::string_view to_string(StabilityStatus status) {
  switch (status) {
    case StabilityStatus::StronglyStable:
      return "strongly-stable";
    case StabilityStatus::NotStronglyStable:
      return "not-strongly-stable";
    case StabilityStatus::Undetermined:
      return "undetermined";
  }
  return "undetermined";
}

bool is_negative_definite_exact(const RationalMatrix& g) {
  require_symmetric(g);
  const std::size_t n = g.rows();
  if (n == 0) throw std::invalid_argument("matrix must be non-empty");

  // Scale -G to an integer matrix; a positive scale keeps minor signs.
  Integer common = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      common = boost::multiprecision::lcm(common, boost::multiprecision::denominator(g(i, j)));

  Matrix<Integer> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational scaled = -g(i, j) * common;
      m(i, j) = boost::multiprecision::numerator(scaled);
    }

  // Bareiss: after step k, m(k,k) is the (k+1)-th leading principal minor.
  Integer previous = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
    }
    previous = m(k, k);
  }
  return true;
}

std::vector<double> symmetric_eigenvalues(const RationalMatrix& g) {
  require_symmetric(g);
  const std::size_t n = g.rows();
  std::vector<Wide> wide(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) wide[i * n + j] = Wide(g(i, j));

  const auto eig = jacobi_eigenvalues(std::move(wide), n, Wide("1e-45"));
  std::vector<double> out;
  out.reserve(n);
  for (const auto& x : eig) out.push_back(x.convert_to<double>());
  return out;
}

double hilbert_min_eigenvalue(int order) {
  if (order < 1) throw std::invalid_argument("Hilbert matrix order must be >= 1");
  const auto n = static_cast<std::size_t>(order);
  RationalMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = Rational(Integer(1), Integer(i + j + 1));
  return symmetric_eigenvalues(h).back();
}

StabilityVerdict classify_strong_stability(const EnergyEquality& e) {
  const LeadingData lead = leading_data(e);

  StabilityVerdict v;
  v.k_star = lead.k_star;
  v.beta_star = lead.beta_star;
  v.gamma_star_definite = is_negative_definite_exact(lead.gamma_star);
  v.gamma_star_eigenvalues = symmetric_eigenvalues(lead.gamma_star);

  if (lead.beta_star > 0) {
    v.status = StabilityStatus::NotStronglyStable;
  } else if (v.gamma_star_definite) {
    v.status = StabilityStatus::StronglyStable;
  } else {
    v.status = StabilityStatus::Undetermined;
    v.notes.emplace_back("leading submatrix is not negative definite");
  }
  return v;
}

bool odd_order_criterion(const StabilityPolynomial& r) {
  const int p = linear_order(r);
  if (p < 1 || p % 2 == 0) {
    throw std::invalid_argument("odd-order criterion needs an odd linear order, got p = " + std::to_string(p));
  }
  const Rational defect = r.coefficient(p + 1) - inverse_factorial(static_cast<unsigned>(p) + 1);
  return parity_sign((p + 1) / 2) * defect < 0;
}

EvenOrderCheck even_order_check(const StabilityPolynomial& r) {
  const int p = linear_order(r);
  if (p < 1 || p % 2 == 1) {
    throw std::invalid_argument("even-order criterion needs an even linear order, got p = " + std::to_string(p));
  }
  const auto up = static_cast<unsigned>(p);
  const int half = p / 2;
  const int sign = parity_sign(half + 1);

  EvenOrderCheck check;
  check.linear_order = p;
  const Rational tail = Rational(Integer(1), factorial(up) * (p + 2));
  check.leading_negative = sign * (r.coefficient(p + 2) - r.coefficient(p + 1) + tail) < 0;

  const Integer half_factorial = factorial(static_cast<unsigned>(half));
  check.block_lhs = sign * Rational(half_factorial * half_factorial) *
                    (r.coefficient(p + 1) - inverse_factorial(up + 1));
  check.hilbert_epsilon = hilbert_min_eigenvalue(half + 1);

  constexpr double guard = 1e-9;
  if (check.block_lhs <= 0) {
    check.block_condition = true;
  } else {
    const double lhs = to_double(check.block_lhs);
    const double eps = check.hilbert_epsilon;
    check.borderline = std::abs(lhs - eps) <= guard * eps;
    check.block_condition = !check.borderline && lhs < eps;
  }
  return check;
}

}  // namespace rkstab
