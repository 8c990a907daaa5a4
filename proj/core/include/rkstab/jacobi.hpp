#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace rkstab {

/// Eigenvalues of a dense symmetric n x n matrix (row-major `a`) by cyclic
/// Jacobi rotations. Sweeps until the off-diagonal Frobenius mass drops below
/// `relative_tolerance` times the total Frobenius mass. Works for any scalar
/// type with sqrt/abs reachable by ADL. Returned in descending order.
template <class Scalar>
std::vector<Scalar> jacobi_eigenvalues(std::vector<Scalar> a, std::size_t n, const Scalar& relative_tolerance,
                                       int max_sweeps = 100) {
  using std::abs;
  using std::sqrt;
  auto at = [&](std::size_t i, std::size_t j) -> Scalar& { return a[i * n + j]; };

  Scalar total = 0;
  for (const auto& x : a) total += x * x;
  const Scalar threshold = relative_tolerance * relative_tolerance * total;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    Scalar off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) off += at(i, j) * at(i, j);
    if (off <= threshold) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Scalar apq = at(p, q);
        if (apq == 0) continue;
        const Scalar theta = (at(q, q) - at(p, p)) / (2 * apq);
        Scalar t = 1 / (abs(theta) + sqrt(theta * theta + 1));
        if (theta < 0) t = -t;
        const Scalar c = 1 / sqrt(t * t + 1);
        const Scalar s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const Scalar akp = at(k, p);
          const Scalar akq = at(k, q);
          at(k, p) = at(p, k) = c * akp - s * akq;
          at(k, q) = at(q, k) = s * akp + c * akq;
        }
        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = at(q, p) = 0;
      }
    }
  }

  std::vector<Scalar> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

}  // namespace rkstab
