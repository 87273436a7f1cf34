#ifndef AVE_TEST_UTIL_HPP
#define AVE_TEST_UTIL_HPP

#include <cmath>

#include "ave/linalg.hpp"
#include "ave/rng.hpp"

namespace ave::testutil {

inline Matrix random_matrix(int n, double lo, double hi, Rng& rng) {
  Matrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = rng.uniform(lo, hi);
  return a;
}

inline Matrix random_nonnegative(int n, Rng& rng) { return random_matrix(n, 0.0, 1.0, rng); }

// Random nonnegative matrix rescaled to a prescribed spectral radius.
inline Matrix random_nonnegative_with_radius(int n, double target, Rng& rng) {
  Matrix a = random_nonnegative(n, rng);
  const double rho = spectral_radius(a);
  const double factor = target / rho;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) *= factor;
  return a;
}

// Diagonally dominant, hence well conditioned.
inline Matrix random_well_conditioned(int n, Rng& rng) {
  Matrix a = random_matrix(n, -1.0, 1.0, rng);
  for (int i = 0; i < n; ++i) a(i, i) += (a(i, i) >= 0 ? 1.0 : -1.0) * (n + 1.0);
  return a;
}

inline double max_abs_diff(const Vector& a, const Vector& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

}  // namespace ave::testutil

#endif
