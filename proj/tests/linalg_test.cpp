#include "ave/linalg.hpp"

#include <cmath>
#include <doctest.h>

#include "ave/errors.hpp"
#include "ave/rng.hpp"
#include "test_util.hpp"

using namespace ave;
using namespace ave::testutil;

namespace {

// Unit upper-triangular with -1 everywhere above the diagonal. Its inverse
// has entries 2^{j-i-1} above the diagonal, so norms blow up with n while
// every entry of the matrix itself stays moderate.
Matrix triangular_family(int n) {
  Matrix a = Matrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) a(i, j) = -1.0;
  return a;
}

Matrix triangular_family_inverse(int n) {
  Matrix m = Matrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m(i, j) = std::pow(2.0, j - i - 1);
  return m;
}

}  // namespace

TEST_CASE("lu_solve on the shifted 2x2 system") {
  const Matrix a{{4.0, -1.0}, {-1.0, 4.0}};
  const Vector x = lu_solve(a, {1.0, -4.0});
  CHECK(x[0] == 0.0);
  CHECK(x[1] == -1.0);
}

TEST_CASE("lu_solve with the identity is a copy") {
  const Vector x = lu_solve(Matrix::identity(3), {5.0, 6.0, 7.0});
  CHECK(x == Vector{5.0, 6.0, 7.0});
}

TEST_CASE("lu_solve rejects a rank-deficient matrix") {
  const Matrix a{{1.0, -1.0}, {-1.0, 1.0}};
  CHECK_THROWS_AS(lu_solve(a, {1.0, 2.0}), SingularMatrixError);
}

TEST_CASE("lu_solve rejects mismatched dimensions") {
  CHECK_THROWS_AS(lu_solve(Matrix::identity(2), {1.0, 2.0, 3.0}), std::invalid_argument);
}

TEST_CASE("determinant") {
  CHECK(determinant(Matrix{{3.0, -1.0}, {-1.0, 3.0}}) == doctest::Approx(8.0).epsilon(1e-14));
  CHECK(determinant(Matrix::identity(5)) == 1.0);
  CHECK(determinant(Matrix{{1.0, -1.0}, {-1.0, 1.0}}) == 0.0);
}

TEST_CASE("inverse of the triangular family matches the closed form") {
  const Matrix inv = inverse(triangular_family(4));
  CHECK(max_abs_diff(inv, triangular_family_inverse(4)) == 0.0);
}

TEST_CASE("inverse of a scaled identity") {
  const Matrix inv = inverse(2.0 * Matrix::identity(3));
  CHECK(max_abs_diff(inv, 0.5 * Matrix::identity(3)) == 0.0);
}

TEST_CASE("inverse rejects a singular matrix") {
  CHECK_THROWS_AS(inverse(Matrix{{1.0, -1.0}, {-1.0, 1.0}}), SingularMatrixError);
}

TEST_CASE("elementwise_abs") {
  CHECK(elementwise_abs(Matrix{{3.0, -1.0}, {-1.0, 3.0}}) == Matrix{{3.0, 1.0}, {1.0, 3.0}});
  const Matrix nonneg{{0.5, 2.0}, {0.0, 1.0}};
  CHECK(elementwise_abs(nonneg) == nonneg);
  CHECK(elementwise_abs(-1.0 * Matrix::identity(3)) == Matrix::identity(3));
}

TEST_CASE("spectral_radius of |inverse| of the triangular family is 1") {
  for (int n : {4, 10}) {
    const Matrix r = elementwise_abs(inverse(triangular_family(n)));
    CHECK(spectral_radius(r) == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("spectral_radius of a permutation and a scalar") {
  CHECK(spectral_radius(Matrix{{0.0, 1.0}, {1.0, 0.0}}) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(spectral_radius(Matrix{{0.5}}) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("spectral_norm basics") {
  CHECK(spectral_norm(3.0 * Matrix::identity(4)) == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(spectral_norm(Matrix{{0.0, 1.0}, {0.0, 0.0}}) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("spectral_norm of the triangular family inverse exceeds 2^(n-2)") {
  const Matrix inv = inverse(triangular_family(10));
  CHECK(spectral_norm(inv) > 256.0);
}

TEST_CASE("property: inverse round-trips against the identity") {
  Rng rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.uniform_int(1, 20);
    const Matrix a = random_well_conditioned(n, rng);
    const Matrix prod = a * inverse(a);
    CHECK(max_abs_diff(prod, Matrix::identity(n)) <= 1e-10);
  }
}

TEST_CASE("property: rho(X) <= rho(|X|)") {
  Rng rng(202);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.uniform_int(1, 8);
    const Matrix x = random_matrix(n, -1.0, 1.0, rng);
    CHECK(spectral_radius(x) <= spectral_radius(elementwise_abs(x)) + 1e-10);
  }
}

TEST_CASE("property: rho is monotone on nonnegative pairs") {
  Rng rng(303);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.uniform_int(1, 8);
    const Matrix y = random_nonnegative(n, rng);
    Matrix x = y;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) x(i, j) *= rng.uniform();
    CHECK(spectral_radius(x) <= spectral_radius(y) + 1e-10);
  }
}

TEST_CASE("property: Neumann series ratio identity") {
  Rng rng(404);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.uniform_int(1, 8);
    const Matrix x = random_nonnegative_with_radius(n, rng.uniform(0.05, 0.9), rng);
    const double rho = spectral_radius(x);
    const Matrix y = inverse(Matrix::identity(n) - x) * x;
    CHECK(spectral_radius(y) == doctest::Approx(rho / (1.0 - rho)).epsilon(1e-8));
  }
}

TEST_CASE("least_squares_solve recovers a consistent singular system") {
  const Matrix m{{1.0, -1.0}, {-1.0, 1.0}};
  const Vector w = least_squares_solve(m, {1.0, -1.0});
  const Vector r = m * w;
  CHECK(std::abs(r[0] - 1.0) <= 1e-12);
  CHECK(std::abs(r[1] + 1.0) <= 1e-12);
}

TEST_CASE("matrix construction rejects non-finite entries") {
  CHECK_THROWS_AS((Matrix{{1.0, std::nan("")}, {0.0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Matrix::from_data(1, 2, {1.0, INFINITY}), std::invalid_argument);
}
