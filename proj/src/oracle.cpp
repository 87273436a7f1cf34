#include "ave/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ave/analysis.hpp"
#include "ave/errors.hpp"

namespace ave {

namespace {

SignPattern vertex_pattern(std::uint32_t k, int n) {
  SignPattern s(n);
  for (int j = 0; j < n; ++j) s[j] = ((k >> (n - 1 - j)) & 1) ? 1 : -1;
  return s;
}

Matrix minus_diag(const Matrix& a, const SignPattern& s) {
  Matrix m = a;
  for (int j = 0; j < m.rows(); ++j) m(j, j) -= static_cast<double>(s[j]);
  return m;
}

}  // namespace

SolutionSet enumerate_solutions(const Matrix& a, const Vector& b) {
  if (!a.square()) throw std::invalid_argument("enumerate_solutions requires a square matrix");
  if (a.rows() != static_cast<int>(b.size()))
    throw std::invalid_argument("matrix/rhs dimension mismatch in enumerate_solutions");
  const int n = a.rows();
  if (n > 16) throw TooLargeError("vertex enumeration limited to n <= 16");

  SolutionSet set;
  // Vertex systems are judged singular at the scale of A itself: the a2
  // construction leaves A - I singular only up to roundoff, and a 1x1
  // vertex can degenerate to a tiny nonzero scalar.
  const double vertex_tol = 1e-12 * std::max(1.0, max_abs(a));
  for (std::uint32_t k = 0; k < (std::uint32_t{1} << n); ++k) {
    const SignPattern s = vertex_pattern(k, n);
    const Matrix m = minus_diag(a, s);
    Vector x;
    try {
      if (smallest_singular_value(m) <= vertex_tol)
        throw SingularMatrixError("vertex system is singular at problem scale");
      x = lu_solve(m, b);
    } catch (const SingularMatrixError&) {
      set.singular_patterns.push_back(s);
      if (linear_system_consistent(m, b, vertex_tol)) set.complete = false;
      continue;
    }
    bool consistent = true;
    for (int j = 0; j < n; ++j) {
      if (s[j] * x[j] < -1e-12) {
        consistent = false;
        break;
      }
    }
    if (!consistent) continue;
    if (check_solution(a, b, x) > 1e-9 * std::max(1.0, inf_norm(x))) continue;
    bool duplicate = false;
    for (const Vector& y : set.solutions) {
      double dist = 0.0;
      for (int j = 0; j < n; ++j) dist = std::max(dist, std::abs(x[j] - y[j]));
      if (dist <= 1e-8) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) set.solutions.push_back(std::move(x));
  }
  return set;
}

bool enumerate_with_uniqueness(const Matrix& a, int trials, std::uint64_t seed) {
  if (!a.square()) throw std::invalid_argument("enumerate_with_uniqueness requires a square matrix");
  const int n = a.rows();
  if (n > 8) throw TooLargeError("uniqueness sampling limited to n <= 8");
  Rng rng(seed);
  const std::uint32_t pieces = std::uint32_t{1} << n;
  for (int t = 0; t < trials; ++t) {
    const SignPattern s = vertex_pattern(static_cast<std::uint32_t>(t) % pieces, n);
    Vector x(n);
    for (int j = 0; j < n; ++j) x[j] = s[j] * rng.uniform(0.1, 2.0);
    const Vector b = minus_diag(a, s) * x;
    const SolutionSet set = enumerate_solutions(a, b);
    if (set.solutions.size() != 1 || !set.complete) return false;
  }
  return true;
}

InstanceKind parse_instance_kind(const std::string& name) {
  std::string key = name;
  std::replace(key.begin(), key.end(), '_', '-');
  if (key == "ex32") return InstanceKind::Ex32;
  if (key == "ex37") return InstanceKind::Ex37;
  if (key == "remark43") return InstanceKind::Remark43;
  if (key == "a1-random") return InstanceKind::A1Random;
  if (key == "a2-random") return InstanceKind::A2Random;
  if (key == "rho-third-random") return InstanceKind::RhoThirdRandom;
  throw InvalidKindError("unknown instance kind: " + name);
}

std::string to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::Ex32: return "ex32";
    case InstanceKind::Ex37: return "ex37";
    case InstanceKind::Remark43: return "remark43";
    case InstanceKind::A1Random: return "a1-random";
    case InstanceKind::A2Random: return "a2-random";
    case InstanceKind::RhoThirdRandom: return "rho-third-random";
  }
  return "unknown";
}

namespace {

// Nonnegative matrix with a full cycle added, hence irreducible.
Matrix random_irreducible_nonnegative(int n, Rng& rng) {
  Matrix c(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c(i, j) = rng.uniform();
  for (int i = 0; i < n; ++i) c(i, (i + 1) % n) += 1.0;
  return c;
}

Vector random_vector(int n, double lo, double hi, Rng& rng) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v[i] = rng.uniform(lo, hi);
  return v;
}

Instance make_a1_random(int n, Rng& rng) {
  const Matrix c = random_irreducible_nonnegative(n, rng);
  const double rho = spectral_radius(c);
  const double delta = rng.uniform(0.1, 1.0);
  const double s = rho * (1.0 + delta);
  Matrix a = (1.0 + s) * Matrix::identity(n) - c;
  Instance inst{std::move(a), random_vector(n, -2.0, 2.0, rng),
                random_vector(n, -1.0, 1.0, rng)};
  return inst;
}

Instance make_a2_random(int n, Rng& rng) {
  const Matrix c = random_irreducible_nonnegative(n, rng);
  const double rho = spectral_radius(c);
  Matrix a = (1.0 + rho) * Matrix::identity(n) - c;
  const Matrix m = a - Matrix::identity(n);
  if (classify_m_matrix(m) != MatrixClass::SingularM || !is_irreducible(m))
    throw NoConvergenceError("a2 generator post-check failed");
  Instance inst{std::move(a), random_vector(n, -2.0, 2.0, rng),
                random_vector(n, -1.0, 1.0, rng)};
  return inst;
}

Instance make_rho_third_random(int n, Rng& rng) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = rng.uniform(-1.0, 1.0);
    const double rho = spectral_radius(elementwise_abs(m));
    if (rho < 1e-9) continue;
    const double target = rng.uniform(0.05, 0.95) / 3.0;
    const double factor = target / rho;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) *= factor;
    Matrix a(1, 1);
    try {
      a = inverse(m);
    } catch (const SingularMatrixError&) {
      continue;
    }
    Instance inst{std::move(a), random_vector(n, -2.0, 2.0, rng),
                  random_vector(n, -1.0, 1.0, rng)};
    return inst;
  }
  throw NoConvergenceError("rho-third generator exhausted its draw budget");
}

Matrix ex37_matrix(int n) {
  Matrix a = Matrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) a(i, j) = -1.0;
  return a;
}

}  // namespace

Instance generate_instance(InstanceKind kind, int n, std::uint64_t seed) {
  Rng rng(seed);
  switch (kind) {
    case InstanceKind::Ex32:
      return {Matrix{{3.0, -1.0}, {-1.0, 3.0}}, {1.0, -4.0}, Vector{-1.0, -1.0}};
    case InstanceKind::Remark43:
      return {Matrix{{0.59, 1.02}, {0.15, 0.67}}, {1.68, 0.05}, Vector{-0.46, -0.61}};
    case InstanceKind::Ex37:
      if (n < 1) throw std::invalid_argument("ex37 requires n >= 1");
      return {ex37_matrix(n), random_vector(n, -2.0, 2.0, rng), std::nullopt};
    case InstanceKind::A1Random:
      if (n < 1) throw std::invalid_argument("a1-random requires n >= 1");
      return make_a1_random(n, rng);
    case InstanceKind::A2Random:
      if (n < 1) throw std::invalid_argument("a2-random requires n >= 1");
      return make_a2_random(n, rng);
    case InstanceKind::RhoThirdRandom:
      if (n < 1) throw std::invalid_argument("rho-third-random requires n >= 1");
      return make_rho_third_random(n, rng);
  }
  throw InvalidKindError("unknown instance kind");
}

Vector rhs_with_vtb_sign(const Vector& v, int sign, Rng& rng) {
  if (sign == 0) throw std::invalid_argument("sign must be +1 or -1");
  const int n = static_cast<int>(v.size());
  for (int attempt = 0; attempt < 100; ++attempt) {
    Vector b = random_vector(n, -2.0, 2.0, rng);
    const double t = dot(v, b);
    if (std::abs(t) < 1e-6 * two_norm(v) * two_norm(b)) continue;
    if ((t > 0) != (sign > 0))
      for (double& e : b) e = -e;
    return b;
  }
  throw NoConvergenceError("rhs_with_vtb_sign exhausted its draw budget");
}

ConsistentRhs rhs_in_range_of_a_minus_i(const Matrix& a, Rng& rng) {
  const int n = a.rows();
  ConsistentRhs out;
  out.w.resize(n);
  for (int i = 0; i < n; ++i) out.w[i] = rng.uniform_int(-2, 3);
  Vector wd(n);
  for (int i = 0; i < n; ++i) wd[i] = static_cast<double>(out.w[i]);
  const Matrix m = a - Matrix::identity(n);
  out.b = m * wd;
  return out;
}

}  // namespace ave
