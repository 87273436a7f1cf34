#include "ave/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>

#include "ave/errors.hpp"

namespace ave {

std::string to_string(MatrixClass c) {
  switch (c) {
    case MatrixClass::NonsingularM: return "nonsingular_m";
    case MatrixClass::SingularM: return "singular_m";
    case MatrixClass::NotM: return "not_m";
    case MatrixClass::NotZ: return "not_z";
  }
  return "unknown";
}

bool is_z_matrix(const Matrix& a) {
  if (!a.square()) throw std::invalid_argument("is_z_matrix requires a square matrix");
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j && a(i, j) > 0.0) return false;
  return true;
}

namespace {

double max_diagonal(const Matrix& a) {
  double s = a(0, 0);
  for (int i = 1; i < a.rows(); ++i) s = std::max(s, a(i, i));
  return s;
}

// B = sI - A with s = max diagonal; nonnegative whenever A is a Z-matrix.
Matrix z_matrix_complement(const Matrix& a, double s) {
  Matrix b(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) b(i, j) = (i == j ? s - a(i, i) : -a(i, j));
  return b;
}

}  // namespace

MatrixClass classify_m_matrix(const Matrix& a) {
  if (!a.square()) throw std::invalid_argument("classify_m_matrix requires a square matrix");
  if (!is_z_matrix(a)) return MatrixClass::NotZ;
  const double s = max_diagonal(a);
  const Matrix b = z_matrix_complement(a, s);
  const double rho = spectral_radius(b);
  const double tau = 1e-9 * std::max(1.0, s);
  const double gap = s - rho;
  if (gap > tau) return MatrixClass::NonsingularM;
  if (gap >= -tau) return MatrixClass::SingularM;
  return MatrixClass::NotM;
}

bool is_irreducible(const Matrix& a) {
  if (!a.square()) throw std::invalid_argument("is_irreducible requires a square matrix");
  const int n = a.rows();
  if (n == 1) return true;

  // Strongly connected iff every vertex is reachable from vertex 0 in the
  // graph and in its reverse.
  auto reaches_all = [&](bool forward) {
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
      const int i = q.front();
      q.pop();
      for (int j = 0; j < n; ++j) {
        if (j == i || seen[j]) continue;
        const double edge = forward ? a(i, j) : a(j, i);
        if (edge != 0.0) {
          seen[j] = 1;
          ++count;
          q.push(j);
        }
      }
    }
    return count == n;
  };
  return reaches_all(true) && reaches_all(false);
}

Vector perron_vector(const Matrix& b, const std::optional<Vector>& start) {
  if (!b.square()) throw std::invalid_argument("perron_vector requires a square matrix");
  const int n = b.rows();
  for (double v : b.data())
    if (v < 0.0) throw NotApplicableError("perron_vector requires a nonnegative matrix");

  Vector z;
  if (start) {
    if (static_cast<int>(start->size()) != n)
      throw std::invalid_argument("perron_vector start has wrong length");
    z = *start;
    for (double& v : z) v = std::abs(v);
    if (inf_norm(z) == 0.0) z.assign(n, 1.0);
  } else {
    z.assign(n, 1.0);
  }
  const double nz = inf_norm(z);
  for (double& v : z) v /= nz;

  const int max_iter = 500000;
  for (int iter = 0; iter < max_iter; ++iter) {
    // y = (B + I) z; positivity of z is preserved since y >= z > 0.
    Vector y = b * z;
    for (int i = 0; i < n; ++i) y[i] += z[i];
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (int i = 0; i < n; ++i) {
      const double ratio = y[i] / z[i];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    const double ny = inf_norm(y);
    for (int i = 0; i < n; ++i) z[i] = y[i] / ny;
    // Collatz-Wielandt sandwich: lo <= rho(B)+1 <= hi.
    if (hi - lo <= 1e-13 * hi) return z;
  }
  throw NoConvergenceError("power iteration exhausted its budget");
}

NullVectors singular_m_null_vectors(const Matrix& a, const std::optional<Vector>& start) {
  if (!a.square()) throw std::invalid_argument("singular_m_null_vectors requires a square matrix");
  if (classify_m_matrix(a) != MatrixClass::SingularM || !is_irreducible(a))
    throw NotApplicableError("matrix is not an irreducible singular M-matrix");

  const double s = max_diagonal(a);
  const Matrix b = z_matrix_complement(a, s);
  NullVectors nv;
  nv.u = perron_vector(b, start);
  nv.v = perron_vector(transpose(b), start);

  const double ru = inf_norm(a * nv.u);
  const double rv = inf_norm(transpose(a) * nv.v);
  if (ru > 1e-8 || rv > 1e-8)
    throw NoConvergenceError("null vector residual exceeds tolerance");
  return nv;
}

bool interval_regularity_vertex_test(const Matrix& a) {
  if (!a.square()) throw std::invalid_argument("vertex test requires a square matrix");
  const int n = a.rows();
  if (n > 20) throw TooLargeError("vertex test limited to n <= 20");

  int ref_sign = 0;
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
    Matrix m = a;
    for (int j = 0; j < n; ++j) {
      const double dj = ((k >> (n - 1 - j)) & 1) ? 1.0 : -1.0;
      m(j, j) -= dj;
    }
    const double det = determinant(m);
    // Hadamard-style scale for the near-zero cutoff.
    double scale = 1.0;
    for (int i = 0; i < n; ++i) {
      double row = 0.0;
      for (int j = 0; j < n; ++j) row = std::max(row, std::abs(m(i, j)));
      scale *= row;
    }
    if (std::abs(det) <= 1e-12 * scale) return false;
    const int sign = det > 0.0 ? 1 : -1;
    if (ref_sign == 0) ref_sign = sign;
    if (sign != ref_sign) return false;
  }
  return true;
}

double neumann_ratio(const Matrix& x) {
  if (!x.square()) throw std::invalid_argument("neumann_ratio requires a square matrix");
  for (double v : x.data())
    if (v < 0.0) throw NotApplicableError("neumann_ratio requires a nonnegative matrix");
  const double rho = spectral_radius(x);
  if (rho >= 1.0) throw NotApplicableError("neumann_ratio requires rho(X) < 1");
  const Matrix y = inverse(Matrix::identity(x.rows()) - x) * x;
  return spectral_radius(y);
}

}  // namespace ave
