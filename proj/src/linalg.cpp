#include "ave/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "ave/errors.hpp"

namespace ave {

namespace {

void require_finite(const std::vector<double>& data) {
  for (double v : data) {
    if (!std::isfinite(v)) throw std::invalid_argument("matrix/vector entry is not finite");
  }
}

Eigen::MatrixXd to_eigen(const Matrix& a) {
  Eigen::MatrixXd e(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) e(i, j) = a(i, j);
  return e;
}

}  // namespace

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
  data_.assign(static_cast<size_t>(rows) * cols, 0.0);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = static_cast<int>(rows.size());
  if (rows_ == 0) throw std::invalid_argument("matrix dimensions must be positive");
  cols_ = static_cast<int>(rows.begin()->size());
  data_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged matrix rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
  require_finite(data_);
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_data(int rows, int cols, std::vector<double> data) {
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
  if (data.size() != static_cast<size_t>(rows) * cols)
    throw std::invalid_argument("entry count does not match dimensions");
  require_finite(data);
  Matrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.data_ = std::move(data);
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix shape mismatch in +");
  Matrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix shape mismatch in -");
  Matrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch in *");
  Matrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      for (int j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

Matrix operator*(double s, const Matrix& a) {
  Matrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = s * a(i, j);
  return r;
}

Vector operator*(const Matrix& a, const Vector& x) {
  if (a.cols() != static_cast<int>(x.size()))
    throw std::invalid_argument("matrix/vector shape mismatch in *");
  Vector y(a.rows(), 0.0);
  for (int i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (int j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a.data() == b.data();
}

Matrix transpose(const Matrix& a) {
  Matrix r(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

double inf_norm(const Vector& x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

double two_norm(const Vector& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

double dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch in dot");
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double max_abs(const Matrix& a) {
  double m = 0.0;
  for (double v : a.data()) m = std::max(m, std::abs(v));
  return m;
}

double inf_norm(const Matrix& a) {
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i) {
    double row = 0.0;
    for (int j = 0; j < a.cols(); ++j) row += std::abs(a(i, j));
    m = std::max(m, row);
  }
  return m;
}

namespace {

// In-place LU with partial pivoting. Runs to completion unless a pivot is
// exactly zero, in which case elimination stops (the remaining factors are
// only used by the determinant, which is then 0).
struct LuFactors {
  Matrix lu;
  std::vector<int> perm;
  double perm_sign = 1.0;
  double min_pivot = 0.0;
  bool exact_zero_pivot = false;
};

LuFactors lu_factor(const Matrix& a) {
  if (!a.square()) throw std::invalid_argument("lu_factor requires a square matrix");
  const int n = a.rows();
  LuFactors f;
  f.lu = a;
  f.perm.resize(n);
  for (int i = 0; i < n; ++i) f.perm[i] = i;
  f.min_pivot = std::numeric_limits<double>::infinity();

  Matrix& m = f.lu;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(m(k, k));
    for (int i = k + 1; i < n; ++i) {
      if (std::abs(m(i, k)) > best) {
        best = std::abs(m(i, k));
        piv = i;
      }
    }
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      std::swap(f.perm[k], f.perm[piv]);
      f.perm_sign = -f.perm_sign;
    }
    const double pivot = m(k, k);
    f.min_pivot = std::min(f.min_pivot, std::abs(pivot));
    if (pivot == 0.0) {
      f.exact_zero_pivot = true;
      break;
    }
    for (int i = k + 1; i < n; ++i) {
      const double mult = m(i, k) / pivot;
      m(i, k) = mult;
      for (int j = k + 1; j < n; ++j) m(i, j) -= mult * m(k, j);
    }
  }
  return f;
}

double singularity_threshold(const Matrix& a) { return 1e-14 * max_abs(a); }

Vector lu_apply(const LuFactors& f, const Vector& b) {
  const int n = f.lu.rows();
  Vector x(n);
  for (int i = 0; i < n; ++i) x[i] = b[f.perm[i]];
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i; ++j) x[i] -= f.lu(i, j) * x[j];
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) x[i] -= f.lu(i, j) * x[j];
    x[i] /= f.lu(i, i);
  }
  return x;
}

}  // namespace

Vector lu_solve(const Matrix& a, const Vector& b) {
  if (!a.square()) throw std::invalid_argument("lu_solve requires a square matrix");
  if (a.rows() != static_cast<int>(b.size())) {
    std::ostringstream msg;
    msg << "dimension mismatch: matrix is " << a.rows() << "x" << a.cols()
        << " but right-hand side has " << b.size() << " entries";
    throw std::invalid_argument(msg.str());
  }
  LuFactors f = lu_factor(a);
  if (max_abs(a) == 0.0 || f.min_pivot < singularity_threshold(a))
    throw SingularMatrixError("matrix is singular to working precision");
  return lu_apply(f, b);
}

double determinant(const Matrix& a) {
  if (!a.square()) throw std::invalid_argument("determinant requires a square matrix");
  LuFactors f = lu_factor(a);
  if (f.exact_zero_pivot) return 0.0;
  double det = f.perm_sign;
  for (int i = 0; i < a.rows(); ++i) det *= f.lu(i, i);
  return det;
}

Matrix inverse(const Matrix& a) {
  if (!a.square()) throw std::invalid_argument("inverse requires a square matrix");
  const int n = a.rows();
  LuFactors f = lu_factor(a);
  if (max_abs(a) == 0.0 || f.min_pivot < singularity_threshold(a))
    throw SingularMatrixError("matrix is singular to working precision");
  Matrix inv(n, n);
  Vector e(n, 0.0);
  for (int j = 0; j < n; ++j) {
    e[j] = 1.0;
    Vector col = lu_apply(f, e);
    e[j] = 0.0;
    for (int i = 0; i < n; ++i) inv(i, j) = col[i];
  }
  // Residual check: the computed inverse must reproduce the identity.
  Matrix resid = a * inv - Matrix::identity(n);
  const double bound = 1e-8 * std::max(1.0, inf_norm(a) * inf_norm(inv));
  if (inf_norm(resid) > bound)
    throw SingularMatrixError("inverse residual check failed; matrix is effectively singular");
  return inv;
}

Matrix elementwise_abs(const Matrix& a) {
  Matrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = std::abs(a(i, j));
  return r;
}

double spectral_radius(const Matrix& a) {
  if (!a.square()) throw std::invalid_argument("spectral_radius requires a square matrix");
  Eigen::EigenSolver<Eigen::MatrixXd> es(to_eigen(a), /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw NoConvergenceError("eigenvalue iteration did not converge");
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

double spectral_norm(const Matrix& a) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(a));
  return svd.singularValues()(0);
}

double smallest_singular_value(const Matrix& a) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(a));
  return svd.singularValues()(svd.singularValues().size() - 1);
}

bool linear_system_consistent(const Matrix& a, const Vector& b, double zero_tol) {
  if (a.rows() != static_cast<int>(b.size()))
    throw std::invalid_argument("matrix/vector shape mismatch in linear_system_consistent");
  const int rows = a.rows();
  const int cols = a.cols();
  Matrix m = a;
  Vector r = b;
  std::vector<char> row_done(rows, 0);
  std::vector<char> col_done(cols, 0);
  for (;;) {
    int pi = -1, pj = -1;
    double best = zero_tol;
    for (int i = 0; i < rows; ++i) {
      if (row_done[i]) continue;
      for (int j = 0; j < cols; ++j) {
        if (col_done[j]) continue;
        if (std::abs(m(i, j)) > best) {
          best = std::abs(m(i, j));
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;
    row_done[pi] = 1;
    col_done[pj] = 1;
    for (int i = 0; i < rows; ++i) {
      if (row_done[i] || m(i, pj) == 0.0) continue;
      const double mult = m(i, pj) / m(pi, pj);
      for (int j = 0; j < cols; ++j)
        if (!col_done[j]) m(i, j) -= mult * m(pi, j);
      m(i, pj) = 0.0;
      r[i] -= mult * r[pi];
    }
  }
  const double rhs_tol = 1e-9 * std::max(1.0, inf_norm(b));
  for (int i = 0; i < rows; ++i)
    if (!row_done[i] && std::abs(r[i]) > rhs_tol) return false;
  return true;
}

Vector least_squares_solve(const Matrix& a, const Vector& b) {
  if (a.rows() != static_cast<int>(b.size()))
    throw std::invalid_argument("matrix/vector shape mismatch in least_squares_solve");
  Eigen::VectorXd rhs(b.size());
  for (size_t i = 0; i < b.size(); ++i) rhs(static_cast<int>(i)) = b[i];
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(to_eigen(a));
  Eigen::VectorXd x = cod.solve(rhs);
  return Vector(x.data(), x.data() + x.size());
}

}  // namespace ave
