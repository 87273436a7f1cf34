#ifndef AVE_LINALG_HPP
#define AVE_LINALG_HPP

#include <initializer_list>
#include <vector>

namespace ave {

using Vector = std::vector<double>;

/// Dense real matrix, row-major storage. Entries must be finite; the
/// data-taking constructors reject NaN/Inf.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);  // zero-filled
  Matrix(std::initializer_list<std::initializer_list<double>> rows);
  static Matrix identity(int n);
  static Matrix from_data(int rows, int cols, std::vector<double> data);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  const std::vector<double>& data() const { return data_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);
Vector operator*(const Matrix& a, const Vector& x);
bool operator==(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& a);

double inf_norm(const Vector& x);
double two_norm(const Vector& x);
double dot(const Vector& a, const Vector& b);
double max_abs(const Matrix& a);
double inf_norm(const Matrix& a);  // max row sum of |entries|

/// Solves Ax = b by LU with partial pivoting. Throws SingularMatrixError
/// when a pivot falls below 1e-14 times the largest entry magnitude of A.
Vector lu_solve(const Matrix& a, const Vector& b);

/// Product of pivots with the permutation sign. Returns exact 0.0 only
/// when elimination hits a pivot that is exactly zero.
double determinant(const Matrix& a);

Matrix inverse(const Matrix& a);

Matrix elementwise_abs(const Matrix& a);

/// Largest eigenvalue magnitude, computed by a dense Schur decomposition.
double spectral_radius(const Matrix& a);

/// Largest singular value.
double spectral_norm(const Matrix& a);

/// Smallest singular value; 0 marks exact rank deficiency.
double smallest_singular_value(const Matrix& a);

/// Minimum-norm least-squares solution of Ax = b; works for singular A.
Vector least_squares_solve(const Matrix& a, const Vector& b);

/// Whether Ax = b admits a solution, treating entries of the eliminated
/// matrix at or below zero_tol as zero. After complete-pivoting
/// elimination, a dropped row is consistent when its transformed
/// right-hand side is below 1e-9 * max(1, ||b||_inf).
bool linear_system_consistent(const Matrix& a, const Vector& b, double zero_tol);

}  // namespace ave

#endif
