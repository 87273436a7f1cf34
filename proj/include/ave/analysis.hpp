#ifndef AVE_ANALYSIS_HPP
#define AVE_ANALYSIS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ave/linalg.hpp"

namespace ave {

enum class MatrixClass { NonsingularM, SingularM, NotM, NotZ };

std::string to_string(MatrixClass c);

/// Structural classification of A, as reported by the analyze command.
/// All classification fields refer to A - I.
struct MatrixReport {
  bool is_z_matrix_a_minus_i = false;
  MatrixClass m_class = MatrixClass::NotZ;
  bool irreducible = false;
  std::optional<Vector> right_null_vector_u;  // (A-I)u = 0, u > 0, inf-norm 1
  std::optional<Vector> left_null_vector_v;   // (A'-I)v = 0, v > 0, inf-norm 1
  std::optional<bool> interval_regular;
  std::vector<std::pair<std::string, double>> certificates;
};

/// True iff every off-diagonal entry is <= 0 (exact comparison).
bool is_z_matrix(const Matrix& a);

/// Writes a Z-matrix A as sI - B with s = max diagonal entry, B >= 0, and
/// compares s against rho(B) with tolerance 1e-9 * max(1, s).
MatrixClass classify_m_matrix(const Matrix& a);

/// Strong connectivity of the digraph with an edge i->j whenever a_ij != 0
/// (i != j). A 1x1 matrix counts as irreducible.
bool is_irreducible(const Matrix& a);

/// Positive eigenvector for the spectral radius of an irreducible
/// nonnegative matrix, inf-normalized. Power iteration on B + I; the shift
/// makes the iteration matrix primitive. Stops when the Collatz-Wielandt
/// bracket is tight.
Vector perron_vector(const Matrix& b, const std::optional<Vector>& start = std::nullopt);

struct NullVectors {
  Vector u;  // Au = 0
  Vector v;  // A'v = 0
};

/// Positive right/left null vectors of an irreducible singular M-matrix,
/// inf-normalized. Throws NotApplicableError when A is not one.
NullVectors singular_m_null_vectors(const Matrix& a,
                                    const std::optional<Vector>& start = std::nullopt);

/// True iff det(A - diag(d)) has the same strict sign over all d in
/// {-1,+1}^n. The determinant is affine in each d_i, so its range over the
/// box [-1,1]^n is spanned by the vertex values. Throws TooLargeError for
/// n > 20.
bool interval_regularity_vertex_test(const Matrix& a);

/// rho((I-X)^{-1} X) for entrywise-nonnegative X with rho(X) < 1.
double neumann_ratio(const Matrix& x);

}  // namespace ave

#endif
