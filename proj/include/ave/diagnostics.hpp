#ifndef AVE_DIAGNOSTICS_HPP
#define AVE_DIAGNOSTICS_HPP

#include <optional>
#include <string>

#include "ave/analysis.hpp"
#include "ave/gnm.hpp"
#include "ave/linalg.hpp"

namespace ave {

enum class CertificateName {
  NormThird,
  RhoThird,
  IntervalRegular,
  A1_NonsingularM,
  A2_IrreducibleSingularM,
};

std::string to_string(CertificateName n);

struct Certificate {
  CertificateName name;
  bool holds = false;
  std::optional<double> value;
  std::string detail;
};

enum class SolvabilityCase { UniqueSolution, NoSolution, InfinitelyMany, Inapplicable };

std::string to_string(SolvabilityCase c);

/// One-parameter solution family x(alpha) = w - alpha * u, defined for
/// alpha <= alpha_max = min_i w_i / u_i. Every member is nonnegative and
/// solves the equation; x(alpha_max) is the member with a zero component.
struct SolutionFamily {
  Vector w;
  Vector u;
  double alpha_max = 0.0;
};

struct SolvabilityVerdict {
  SolvabilityCase kind = SolvabilityCase::Inapplicable;
  double v_dot_b = 0.0;
  std::optional<SolutionFamily> family;
  std::optional<Vector> zero_component_solution;
};

/// holds iff ||A^{-1}||_2 < 1/3, a global-convergence condition.
Certificate certify_norm_third(const Matrix& a);

/// holds iff rho(|A^{-1}|) < 1/3. The detail reports the contraction
/// factor rho(2B) for B = (I - |A^{-1}|)^{-1} |A^{-1}| whenever
/// rho(|A^{-1}|) < 1; the iteration error contracts by 2B per step.
Certificate certify_rho_third(const Matrix& a);

/// A1: A - I is a nonsingular M-matrix. A2: A - I is an irreducible
/// singular M-matrix. Returns a non-holding certificate otherwise, with
/// the observed class in the detail.
Certificate classify_ave(const Matrix& a);

/// For the A2 class, classifies solvability by the sign of v'b where v is
/// the positive left null vector of A - I: positive means no solution,
/// negative a unique one, zero an infinite family (attached).
SolvabilityVerdict singular_case_trichotomy(const Matrix& a, const Vector& b);

/// Worst-case solve count: n+2 under A1, n+1 under A2. Throws
/// NotApplicableError for anything else.
int iteration_bound(const Matrix& a);

/// The unique solution with one or more zero components in the A2,
/// v'b = 0 case, found by running the iteration from the zero vector.
/// Verifies nonnegativity, the zero component, and the n+1 bound.
Vector zero_component_solution(const Matrix& a, const Vector& b);

MatrixReport build_matrix_report(const Matrix& a, bool with_regularity = false);

}  // namespace ave

#endif
