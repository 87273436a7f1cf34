#ifndef AVE_GNM_HPP
#define AVE_GNM_HPP

#include <optional>
#include <string>
#include <vector>

#include "ave/linalg.hpp"

namespace ave {

/// Componentwise sign of an iterate, entries in {-1, 0, +1}. The iteration
/// x_next = (A - diag(d))^{-1} b depends on the iterate only through this.
using SignPattern = std::vector<int>;

enum class Termination {
  SolvedByPatternRule,
  SolvedByResidual,
  CycleDetected,
  SingularJacobian,
  MaxIterations,
};

std::string to_string(Termination t);
bool is_solved(Termination t);

struct GnmOptions {
  int max_iter = 100;
  double tol = 1e-12;
};

/// Full iteration history. iterates[0] is the starting point;
/// patterns[i] == sign_pattern(iterates[i]) and residuals[i] is the
/// inf-norm AVE residual of iterates[i].
struct GnmTrace {
  std::vector<Vector> iterates;
  std::vector<SignPattern> patterns;
  std::vector<double> residuals;
  Termination termination = Termination::MaxIterations;
  int iterations_used = 0;  // number of linear solves performed
  std::optional<Vector> solution;
  // Indices of iterates holding a nonzero component below 1e-12 * ||x||_inf;
  // sign decisions at such components are numerically fragile.
  std::vector<int> near_zero_iterates;
};

/// sign(0) is exactly 0; comparison against 0.0 is exact, no snapping.
SignPattern sign_pattern(const Vector& x);

/// One Newton step: solves (A - diag(d)) x = b. Throws
/// SingularJacobianError carrying d when the system is singular.
Vector gnm_step(const Matrix& a, const Vector& b, const SignPattern& d);

/// True iff d_next agrees with d_prev on every component where d_next is
/// nonzero. Strictly weaker than d_next == d_prev: zero components of
/// d_next are unconstrained, and then the new iterate already solves the
/// equation.
bool termination_test(const SignPattern& d_prev, const SignPattern& d_next);

/// Inf-norm residual ||Ax - |x| - b||.
double check_solution(const Matrix& a, const Vector& b, const Vector& x);

/// Runs the iteration until the pattern rule fires (checked first), the
/// residual drops to tol, a sign pattern repeats, the Jacobian is singular,
/// or max_iter solves have been spent. Failures are reported in the trace,
/// never thrown.
GnmTrace gnm_solve(const Matrix& a, const Vector& b, const Vector& x0, GnmOptions opts = {});

/// Same, starting from the zero vector (first step solves Ax = b).
GnmTrace gnm_solve(const Matrix& a, const Vector& b, GnmOptions opts = {});

}  // namespace ave

#endif
