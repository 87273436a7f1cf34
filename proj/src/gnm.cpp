#include "ave/gnm.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ave/errors.hpp"

namespace ave {

std::string to_string(Termination t) {
  switch (t) {
    case Termination::SolvedByPatternRule: return "solved_by_pattern_rule";
    case Termination::SolvedByResidual: return "solved_by_residual";
    case Termination::CycleDetected: return "cycle_detected";
    case Termination::SingularJacobian: return "singular_jacobian";
    case Termination::MaxIterations: return "max_iterations";
  }
  return "unknown";
}

bool is_solved(Termination t) {
  return t == Termination::SolvedByPatternRule || t == Termination::SolvedByResidual;
}

SignPattern sign_pattern(const Vector& x) {
  SignPattern d(x.size());
  for (size_t j = 0; j < x.size(); ++j) d[j] = x[j] > 0.0 ? 1 : (x[j] < 0.0 ? -1 : 0);
  return d;
}

Vector gnm_step(const Matrix& a, const Vector& b, const SignPattern& d) {
  if (a.rows() != static_cast<int>(d.size()))
    throw std::invalid_argument("sign pattern length does not match matrix size");
  Matrix m = a;
  for (int j = 0; j < m.rows(); ++j) m(j, j) -= static_cast<double>(d[j]);
  try {
    return lu_solve(m, b);
  } catch (const SingularMatrixError&) {
    throw SingularJacobianError("A - diag(d) is singular for the current sign pattern", d);
  }
}

bool termination_test(const SignPattern& d_prev, const SignPattern& d_next) {
  if (d_prev.size() != d_next.size())
    throw std::invalid_argument("sign pattern length mismatch");
  for (size_t j = 0; j < d_next.size(); ++j)
    if (d_next[j] != 0 && d_next[j] != d_prev[j]) return false;
  return true;
}

double check_solution(const Matrix& a, const Vector& b, const Vector& x) {
  if (a.rows() != static_cast<int>(b.size()) || a.cols() != static_cast<int>(x.size())) {
    std::ostringstream msg;
    msg << "dimension mismatch: matrix is " << a.rows() << "x" << a.cols() << ", rhs has "
        << b.size() << " entries, candidate has " << x.size();
    throw std::invalid_argument(msg.str());
  }
  Vector r = a * x;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= std::abs(x[i]) + b[i];
  return inf_norm(r);
}

namespace {

void record_near_zero(GnmTrace& trace, const Vector& x, int index) {
  const double scale = 1e-12 * inf_norm(x);
  for (double v : x) {
    if (v != 0.0 && std::abs(v) <= scale) {
      trace.near_zero_iterates.push_back(index);
      return;
    }
  }
}

}  // namespace

GnmTrace gnm_solve(const Matrix& a, const Vector& b, const Vector& x0, GnmOptions opts) {
  if (!a.square()) throw std::invalid_argument("gnm_solve requires a square matrix");
  if (a.rows() != static_cast<int>(b.size()) || a.rows() != static_cast<int>(x0.size())) {
    std::ostringstream msg;
    msg << "dimension mismatch: matrix is " << a.rows() << "x" << a.cols() << ", rhs has "
        << b.size() << " entries, start has " << x0.size();
    throw std::invalid_argument(msg.str());
  }
  if (opts.max_iter < 1) throw std::invalid_argument("max_iter must be at least 1");

  GnmTrace trace;
  trace.iterates.push_back(x0);
  trace.patterns.push_back(sign_pattern(x0));
  trace.residuals.push_back(check_solution(a, b, x0));
  record_near_zero(trace, x0, 0);

  while (trace.iterations_used < opts.max_iter) {
    const SignPattern d = trace.patterns.back();
    Vector x_next;
    try {
      x_next = gnm_step(a, b, d);
    } catch (const SingularJacobianError&) {
      trace.termination = Termination::SingularJacobian;
      return trace;
    }
    ++trace.iterations_used;

    const SignPattern d_next = sign_pattern(x_next);
    const double residual = check_solution(a, b, x_next);
    trace.iterates.push_back(x_next);
    trace.patterns.push_back(d_next);
    trace.residuals.push_back(residual);
    record_near_zero(trace, x_next, static_cast<int>(trace.iterates.size()) - 1);

    if (termination_test(d, d_next)) {
      trace.termination = Termination::SolvedByPatternRule;
      trace.solution = x_next;
      return trace;
    }
    if (residual <= opts.tol) {
      trace.termination = Termination::SolvedByResidual;
      trace.solution = x_next;
      return trace;
    }
    // The next iterate is a function of the pattern alone, so a repeated
    // pattern means the sequence is periodic from here on.
    const size_t last = trace.patterns.size() - 1;
    for (size_t i = 0; i < last; ++i) {
      if (trace.patterns[i] == d_next) {
        trace.termination = Termination::CycleDetected;
        return trace;
      }
    }
  }
  trace.termination = Termination::MaxIterations;
  return trace;
}

GnmTrace gnm_solve(const Matrix& a, const Vector& b, GnmOptions opts) {
  return gnm_solve(a, b, Vector(b.size(), 0.0), opts);
}

}  // namespace ave
