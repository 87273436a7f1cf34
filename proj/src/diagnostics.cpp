#include "ave/diagnostics.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "ave/errors.hpp"

namespace ave {

std::string to_string(CertificateName n) {
  switch (n) {
    case CertificateName::NormThird: return "norm_third";
    case CertificateName::RhoThird: return "rho_third";
    case CertificateName::IntervalRegular: return "interval_regular";
    case CertificateName::A1_NonsingularM: return "a1_nonsingular_m";
    case CertificateName::A2_IrreducibleSingularM: return "a2_irreducible_singular_m";
  }
  return "unknown";
}

std::string to_string(SolvabilityCase c) {
  switch (c) {
    case SolvabilityCase::UniqueSolution: return "unique_solution";
    case SolvabilityCase::NoSolution: return "no_solution";
    case SolvabilityCase::InfinitelyMany: return "infinitely_many";
    case SolvabilityCase::Inapplicable: return "inapplicable";
  }
  return "unknown";
}

Certificate certify_norm_third(const Matrix& a) {
  Certificate cert{CertificateName::NormThird, false, std::nullopt, ""};
  Matrix inv(1, 1);
  try {
    inv = inverse(a);
  } catch (const SingularMatrixError& e) {
    cert.detail = e.what();
    return cert;
  }
  const double norm = spectral_norm(inv);
  cert.value = norm;
  cert.holds = norm < 1.0 / 3.0;
  std::ostringstream os;
  os << "||inv(A)||_2 = " << norm;
  cert.detail = os.str();
  return cert;
}

Certificate certify_rho_third(const Matrix& a) {
  Certificate cert{CertificateName::RhoThird, false, std::nullopt, ""};
  Matrix inv(1, 1);
  try {
    inv = inverse(a);
  } catch (const SingularMatrixError& e) {
    cert.detail = e.what();
    return cert;
  }
  const Matrix r = elementwise_abs(inv);
  const double rho = spectral_radius(r);
  cert.value = rho;
  cert.holds = rho < 1.0 / 3.0 - 1e-12;
  std::ostringstream os;
  os << "rho(|inv(A)|) = " << rho;
  // The contraction factor is only well conditioned away from rho = 1;
  // closer than 1e-7 the inverse of I - |inv(A)| is numerical noise.
  if (rho < 1.0 - 1e-7) {
    const Matrix contraction = inverse(Matrix::identity(a.rows()) - r) * r;
    const double rho_b = spectral_radius(contraction);
    const double expected = rho / (1.0 - rho);
    if (std::abs(rho_b - expected) > 1e-8 * std::max(1.0, expected))
      throw NoConvergenceError("Neumann-ratio identity check failed in certify_rho_third");
    os << "; contraction factor rho(2B) = " << 2.0 * rho_b;
  }
  cert.detail = os.str();
  return cert;
}

Certificate classify_ave(const Matrix& a) {
  if (!a.square()) throw std::invalid_argument("classify_ave requires a square matrix");
  const Matrix m = a - Matrix::identity(a.rows());
  const MatrixClass cls = classify_m_matrix(m);
  if (cls == MatrixClass::NonsingularM)
    return {CertificateName::A1_NonsingularM, true, std::nullopt,
            "A - I is a nonsingular M-matrix"};
  if (cls == MatrixClass::SingularM) {
    if (is_irreducible(m))
      return {CertificateName::A2_IrreducibleSingularM, true, std::nullopt,
              "A - I is an irreducible singular M-matrix"};
    return {CertificateName::A2_IrreducibleSingularM, false, std::nullopt,
            "A - I is a singular M-matrix but reducible"};
  }
  return {CertificateName::A1_NonsingularM, false, std::nullopt,
          "A - I classified as " + to_string(cls)};
}

SolvabilityVerdict singular_case_trichotomy(const Matrix& a, const Vector& b) {
  SolvabilityVerdict verdict;
  const Certificate cert = classify_ave(a);
  if (cert.name != CertificateName::A2_IrreducibleSingularM || !cert.holds) {
    verdict.kind = SolvabilityCase::Inapplicable;
    return verdict;
  }
  const Matrix m = a - Matrix::identity(a.rows());
  const NullVectors nv = singular_m_null_vectors(m);
  const double t = dot(nv.v, b);
  verdict.v_dot_b = t;
  // Relative dead band around v'b = 0, floored at the problem scale: the
  // singular construction of A - I holds only to roundoff, so b in its
  // range can itself be roundoff-small (n = 1 collapses it entirely).
  const double band = 1e-10 * two_norm(nv.v) * two_norm(b) +
                      1e-12 * two_norm(nv.v) * std::max(1.0, max_abs(a));
  if (t > band) {
    verdict.kind = SolvabilityCase::NoSolution;
  } else if (t < -band) {
    verdict.kind = SolvabilityCase::UniqueSolution;
  } else {
    verdict.kind = SolvabilityCase::InfinitelyMany;
    // v'b = 0 makes (A - I) w = b consistent; any particular solution
    // parameterizes the same family.
    SolutionFamily family;
    family.w = least_squares_solve(m, b);
    family.u = nv.u;
    double alpha_max = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < family.w.size(); ++i)
      alpha_max = std::min(alpha_max, family.w[i] / family.u[i]);
    family.alpha_max = alpha_max;
    verdict.family = family;
  }
  return verdict;
}

int iteration_bound(const Matrix& a) {
  const Certificate cert = classify_ave(a);
  if (!cert.holds) throw NotApplicableError("matrix is neither of the A1 nor A2 class");
  const int n = a.rows();
  return cert.name == CertificateName::A1_NonsingularM ? n + 2 : n + 1;
}

Vector zero_component_solution(const Matrix& a, const Vector& b) {
  const SolvabilityVerdict verdict = singular_case_trichotomy(a, b);
  if (verdict.kind != SolvabilityCase::InfinitelyMany)
    throw NotApplicableError("zero_component_solution requires the v'b = 0 case");

  const GnmTrace trace = gnm_solve(a, b);
  if (!trace.solution)
    throw NoConvergenceError("iteration failed on a consistent singular instance: " +
                             to_string(trace.termination));
  const Vector& x = *trace.solution;
  const int n = a.rows();
  if (trace.iterations_used > n + 1)
    throw NoConvergenceError("iteration exceeded the n+1 bound on a singular instance");
  double min_entry = std::numeric_limits<double>::infinity();
  double min_abs = std::numeric_limits<double>::infinity();
  for (double v : x) {
    min_entry = std::min(min_entry, v);
    min_abs = std::min(min_abs, std::abs(v));
  }
  if (min_entry < -1e-10)
    throw NoConvergenceError("computed solution has a negative component");
  if (min_abs > 1e-9 * std::max(1.0, inf_norm(x)))
    throw NoConvergenceError("computed solution has no zero component");
  return x;
}

MatrixReport build_matrix_report(const Matrix& a, bool with_regularity) {
  if (!a.square()) throw std::invalid_argument("build_matrix_report requires a square matrix");
  MatrixReport report;
  const Matrix m = a - Matrix::identity(a.rows());
  report.is_z_matrix_a_minus_i = is_z_matrix(m);
  report.m_class = classify_m_matrix(m);
  report.irreducible = is_irreducible(m);
  if (report.m_class == MatrixClass::SingularM && report.irreducible) {
    const NullVectors nv = singular_m_null_vectors(m);
    report.right_null_vector_u = nv.u;
    report.left_null_vector_v = nv.v;
  }
  if (with_regularity) report.interval_regular = interval_regularity_vertex_test(a);

  const Certificate norm_cert = certify_norm_third(a);
  const Certificate rho_cert = certify_rho_third(a);
  if (norm_cert.value) report.certificates.emplace_back("norm_third", *norm_cert.value);
  if (rho_cert.value) report.certificates.emplace_back("rho_third", *rho_cert.value);
  return report;
}

}  // namespace ave
