// Command-line front end for the absolute value equation toolkit.

#include <CLI11.hpp>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <json.hpp>
#include <string>

#include "ave/diagnostics.hpp"
#include "ave/errors.hpp"
#include "ave/gnm.hpp"
#include "ave/io.hpp"
#include "ave/oracle.hpp"

namespace {

using nlohmann::json;

json to_json(const ave::Vector& v) { return json(v); }

json to_json(const ave::SignPattern& d) { return json(d); }

json certificate_json(const ave::Certificate& cert) {
  json j;
  j["name"] = ave::to_string(cert.name);
  j["holds"] = cert.holds;
  j["value"] = cert.value ? json(*cert.value) : json(nullptr);
  j["detail"] = cert.detail;
  return j;
}

json family_json(const ave::SolutionFamily& family) {
  json j;
  j["w"] = to_json(family.w);
  j["u"] = to_json(family.u);
  j["alpha_max"] = family.alpha_max;
  return j;
}

void print_vector(std::ostream& os, const ave::Vector& v) {
  os << "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << ave::format_double(v[i]);
  }
  os << "]";
}

int run_solve(const std::string& matrix_path, const std::string& rhs_path,
              const std::string& x0_path, int max_iter, double tol, bool as_json) {
  const ave::Matrix a = ave::read_matrix_file(matrix_path);
  const ave::Vector b = ave::read_vector_file(rhs_path);
  ave::Vector x0(b.size(), 0.0);
  if (!x0_path.empty()) x0 = ave::read_vector_file(x0_path);

  ave::GnmOptions opts;
  opts.max_iter = max_iter;
  opts.tol = tol;
  const ave::GnmTrace trace = ave::gnm_solve(a, b, x0, opts);

  const double residual =
      trace.solution ? ave::check_solution(a, b, *trace.solution) : trace.residuals.back();
  if (as_json) {
    json j;
    j["termination"] = ave::to_string(trace.termination);
    j["iterations"] = trace.iterations_used;
    j["solution"] = trace.solution ? to_json(*trace.solution) : json(nullptr);
    j["residual"] = residual;
    json patterns = json::array();
    for (const auto& p : trace.patterns) patterns.push_back(to_json(p));
    j["patterns"] = patterns;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "termination: " << ave::to_string(trace.termination) << "\n";
    std::cout << "iterations:  " << trace.iterations_used << "\n";
    if (trace.solution) {
      std::cout << "solution:    ";
      print_vector(std::cout, *trace.solution);
      std::cout << "\n";
    }
    std::cout << "residual:    " << ave::format_double(residual) << "\n";
  }

  switch (trace.termination) {
    case ave::Termination::SolvedByPatternRule:
    case ave::Termination::SolvedByResidual:
      return 0;
    case ave::Termination::CycleDetected:
    case ave::Termination::MaxIterations:
      return 2;
    case ave::Termination::SingularJacobian:
      return 3;
  }
  return 2;
}

int run_analyze(const std::string& matrix_path, bool regularity, bool as_json) {
  const ave::Matrix a = ave::read_matrix_file(matrix_path);
  const ave::MatrixReport report = ave::build_matrix_report(a, regularity);
  const ave::Certificate ave_class = ave::classify_ave(a);
  const ave::Certificate norm_cert = ave::certify_norm_third(a);
  const ave::Certificate rho_cert = ave::certify_rho_third(a);

  if (as_json) {
    json j;
    j["is_z_matrix_a_minus_i"] = report.is_z_matrix_a_minus_i;
    j["m_class_a_minus_i"] = ave::to_string(report.m_class);
    j["irreducible"] = report.irreducible;
    j["u"] = report.right_null_vector_u ? to_json(*report.right_null_vector_u) : json(nullptr);
    j["v"] = report.left_null_vector_v ? to_json(*report.left_null_vector_v) : json(nullptr);
    j["interval_regular"] = report.interval_regular ? json(*report.interval_regular) : json(nullptr);
    j["ave_class"] = certificate_json(ave_class);
    j["norm_third"] = certificate_json(norm_cert);
    j["rho_third"] = certificate_json(rho_cert);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "A - I is a Z-matrix:  " << (report.is_z_matrix_a_minus_i ? "yes" : "no") << "\n";
    std::cout << "A - I M-class:        " << ave::to_string(report.m_class) << "\n";
    std::cout << "A - I irreducible:    " << (report.irreducible ? "yes" : "no") << "\n";
    std::cout << "class:                " << ave_class.detail << "\n";
    if (report.right_null_vector_u) {
      std::cout << "u (right null):       ";
      print_vector(std::cout, *report.right_null_vector_u);
      std::cout << "\n";
      std::cout << "v (left null):        ";
      print_vector(std::cout, *report.left_null_vector_v);
      std::cout << "\n";
    }
    if (report.interval_regular)
      std::cout << "interval regular:     " << (*report.interval_regular ? "yes" : "no") << "\n";
    std::cout << "norm_third:           " << (norm_cert.holds ? "holds" : "fails") << " ("
              << norm_cert.detail << ")\n";
    std::cout << "rho_third:            " << (rho_cert.holds ? "holds" : "fails") << " ("
              << rho_cert.detail << ")\n";
  }
  return 0;
}

int run_enumerate(const std::string& matrix_path, const std::string& rhs_path, bool as_json) {
  const ave::Matrix a = ave::read_matrix_file(matrix_path);
  const ave::Vector b = ave::read_vector_file(rhs_path);
  const ave::SolutionSet set = ave::enumerate_solutions(a, b);
  const ave::SolvabilityVerdict verdict = ave::singular_case_trichotomy(a, b);

  if (as_json) {
    json j;
    json sols = json::array();
    for (const auto& x : set.solutions) sols.push_back(to_json(x));
    j["solutions"] = sols;
    json sing = json::array();
    for (const auto& p : set.singular_patterns) sing.push_back(to_json(p));
    j["singular_patterns"] = sing;
    j["complete"] = set.complete;
    j["verdict"] = ave::to_string(verdict.kind);
    if (verdict.kind != ave::SolvabilityCase::Inapplicable) j["v_dot_b"] = verdict.v_dot_b;
    j["family"] = verdict.family ? family_json(*verdict.family) : json(nullptr);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "solutions: " << set.solutions.size() << "\n";
    for (const auto& x : set.solutions) {
      std::cout << "  ";
      print_vector(std::cout, x);
      std::cout << "\n";
    }
    std::cout << "singular vertex patterns: " << set.singular_patterns.size() << "\n";
    std::cout << "complete: " << (set.complete ? "yes" : "no") << "\n";
    if (verdict.kind != ave::SolvabilityCase::Inapplicable) {
      std::cout << "verdict: " << ave::to_string(verdict.kind)
                << " (v'b = " << ave::format_double(verdict.v_dot_b) << ")\n";
      if (verdict.family) {
        std::cout << "family: x(alpha) = w - alpha*u, alpha <= "
                  << ave::format_double(verdict.family->alpha_max) << "\n";
        std::cout << "  w = ";
        print_vector(std::cout, verdict.family->w);
        std::cout << "\n  u = ";
        print_vector(std::cout, verdict.family->u);
        std::cout << "\n";
      }
    }
  }
  return 0;
}

int run_example(const std::string& name, int n, std::uint64_t seed, const std::string& out_dir) {
  const ave::InstanceKind kind = ave::parse_instance_kind(name);
  const ave::Instance inst = ave::generate_instance(kind, n, seed);
  std::filesystem::create_directories(out_dir);
  const std::filesystem::path dir(out_dir);
  ave::write_matrix_file((dir / "A.txt").string(), inst.A);
  ave::write_vector_file((dir / "b.txt").string(), inst.b);
  std::cout << "wrote " << (dir / "A.txt").string() << "\n";
  std::cout << "wrote " << (dir / "b.txt").string() << "\n";
  if (inst.x0) {
    ave::write_vector_file((dir / "x0.txt").string(), *inst.x0);
    std::cout << "wrote " << (dir / "x0.txt").string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solver toolkit for the absolute value equation Ax - |x| = b"};
  app.require_subcommand(1);

  std::string matrix_path, rhs_path, x0_path, name, out_dir;
  int max_iter = 100;
  int n = 4;
  std::uint64_t seed = 0;
  double tol = 1e-12;
  bool as_json = false;
  bool regularity = false;

  CLI::App* solve = app.add_subcommand("solve", "Run the generalized Newton iteration");
  solve->add_option("--matrix", matrix_path, "matrix file")->required();
  solve->add_option("--rhs", rhs_path, "right-hand side file")->required();
  solve->add_option("--x0", x0_path, "starting point file (default: zero vector)");
  solve->add_option("--max-iter", max_iter, "iteration budget");
  solve->add_option("--tol", tol, "residual tolerance");
  solve->add_flag("--json", as_json, "machine-readable output");

  CLI::App* analyze = app.add_subcommand("analyze", "Classify the matrix and its certificates");
  analyze->add_option("--matrix", matrix_path, "matrix file")->required();
  analyze->add_flag("--regularity", regularity, "run the 2^n interval-regularity vertex test");
  analyze->add_flag("--json", as_json, "machine-readable output");

  CLI::App* enumerate = app.add_subcommand("enumerate", "Enumerate all solutions (n <= 16)");
  enumerate->add_option("--matrix", matrix_path, "matrix file")->required();
  enumerate->add_option("--rhs", rhs_path, "right-hand side file")->required();
  enumerate->add_flag("--json", as_json, "machine-readable output");

  CLI::App* example = app.add_subcommand("example", "Write a generated problem to files");
  example->add_option("--name", name,
                      "ex32|ex37|remark43|a1-random|a2-random|rho-third-random")
      ->required();
  example->add_option("--n", n, "problem size (ignored by the fixed 2x2 instances)");
  example->add_option("--seed", seed, "generator seed");
  example->add_option("--out", out_dir, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return run_solve(matrix_path, rhs_path, x0_path, max_iter, tol, as_json);
    if (analyze->parsed()) return run_analyze(matrix_path, regularity, as_json);
    if (enumerate->parsed()) return run_enumerate(matrix_path, rhs_path, as_json);
    if (example->parsed()) return run_example(name, n, seed, out_dir);
  } catch (const ave::TooLargeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const ave::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ave::InvalidKindError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
