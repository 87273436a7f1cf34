#ifndef AVE_ORACLE_HPP
#define AVE_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ave/gnm.hpp"
#include "ave/linalg.hpp"
#include "ave/rng.hpp"

namespace ave {

/// Every solution found by exhaustive vertex enumeration. complete is
/// false when some singular vertex system is consistent, i.e. when a
/// one-parameter family hides behind that vertex.
struct SolutionSet {
  std::vector<Vector> solutions;       // ordered by generating vertex pattern
  std::vector<SignPattern> singular_patterns;
  bool complete = true;
};

/// Solves (A - diag(s)) x = b for every s in {-1,+1}^n and keeps the
/// sign-consistent results (s_j x_j >= -1e-12). Zero components are
/// absorbed by the relaxation, so the 2^n vertices cover all solutions.
/// Throws TooLargeError for n > 16.
SolutionSet enumerate_solutions(const Matrix& a, const Vector& b);

/// Empirical side of the interval-regularity equivalence: returns true iff
/// `trials` sampled right-hand sides each admit exactly one solution with
/// a complete enumeration. Each b is drawn from the image of an orthant
/// piece, cycling through all 2^n pieces so both determinant sign classes
/// get probed. Throws TooLargeError for n > 8.
bool enumerate_with_uniqueness(const Matrix& a, int trials, std::uint64_t seed);

enum class InstanceKind { Ex32, Ex37, Remark43, A1Random, A2Random, RhoThirdRandom };

InstanceKind parse_instance_kind(const std::string& name);
std::string to_string(InstanceKind kind);

struct Instance {
  Matrix A;
  Vector b;
  std::optional<Vector> x0;
};

/// Deterministic instance families: two fixed 2x2 instances, the unit
/// upper-triangular family with -1 above the diagonal, and three random
/// generators (A - I nonsingular M, A - I irreducible singular M, and
/// rho(|inv(A)|) < 1/3).
Instance generate_instance(InstanceKind kind, int n, std::uint64_t seed);

/// Right-hand side with a prescribed sign of v'b (v > 0 given); drawn at
/// random and negated when needed.
Vector rhs_with_vtb_sign(const Vector& v, int sign, Rng& rng);

struct ConsistentRhs {
  Vector b;
  std::vector<int> w;  // integer preimage, b = (A - I) w
};

/// b = (A - I) w for a random integer w, putting b in the range of A - I
/// so that v'b vanishes up to roundoff.
ConsistentRhs rhs_in_range_of_a_minus_i(const Matrix& a, Rng& rng);

}  // namespace ave

#endif
