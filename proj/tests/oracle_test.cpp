#include "ave/oracle.hpp"

#include <cmath>
#include <doctest.h>

#include "ave/analysis.hpp"
#include "ave/diagnostics.hpp"
#include "ave/errors.hpp"
#include "test_util.hpp"

using namespace ave;
using namespace ave::testutil;

TEST_CASE("enumeration finds the lone solution of the 2x2 instance") {
  const Instance inst = generate_instance(InstanceKind::Ex32, 2, 0);
  const SolutionSet set = enumerate_solutions(inst.A, inst.b);
  REQUIRE(set.solutions.size() == 1);
  CHECK(max_abs_diff(set.solutions[0], {0.0, -1.0}) <= 1e-12);
  CHECK(set.complete);
  CHECK(set.singular_patterns.empty());
  // [0,-1] satisfies two vertex systems (s_0 = +-1); deduplication keeps one.
}

TEST_CASE("enumeration flags the inconsistent singular vertex") {
  const Matrix a{{2.0, -1.0}, {-1.0, 2.0}};
  const SolutionSet set = enumerate_solutions(a, {1.0, 1.0});
  CHECK(set.solutions.empty());
  REQUIRE(set.singular_patterns.size() == 1);
  CHECK(set.singular_patterns[0] == SignPattern{1, 1});
  // (A - I) x = [1,1] is inconsistent, so nothing hides behind the vertex.
  CHECK(set.complete);
}

TEST_CASE("enumeration marks a consistent singular vertex as incomplete") {
  const Matrix a{{2.0, -1.0}, {-1.0, 2.0}};
  const SolutionSet set = enumerate_solutions(a, {1.0, -1.0});
  CHECK_FALSE(set.complete);
  REQUIRE(set.singular_patterns.size() == 1);
  // The only isolated vertex solution is the zero-component family member.
  REQUIRE(set.solutions.size() == 1);
  CHECK(max_abs_diff(set.solutions[0], {1.0, 0.0}) <= 1e-9);
}

TEST_CASE("enumeration on a diagonal instance") {
  // Only the vertex s = (+,-) is sign-consistent: (2-1) x0 = 1 and
  // (2+1) x1 = -1 give [1, -1/3].
  const SolutionSet set = enumerate_solutions(2.0 * Matrix::identity(2), {1.0, -1.0});
  REQUIRE(set.solutions.size() == 1);
  CHECK(max_abs_diff(set.solutions[0], {1.0, -1.0 / 3.0}) <= 1e-12);
}

TEST_CASE("enumeration rejects n > 16") {
  CHECK_THROWS_AS(enumerate_solutions(Matrix::identity(17), Vector(17, 1.0)), TooLargeError);
}

TEST_CASE("uniqueness sampling") {
  CHECK(enumerate_with_uniqueness(4.0 * Matrix::identity(2), 50, 1));
  CHECK_FALSE(enumerate_with_uniqueness(Matrix{{2.0, -1.0}, {-1.0, 2.0}}, 50, 1));
  // x - |x| = b: two branches degenerate, so uniqueness fails for n = 1.
  CHECK_FALSE(enumerate_with_uniqueness(Matrix::identity(1), 50, 1));
  CHECK_THROWS_AS(enumerate_with_uniqueness(Matrix::identity(9), 10, 1), TooLargeError);
}

TEST_CASE("fixed instances reproduce their published data") {
  const Instance ex32 = generate_instance(InstanceKind::Ex32, 2, 7);
  CHECK(ex32.A == Matrix{{3.0, -1.0}, {-1.0, 3.0}});
  CHECK(ex32.b == Vector{1.0, -4.0});
  REQUIRE(ex32.x0);
  CHECK(*ex32.x0 == Vector{-1.0, -1.0});

  const Instance r43 = generate_instance(InstanceKind::Remark43, 2, 7);
  CHECK(r43.A == Matrix{{0.59, 1.02}, {0.15, 0.67}});
  CHECK(r43.b == Vector{1.68, 0.05});
  REQUIRE(r43.x0);
  CHECK(*r43.x0 == Vector{-0.46, -0.61});

  const Instance tri = generate_instance(InstanceKind::Ex37, 4, 7);
  CHECK(tri.A == Matrix{{1.0, -1.0, -1.0, -1.0},
                        {0.0, 1.0, -1.0, -1.0},
                        {0.0, 0.0, 1.0, -1.0},
                        {0.0, 0.0, 0.0, 1.0}});
  CHECK_FALSE(tri.x0);
}

TEST_CASE("generators are deterministic per seed") {
  for (InstanceKind kind :
       {InstanceKind::A1Random, InstanceKind::A2Random, InstanceKind::RhoThirdRandom}) {
    const Instance a = generate_instance(kind, 5, 99);
    const Instance b = generate_instance(kind, 5, 99);
    CHECK(a.A == b.A);  // bit-for-bit
    CHECK(a.b == b.b);
    CHECK(*a.x0 == *b.x0);
    const Instance c = generate_instance(kind, 5, 100);
    CHECK_FALSE(c.A == a.A);
  }
}

TEST_CASE("a1 generator post-check: the A1 certificate holds") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int n = 1 + static_cast<int>(seed % 8);
    const Instance inst = generate_instance(InstanceKind::A1Random, n, seed);
    const Certificate cert = classify_ave(inst.A);
    CHECK(cert.name == CertificateName::A1_NonsingularM);
    CHECK(cert.holds);
  }
}

TEST_CASE("a2 generator post-check: the A2 certificate holds across 200 seeds") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 1 + static_cast<int>(seed % 8);
    const Instance inst = generate_instance(InstanceKind::A2Random, n, seed);
    const Certificate cert = classify_ave(inst.A);
    CHECK(cert.name == CertificateName::A2_IrreducibleSingularM);
    CHECK(cert.holds);
  }
}

TEST_CASE("rho-third generator post-check: the certificate holds") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int n = 1 + static_cast<int>(seed % 8);
    const Instance inst = generate_instance(InstanceKind::RhoThirdRandom, n, seed);
    CHECK(certify_rho_third(inst.A).holds);
  }
}

TEST_CASE("crafted right-hand sides control the sign of v'b") {
  Rng rng(717);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 6;
    const Instance inst = generate_instance(InstanceKind::A2Random, n, 8000 + trial);
    const NullVectors nv = singular_m_null_vectors(inst.A - Matrix::identity(n));

    Rng local(rng.next());
    const Vector neg = rhs_with_vtb_sign(nv.v, -1, local);
    CHECK(dot(nv.v, neg) < 0.0);
    const Vector pos = rhs_with_vtb_sign(nv.v, 1, local);
    CHECK(dot(nv.v, pos) > 0.0);

    const ConsistentRhs zero = rhs_in_range_of_a_minus_i(inst.A, local);
    CHECK(std::abs(dot(nv.v, zero.b)) <= 1e-9 * std::max(1.0, two_norm(zero.b)));
  }
}

TEST_CASE("property: enumeration agrees with the solver on unique instances") {
  Rng rng(727);
  int compared = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = rng.uniform_int(1, 6);
    const Matrix a = random_matrix(n, -2.0, 2.0, rng);
    Vector b(n);
    for (double& e : b) e = rng.uniform(-2.0, 2.0);

    SolutionSet set{{}, {}, true};
    try {
      set = enumerate_solutions(a, b);
    } catch (const std::exception&) {
      continue;
    }
    if (set.solutions.size() != 1 || !set.complete) continue;

    Vector x0(n);
    for (double& e : x0) e = rng.uniform(-1.0, 1.0);
    const GnmTrace trace = gnm_solve(a, b, x0);
    if (!trace.solution) continue;
    ++compared;
    CHECK(max_abs_diff(*trace.solution, set.solutions[0]) <= 1e-8);
  }
  CHECK(compared > 100);  // the family must actually be exercised
}
