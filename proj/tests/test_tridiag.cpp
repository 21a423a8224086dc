#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "jacspec/corpus.hpp"
#include "jacspec/errors.hpp"
#include "jacspec/tridiag.hpp"
#include "oracles.hpp"

using namespace jacspec;
using cplx = std::complex<double>;

namespace {

const double kSqrt2 = std::sqrt(2.0);

JacobiMatrix free3() { return build_jacobi({0, 0, 0}, {1, 1}); }
JacobiMatrix flip2() { return build_jacobi({0, 0}, {1}); }

double vec_gap(const std::vector<double>& a, const std::vector<double>& b) {
  REQUIRE(a.size() == b.size());
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("build_jacobi validates the invariants") {
  const JacobiMatrix one = build_jacobi({2.0}, {});
  CHECK(one.size() == 1);
  CHECK(one.q[0] == 2.0);

  const JacobiMatrix two = flip2();
  CHECK(two.q == std::vector<double>{0, 0});
  CHECK(two.b == std::vector<double>{1});

  CHECK_THROWS_AS(build_jacobi({0, 0}, {0}), Error);
  CHECK_THROWS_AS(build_jacobi({0, 0}, {-1}), Error);
  CHECK_THROWS_AS(build_jacobi({0, 0}, {1, 1}), Error);
  CHECK_THROWS_AS(build_jacobi({}, {}), Error);

  try {
    build_jacobi({0, 0}, {0});
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonPositiveOffDiagonal);
  }
}

TEST_CASE("apply implements the difference expression") {
  CHECK(flip2().apply(std::vector<double>{1, 0}) == std::vector<double>{0, 1});
  CHECK(build_jacobi({2.0}, {}).apply(std::vector<double>{3}) ==
        std::vector<double>{6});
  CHECK(free3().apply(std::vector<double>{1, 1, 1}) ==
        std::vector<double>{1, 2, 1});
  CHECK_THROWS_AS(free3().apply(std::vector<double>{1, 1}), Error);
}

TEST_CASE("apply matches the dense product on random matrices") {
  CorpusSpec spec;
  spec.count = 10;
  Rng rng(7);
  for (const JacobiMatrix& J : generate_corpus(spec)) {
    std::vector<double> f(J.size());
    for (double& x : f) x = rng.uniform(-3, 3);
    CHECK(vec_gap(J.apply(f), oracle::dense_apply(J, f)) < 1e-14);
  }
}

TEST_CASE("eigensystem on the worked examples") {
  SUBCASE("2x2 free") {
    const EigenSystem sys = eigensystem(flip2());
    CHECK(sys.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(sys.values[1] == doctest::Approx(1.0).epsilon(1e-14));
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(sys.vectors[0][0] == doctest::Approx(s));
    CHECK(sys.vectors[0][1] == doctest::Approx(-s));
    CHECK(sys.vectors[1][0] == doctest::Approx(s));
    CHECK(sys.vectors[1][1] == doctest::Approx(s));
  }
  SUBCASE("3x3 free has spectrum -sqrt2, 0, sqrt2") {
    const EigenSystem sys = eigensystem(free3());
    CHECK(std::abs(sys.values[0] + kSqrt2) < 1e-14);
    CHECK(std::abs(sys.values[1]) < 1e-14);
    CHECK(std::abs(sys.values[2] - kSqrt2) < 1e-14);
  }
  SUBCASE("1x1") {
    const EigenSystem sys = eigensystem(build_jacobi({2.0}, {}));
    CHECK(sys.values == std::vector<double>{2.0});
    CHECK(sys.vectors[0] == std::vector<double>{1.0});
  }
}

TEST_CASE("eigensystem invariants over a corpus") {
  CorpusSpec spec;
  spec.count = 30;
  for (const JacobiMatrix& J : generate_corpus(spec)) {
    const EigenSystem sys = eigensystem(J);
    const std::size_t n = J.size();
    const double scale = gershgorin_radius(J);

    for (std::size_t i = 0; i < n; ++i) {
      // Residual against the difference expression.
      std::vector<double> jv = J.apply(sys.vectors[i]);
      for (std::size_t k = 0; k < n; ++k) jv[k] -= sys.values[i] * sys.vectors[i][k];
      double res = 0.0;
      for (double x : jv) res += x * x;
      CHECK(std::sqrt(res) <= 1e-12 * scale);

      if (i > 0) CHECK(sys.values[i] > sys.values[i - 1]);

      for (std::size_t j = 0; j <= i; ++j) {
        double dot = 0.0;
        for (std::size_t k = 0; k < n; ++k) dot += sys.vectors[i][k] * sys.vectors[j][k];
        CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) <= 1e-12);
      }

      // Deterministic sign: first non-tiny component positive.
      for (double c : sys.vectors[i]) {
        if (std::abs(c) > 1e-12) {
          CHECK(c > 0.0);
          break;
        }
      }
    }

    // Same spectrum through the Sturm route.
    CHECK(vec_gap(sys.values, sturm_eigenvalues(J, 1e-13)) < 1e-10);

    // Determinism.
    const EigenSystem again = eigensystem(J);
    CHECK(again.values == sys.values);
    CHECK(again.vectors == sys.vectors);
  }
}

TEST_CASE("sturm counts bracket the spectrum") {
  const JacobiMatrix J = free3();
  CHECK(sturm_count_below(J, -10.0) == 0);
  CHECK(sturm_count_below(J, 0.5) == 2);
  CHECK(sturm_count_below(J, 10.0) == 3);
}

TEST_CASE("an exhausted iteration cap reports ConvergenceFailure") {
  Tolerances starved;
  starved.eig_max_iter = 0;
  try {
    eigensystem(free3(), starved);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ConvergenceFailure);
  }
}

TEST_CASE("first-kind polynomials by recurrence") {
  SUBCASE("3x3 free gives 1, z, z^2-1") {
    for (cplx z : {cplx(0.3, 0.0), cplx(-1.2, 0.7), cplx(2.0, -3.0)}) {
      const auto pi = first_kind_polys(free3(), z, 3);
      CHECK(std::abs(pi[0] - cplx(1.0)) < 1e-15);
      CHECK(std::abs(pi[1] - z) < 1e-15);
      CHECK(std::abs(pi[2] - (z * z - 1.0)) < 1e-14);
    }
  }
  SUBCASE("order one is the constant 1") {
    const auto pi = first_kind_polys(build_jacobi({5.0}, {}), cplx(2, 3), 1);
    CHECK(pi.size() == 1);
    CHECK(pi[0] == cplx(1.0));
  }
  SUBCASE("q=[1,0], b=[2] at z=3") {
    const auto pi = first_kind_polys(build_jacobi({1, 0}, {2}), cplx(3.0), 2);
    CHECK(std::abs(pi[1] - cplx(1.0)) < 1e-15);
  }
  SUBCASE("coefficient form agrees with pointwise recurrence") {
    const JacobiMatrix J = build_jacobi({0.3, -1.1, 0.4, 0.9}, {0.7, 1.4, 0.6});
    const auto coeffs = first_kind_coeffs(J, 4);
    for (double t : {-2.0, -0.3, 0.1, 1.7}) {
      const auto vals = first_kind_values(J, t, 4);
      for (std::size_t k = 0; k < 4; ++k) {
        CHECK(coeffs[k](t) == doctest::Approx(vals[k]).epsilon(1e-12));
      }
      CHECK(coeffs[3].degree() == 3);
    }
  }
}

TEST_CASE("truncations extract the right blocks") {
  const JacobiMatrix J = free3();
  SUBCASE("n=2") {
    const JacobiMatrix minus = truncate_minus(J, 2);
    CHECK(minus.q == std::vector<double>{0});
    CHECK(minus.b.empty());
    const JacobiMatrix plus = truncate_plus(J, 2);
    CHECK(plus.q == std::vector<double>{0});
  }
  SUBCASE("n=3 leading block") {
    const JacobiMatrix minus = truncate_minus(J, 3);
    CHECK(minus.q == std::vector<double>{0, 0});
    CHECK(minus.b == std::vector<double>{1});
  }
  SUBCASE("4x4 trailing block on rows 3,4") {
    const JacobiMatrix big = build_jacobi({1, 2, 3, 4}, {1, 1, 1});
    const JacobiMatrix plus = truncate_plus(big, 2);
    CHECK(plus.q == std::vector<double>{3, 4});
    CHECK(plus.b == std::vector<double>{1});
  }
  SUBCASE("index guards") {
    CHECK_THROWS_AS(truncate_minus(J, 1), Error);
    CHECK_THROWS_AS(truncate_minus(J, 4), Error);
    CHECK_THROWS_AS(truncate_plus(J, 0), Error);
    CHECK_THROWS_AS(truncate_plus(J, 3), Error);
  }
}

TEST_CASE("poly_zeros equals the zeros of the recurrence polynomial") {
  SUBCASE("3x3 free, n=3 gives -1, 1") {
    const std::vector<double> zs = poly_zeros(free3(), 3);
    CHECK(zs[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(zs[1] == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("n=2 zero sits at q_1") {
    const JacobiMatrix J = build_jacobi({1.5, 0.2, -0.7}, {1, 1});
    CHECK(poly_zeros(J, 2) == std::vector<double>{1.5});
  }
  SUBCASE("seeded 6x6, n=4 against the coefficient-expansion oracle") {
    CorpusSpec spec;
    spec.seed = 6;
    spec.count = 1;
    spec.n_min = spec.n_max = 6;
    const JacobiMatrix J = generate_corpus(spec)[0];
    const std::vector<double> zs = poly_zeros(J, 4);
    const Polynomial pi4 = first_kind_coeffs(J, 4)[3];
    const double r = gershgorin_radius(J) + 1.0;
    const std::vector<double> expected = oracle::roots_by_bisection(pi4, -r, r, 3);
    CHECK(vec_gap(zs, expected) < 1e-9);
  }
  SUBCASE("corpus sweep against the recurrence-evaluation oracle") {
    CorpusSpec spec;
    spec.count = 12;
    for (const JacobiMatrix& J : generate_corpus(spec)) {
      for (std::size_t n = 2; n <= J.size(); ++n) {
        CHECK(vec_gap(poly_zeros(J, n), oracle::poly_zeros_by_bisection(J, n)) <
              1e-9);
      }
    }
  }
}

TEST_CASE("basis identity pi_k(J)e_1 = e_k") {
  CorpusSpec spec;
  spec.count = 15;
  for (const JacobiMatrix& J : generate_corpus(spec)) {
    const auto pis = first_kind_coeffs(J, J.size());
    for (std::size_t k = 0; k < J.size(); ++k) {
      std::vector<double> u = apply_poly_e1(J, pis[k]);
      u[k] -= 1.0;
      double nrm = 0.0;
      for (double x : u) nrm += x * x;
      CHECK(std::sqrt(nrm) <= 1e-8);
    }
  }
}

TEST_CASE("cyclic_test matches the zero-on-spectrum criterion") {
  const JacobiMatrix J = free3();
  SUBCASE("shift by 5 keeps the vector cyclic") {
    const CyclicResult r = cyclic_test(J, poly_from_roots(std::vector<double>{5.0}));
    CHECK(r.cyclic);
    CHECK(r.krylov_rank == 3);
  }
  SUBCASE("a zero at the 0 eigenvalue drops the rank") {
    const CyclicResult r = cyclic_test(J, poly_from_roots(std::vector<double>{0.0}));
    CHECK_FALSE(r.cyclic);
    CHECK(r.krylov_rank == 2);
  }
  SUBCASE("the first basis vector itself is cyclic") {
    const CyclicResult r = cyclic_test(J, Polynomial{{1.0}});
    CHECK(r.cyclic);
    CHECK(r.krylov_rank == 3);
  }
  SUBCASE("the zero polynomial is rejected") {
    CHECK_THROWS_AS(cyclic_test(J, Polynomial{{0.0, 0.0}}), Error);
  }
  SUBCASE("double zero on the spectrum loses two directions") {
    const CyclicResult r =
        cyclic_test(J, poly_from_roots(std::vector<double>{0.0, std::sqrt(2.0)}));
    CHECK_FALSE(r.cyclic);
    CHECK(r.krylov_rank == 1);
  }
}

TEST_CASE("shifted_solve agrees with dense full-pivot elimination") {
  CorpusSpec spec;
  spec.count = 10;
  for (const JacobiMatrix& J : generate_corpus(spec)) {
    for (cplx z : {cplx(0.3, 1.1), cplx(-2.0, 0.4), cplx(1.0, -2.2)}) {
      for (std::size_t k : {std::size_t(0), J.size() - 1, J.size() / 2}) {
        std::vector<cplx> rhs(J.size(), 0.0);
        rhs[k] = 1.0;
        const cplx got = shifted_solve(J, z, rhs)[k];
        const cplx want = oracle::resolvent_entry_dense(J, k, z);
        CHECK(std::abs(got - want) < 1e-12);
      }
    }
  }
}

TEST_CASE("spectrum intersection identity on a corpus") {
  CorpusSpec spec;
  spec.count = 20;
  for (const JacobiMatrix& J : generate_corpus(spec)) {
    const double guard = 1e-8 * std::max(1.0, gershgorin_radius(J));
    const std::vector<double> spec_j = eigenvalues(J);
    for (std::size_t n = 2; n < J.size(); ++n) {
      const std::vector<double> minus = eigenvalues(truncate_minus(J, n));
      const std::vector<double> plus = eigenvalues(truncate_plus(J, n));
      for (double x : minus) {
        bool in_plus = false, in_spec = false;
        for (double y : plus) in_plus |= std::abs(x - y) <= guard;
        for (double y : spec_j) in_spec |= std::abs(x - y) <= guard;
        CHECK(in_plus == in_spec);
      }
    }
  }
}

TEST_CASE("leading-block eigenvalues stay inside the spectrum hull") {
  CorpusSpec spec;
  spec.count = 20;
  for (const JacobiMatrix& J : generate_corpus(spec)) {
    const std::vector<double> spec_j = eigenvalues(J);
    for (std::size_t n = 2; n <= J.size(); ++n) {
      for (double lam : poly_zeros(J, n)) {
        CHECK(lam > spec_j.front());
        CHECK(lam < spec_j.back());
      }
    }
  }
}

TEST_CASE("polynomial utilities") {
  const Polynomial p = poly_from_roots(std::vector<double>{1.0, -2.0});
  CHECK(p.degree() == 2);
  CHECK(p(1.0) == doctest::Approx(0.0));
  CHECK(p(-2.0) == doctest::Approx(0.0));
  CHECK(p(0.0) == doctest::Approx(-2.0));  // (0-1)(0+2)
  CHECK(Polynomial{{0.0, 0.0}}.is_zero());
  CHECK(Polynomial{{0.0, 0.0}}.degree() == -1);
}
