#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "jacspec/corpus.hpp"
#include "jacspec/errors.hpp"
#include "jacspec/green.hpp"
#include "jacspec/perturb.hpp"
#include "jacspec/tridiag.hpp"
#include "jacspec/verify.hpp"
#include "oracles.hpp"

using namespace jacspec;
using cplx = std::complex<double>;

namespace {

const double kSqrt2 = std::sqrt(2.0);

JacobiMatrix free3() { return build_jacobi({0, 0, 0}, {1, 1}); }

const std::vector<double> kS{-kSqrt2, 0.0, kSqrt2};
const std::vector<double> kSTilde{-2.0 * kSqrt2, 0.0, 2.0 * kSqrt2};

JacobiMatrix seeded(std::uint64_t seed, std::size_t n) {
  CorpusSpec spec;
  spec.seed = seed;
  spec.count = 1;
  spec.n_min = spec.n_max = n;
  return generate_corpus(spec)[0];
}

}  // namespace

TEST_CASE("interior perturbation entries") {
  SUBCASE("scaling both springs at site 2") {
    const JacobiMatrix Jt =
        build_perturbed(free3(), PerturbationParams{2, 2.0, 0.0});
    CHECK(Jt.q == std::vector<double>{0, 0, 0});
    CHECK(Jt.b == std::vector<double>{2, 2});
  }
  SUBCASE("identity parameters change nothing") {
    const JacobiMatrix J = seeded(3, 6);
    const JacobiMatrix Jt = build_perturbed(J, PerturbationParams{3, 1.0, 0.0});
    CHECK(Jt.q == J.q);
    CHECK(Jt.b == J.b);
  }
  SUBCASE("theta = 1 with a shift is the rank-one case") {
    const JacobiMatrix Jt =
        build_perturbed(free3(), PerturbationParams{2, 1.0, 5.0});
    CHECK(Jt.q == std::vector<double>{0, 5, 0});
    CHECK(Jt.b == std::vector<double>{1, 1});
  }
  SUBCASE("boundary sites") {
    const JacobiMatrix left =
        build_perturbed(free3(), PerturbationParams{1, 2.0, 1.0});
    CHECK(left.q[0] == doctest::Approx(4.0));  // theta^2 (q_1 + h)
    CHECK(left.b == std::vector<double>{2, 1});
    const JacobiMatrix right =
        build_perturbed(free3(), PerturbationParams{3, 2.0, 0.0});
    CHECK(right.b == std::vector<double>{1, 2});
  }
  SUBCASE("guards") {
    CHECK_THROWS_AS(build_perturbed(free3(), PerturbationParams{4, 2.0, 0.0}),
                    Error);
    CHECK_THROWS_AS(build_perturbed(free3(), PerturbationParams{2, 0.0, 0.0}),
                    Error);
    CHECK_THROWS_AS(build_perturbed(free3(), PerturbationParams{2, -1.0, 0.0}),
                    Error);
  }
}

TEST_CASE("gamma parameter") {
  CHECK(gamma_of(2.0, 0.0) == doctest::Approx(0.0));
  CHECK(gamma_of(2.0, 3.0) == doctest::Approx(-4.0));
  CHECK_THROWS_AS(gamma_of(1.0, 1.0), Error);
  try {
    gamma_of(1.0, 1.0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ThetaOne);
  }
}

TEST_CASE("characteristic ratio of two spectra") {
  SUBCASE("the sqrt2 example reduces to (z^2-8)/(z^2-2)") {
    for (cplx z : {cplx(0.4, 1.1), cplx(3.0, 0.0), cplx(-0.7, -2.0)}) {
      const cplx want = (z * z - 8.0) / (z * z - 2.0);
      CHECK(std::abs(m_frak(kS, kSTilde, z) - want) < 1e-13);
    }
    CHECK(m_frak(kS, kSTilde, cplx(0, 0)).real() == doctest::Approx(4.0));
  }
  SUBCASE("equal spectra give the constant 1") {
    for (cplx z : {cplx(0, 0), cplx(5, 1), cplx(-kSqrt2, 0)}) {
      CHECK(std::abs(m_frak(kS, kS, z) - cplx(1.0)) < 1e-15);
    }
  }
  SUBCASE("tends to 1 at infinity") {
    CHECK(std::abs(m_frak(kS, kSTilde, cplx(0, 1e6)) - cplx(1.0)) < 1e-5);
  }
  SUBCASE("pole guard on the uncancelled part") {
    CHECK_THROWS_AS(m_frak(kS, kSTilde, cplx(kSqrt2, 0)), Error);
  }
}

TEST_CASE("theta recovery") {
  SUBCASE("worked sqrt2 example") {
    CHECK(recover_theta(kS, kSTilde, 0.0) == doctest::Approx(2.0).epsilon(1e-12));
  }
  SUBCASE("identical spectra have no admissible theta != 1") {
    CHECK_THROWS_AS(recover_theta(kS, kS, 0.9), Error);
  }
  SUBCASE("a negative characteristic ratio admits no theta") {
    // Between interleaved spectra the ratio flips sign.
    const std::vector<double> S{0.0, 1.0};
    const std::vector<double> St{2.0, 3.0};
    try {
      recover_theta(S, St, 0.5);  // ratio (2-g)(3-g)/((0-g)(1-g)) = -15
      FAIL("expected a throw");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidData);
    }
  }
  SUBCASE("seeded 5x5 forward instance") {
    const JacobiMatrix J = seeded(5, 5);
    const double theta = 1.5, h = 0.7;
    const double gamma = gamma_of(theta, h);
    const JacobiMatrix Jt = build_perturbed(J, PerturbationParams{3, theta, h});
    const double got = recover_theta(eigenvalues(J), eigenvalues(Jt), gamma);
    CHECK(std::abs(got - theta) <= 1e-8);
  }
}

TEST_CASE("green function from the spectra") {
  SUBCASE("matches the closed form of the sqrt2 example") {
    const cplx got = green_from_spectra(kS, kSTilde, 0.0, cplx(0, 1));
    CHECK(std::abs(got - cplx(0, 1.0 / 3.0)) < 1e-13);
  }
  SUBCASE("has the resolvent asymptotics") {
    const cplx z(0, 1e3);
    const cplx g = green_from_spectra(kS, kSTilde, 0.0, z);
    CHECK(std::abs(z * g + 1.0) <= 3e-3);
  }
  SUBCASE("the removable point gamma is evaluated by the limit formula") {
    const JacobiMatrix J = seeded(8, 6);
    const double theta = 1.7, h = 0.9;
    const double gamma = gamma_of(theta, h);
    const std::vector<double> S = eigenvalues(J);
    const std::vector<double> St =
        eigenvalues(build_perturbed(J, PerturbationParams{3, theta, h}));
    const cplx at_gamma = green_from_spectra(S, St, gamma, cplx(gamma, 0.0));
    // Symmetric average of nearby samples cancels the first-order drift.
    const double delta = 1e-4;
    const cplx avg =
        0.5 * (green_from_spectra(S, St, gamma, cplx(gamma + delta, 0.0)) +
               green_from_spectra(S, St, gamma, cplx(gamma - delta, 0.0)));
    CHECK(std::abs(at_gamma - avg) <= 1e-6);
  }
  SUBCASE("forward consistency across seeds") {
    for (std::uint64_t seed : {21, 22, 23, 24, 25}) {
      const JacobiMatrix J = seeded(seed, 6);
      const double theta = 1.2 + 0.3 * static_cast<double>(seed - 21);
      const double h = -1.0 + 0.4 * static_cast<double>(seed - 21);
      const std::size_t n = 2 + static_cast<std::size_t>(seed % 4);
      const double gamma = gamma_of(theta, h);

      const std::vector<double> S = eigenvalues(J);
      bool clear = true;
      for (double lam : S) clear &= std::abs(gamma - lam) > 1e-3;
      if (!clear) continue;

      const JacobiMatrix Jt = build_perturbed(J, PerturbationParams{n, theta, h});
      const std::vector<double> St = eigenvalues(Jt);
      CHECK(std::abs(recover_theta(S, St, gamma) - theta) <= 1e-8);
      for (cplx z : offspectrum_samples(J, 20)) {
        CHECK(std::abs(green_from_spectra(S, St, gamma, z) - green(J, n, z)) <=
              1e-8);
      }
    }
  }
}

TEST_CASE("solution verification") {
  const JacobiMatrix J = seeded(31, 5);
  const double theta = 2.1, h = -0.8;
  const std::size_t n = 3;
  InverseProblem prob;
  prob.S = eigenvalues(J);
  prob.S_tilde = eigenvalues(build_perturbed(J, PerturbationParams{n, theta, h}));
  prob.n = n;
  prob.gamma = gamma_of(theta, h);

  SUBCASE("the generator verifies against itself") {
    const SolutionReport rep = verify_solution(J, theta, h, n, prob);
    CHECK(rep.spec_err <= 1e-9);
    CHECK(rep.spec_tilde_err <= 1e-9);
    CHECK(rep.gamma_err <= 1e-9);
    CHECK(rep.accepted);
  }
  SUBCASE("a 1e-3 nudge of theta is rejected through gamma") {
    const SolutionReport rep = verify_solution(J, theta + 1e-3, h, n, prob);
    CHECK(rep.gamma_err > 1e-7);
    CHECK_FALSE(rep.accepted);
  }
  SUBCASE("theta = 1 is rejected before any spectra are compared") {
    CHECK_THROWS_AS(verify_solution(J, 1.0, h, n, prob), Error);
  }
}

TEST_CASE("solve_inverse") {
  SUBCASE("the sqrt2 example needs a split and recovers the free matrix") {
    InverseProblem prob;
    prob.S = kS;
    prob.S_tilde = kSTilde;
    prob.n = 2;
    prob.gamma = 0.0;

    // Default: the shared pole cannot be divided without extra data.
    CHECK_THROWS_AS(solve_inverse(prob), Error);
    try {
      solve_inverse(prob);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DegenerateSplit);
    }

    SolveOptions opts;
    opts.splits = {{0, 0.5}};
    const std::vector<InverseSolution> sols = solve_inverse(prob, opts);
    REQUIRE(!sols.empty());
    CHECK(sols[0].theta == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(sols[0].h == doctest::Approx(0.0));
    bool found_free = false;
    for (const InverseSolution& s : sols) {
      if (s.matrix.size() != 3) continue;
      bool same = true;
      for (std::size_t k = 0; k < 3; ++k) {
        same &= std::abs(s.matrix.q[k]) <= 1e-7;
        if (k < 2) same &= std::abs(s.matrix.b[k] - 1.0) <= 1e-7;
      }
      found_free |= same;
    }
    CHECK(found_free);
  }
  SUBCASE("a generic seeded instance returns several verified solutions") {
    const JacobiMatrix J = seeded(5, 5);
    const double theta = 1.5, h = 0.7;
    const std::size_t n = 3;
    InverseProblem prob;
    prob.S = eigenvalues(J);
    prob.S_tilde =
        eigenvalues(build_perturbed(J, PerturbationParams{n, theta, h}));
    prob.n = n;
    prob.gamma = gamma_of(theta, h);

    const std::vector<InverseSolution> sols = solve_inverse(prob);
    CHECK(sols.size() >= 2);
    for (const InverseSolution& s : sols) {
      CHECK(s.report.accepted);
      CHECK(std::abs(s.theta - theta) <= 1e-8);
      for (cplx z : offspectrum_samples(J, 10)) {
        CHECK(std::abs(green(s.matrix, n, z) -
                       green_from_spectra(prob.S, prob.S_tilde, prob.gamma, z)) <=
              1e-7);
      }
    }
    // Distinct matrices from distinct selections.
    bool distinct = false;
    for (std::size_t a = 0; a + 1 < sols.size() && !distinct; ++a) {
      for (std::size_t k = 0; k < sols[a].matrix.size(); ++k) {
        if (std::abs(sols[a].matrix.q[k] - sols[a + 1].matrix.q[k]) > 1e-3) {
          distinct = true;
        }
      }
    }
    CHECK(distinct);
  }
  SUBCASE("the same data solves at a different site") {
    const JacobiMatrix J = seeded(5, 5);
    const double theta = 1.5, h = 0.7;
    InverseProblem prob;
    prob.S = eigenvalues(J);
    prob.S_tilde =
        eigenvalues(build_perturbed(J, PerturbationParams{3, theta, h}));
    prob.gamma = gamma_of(theta, h);

    prob.n = 3;
    const auto at_three = solve_inverse(prob);
    prob.n = 4;
    const auto at_four = solve_inverse(prob);
    CHECK(!at_three.empty());
    CHECK(!at_four.empty());
  }
  SUBCASE("inconsistent data yields no solution") {
    InverseProblem prob;
    const JacobiMatrix J = seeded(5, 5);
    prob.S = eigenvalues(J);
    prob.S_tilde =
        eigenvalues(build_perturbed(J, PerturbationParams{3, 1.5, 0.7}));
    for (double& x : prob.S_tilde) x += 10.0;
    prob.n = 3;
    prob.gamma = gamma_of(1.5, 0.7);
    CHECK_THROWS_AS(solve_inverse(prob), Error);
  }
  SUBCASE("gamma inside S is the unsupported variant") {
    InverseProblem prob;
    prob.S = kS;
    prob.S_tilde = kSTilde;
    prob.n = 2;
    prob.gamma = kSqrt2;
    try {
      solve_inverse(prob);
      FAIL("expected a throw");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnsupportedCase);
    }
  }
}

TEST_CASE("perturbation difference has rank at most three") {
  for (std::uint64_t seed : {41, 42}) {
    const JacobiMatrix J = seeded(seed, 7);
    const JacobiMatrix Jt = build_perturbed(J, PerturbationParams{4, 1.9, -0.6});
    std::size_t touched = 0;
    for (std::size_t k = 0; k < J.size(); ++k) {
      if (J.q[k] != Jt.q[k]) ++touched;
    }
    for (std::size_t k = 0; k + 1 < J.size(); ++k) {
      if (J.b[k] != Jt.b[k]) ++touched;
    }
    CHECK(touched <= 3);  // one diagonal entry, two couplings
  }
}
