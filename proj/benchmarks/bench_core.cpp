#include <benchmark/benchmark.h>

#include <complex>

#include "jacspec/corpus.hpp"
#include "jacspec/green.hpp"
#include "jacspec/measure.hpp"
#include "jacspec/perturb.hpp"
#include "jacspec/tridiag.hpp"

using namespace jacspec;

namespace {

JacobiMatrix sized_matrix(std::size_t n) {
  CorpusSpec spec;
  spec.seed = 1234;
  spec.count = 1;
  spec.n_min = spec.n_max = n;
  return generate_corpus(spec)[0];
}

void BM_Eigensystem(benchmark::State& state) {
  const JacobiMatrix J = sized_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eigensystem(J));
  }
}
BENCHMARK(BM_Eigensystem)->Arg(4)->Arg(8)->Arg(12);

void BM_SturmEigenvalues(benchmark::State& state) {
  const JacobiMatrix J = sized_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sturm_eigenvalues(J, 1e-13));
  }
}
BENCHMARK(BM_SturmEigenvalues)->Arg(4)->Arg(8)->Arg(12);

void BM_FavardRoundTrip(benchmark::State& state) {
  const JacobiMatrix J = sized_matrix(static_cast<std::size_t>(state.range(0)));
  const DiscreteMeasure rho = spectral_measure(J);
  for (auto _ : state) {
    benchmark::DoNotOptimize(favard(rho));
  }
}
BENCHMARK(BM_FavardRoundTrip)->Arg(4)->Arg(8)->Arg(12);

void BM_GreenSolve(benchmark::State& state) {
  const JacobiMatrix J = sized_matrix(static_cast<std::size_t>(state.range(0)));
  const std::complex<double> z(0.3, 1.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(green(J, J.size() / 2, z));
  }
}
BENCHMARK(BM_GreenSolve)->Arg(4)->Arg(8)->Arg(12);

void BM_GreenToJacobi(benchmark::State& state) {
  const JacobiMatrix J = sized_matrix(static_cast<std::size_t>(state.range(0)));
  const DiscreteMeasure rho = spectral_measure(J);
  const std::vector<std::size_t> interior{0, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(green_to_jacobi(rho, 3, interior));
  }
}
BENCHMARK(BM_GreenToJacobi)->Arg(6)->Arg(12);

void BM_SolveInverse(benchmark::State& state) {
  const JacobiMatrix J = sized_matrix(6);
  const double theta = 1.7, h = 0.4;
  const std::size_t site = 3;
  InverseProblem prob;
  prob.S = eigenvalues(J);
  prob.S_tilde = eigenvalues(build_perturbed(J, PerturbationParams{site, theta, h}));
  prob.n = site;
  prob.gamma = gamma_of(theta, h);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_inverse(prob));
  }
}
BENCHMARK(BM_SolveInverse);

}  // namespace

BENCHMARK_MAIN();
