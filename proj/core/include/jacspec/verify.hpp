#ifndef JACSPEC_VERIFY_HPP
#define JACSPEC_VERIFY_HPP

#include <complex>
#include <string>
#include <vector>

#include "jacspec/corpus.hpp"
#include "jacspec/tolerances.hpp"
#include "jacspec/tridiag.hpp"

namespace jacspec {

struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

/// Deterministic off-spectrum sample points for a matrix: complex points
/// spread over the spectral range with imaginary parts bounded away from 0.
std::vector<std::complex<double>> offspectrum_samples(const JacobiMatrix& J,
                                                      std::size_t count);

/// Runs the whole invariant suite over a generated corpus. Deterministic for
/// a fixed spec and tolerance configuration.
VerifyReport run_verification(const CorpusSpec& spec,
                              const Tolerances& tol = default_tolerances());

}  // namespace jacspec

#endif  // JACSPEC_VERIFY_HPP
