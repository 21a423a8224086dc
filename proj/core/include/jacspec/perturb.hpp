#ifndef JACSPEC_PERTURB_HPP
#define JACSPEC_PERTURB_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "jacspec/green.hpp"
#include "jacspec/tolerances.hpp"
#include "jacspec/tridiag.hpp"

namespace jacspec {

/// Interior mass-spring perturbation: entries b_{n-1}, q_n, b_n become
/// theta*b_{n-1}, theta^2(q_n + h), theta*b_n. Site n = 1 is the rank-two
/// boundary case where the b_{n-1} row is absent.
struct PerturbationParams {
  std::size_t n = 2;
  double theta = 1.0;
  double h = 0.0;
};

/// Two-spectra inverse problem data: spectrum S of the unperturbed operator,
/// spectrum S_tilde of the perturbed one, the site n and the coupling
/// parameter gamma = theta^2 h / (1 - theta^2), gamma not in S.
struct InverseProblem {
  std::vector<double> S;
  std::vector<double> S_tilde;
  std::size_t n = 2;
  double gamma = 0.0;
};

struct SolutionReport {
  double spec_err = 0.0;        // Hausdorff distance sigma(J) <-> S
  double spec_tilde_err = 0.0;  // same for the perturbed spectrum
  double gamma_err = 0.0;       // |gamma(theta,h) - gamma|
  bool accepted = false;
};

struct InverseSolution {
  JacobiMatrix matrix;
  double theta = 1.0;
  double h = 0.0;
  std::vector<std::size_t> interior;
  SolutionReport report;
};

struct SolveOptions {
  std::size_t max_selections = 64;      // interior-selection enumeration cap
  std::uint64_t selection_seed = 42;    // deterministic subsample order
  std::vector<ResidueSplit> splits;     // shared-pole residue fractions
};

/// Acceptance threshold for verify_solution (all three errors at most this).
inline constexpr double kSolutionAccept = 1e-7;

JacobiMatrix build_perturbed(const JacobiMatrix& J,
                             const PerturbationParams& p);

/// gamma = theta^2 h / (1 - theta^2); throws ThetaOne at theta = 1.
double gamma_of(double theta, double h);

/// Characteristic ratio of the two spectra: product of (lambda_tilde - z)
/// over product of (lambda - z), with points common to both spectra cancelled
/// first. Tends to 1 at infinity and extends through cancelled points.
std::complex<double> m_frak(std::span<const double> S,
                            std::span<const double> S_tilde,
                            std::complex<double> z,
                            const Tolerances& tol = default_tolerances());

/// theta from the spectra and gamma: the characteristic ratio evaluated at
/// gamma equals theta^2 because the Green function stays finite there.
double recover_theta(std::span<const double> S,
                     std::span<const double> S_tilde, double gamma,
                     const Tolerances& tol = default_tolerances());

/// The common n-th Green function of all solutions of (S, S_tilde, n, gamma),
/// as a rational expression in the spectra; the removable point z = gamma is
/// evaluated by the limit formula.
std::complex<double> green_from_spectra(std::span<const double> S,
                                        std::span<const double> S_tilde,
                                        double gamma, std::complex<double> z,
                                        const Tolerances& tol = default_tolerances());

/// Hausdorff-distance verification of a candidate solution against the
/// problem data.
SolutionReport verify_solution(const JacobiMatrix& J, double theta, double h,
                               std::size_t n, const InverseProblem& prob,
                               const Tolerances& tol = default_tolerances());

/// Solves (S, S_tilde, n, gamma): recovers (theta, h), extracts the measure
/// of the common Green function, enumerates interior pole selections up to
/// the cap and returns every candidate that verifies, sorted by selection.
/// Throws DegenerateSplit when shared poles require residue fractions that
/// were not supplied, and NoSolution when nothing verifies.
std::vector<InverseSolution> solve_inverse(const InverseProblem& prob,
                                           const SolveOptions& opts = {},
                                           const Tolerances& tol = default_tolerances());

}  // namespace jacspec

#endif  // JACSPEC_PERTURB_HPP
