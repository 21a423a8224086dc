#ifndef JACSPEC_MEASURE_HPP
#define JACSPEC_MEASURE_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "jacspec/tolerances.hpp"
#include "jacspec/tridiag.hpp"

namespace jacspec {

/// Finitely supported positive measure: strictly increasing points paired
/// with positive weights. Empty measures are allowed as boundary values
/// (e.g. the minus-side measure at site 1).
struct DiscreteMeasure {
  std::vector<double> points;
  std::vector<double> weights;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  double total_mass() const;
};

/// Validates ordering and positivity; does not reorder.
DiscreteMeasure make_measure(std::vector<double> points,
                             std::vector<double> weights);

/// Merges support points closer than tol_match (rescaled to unit spectral
/// radius), summing their weights. Input need not be sorted.
DiscreteMeasure merge_close(const DiscreteMeasure& m,
                            const Tolerances& tol = default_tolerances());

/// Spectral measure of J with respect to the first basis vector: points are
/// the eigenvalues, weight_i the squared first component of eigenvector i.
DiscreteMeasure spectral_measure(const JacobiMatrix& J,
                                 const Tolerances& tol = default_tolerances());

/// k-th power moment.
double moments(const DiscreteMeasure& m, unsigned k);

/// Borel transform sum_i w_i / (p_i - z). Throws PoleEvaluation when z is
/// within matching tolerance of a support point.
std::complex<double> borel_transform(const DiscreteMeasure& m,
                                     std::complex<double> z,
                                     const Tolerances& tol = default_tolerances());

/// Jacobi matrix of the orthonormal polynomials of a normalized measure,
/// computed by the Stieltjes/Lanczos three-term process with full
/// reorthogonalization. Support points closer than the matching tolerance
/// are merged first. Throws DegenerateMeasure when the effective support is
/// too small for the requested size.
JacobiMatrix favard(const DiscreteMeasure& m,
                    std::optional<std::size_t> max_size = std::nullopt,
                    const Tolerances& tol = default_tolerances());

/// Push-forward of the spectral measure by pi_n^2. Points whose new weight
/// falls below tol_weight are dropped (removable singularities of the n-th
/// Green function).
DiscreteMeasure push_forward_pi_sq(const JacobiMatrix& J, std::size_t n,
                                   const Tolerances& tol = default_tolerances());

}  // namespace jacspec

#endif  // JACSPEC_MEASURE_HPP
