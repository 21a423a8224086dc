#ifndef JACSPEC_TOLERANCES_HPP
#define JACSPEC_TOLERANCES_HPP

namespace jacspec {

/// Immutable numeric policy threaded through the toolkit. All operations are
/// pure functions of their inputs plus one of these.
///
/// tol_match is absolute after spectra are rescaled to unit spectral radius;
/// tol_rank discards singular values below tol_rank * (largest one);
/// tol_weight drops push-forward weights that are zeros of the polynomial
/// rather than genuinely small masses.
struct Tolerances {
  double tol_eig = 1e-12;       // relative eigenpair residual
  double tol_match = 1e-8;      // spectral set matching, scaled
  double tol_rank = 1e-8;       // singular-value cutoff, relative
  double tol_weight = 1e-14;    // push-forward weight drop, absolute
  double tol_identity = 1e-8;   // identity-residual checks
  int eig_max_iter = 64;        // per-eigenvalue QL iteration cap
  int bisection_max_iter = 256; // root/pole bisection cap

  /// Throws InvalidData when a field is non-positive or tol_identity < tol_eig.
  void validate() const;
};

/// Shared default instance; equals Tolerances{}.
const Tolerances& default_tolerances();

}  // namespace jacspec

#endif  // JACSPEC_TOLERANCES_HPP
