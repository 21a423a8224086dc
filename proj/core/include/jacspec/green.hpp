#ifndef JACSPEC_GREEN_HPP
#define JACSPEC_GREEN_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "jacspec/measure.hpp"
#include "jacspec/tolerances.hpp"
#include "jacspec/tridiag.hpp"

namespace jacspec {

/// Rational Herglotz-type function F(z) = z + shift + sum_k eta_k/(alpha_k - z)
/// with strictly increasing poles alpha_k and positive residues eta_k. This is
/// the shape of the negative reciprocal of a Green function.
struct HerglotzRational {
  double shift = 0.0;
  std::vector<double> poles;
  std::vector<double> residues;

  std::complex<double> operator()(std::complex<double> z) const;
};

/// Split of -1/G(z,n) into q_n, the two squared couplings and the normalized
/// block measures on either side of site n. b_minus_sq is 0 with mu empty at
/// n = 1; b_plus_sq is 0 with sigma empty at n = N.
struct GreenDecomposition {
  double q_n = 0.0;
  double b_minus_sq = 0.0;
  double b_plus_sq = 0.0;
  DiscreteMeasure mu;
  DiscreteMeasure sigma;
};

/// Fraction of a pole's residue assigned to the interior side when a single
/// pole of -1/G has to be shared between both blocks.
struct ResidueSplit {
  std::size_t pole_index = 0;
  double interior_fraction = 0.5;
};

/// Weyl m-function <e_1, (J - z)^{-1} e_1> by direct tridiagonal solve.
std::complex<double> weyl_m(const JacobiMatrix& J, std::complex<double> z,
                            const Tolerances& tol = default_tolerances());

/// n-th Green function <e_n, (J - z)^{-1} e_n>. Evaluates the analytic
/// continuation at removable spectral points (eigenvalues killed by pi_n);
/// throws PoleEvaluation at genuine poles.
std::complex<double> green(const JacobiMatrix& J, std::size_t n,
                           std::complex<double> z,
                           const Tolerances& tol = default_tolerances());

/// Weyl functions of the truncated blocks. m_minus uses the last coordinate
/// of the leading (n-1) block and is identically 0 at n = 1; m_plus uses the
/// first coordinate of the trailing block and is identically 0 at n = N.
std::complex<double> m_plus(const JacobiMatrix& J, std::size_t n,
                            std::complex<double> z,
                            const Tolerances& tol = default_tolerances());
std::complex<double> m_minus(const JacobiMatrix& J, std::size_t n,
                             std::complex<double> z,
                             const Tolerances& tol = default_tolerances());

/// Block spectral measures at site n: sigma_n for the trailing block w.r.t.
/// its first coordinate, mu_n for the leading block w.r.t. its last one.
struct SigmaMu {
  DiscreteMeasure sigma;
  DiscreteMeasure mu;
};
SigmaMu sigma_mu(const JacobiMatrix& J, std::size_t n,
                 const Tolerances& tol = default_tolerances());

/// Full decomposition of -1/G(z,n).
GreenDecomposition decompose(const JacobiMatrix& J, std::size_t n,
                             const Tolerances& tol = default_tolerances());

/// Max over samples of |G(z,n)(b_n^2 m_n^+ + b_{n-1}^2 m_n^- + z - q_n) + 1|,
/// each factor computed by its own independent solve.
double verify_gkk(const JacobiMatrix& J, std::size_t n,
                  std::span<const std::complex<double>> samples,
                  const Tolerances& tol = default_tolerances());

/// Negative reciprocal of the Borel transform of a normalized measure in
/// rational form: poles are bracketed by bisection in the gaps between
/// consecutive support points (strict interlacing gives exactly one per gap),
/// residues come from the analytic derivative, shift = -(first moment).
/// Masses below tol_weight are removed first: their pole-zero pairs sit
/// within roundoff of the support point and cancel to working precision.
HerglotzRational neg_inverse(const DiscreteMeasure& g_measure,
                             const Tolerances& tol = default_tolerances());

/// Rebuilds a Jacobi matrix whose l-th Green function is the Borel transform
/// of g_measure. interior selects which poles of -1/G feed the leading
/// block; splits optionally share single poles between both blocks. The
/// combined interior point count must be l-1. With an empty exterior the
/// result is l x l.
JacobiMatrix green_to_jacobi(const DiscreteMeasure& g_measure, std::size_t l,
                             std::span<const std::size_t> interior,
                             std::span<const ResidueSplit> splits = {},
                             const Tolerances& tol = default_tolerances());

}  // namespace jacspec

#endif  // JACSPEC_GREEN_HPP
