#ifndef JACSPEC_TRIDIAG_HPP
#define JACSPEC_TRIDIAG_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "jacspec/tolerances.hpp"

namespace jacspec {

/// Finite symmetric tridiagonal matrix with strictly positive off-diagonal.
/// Entry (k,k) = q[k], entry (k,k+1) = entry (k+1,k) = b[k], everything at
/// distance >= 2 from the diagonal is zero.
struct JacobiMatrix {
  std::vector<double> q;  // diagonal, length N
  std::vector<double> b;  // off-diagonal, length N-1, all > 0

  std::size_t size() const { return q.size(); }

  /// Second-order difference expression: (Jf)_k = b_{k-1}f_{k-1} + q_k f_k +
  /// b_k f_{k+1}, with one-sided rows at both ends.
  std::vector<double> apply(std::span<const double> f) const;
};

/// Simple spectrum in ascending order plus orthonormal eigenvectors.
/// vectors[i] pairs with values[i]; the first nonzero component of every
/// vector is positive so results are deterministic.
struct EigenSystem {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;
};

/// Dense polynomial, coefficients in ascending degree order.
struct Polynomial {
  std::vector<double> coeffs;

  int degree() const;
  bool is_zero() const;
  double operator()(double x) const;
  std::complex<double> operator()(std::complex<double> z) const;
};

/// Monic product of (x - root) factors.
Polynomial poly_from_roots(std::span<const double> roots);

struct CyclicResult {
  bool cyclic = false;
  std::size_t krylov_rank = 0;
};

/// Validates and assembles the matrix. Throws LengthMismatch when
/// len(b) != len(q)-1 and NonPositiveOffDiagonal when some b[k] <= 0.
JacobiMatrix build_jacobi(std::vector<double> q, std::vector<double> b);

/// Full spectral decomposition by implicit-shift QL on the tridiagonal data.
/// Deterministic for fixed input and tolerance configuration. Throws
/// ConvergenceFailure when the per-eigenvalue iteration cap is exceeded.
EigenSystem eigensystem(const JacobiMatrix& J,
                        const Tolerances& tol = default_tolerances());

/// Eigenvalues only (same QL sweep without accumulating vectors).
std::vector<double> eigenvalues(const JacobiMatrix& J,
                                const Tolerances& tol = default_tolerances());

/// Independent cross-check route: counts eigenvalues strictly below x through
/// the signs of the LDL^T pivots of J - xI, then brackets each eigenvalue by
/// bisection. Shares no code with the QL path.
int sturm_count_below(const JacobiMatrix& J, double x);
std::vector<double> sturm_eigenvalues(const JacobiMatrix& J,
                                      double abs_tol = 1e-12);

/// First-kind polynomials (pi_1(z), ..., pi_n(z)) by the three-term
/// recurrence with pi_1 = 1, b_k pi_{k+1} = (z - q_k) pi_k - b_{k-1} pi_{k-1}.
std::vector<std::complex<double>> first_kind_polys(const JacobiMatrix& J,
                                                   std::complex<double> z,
                                                   std::size_t n);

/// Real-argument fast path of the same recurrence.
std::vector<double> first_kind_values(const JacobiMatrix& J, double t,
                                      std::size_t n);

/// Coefficient form of pi_1..pi_n (each entry ascending-degree).
std::vector<Polynomial> first_kind_coeffs(const JacobiMatrix& J,
                                          std::size_t n);

/// Leading (n-1)x(n-1) block, 2 <= n <= N.
JacobiMatrix truncate_minus(const JacobiMatrix& J, std::size_t n);

/// Trailing block on rows/columns n+1..N, 1 <= n < N.
JacobiMatrix truncate_plus(const JacobiMatrix& J, std::size_t n);

/// Strictly increasing zeros of pi_n, computed as the spectrum of the leading
/// (n-1) block.
std::vector<double> poly_zeros(const JacobiMatrix& J, std::size_t n,
                               const Tolerances& tol = default_tolerances());

/// r(J) e_1 by Horner recursion in the matrix argument; independent of any
/// eigendecomposition.
std::vector<double> apply_poly_e1(const JacobiMatrix& J, const Polynomial& r);

/// Krylov-rank cyclicity test for u = r(J) e_1: dimension of span{u, Ju,
/// ..., J^{N-1}u}, computed by an orthonormalized Krylov sweep that stops
/// when the next residual drops below tol_rank * scale. u is cyclic exactly
/// when the rank equals N, equivalently when r has no zero on the spectrum.
CyclicResult cyclic_test(const JacobiMatrix& J, const Polynomial& r,
                         const Tolerances& tol = default_tolerances());

/// Solves (J - zI) x = rhs by tridiagonal LU with partial pivoting.
/// Throws PoleEvaluation on an exactly singular pivot.
std::vector<std::complex<double>> shifted_solve(
    const JacobiMatrix& J, std::complex<double> z,
    std::span<const std::complex<double>> rhs);

/// Gershgorin bound on the spectral radius; cheap scale estimate.
double gershgorin_radius(const JacobiMatrix& J);

}  // namespace jacspec

#endif  // JACSPEC_TRIDIAG_HPP
