#include "jacspec/green.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "jacspec/errors.hpp"

namespace jacspec {

namespace {

using cplx = std::complex<double>;

double spectral_scale(const JacobiMatrix& J) {
  return std::max(1.0, gershgorin_radius(J));
}

// Diagonal resolvent entry by solve; assumes z is safely off the spectrum.
cplx resolvent_diag(const JacobiMatrix& J, std::size_t k, cplx z) {
  std::vector<cplx> rhs(J.size(), 0.0);
  rhs[k] = 1.0;
  return shifted_solve(J, z, rhs)[k];
}

// Distance from z to the closest eigenvalue, or +inf when the imaginary part
// already clears the guard (the spectrum is real).
double spectrum_distance(const JacobiMatrix& J, cplx z, double guard,
                         const Tolerances& tol, double* nearest = nullptr) {
  if (std::abs(z.imag()) > guard) return std::numeric_limits<double>::infinity();
  double best = std::numeric_limits<double>::infinity();
  for (double lam : eigenvalues(J, tol)) {
    const double d = std::abs(z - cplx(lam));
    if (d < best) {
      best = d;
      if (nearest != nullptr) *nearest = lam;
    }
  }
  return best;
}

double borel_derivative(const DiscreteMeasure& m, double x) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double d = m.points[i] - x;
    s += m.weights[i] / (d * d);
  }
  return s;
}

double borel_real(const DiscreteMeasure& m, double x) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) s += m.weights[i] / (m.points[i] - x);
  return s;
}

JacobiMatrix reversed(const JacobiMatrix& J) {
  std::vector<double> q(J.q.rbegin(), J.q.rend());
  std::vector<double> b(J.b.rbegin(), J.b.rend());
  return JacobiMatrix{std::move(q), std::move(b)};
}

}  // namespace

cplx HerglotzRational::operator()(cplx z) const {
  cplx s = z + shift;
  for (std::size_t k = 0; k < poles.size(); ++k) {
    s += residues[k] / (poles[k] - z);
  }
  return s;
}

cplx weyl_m(const JacobiMatrix& J, cplx z, const Tolerances& tol) {
  const double guard = tol.tol_match * spectral_scale(J);
  if (spectrum_distance(J, z, guard, tol) <= guard) {
    fail(ErrorKind::PoleEvaluation, "z within tolerance of the spectrum");
  }
  return resolvent_diag(J, 0, z);
}

cplx green(const JacobiMatrix& J, std::size_t n, cplx z,
           const Tolerances& tol) {
  if (n < 1 || n > J.size()) {
    fail(ErrorKind::IndexOutOfRange, "green takes 1 <= n <= N");
  }
  const double guard = tol.tol_match * spectral_scale(J);
  if (spectrum_distance(J, z, guard, tol) <= guard) {
    // Eigenvalues killed by pi_n are removable; continue through the measure.
    const DiscreteMeasure rho_n = push_forward_pi_sq(J, n, tol);
    for (double p : rho_n.points) {
      if (std::abs(z - cplx(p)) <= guard) {
        fail(ErrorKind::PoleEvaluation, "z within tolerance of a pole of G");
      }
    }
    return borel_transform(rho_n, z, tol);
  }
  return resolvent_diag(J, n - 1, z);
}

cplx m_plus(const JacobiMatrix& J, std::size_t n, cplx z,
            const Tolerances& tol) {
  if (n < 1 || n > J.size()) {
    fail(ErrorKind::IndexOutOfRange, "m_plus takes 1 <= n <= N");
  }
  if (n == J.size()) return 0.0;  // empty trailing block
  return weyl_m(truncate_plus(J, n), z, tol);
}

cplx m_minus(const JacobiMatrix& J, std::size_t n, cplx z,
             const Tolerances& tol) {
  if (n < 1 || n > J.size()) {
    fail(ErrorKind::IndexOutOfRange, "m_minus takes 1 <= n <= N");
  }
  if (n == 1) return 0.0;
  const JacobiMatrix block = truncate_minus(J, n);
  const double guard = tol.tol_match * spectral_scale(block);
  if (spectrum_distance(block, z, guard, tol) <= guard) {
    fail(ErrorKind::PoleEvaluation, "z within tolerance of the block spectrum");
  }
  return resolvent_diag(block, block.size() - 1, z);
}

SigmaMu sigma_mu(const JacobiMatrix& J, std::size_t n, const Tolerances& tol) {
  if (n < 1 || n > J.size()) {
    fail(ErrorKind::IndexOutOfRange, "sigma_mu takes 1 <= n <= N");
  }
  SigmaMu out;
  if (n < J.size()) {
    out.sigma = spectral_measure(truncate_plus(J, n), tol);
  }
  if (n >= 2) {
    const JacobiMatrix block = truncate_minus(J, n);
    const EigenSystem sys = eigensystem(block, tol);
    out.mu.points = sys.values;
    out.mu.weights.resize(sys.values.size());
    const std::size_t last = block.size() - 1;
    for (std::size_t i = 0; i < sys.values.size(); ++i) {
      const double c = sys.vectors[i][last];
      out.mu.weights[i] = c * c;
    }
  }
  return out;
}

GreenDecomposition decompose(const JacobiMatrix& J, std::size_t n,
                             const Tolerances& tol) {
  if (n < 1 || n > J.size()) {
    fail(ErrorKind::IndexOutOfRange, "decompose takes 1 <= n <= N");
  }
  GreenDecomposition d;
  d.q_n = J.q[n - 1];
  if (n >= 2) d.b_minus_sq = J.b[n - 2] * J.b[n - 2];
  if (n < J.size()) d.b_plus_sq = J.b[n - 1] * J.b[n - 1];
  SigmaMu sm = sigma_mu(J, n, tol);
  d.sigma = std::move(sm.sigma);
  d.mu = std::move(sm.mu);
  return d;
}

double verify_gkk(const JacobiMatrix& J, std::size_t n,
                  std::span<const cplx> samples, const Tolerances& tol) {
  if (n < 1 || n > J.size()) {
    fail(ErrorKind::IndexOutOfRange, "verify_gkk takes 1 <= n <= N");
  }
  const double qn = J.q[n - 1];
  const double bm2 = n >= 2 ? J.b[n - 2] * J.b[n - 2] : 0.0;
  const double bp2 = n < J.size() ? J.b[n - 1] * J.b[n - 1] : 0.0;

  double worst = 0.0;
  for (cplx z : samples) {
    cplx acc = z - qn;
    if (bp2 != 0.0) acc += bp2 * m_plus(J, n, z, tol);
    if (bm2 != 0.0) acc += bm2 * m_minus(J, n, z, tol);
    const cplx g = green(J, n, z, tol);
    worst = std::max(worst, std::abs(g * acc + cplx(1.0)));
  }
  return worst;
}

HerglotzRational neg_inverse(const DiscreteMeasure& g_measure,
                             const Tolerances& tol) {
  if (g_measure.empty()) {
    fail(ErrorKind::DegenerateMeasure, "neg_inverse of an empty measure");
  }
  DiscreteMeasure m = merge_close(g_measure, tol);
  if (std::abs(m.total_mass() - 1.0) > 1e-8) {
    fail(ErrorKind::InvalidData, "neg_inverse requires a normalized measure");
  }

  // A mass below tol_weight pins its Borel zero within roundoff of the
  // support point, where no double can separate pole from zero. Such
  // pole-zero pairs cancel to working precision, so the mass is removed
  // (and the remainder renormalized) before bracketing.
  {
    std::vector<double> pts, wts;
    double kept = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m.weights[i] >= tol.tol_weight) {
        pts.push_back(m.points[i]);
        wts.push_back(m.weights[i]);
        kept += m.weights[i];
      }
    }
    if (pts.empty()) {
      fail(ErrorKind::DegenerateMeasure, "no resolvable mass left");
    }
    for (double& w : wts) w /= kept;
    m = DiscreteMeasure{std::move(pts), std::move(wts)};
  }

  HerglotzRational f;
  f.shift = -moments(m, 1);

  // One zero of the Borel transform sits strictly inside every gap between
  // consecutive support points; the transform is increasing there.
  for (std::size_t k = 0; k + 1 < m.size(); ++k) {
    const double a = m.points[k];
    const double b = m.points[k + 1];
    const double gap = b - a;

    double eps_lo = gap * 1e-3;
    double lo = a + eps_lo;
    int tries = 0;
    while (borel_real(m, lo) >= 0.0 && tries++ < tol.bisection_max_iter) {
      eps_lo /= 2.0;
      lo = a + eps_lo;
    }
    double eps_hi = gap * 1e-3;
    double hi = b - eps_hi;
    tries = 0;
    while (borel_real(m, hi) <= 0.0 && tries++ < tol.bisection_max_iter) {
      eps_hi /= 2.0;
      hi = b - eps_hi;
    }
    if (!(borel_real(m, lo) < 0.0 && borel_real(m, hi) > 0.0)) {
      fail(ErrorKind::ConvergenceFailure, "failed to bracket a Borel zero");
    }

    int it = 0;
    while (hi - lo > 1e-13 && it++ < tol.bisection_max_iter) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (borel_real(m, mid) < 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    const double alpha = 0.5 * (lo + hi);
    f.poles.push_back(alpha);
    f.residues.push_back(1.0 / borel_derivative(m, alpha));
  }
  return f;
}

JacobiMatrix green_to_jacobi(const DiscreteMeasure& g_measure, std::size_t l,
                             std::span<const std::size_t> interior,
                             std::span<const ResidueSplit> splits,
                             const Tolerances& tol) {
  if (l < 1) fail(ErrorKind::BadSelection, "l must be at least 1");
  if (g_measure.empty()) {
    fail(ErrorKind::DegenerateMeasure, "green_to_jacobi of an empty measure");
  }
  if (l == 1) {
    if (!interior.empty() || !splits.empty()) {
      fail(ErrorKind::BadSelection, "l = 1 admits no interior poles");
    }
    return favard(g_measure, std::nullopt, tol);
  }

  const HerglotzRational f = neg_inverse(g_measure, tol);
  const std::size_t npoles = f.poles.size();
  if (interior.size() + splits.size() != l - 1) {
    fail(ErrorKind::BadSelection,
         "interior selection must contain l-1 poles, got " +
             std::to_string(interior.size() + splits.size()));
  }

  std::set<std::size_t> used;
  for (std::size_t idx : interior) {
    if (idx >= npoles) fail(ErrorKind::BadSelection, "pole index out of range");
    if (!used.insert(idx).second) {
      fail(ErrorKind::BadSelection, "duplicate pole index");
    }
  }
  std::set<std::size_t> split_idx;
  for (const ResidueSplit& s : splits) {
    if (s.pole_index >= npoles) {
      fail(ErrorKind::BadSelection, "split pole index out of range");
    }
    if (used.count(s.pole_index) || !split_idx.insert(s.pole_index).second) {
      fail(ErrorKind::BadSelection, "split pole also selected whole");
    }
    if (!(s.interior_fraction > 0.0 && s.interior_fraction < 1.0)) {
      fail(ErrorKind::BadSelection, "split fraction must lie in (0,1)");
    }
  }

  // Partition the residues.
  std::vector<double> in_pts, in_wts, ex_pts, ex_wts;
  for (std::size_t k = 0; k < npoles; ++k) {
    const bool whole_interior = used.count(k) != 0;
    double in_part = whole_interior ? f.residues[k] : 0.0;
    double ex_part = whole_interior ? 0.0 : f.residues[k];
    if (split_idx.count(k) != 0) {
      double frac = 0.5;
      for (const ResidueSplit& s : splits) {
        if (s.pole_index == k) frac = s.interior_fraction;
      }
      in_part = frac * f.residues[k];
      ex_part = (1.0 - frac) * f.residues[k];
    }
    if (in_part > 0.0) {
      in_pts.push_back(f.poles[k]);
      in_wts.push_back(in_part);
    }
    if (ex_part > 0.0) {
      ex_pts.push_back(f.poles[k]);
      ex_wts.push_back(ex_part);
    }
  }

  double b_minus_sq = 0.0;
  for (double w : in_wts) b_minus_sq += w;
  double b_plus_sq = 0.0;
  for (double w : ex_wts) b_plus_sq += w;

  for (double& w : in_wts) w /= b_minus_sq;
  DiscreteMeasure mu = make_measure(std::move(in_pts), std::move(in_wts));

  // Leading block: Jacobi matrix of mu seen from its last coordinate, hence
  // favard followed by index reversal.
  const JacobiMatrix leading = reversed(favard(mu, std::nullopt, tol));

  std::vector<double> q(leading.q);
  std::vector<double> b(leading.b);
  b.push_back(std::sqrt(b_minus_sq));
  q.push_back(-f.shift);

  if (!ex_pts.empty()) {
    for (double& w : ex_wts) w /= b_plus_sq;
    DiscreteMeasure sigma = make_measure(std::move(ex_pts), std::move(ex_wts));
    const JacobiMatrix trailing = favard(sigma, std::nullopt, tol);
    b.push_back(std::sqrt(b_plus_sq));
    q.insert(q.end(), trailing.q.begin(), trailing.q.end());
    b.insert(b.end(), trailing.b.begin(), trailing.b.end());
  }
  return build_jacobi(std::move(q), std::move(b));
}

}  // namespace jacspec
