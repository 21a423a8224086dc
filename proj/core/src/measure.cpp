#include "jacspec/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "jacspec/errors.hpp"

namespace jacspec {

namespace {

double support_scale(const DiscreteMeasure& m) {
  double s = 1.0;
  for (double p : m.points) s = std::max(s, std::abs(p));
  return s;
}

}  // namespace

double DiscreteMeasure::total_mass() const {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

DiscreteMeasure make_measure(std::vector<double> points,
                             std::vector<double> weights) {
  if (points.size() != weights.size()) {
    fail(ErrorKind::LengthMismatch, "points/weights length mismatch");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(weights[i] > 0.0)) {
      fail(ErrorKind::InvalidData,
           "weight " + std::to_string(i) + " must be positive");
    }
    if (i > 0 && !(points[i] > points[i - 1])) {
      fail(ErrorKind::InvalidData, "points must be strictly increasing");
    }
  }
  return DiscreteMeasure{std::move(points), std::move(weights)};
}

DiscreteMeasure merge_close(const DiscreteMeasure& m, const Tolerances& tol) {
  if (m.empty()) return m;
  std::vector<std::size_t> order(m.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return m.points[a] < m.points[b];
  });

  const double gap = tol.tol_match * support_scale(m);
  DiscreteMeasure out;
  for (std::size_t idx : order) {
    const double p = m.points[idx];
    const double w = m.weights[idx];
    if (!out.empty() && p - out.points.back() <= gap) {
      // Weighted average keeps the merged point inside the cluster.
      const double wa = out.weights.back();
      out.points.back() = (out.points.back() * wa + p * w) / (wa + w);
      out.weights.back() += w;
    } else {
      out.points.push_back(p);
      out.weights.push_back(w);
    }
  }
  return out;
}

DiscreteMeasure spectral_measure(const JacobiMatrix& J, const Tolerances& tol) {
  const EigenSystem sys = eigensystem(J, tol);
  DiscreteMeasure m;
  m.points = sys.values;
  m.weights.resize(sys.values.size());
  for (std::size_t i = 0; i < sys.values.size(); ++i) {
    const double c = sys.vectors[i][0];
    m.weights[i] = c * c;
  }
  return m;
}

double moments(const DiscreteMeasure& m, unsigned k) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    double pk = 1.0;
    for (unsigned j = 0; j < k; ++j) pk *= m.points[i];
    s += pk * m.weights[i];
  }
  return s;
}

std::complex<double> borel_transform(const DiscreteMeasure& m,
                                     std::complex<double> z,
                                     const Tolerances& tol) {
  const double guard = tol.tol_match * support_scale(m);
  std::complex<double> s = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const std::complex<double> denom = m.points[i] - z;
    if (std::abs(denom) <= guard) {
      fail(ErrorKind::PoleEvaluation,
           "z within tolerance of support point " + std::to_string(m.points[i]));
    }
    s += m.weights[i] / denom;
  }
  return s;
}

JacobiMatrix favard(const DiscreteMeasure& m,
                    std::optional<std::size_t> max_size,
                    const Tolerances& tol) {
  if (m.empty()) fail(ErrorKind::DegenerateMeasure, "empty measure");
  const DiscreteMeasure mm = merge_close(m, tol);
  const double mass = mm.total_mass();
  if (std::abs(mass - 1.0) > 1e-8) {
    fail(ErrorKind::InvalidData,
         "favard requires a normalized measure, total mass " +
             std::to_string(mass));
  }

  const std::size_t mpts = mm.size();
  const std::size_t want = max_size ? std::min(*max_size, mpts) : mpts;
  if (max_size && *max_size > mpts) {
    fail(ErrorKind::DegenerateMeasure,
         "requested size exceeds the merged support size");
  }
  if (want == 0) fail(ErrorKind::DegenerateMeasure, "empty measure");

  const auto ip = [&](const std::vector<double>& f, const std::vector<double>& g) {
    double s = 0.0;
    for (std::size_t i = 0; i < mpts; ++i) s += mm.weights[i] * f[i] * g[i];
    return s;
  };

  std::vector<std::vector<double>> basis;
  std::vector<double> v(mpts, 1.0);
  {
    const double nrm = std::sqrt(ip(v, v));
    for (double& x : v) x /= nrm;
  }
  basis.push_back(v);

  const double breakdown = 1e-13 * support_scale(mm);
  std::vector<double> alpha, beta;
  for (std::size_t k = 0; k < want; ++k) {
    std::vector<double> w(mpts);
    for (std::size_t i = 0; i < mpts; ++i) w[i] = mm.points[i] * basis[k][i];
    alpha.push_back(ip(basis[k], w));
    if (k + 1 == want) break;

    for (std::size_t i = 0; i < mpts; ++i) {
      w[i] -= alpha[k] * basis[k][i];
      if (k > 0) w[i] -= beta[k - 1] * basis[k - 1][i];
    }
    // Full reorthogonalization, two passes.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& u : basis) {
        const double c = ip(u, w);
        for (std::size_t i = 0; i < mpts; ++i) w[i] -= c * u[i];
      }
    }
    const double nrm = std::sqrt(ip(w, w));
    if (!(nrm > breakdown)) {
      fail(ErrorKind::DegenerateMeasure,
           "Lanczos breakdown at step " + std::to_string(k + 1) +
               " (effectively coincident support points)");
    }
    beta.push_back(nrm);
    for (double& x : w) x /= nrm;
    basis.push_back(std::move(w));
  }
  return JacobiMatrix{std::move(alpha), std::move(beta)};
}

DiscreteMeasure push_forward_pi_sq(const JacobiMatrix& J, std::size_t n,
                                   const Tolerances& tol) {
  if (n < 1 || n > J.size()) {
    fail(ErrorKind::IndexOutOfRange, "push_forward_pi_sq takes 1 <= n <= N");
  }
  const DiscreteMeasure rho = spectral_measure(J, tol);
  DiscreteMeasure out;
  for (std::size_t i = 0; i < rho.size(); ++i) {
    const double pin = first_kind_values(J, rho.points[i], n)[n - 1];
    const double w = pin * pin * rho.weights[i];
    if (w >= tol.tol_weight) {
      out.points.push_back(rho.points[i]);
      out.weights.push_back(w);
    }
  }
  return out;
}

}  // namespace jacspec
