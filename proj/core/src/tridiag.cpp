#include "jacspec/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "jacspec/errors.hpp"
#include "jacspec/linalg.hpp"

namespace jacspec {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_index(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::IndexOutOfRange, what);
}

// Implicit-shift QL with optional accumulation of the rotations. d holds the
// diagonal, e the off-diagonal (e[n-1] is workspace). On return d contains
// the eigenvalues, unordered. Classic EISPACK tql2 scheme.
void ql_implicit(std::vector<double>& d, std::vector<double>& e,
                 std::vector<std::vector<double>>* z, int max_iter) {
  const std::size_t n = d.size();
  if (n <= 1) return;
  e[n - 1] = 0.0;

  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= kEps * dd || std::abs(e[m]) < 1e-300) break;
      }
      if (m != l) {
        if (iter++ == max_iter) {
          fail(ErrorKind::ConvergenceFailure,
               "QL iteration cap exceeded at eigenvalue " + std::to_string(l));
        }
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (std::size_t i = m; i-- > l;) {
          double f = s * e[i];
          const double bb = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * bb;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - bb;
          if (z != nullptr) {
            for (std::size_t k = 0; k < n; ++k) {
              f = (*z)[k][i + 1];
              (*z)[k][i + 1] = s * (*z)[k][i] + c * f;
              (*z)[k][i] = c * (*z)[k][i] - s * f;
            }
          }
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

void fix_sign(std::vector<double>& v) {
  for (double x : v) {
    if (std::abs(x) > 1e-12) {
      if (x < 0) {
        for (double& y : v) y = -y;
      }
      return;
    }
  }
}

}  // namespace

int Polynomial::degree() const {
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] != 0.0) return static_cast<int>(i);
  }
  return -1;  // zero polynomial
}

bool Polynomial::is_zero() const { return degree() < 0; }

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

std::complex<double> Polynomial::operator()(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
  return acc;
}

Polynomial poly_from_roots(std::span<const double> roots) {
  std::vector<double> c{1.0};
  for (double r : roots) {
    c.push_back(0.0);
    for (std::size_t i = c.size(); i-- > 1;) {
      c[i] = c[i - 1] - r * c[i];
    }
    c[0] = -r * c[0];
  }
  return Polynomial{std::move(c)};
}

JacobiMatrix build_jacobi(std::vector<double> q, std::vector<double> b) {
  if (q.empty()) fail(ErrorKind::LengthMismatch, "diagonal must be nonempty");
  if (b.size() + 1 != q.size()) {
    fail(ErrorKind::LengthMismatch,
         "off-diagonal length must be diagonal length - 1, got " +
             std::to_string(b.size()) + " vs " + std::to_string(q.size()));
  }
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (!(b[k] > 0.0)) {
      fail(ErrorKind::NonPositiveOffDiagonal,
           "b[" + std::to_string(k + 1) + "] = " + std::to_string(b[k]));
    }
  }
  return JacobiMatrix{std::move(q), std::move(b)};
}

std::vector<double> JacobiMatrix::apply(std::span<const double> f) const {
  const std::size_t n = size();
  if (f.size() != n) {
    fail(ErrorKind::LengthMismatch, "vector length does not match matrix size");
  }
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    double s = q[k] * f[k];
    if (k > 0) s += b[k - 1] * f[k - 1];
    if (k + 1 < n) s += b[k] * f[k + 1];
    out[k] = s;
  }
  return out;
}

double gershgorin_radius(const JacobiMatrix& J) {
  const std::size_t n = J.size();
  double r = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double row = std::abs(J.q[k]);
    if (k > 0) row += J.b[k - 1];
    if (k + 1 < n) row += J.b[k];
    r = std::max(r, row);
  }
  return r;
}

EigenSystem eigensystem(const JacobiMatrix& J, const Tolerances& tol) {
  const std::size_t n = J.size();
  std::vector<double> d = J.q;
  std::vector<double> e(n, 0.0);
  std::copy(J.b.begin(), J.b.end(), e.begin());

  std::vector<std::vector<double>> z(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) z[i][i] = 1.0;

  ql_implicit(d, e, &z, tol.eig_max_iter);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t bb) { return d[a] < d[bb]; });

  EigenSystem sys;
  sys.values.resize(n);
  sys.vectors.assign(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    sys.values[i] = d[order[i]];
    for (std::size_t k = 0; k < n; ++k) sys.vectors[i][k] = z[k][order[i]];
    fix_sign(sys.vectors[i]);
  }
  return sys;
}

std::vector<double> eigenvalues(const JacobiMatrix& J, const Tolerances& tol) {
  std::vector<double> d = J.q;
  std::vector<double> e(J.size(), 0.0);
  std::copy(J.b.begin(), J.b.end(), e.begin());
  ql_implicit(d, e, nullptr, tol.eig_max_iter);
  std::sort(d.begin(), d.end());
  return d;
}

int sturm_count_below(const JacobiMatrix& J, double x) {
  const std::size_t n = J.size();
  int count = 0;
  double piv = J.q[0] - x;
  if (piv == 0.0) piv = -kEps * (std::abs(J.q[0]) + 1.0);
  if (piv < 0.0) ++count;
  for (std::size_t k = 1; k < n; ++k) {
    piv = (J.q[k] - x) - J.b[k - 1] * J.b[k - 1] / piv;
    if (piv == 0.0) piv = -kEps * (std::abs(J.q[k]) + J.b[k - 1]);
    if (piv < 0.0) ++count;
  }
  return count;
}

std::vector<double> sturm_eigenvalues(const JacobiMatrix& J, double abs_tol) {
  const std::size_t n = J.size();
  const double radius = gershgorin_radius(J) + 1.0;
  std::vector<double> vals(n);
  for (std::size_t i = 0; i < n; ++i) {
    double lo = -radius, hi = radius;
    // Invariant: count_below(lo) <= i < count_below(hi).
    while (hi - lo > abs_tol) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;  // double resolution exhausted
      if (sturm_count_below(J, mid) <= static_cast<int>(i)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    vals[i] = 0.5 * (lo + hi);
  }
  return vals;
}

std::vector<std::complex<double>> first_kind_polys(const JacobiMatrix& J,
                                                   std::complex<double> z,
                                                   std::size_t n) {
  check_index(n >= 1 && n <= J.size(), "first_kind_polys order");
  std::vector<std::complex<double>> pi(n);
  pi[0] = 1.0;
  if (n >= 2) pi[1] = (z - J.q[0]) / J.b[0];
  for (std::size_t k = 2; k < n; ++k) {
    pi[k] = ((z - J.q[k - 1]) * pi[k - 1] - J.b[k - 2] * pi[k - 2]) / J.b[k - 1];
  }
  return pi;
}

std::vector<double> first_kind_values(const JacobiMatrix& J, double t,
                                      std::size_t n) {
  check_index(n >= 1 && n <= J.size(), "first_kind_values order");
  std::vector<double> pi(n);
  pi[0] = 1.0;
  if (n >= 2) pi[1] = (t - J.q[0]) / J.b[0];
  for (std::size_t k = 2; k < n; ++k) {
    pi[k] = ((t - J.q[k - 1]) * pi[k - 1] - J.b[k - 2] * pi[k - 2]) / J.b[k - 1];
  }
  return pi;
}

std::vector<Polynomial> first_kind_coeffs(const JacobiMatrix& J,
                                          std::size_t n) {
  check_index(n >= 1 && n <= J.size(), "first_kind_coeffs order");
  std::vector<Polynomial> pi(n);
  pi[0].coeffs = {1.0};
  if (n >= 2) pi[1].coeffs = {-J.q[0] / J.b[0], 1.0 / J.b[0]};
  for (std::size_t k = 2; k < n; ++k) {
    // (x - q_k) pi_k: shift up one degree and subtract q_k pi_k.
    std::vector<double> c(k + 1, 0.0);
    const auto& prev = pi[k - 1].coeffs;
    for (std::size_t i = 0; i < prev.size(); ++i) {
      c[i + 1] += prev[i];
      c[i] -= J.q[k - 1] * prev[i];
    }
    const auto& prev2 = pi[k - 2].coeffs;
    for (std::size_t i = 0; i < prev2.size(); ++i) {
      c[i] -= J.b[k - 2] * prev2[i];
    }
    for (double& x : c) x /= J.b[k - 1];
    pi[k].coeffs = std::move(c);
  }
  return pi;
}

JacobiMatrix truncate_minus(const JacobiMatrix& J, std::size_t n) {
  check_index(n >= 2 && n <= J.size(), "truncate_minus takes 2 <= n <= N");
  std::vector<double> q(J.q.begin(), J.q.begin() + (n - 1));
  std::vector<double> b(J.b.begin(), J.b.begin() + (n - 2));
  return JacobiMatrix{std::move(q), std::move(b)};
}

JacobiMatrix truncate_plus(const JacobiMatrix& J, std::size_t n) {
  check_index(n >= 1 && n < J.size(), "truncate_plus takes 1 <= n < N");
  std::vector<double> q(J.q.begin() + n, J.q.end());
  std::vector<double> b(J.b.begin() + n, J.b.end());
  return JacobiMatrix{std::move(q), std::move(b)};
}

std::vector<double> poly_zeros(const JacobiMatrix& J, std::size_t n,
                               const Tolerances& tol) {
  check_index(n >= 2 && n <= J.size(), "poly_zeros takes 2 <= n <= N");
  return eigenvalues(truncate_minus(J, n), tol);
}

std::vector<double> apply_poly_e1(const JacobiMatrix& J, const Polynomial& r) {
  const std::size_t n = J.size();
  std::vector<double> u(n, 0.0);
  if (r.coeffs.empty()) return u;
  u[0] = r.coeffs.back();
  for (std::size_t i = r.coeffs.size() - 1; i-- > 0;) {
    u = J.apply(u);
    u[0] += r.coeffs[i];
  }
  return u;
}

CyclicResult cyclic_test(const JacobiMatrix& J, const Polynomial& r,
                         const Tolerances& tol) {
  if (r.is_zero()) {
    fail(ErrorKind::InvalidData, "cyclic_test requires a nonzero polynomial");
  }
  const std::size_t n = J.size();
  const std::vector<double> u = apply_poly_e1(J, r);

  // Dimension of span{u, Ju, ..., J^{N-1}u} through an orthonormalized
  // Krylov sweep. The raw monomial columns are far too ill-conditioned for a
  // reliable rank at these sizes; progressive orthogonalization keeps the
  // saturation signal (residual ~ eps) cleanly separated from tol_rank.
  const auto norm2 = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
  };

  const double scale = std::max(1.0, gershgorin_radius(J));
  const double unorm = norm2(u);
  if (unorm <= tol.tol_rank * scale) return CyclicResult{false, 0};

  std::vector<std::vector<double>> basis;
  {
    std::vector<double> v = u;
    for (double& x : v) x /= unorm;
    basis.push_back(std::move(v));
  }
  while (basis.size() < n) {
    std::vector<double> w = J.apply(basis.back());
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& v : basis) {
        double c = 0.0;
        for (std::size_t i = 0; i < n; ++i) c += v[i] * w[i];
        for (std::size_t i = 0; i < n; ++i) w[i] -= c * v[i];
      }
    }
    const double beta = norm2(w);
    if (beta <= tol.tol_rank * scale) break;  // Krylov space saturated
    for (double& x : w) x /= beta;
    basis.push_back(std::move(w));
  }
  const std::size_t rank = basis.size();
  return CyclicResult{rank == n, rank};
}

std::vector<std::complex<double>> shifted_solve(
    const JacobiMatrix& J, std::complex<double> z,
    std::span<const std::complex<double>> rhs) {
  using cplx = std::complex<double>;
  const std::size_t n = J.size();
  if (rhs.size() != n) {
    fail(ErrorKind::LengthMismatch, "rhs length does not match matrix size");
  }

  std::vector<cplx> d(n), du(n, 0.0), du2(n, 0.0), x(rhs.begin(), rhs.end());
  std::vector<cplx> dl(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) d[k] = J.q[k] - z;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    dl[k] = J.b[k];
    du[k] = J.b[k];
  }

  // LU with partial pivoting on the three bands; fill-in goes to du2.
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (std::abs(d[k]) >= std::abs(dl[k])) {
      if (d[k] == 0.0) {
        fail(ErrorKind::PoleEvaluation, "singular shifted system");
      }
      const cplx m = dl[k] / d[k];
      d[k + 1] -= m * du[k];
      x[k + 1] -= m * x[k];
      // du2[k] stays zero: no fill without a swap.
    } else {
      const cplx m = d[k] / dl[k];
      d[k] = dl[k];
      const cplx tmp = d[k + 1];
      d[k + 1] = du[k] - m * tmp;
      if (k + 2 < n) {
        du2[k] = du[k + 1];
        du[k + 1] = -m * du2[k];
      }
      du[k] = tmp;
      std::swap(x[k], x[k + 1]);
      x[k + 1] -= m * x[k];
    }
  }
  if (d[n - 1] == 0.0) {
    fail(ErrorKind::PoleEvaluation, "singular shifted system");
  }

  x[n - 1] /= d[n - 1];
  if (n >= 2) x[n - 2] = (x[n - 2] - du[n - 2] * x[n - 1]) / d[n - 2];
  for (std::size_t k = n - 1; k-- > 1;) {
    const std::size_t i = k - 1;
    x[i] = (x[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / d[i];
  }
  return x;
}

}  // namespace jacspec
