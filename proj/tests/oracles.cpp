#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace oracle {

namespace {

double pi_n_at(const jacspec::JacobiMatrix& J, std::size_t n, double t) {
  // Three-term recurrence, scalar form; duplicated here on purpose so the
  // oracle does not lean on the library routine it checks.
  double prev = 0.0, cur = 1.0;
  for (std::size_t k = 1; k < n; ++k) {
    const double bk = J.b[k - 1];
    const double bkm1 = k >= 2 ? J.b[k - 2] : 0.0;
    const double next = ((t - J.q[k - 1]) * cur - bkm1 * prev) / bk;
    prev = cur;
    cur = next;
  }
  return cur;
}

template <typename F>
std::vector<double> scan_roots(F&& f, double lo, double hi,
                               std::size_t expected) {
  std::size_t grid = std::max<std::size_t>(2048, expected * 512);
  for (int attempt = 0; attempt < 6; ++attempt) {
    std::vector<double> roots;
    double x0 = lo;
    double f0 = f(x0);
    for (std::size_t i = 1; i <= grid; ++i) {
      const double x1 = lo + (hi - lo) * static_cast<double>(i) /
                                 static_cast<double>(grid);
      const double f1 = f(x1);
      if (f0 == 0.0) {
        roots.push_back(x0);
      } else if (f0 * f1 < 0.0) {
        double a = x0, b = x1, fa = f0;
        for (int it = 0; it < 200 && b - a > 1e-14; ++it) {
          const double m = 0.5 * (a + b);
          const double fm = f(m);
          if (fm == 0.0) {
            a = b = m;
            break;
          }
          if (fa * fm < 0.0) {
            b = m;
          } else {
            a = m;
            fa = fm;
          }
        }
        roots.push_back(0.5 * (a + b));
      }
      x0 = x1;
      f0 = f1;
    }
    if (roots.size() == expected) return roots;
    grid *= 4;
  }
  throw std::runtime_error("oracle root scan did not isolate all zeros");
}

}  // namespace

std::vector<double> poly_zeros_by_bisection(const jacspec::JacobiMatrix& J,
                                            std::size_t n) {
  const double r = jacspec::gershgorin_radius(J) + 1.0;
  return scan_roots([&](double t) { return pi_n_at(J, n, t); }, -r, r, n - 1);
}

std::vector<double> roots_by_bisection(const jacspec::Polynomial& p, double lo,
                                       double hi, std::size_t expected) {
  return scan_roots([&](double t) { return p(t); }, lo, hi, expected);
}

double hausdorff(std::span<const double> a, std::span<const double> b) {
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (double x : a) {
    double best = std::numeric_limits<double>::infinity();
    for (double y : b) best = std::min(best, std::abs(x - y));
    worst = std::max(worst, best);
  }
  for (double y : b) {
    double best = std::numeric_limits<double>::infinity();
    for (double x : a) best = std::min(best, std::abs(x - y));
    worst = std::max(worst, best);
  }
  return worst;
}

std::vector<double> dense_apply(const jacspec::JacobiMatrix& J,
                                std::span<const double> f) {
  const std::size_t n = J.size();
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = J.q[i];
  for (std::size_t i = 0; i + 1 < n; ++i) m[i][i + 1] = m[i + 1][i] = J.b[i];
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i] += m[i][j] * f[j];
  }
  return out;
}

std::complex<double> resolvent_entry_dense(const jacspec::JacobiMatrix& J,
                                           std::size_t k,
                                           std::complex<double> z) {
  using cplx = std::complex<double>;
  const std::size_t n = J.size();
  std::vector<std::vector<cplx>> m(n, std::vector<cplx>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = J.q[i] - z;
  for (std::size_t i = 0; i + 1 < n; ++i) m[i][i + 1] = m[i + 1][i] = J.b[i];
  std::vector<cplx> rhs(n, 0.0);
  rhs[k] = 1.0;

  // Gaussian elimination with partial pivoting on the dense system.
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t row = col + 1; row < n; ++row) {
      if (std::abs(m[row][col]) > std::abs(m[piv][col])) piv = row;
    }
    std::swap(m[col], m[piv]);
    std::swap(rhs[col], rhs[piv]);
    for (std::size_t row = col + 1; row < n; ++row) {
      const cplx factor = m[row][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[row][j] -= factor * m[col][j];
      rhs[row] -= factor * rhs[col];
    }
  }
  std::vector<cplx> x(n, 0.0);
  for (std::size_t row = n; row-- > 0;) {
    cplx acc = rhs[row];
    for (std::size_t j = row + 1; j < n; ++j) acc -= m[row][j] * x[j];
    x[row] = acc / m[row][row];
  }
  return x[k];
}

}  // namespace oracle
