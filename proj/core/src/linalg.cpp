#include "jacspec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace jacspec {

namespace {

// Column dot product of the row-major matrix stored in a.
double col_dot(const std::vector<double>& a, std::size_t rows,
               std::size_t cols, std::size_t p, std::size_t q) {
  double s = 0.0;
  for (std::size_t i = 0; i < rows; ++i) s += a[i * cols + p] * a[i * cols + q];
  return s;
}

}  // namespace

std::vector<double> singular_values(std::size_t rows, std::size_t cols,
                                    std::vector<double> a) {
  if (rows == 0 || cols == 0) return {};

  // One-sided Jacobi: rotate column pairs until pairwise orthogonal.
  const double eps = std::numeric_limits<double>::epsilon();
  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < cols; ++p) {
      for (std::size_t q = p + 1; q < cols; ++q) {
        const double app = col_dot(a, rows, cols, p, p);
        const double aqq = col_dot(a, rows, cols, q, q);
        const double apq = col_dot(a, rows, cols, p, q);
        if (std::abs(apq) <= 10.0 * eps * std::sqrt(app * aqq) ||
            apq == 0.0) {
          continue;
        }
        rotated = true;
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = (tau >= 0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < rows; ++i) {
          const double aip = a[i * cols + p];
          const double aiq = a[i * cols + q];
          a[i * cols + p] = c * aip - s * aiq;
          a[i * cols + q] = s * aip + c * aiq;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sv(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    sv[j] = std::sqrt(std::max(0.0, col_dot(a, rows, cols, j, j)));
  }
  std::sort(sv.begin(), sv.end(), std::greater<double>());
  return sv;
}

std::size_t numerical_rank(std::size_t rows, std::size_t cols,
                           std::vector<double> a, double rel_tol) {
  const std::vector<double> sv = singular_values(rows, cols, std::move(a));
  if (sv.empty() || sv.front() == 0.0) return 0;
  const double cutoff = rel_tol * sv.front();
  std::size_t rank = 0;
  for (double s : sv) {
    if (s > cutoff) ++rank;
  }
  return rank;
}

}  // namespace jacspec
