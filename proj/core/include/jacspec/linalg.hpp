#ifndef JACSPEC_LINALG_HPP
#define JACSPEC_LINALG_HPP

#include <cstddef>
#include <vector>

namespace jacspec {

/// Singular values of a dense rows x cols matrix (row-major), descending.
/// One-sided Jacobi orthogonalization; adequate for the desk-scale sizes
/// this toolkit works with.
std::vector<double> singular_values(std::size_t rows, std::size_t cols,
                                    std::vector<double> a);

/// Number of singular values above rel_tol * (largest singular value).
std::size_t numerical_rank(std::size_t rows, std::size_t cols,
                           std::vector<double> a, double rel_tol);

}  // namespace jacspec

#endif  // JACSPEC_LINALG_HPP
