#pragma once

// Internal: Thomas algorithm for tridiagonal systems. Used by the energy
// correction and the KKT oracle; both systems are diagonally dominant or
// symmetric positive definite.

#include <cmath>
#include <cstddef>
#include <vector>

#include "rampopt/errors.hpp"

namespace rampopt::detail {

// Solves diag/lower/upper * x = rhs in place; lower[i] couples row i to i-1,
// upper[i] couples row i to i+1 (lower[0] and upper[n-1] unused).
inline std::vector<double> solve_tridiagonal(std::vector<double> diag,
                                             const std::vector<double>& lower,
                                             const std::vector<double>& upper,
                                             std::vector<double> rhs) {
    const std::size_t n = diag.size();
    double scale = 0.0;
    for (double d : diag) scale = std::max(scale, std::fabs(d));
    for (std::size_t i = 1; i < n; ++i) {
        if (std::fabs(diag[i - 1]) <= 1e-300 + 1e-15 * scale)
            throw SingularKKT("tridiagonal solve: vanishing pivot");
        const double m = lower[i] / diag[i - 1];
        diag[i] -= m * upper[i - 1];
        rhs[i] -= m * rhs[i - 1];
    }
    if (std::fabs(diag[n - 1]) <= 1e-300 + 1e-15 * scale)
        throw SingularKKT("tridiagonal solve: vanishing pivot");
    rhs[n - 1] /= diag[n - 1];
    for (std::size_t i = n - 1; i-- > 0;)
        rhs[i] = (rhs[i] - upper[i] * rhs[i + 1]) / diag[i];
    return rhs;
}

}  // namespace rampopt::detail
