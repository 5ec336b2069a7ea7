#pragma once

// Gauss hypergeometric function 2F1(a, b; c; z) for real |z| < 1, plus the two
// elementary closed forms used by the amplitude constructions.

#include <cmath>

#include "hypell/errors.hpp"
#include "hypell/numerics.hpp"

namespace hypell {

/// Maximum number of series terms summed by gauss_series.
inline constexpr int gauss_series_term_cap = 10000;

/// 2F1(a, b; c; z) by direct summation of the power series.
///
/// Summation stops once the geometric tail bound |term| / (1 - |z|) falls
/// below tol.rel * |sum| (tol.abs when rel is zero).
inline double gauss_series(double a, double b, double c, double z, const Tolerance& tol = {}) {
    tol.validate();
    if (!(std::abs(z) < 1.0))
        throw domain_error("gauss_series: requires |z| < 1");
    if (c <= 0.0 && c == std::floor(c))
        throw domain_error("gauss_series: c must not be a non-positive integer");

    const double threshold = tol.rel > 0.0 ? tol.rel : tol.abs;
    const double tail_factor = 1.0 / (1.0 - std::abs(z));
    double term = 1.0;
    double sum = 1.0;
    for (int n = 0; n < gauss_series_term_cap; ++n) {
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
        sum += term;
        if (std::abs(term) * tail_factor <= threshold * std::abs(sum))
            return sum;
    }
    throw convergence_error("gauss_series: term cap exceeded");
}

/// 2F1(1/4, 3/4; 1/2; z) in closed form for real z < 1.
///
/// With z = sin^2(psi) this is cos(psi/2) / cos(psi); written in z alone it is
/// sqrt((1 + sqrt(1-z)) / 2) / sqrt(1-z), which is also the continuation to z < 0.
inline double f_quarter(double z) {
    if (!(z < 1.0))
        throw domain_error("f_quarter: requires z < 1");
    const double root = std::sqrt(1.0 - z);
    return std::sqrt(0.5 * (1.0 + root)) / root;
}

/// 2F1(1/2, 1/2; 1/2; z) = (1 - z)^(-1/2), the classical Jacobi integrand.
inline double f_classical(double z) {
    if (!(z < 1.0))
        throw domain_error("f_classical: requires z < 1");
    return 1.0 / std::sqrt(1.0 - z);
}

} // namespace hypell
