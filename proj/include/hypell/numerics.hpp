#pragma once

// Dependency-free kernels: arithmetic-geometric mean, adaptive Gauss-Kronrod
// quadrature and a safeguarded Newton/bisection root finder.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>

#include "hypell/errors.hpp"

namespace hypell {

/// Stopping criteria shared by the iterative kernels.
struct Tolerance {
    double abs = 1e-12;
    double rel = 1e-12;
    int max_iterations = 64;

    /// Throws domain_error unless at least one of abs/rel is positive and
    /// max_iterations >= 1.
    void validate() const {
        if (!(abs >= 0.0) || !(rel >= 0.0))
            throw domain_error("tolerance: abs and rel must be non-negative");
        if (abs == 0.0 && rel == 0.0)
            throw domain_error("tolerance: abs or rel must be positive");
        if (max_iterations < 1)
            throw domain_error("tolerance: max_iterations must be >= 1");
    }
};

/// Maximum bisection depth used by integrate_adaptive.
inline constexpr int default_quadrature_depth = 40;

/// Arithmetic-geometric mean of two positive reals.
///
/// Iterates a <- (a+b)/2, b <- sqrt(ab) until |a - b| <= tol.abs * (1 + |a|).
inline double agm(double a, double b, const Tolerance& tol = {}) {
    tol.validate();
    if (!(a > 0.0) || !(b > 0.0))
        throw domain_error("agm: arguments must be positive");
    const double threshold = tol.abs > 0.0 ? tol.abs : tol.rel;
    for (int i = 0; i < tol.max_iterations; ++i) {
        if (std::abs(a - b) <= threshold * (1.0 + std::abs(a)))
            return 0.5 * (a + b);
        const double next_a = 0.5 * (a + b);
        const double next_b = std::sqrt(a * b);
        // Quadratic convergence stalls one ulp apart; that is the limit.
        if (next_a == a && next_b == b)
            return 0.5 * (a + b);
        a = next_a;
        b = next_b;
    }
    throw iteration_error("agm: no convergence within max_iterations");
}

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
inline constexpr std::array<double, 8> kronrod_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kronrod_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes (and the centre).
inline constexpr std::array<double, 4> gauss_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct KronrodEstimate {
    double value;
    double error;
    double abs_value; // integral of |f|, for the round-off floor
};

template <class F>
KronrodEstimate kronrod15(F& f, double a, double b) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(centre);
    double kronrod = fc * kronrod_weights[7];
    double gauss = fc * gauss_weights[3];
    double abs_sum = std::abs(kronrod);
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kronrod_nodes[j];
        const double f1 = f(centre - dx);
        const double f2 = f(centre + dx);
        kronrod += kronrod_weights[j] * (f1 + f2);
        abs_sum += kronrod_weights[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1)
            gauss += gauss_weights[j / 2] * (f1 + f2);
    }
    return {kronrod * half, std::abs((kronrod - gauss) * half), abs_sum * std::abs(half)};
}

template <class F>
double integrate_recursive(F& f, double a, double b, const KronrodEstimate& whole,
                           double target, int depth) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (!std::isfinite(whole.value))
        throw accuracy_error("integrate_adaptive: non-finite integrand");
    if (whole.error <= target || whole.error <= 50.0 * eps * whole.abs_value)
        return whole.value;
    if (depth >= default_quadrature_depth)
        throw accuracy_error("integrate_adaptive: tolerance not reached at maximum depth");
    const double mid = 0.5 * (a + b);
    const auto left = kronrod15(f, a, mid);
    const auto right = kronrod15(f, mid, b);
    return integrate_recursive(f, a, mid, left, 0.5 * target, depth + 1) +
           integrate_recursive(f, mid, b, right, 0.5 * target, depth + 1);
}

} // namespace detail

/// Integral of f over [a, b] by adaptive bisection with a 7/15-point
/// Gauss-Kronrod pair. The tolerance budget max(abs, rel*|I|) is split
/// evenly between halves, so the summed error estimate stays below it.
///
/// Reversed limits give the negated integral.
template <class F>
double integrate_adaptive(F&& f, double a, double b, const Tolerance& tol = {}) {
    tol.validate();
    if (!std::isfinite(a) || !std::isfinite(b))
        throw domain_error("integrate_adaptive: limits must be finite");
    if (a == b)
        return 0.0;
    if (a > b)
        return -integrate_adaptive(std::forward<F>(f), b, a, tol);
    auto& fn = f;
    const auto whole = detail::kronrod15(fn, a, b);
    const double target = std::max(tol.abs, tol.rel * std::abs(whole.value));
    return detail::integrate_recursive(fn, a, b, whole, target, 0);
}

/// Closed interval [lo, hi] known to contain a sign change.
struct Bracket {
    double lo;
    double hi;
};

namespace detail {

template <class F, class Fp>
double solve_monotone_impl(F& f, Fp* fprime, Bracket bracket, const Tolerance& tol,
                           std::optional<double> seed) {
    tol.validate();
    double lo = std::min(bracket.lo, bracket.hi);
    double hi = std::max(bracket.lo, bracket.hi);
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0)
        return lo;
    if (fhi == 0.0)
        return hi;
    if (std::signbit(flo) == std::signbit(fhi))
        throw bracket_error("solve_monotone: f has the same sign at both bracket endpoints");

    const double ftol = std::max(tol.abs, tol.rel * std::max(std::abs(flo), std::abs(fhi)));
    constexpr double eps = std::numeric_limits<double>::epsilon();

    double x = seed && *seed > lo && *seed < hi ? *seed : 0.5 * (lo + hi);
    double fx = f(x);
    for (int i = 0; i < tol.max_iterations; ++i) {
        if (fx == 0.0 || std::abs(fx) <= ftol)
            return x;
        if (std::signbit(fx) == std::signbit(flo)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
        }
        if (hi - lo <= 4.0 * eps * std::max(1.0, std::abs(x)))
            return x;

        double next = 0.5 * (lo + hi);
        if (fprime != nullptr) {
            const double slope = (*fprime)(x);
            if (slope != 0.0 && std::isfinite(slope)) {
                const double newton = x - fx / slope;
                if (newton > lo && newton < hi) {
                    next = newton;
                    if (std::abs(next - x) <= 2.0 * eps * std::max(1.0, std::abs(x)))
                        return next;
                }
            }
        }
        x = next;
        fx = f(x);
    }
    if (std::abs(fx) <= ftol)
        return x;
    throw iteration_error("solve_monotone: no convergence within max_iterations");
}

} // namespace detail

/// Root of f in the bracket by Newton steps, falling back to bisection
/// whenever a step would leave the current bracket.
template <class F, class Fp>
double solve_monotone(F&& f, Fp&& fprime, Bracket bracket, const Tolerance& tol = {},
                      std::optional<double> seed = std::nullopt) {
    auto& fn = f;
    auto& fp = fprime;
    return detail::solve_monotone_impl(fn, &fp, bracket, tol, seed);
}

/// Derivative-free variant (pure bisection).
template <class F>
double solve_monotone(F&& f, Bracket bracket, const Tolerance& tol = {}) {
    auto& fn = f;
    using Fn = std::remove_reference_t<decltype(fn)>;
    return detail::solve_monotone_impl<Fn, Fn>(fn, nullptr, bracket, tol, std::nullopt);
}

} // namespace hypell
