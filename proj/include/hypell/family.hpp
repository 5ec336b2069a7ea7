#pragma once

// Elliptic extensions of the trio to the complex plane, defined through the
// Jacobi form
//
//   d(z)   = 1 - (1 - lambda) sn^2(v),
//   c(z)   = cn(v) dn(v),
//   s^2(z) = sn^2(v) (k^2 + dn^2(v)),        v = (1 + k^2)^(-1/2) z,
//
// together with the residual sweep over every identity tying them to wp,
// the conjugate zeros of d and the double pole of d at i omega'.

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <map>
#include <optional>
#include <string>

#include "hypell/amplitude.hpp"
#include "hypell/errors.hpp"
#include "hypell/jacobi.hpp"
#include "hypell/modulus.hpp"
#include "hypell/numerics.hpp"
#include "hypell/weierstrass.hpp"

namespace hypell {

/// Rectangle [lower, upper] sampled on a points_per_axis^2 lattice. Points
/// within pole_exclusion of a pole are skipped.
struct GridSpec {
    complex lower;
    complex upper;
    int points_per_axis = 11;
    double pole_exclusion = 1e-3;

    void validate() const {
        if (!(upper.real() > lower.real()) || !(upper.imag() > lower.imag()))
            throw domain_error("grid: rectangle must have positive extents");
        if (points_per_axis < 2)
            throw domain_error("grid: need at least two points per axis");
        if (!(pole_exclusion > 0.0))
            throw domain_error("grid: pole exclusion must be positive");
    }

    complex point(int i, int j) const {
        const double n = points_per_axis - 1;
        return {lower.real() + (upper.real() - lower.real()) * i / n,
                lower.imag() + (upper.imag() - lower.imag()) * j / n};
    }

    GridSpec conjugate() const {
        return {{lower.real(), -upper.imag()}, {upper.real(), -lower.imag()}, points_per_axis, pole_exclusion};
    }
};

/// 11 x 11 points on [0.1, 2 omega - 0.1] x [0.1, 2 omega' - 0.1].
inline GridSpec default_grid(const ModulusContext& ctx) {
    return {{0.1, 0.1},
            {2.0 * ctx.omega() - 0.1, 2.0 * ctx.omega_prime() - 0.1},
            11,
            ctx.default_pole_exclusion()};
}

/// Maximum residual per identity label, for one modulus and grid.
struct ResidualReport {
    double kappa = 0.0;
    GridSpec grid{};
    std::map<std::string, double> residuals;
    int skipped_points = 0;

    void record(const std::string& label, double value) {
        auto [it, inserted] = residuals.try_emplace(label, value);
        if (!inserted)
            it->second = std::max(it->second, value);
    }

    double max_residual() const {
        double worst = 0.0;
        for (const auto& [label, value] : residuals)
            worst = std::max(worst, value);
        return worst;
    }
};

/// The zeros of d in the fundamental cell: z_plus on (omega, omega + i omega'),
/// z_minus its conjugate.
struct ZeroPair {
    complex z_plus;
    complex z_minus;
};

namespace detail {

inline ComplexJacobiTriple family_jacobi(const ModulusContext& ctx, complex z, std::optional<double> pole_exclusion) {
    const double radius = pole_exclusion.value_or(ctx.default_pole_exclusion());
    return sn_cn_dn_complex(ctx.scale() * z, ctx.k(), ctx.scale() * radius);
}

// |a - b| relative to the largest magnitude involved, floored at 1.
inline double scaled_gap(complex a, complex b, std::initializer_list<double> magnitudes = {}) {
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    for (double m : magnitudes)
        scale = std::max(scale, m);
    return std::abs(a - b) / scale;
}

} // namespace detail

/// d(z) = 1 - (1 - lambda) sn^2(v). Poles: i omega' and congruent points.
inline complex d_complex(const ModulusContext& ctx, complex z, std::optional<double> pole_exclusion = std::nullopt) {
    const complex sn = detail::family_jacobi(ctx, z, pole_exclusion).sn;
    // 1 - lambda = kappa^2 / (1 + lambda); the direct difference loses digits for small kappa.
    const double one_minus_lambda = ctx.kappa() * ctx.kappa() / (1.0 + ctx.lambda());
    return 1.0 - one_minus_lambda * sn * sn;
}

/// c(z) = cn(v) dn(v); real period 4 omega.
inline complex c_complex(const ModulusContext& ctx, complex z, std::optional<double> pole_exclusion = std::nullopt) {
    const auto t = detail::family_jacobi(ctx, z, pole_exclusion);
    return t.cn * t.dn;
}

/// s^2(z) = sn^2(v) (k^2 + dn^2(v)).
inline complex s_squared(const ModulusContext& ctx, complex z, std::optional<double> pole_exclusion = std::nullopt) {
    const auto t = detail::family_jacobi(ctx, z, pole_exclusion);
    const double k = ctx.k();
    return t.sn * t.sn * (k * k + t.dn * t.dn);
}

/// d'(z) = (kappa^2 / 2) wp'(z) / (wp(z) + 1/3)^2, the chain rule on
/// (d - 1)(wp + 1/3) = -kappa^2 / 2.
inline complex d_prime_complex(const ModulusContext& ctx, complex z,
                               std::optional<double> pole_exclusion = std::nullopt) {
    const complex shifted = wp(ctx, z, pole_exclusion) + 1.0 / 3.0;
    if (std::abs(shifted) == 0.0)
        throw pole_error("d': argument at a pole of d");
    const double kappa = ctx.kappa();
    return 0.5 * kappa * kappa * wp_prime(ctx, z, pole_exclusion) / (shifted * shifted);
}

/// c'(z) = -scale sn(v) (dn^2(v) + k^2 cn^2(v)).
inline complex c_prime_complex(const ModulusContext& ctx, complex z,
                               std::optional<double> pole_exclusion = std::nullopt) {
    const auto t = detail::family_jacobi(ctx, z, pole_exclusion);
    const double k = ctx.k();
    return -ctx.scale() * t.sn * (t.dn * t.dn + k * k * t.cn * t.cn);
}

namespace detail {

// True when z is within `radius` of the lattice 2m omega + 2in omega' shifted by `offset`.
inline bool near_lattice(const ModulusContext& ctx, complex z, complex offset, double radius) {
    const complex w = z - offset;
    const double two_omega = 2.0 * ctx.omega();
    const double two_omega_p = 2.0 * ctx.omega_prime();
    const complex nearest{two_omega * std::nearbyint(w.real() / two_omega),
                          two_omega_p * std::nearbyint(w.imag() / two_omega_p)};
    return std::abs(w - nearest) < radius;
}

} // namespace detail

/// Maximum residual of every identity over the grid.
///
/// Complex-grid labels (each a scaled gap between two independently computed sides):
///   d_ode                       (d')^2 vs 2 (1 - d)(d^2 - lambda^2), d' by chain rule
///   d_wp_product                (d - 1)(wp + 1/3) vs -kappa^2/2, wp from the Laurent oracle
///   alternative_identification  d(z) vs 1/3 - 2 wp(z + i omega')
///   s_squared_jacobian          kappa^2 s^2 + d^2 vs 1
///   c_squared_complement        c^2 vs 1 - s^2
///   c_squared_lambda            kappa^2 c^2 vs d^2 - lambda^2
///   phi_prime_squared           (c')^2 (d + 1) vs 2 d^2 s^2      [(phi')^2 = (c')^2 / s^2]
///   psi_prime_squared           (d')^2 (d + 1) vs 2 kappa^2 s^2 (d^2 - lambda^2)
///   wp_ode                      (wp')^2 vs 4 wp^3 - g2 wp - g3
///   wp_two_route                wp vs wp_oracle
///   d_conjugate_symmetry        d(conj z) vs conj d(z)
/// Real-axis labels use the grid's real samples, Jacobi form against the amplitude route:
///   real_d_route, real_c_route, real_s_squared_route, real_ode_closed_form,
///   real_phi_prime_squared, real_psi_prime_squared
inline ResidualReport identity_residuals(const ModulusContext& ctx, const GridSpec& grid) {
    grid.validate();
    ResidualReport report;
    report.kappa = ctx.kappa();
    report.grid = grid;

    const double kappa2 = ctx.kappa() * ctx.kappa();
    const double lambda2 = ctx.lambda() * ctx.lambda();
    const complex i_omega_p = ctx.half_period_imag();
    const double radius = grid.pole_exclusion;

    for (int i = 0; i < grid.points_per_axis; ++i) {
        for (int j = 0; j < grid.points_per_axis; ++j) {
            const complex z = grid.point(i, j);
            // Poles of d sit on i omega' + lattice; poles of wp on the lattice itself.
            if (detail::near_lattice(ctx, z, i_omega_p, radius) || detail::near_lattice(ctx, z, 0.0, radius)) {
                ++report.skipped_points;
                continue;
            }
            const complex d = d_complex(ctx, z, radius);
            const complex c = c_complex(ctx, z, radius);
            const complex s2 = s_squared(ctx, z, radius);
            const complex p = wp(ctx, z, radius);
            const complex pp = wp_prime(ctx, z, radius);
            const complex dp = d_prime_complex(ctx, z, radius);
            const complex cp = c_prime_complex(ctx, z, radius);

            const complex ode_rhs = 2.0 * (1.0 - d) * (d * d - lambda2);
            report.record("d_ode", detail::scaled_gap(dp * dp, ode_rhs));

            const complex p_oracle = wp_oracle(ctx.g2(), ctx.g3(), z);
            report.record("d_wp_product",
                          detail::scaled_gap((d - 1.0) * (p_oracle + 1.0 / 3.0), -0.5 * kappa2,
                                             {std::abs(d - 1.0) * std::abs(p_oracle + 1.0 / 3.0)}));

            const complex shifted = wp(ctx, z + i_omega_p, radius);
            report.record("alternative_identification", detail::scaled_gap(d, 1.0 / 3.0 - 2.0 * shifted));

            report.record("s_squared_jacobian", detail::scaled_gap(kappa2 * s2 + d * d, 1.0));
            report.record("c_squared_complement", detail::scaled_gap(c * c, 1.0 - s2));
            report.record("c_squared_lambda", detail::scaled_gap(kappa2 * c * c, d * d - lambda2));
            report.record("phi_prime_squared", detail::scaled_gap(cp * cp * (d + 1.0), 2.0 * d * d * s2));
            report.record("psi_prime_squared",
                          detail::scaled_gap(dp * dp * (d + 1.0), 2.0 * kappa2 * s2 * (d * d - lambda2)));

            const complex wp_rhs = 4.0 * p * p * p - ctx.g2() * p - ctx.g3();
            report.record("wp_ode", detail::scaled_gap(pp * pp, wp_rhs, {std::abs(4.0 * p * p * p)}));
            report.record("wp_two_route", detail::scaled_gap(p, p_oracle));

            report.record("d_conjugate_symmetry",
                          detail::scaled_gap(d_complex(ctx, std::conj(z), radius), std::conj(d)));
        }
    }

    const Amplitude amplitude(ctx);
    const double limit = 2.0 * ctx.omega();
    for (int i = 0; i < grid.points_per_axis; ++i) {
        const double u = grid.point(i, 0).real();
        if (!(std::abs(u) < limit))
            continue;
        const AmplitudePoint pt = amplitude.point(u);
        const Trio trio = amplitude.trio_at(pt);
        const AmplitudeDerivatives der = amplitude.derivatives_at(pt);
        const complex x{u, 0.0};
        report.record("real_d_route", detail::scaled_gap(d_complex(ctx, x, radius), trio.d));
        report.record("real_c_route", detail::scaled_gap(c_complex(ctx, x, radius), trio.c));
        report.record("real_s_squared_route", detail::scaled_gap(s_squared(ctx, x, radius), trio.s * trio.s));
        report.record("real_ode_closed_form",
                      detail::scaled_gap(der.d_prime * der.d_prime,
                                         2.0 * (1.0 - trio.d) * (trio.d * trio.d - lambda2)));
        report.record("real_phi_prime_squared", detail::scaled_gap(der.phi_prime * der.phi_prime,
                                                                   2.0 * trio.d * trio.d / (trio.d + 1.0)));
        report.record("real_psi_prime_squared",
                      detail::scaled_gap(der.psi_prime * der.psi_prime,
                                         2.0 * (trio.d * trio.d - lambda2) / (trio.d + 1.0)));
    }
    return report;
}

namespace detail {

inline constexpr Tolerance bisection_to_the_ulp{std::numeric_limits<double>::denorm_min(), 0.0, 80};

} // namespace detail

/// Zeros of d by bisection of the real map t -> d(omega + i t omega') on (0, 1),
/// whose endpoint values are lambda > 0 and -lambda < 0.
inline ZeroPair find_zeros(const ModulusContext& ctx) {
    const double omega = ctx.omega();
    const double omega_p = ctx.omega_prime();
    const auto along = [&](double t) { return d_complex(ctx, {omega, t * omega_p}).real(); };
    const double t = solve_monotone(along, Bracket{0.0, 1.0}, detail::bisection_to_the_ulp);
    const complex z_plus{omega, t * omega_p};
    return {z_plus, std::conj(z_plus)};
}

/// Leading Laurent coefficient of d at its pole i omega': the limit of
/// h^2 d(i omega' + h), from h = 1e-2, 5e-3, 2.5e-3 with two Richardson
/// levels. A double pole makes the raw estimates agree to O(h^2).
///
/// Throws conditioning_error when successive raw estimates differ by more than 1%.
inline double pole_coefficient(const ModulusContext& ctx) {
    constexpr double steps[] = {1e-2, 5e-3, 2.5e-3};
    double estimate[3];
    for (int n = 0; n < 3; ++n) {
        const double h = steps[n];
        estimate[n] = h * h * d_complex(ctx, ctx.half_period_imag() + h, 0.5 * steps[2]).real();
    }
    for (int n = 0; n < 2; ++n) {
        if (std::abs(estimate[n + 1] - estimate[n]) > 0.01 * std::abs(estimate[n + 1]))
            throw conditioning_error("pole_coefficient: estimates unstable under step halving");
    }
    const double first = (4.0 * estimate[1] - estimate[0]) / 3.0;
    const double second = (4.0 * estimate[2] - estimate[1]) / 3.0;
    return (16.0 * second - first) / 15.0;
}

/// Where d = -1: s^2 = 0 there and the zero is simple.
struct SimpleZeroWitness {
    complex point;                  ///< on the segment (i omega', omega + i omega')
    complex s_squared;              ///< should vanish
    double s_squared_slope;         ///< |d s^2 / dz| by central difference along the real axis
    double wp_prime_squared;        ///< (wp')^2 at the point
    double kappa6_over_16;          ///< kappa^6 / 16
    double k6_over_16;              ///< k^6 / 16 with the Jacobi modulus k
};

/// Locates the point where d = -1 on the line Im z = omega', where wp is real
/// and d runs from -infinity at i omega' up to -lambda at omega + i omega'.
inline SimpleZeroWitness s_squared_simple_zero(const ModulusContext& ctx) {
    const double omega = ctx.omega();
    const double omega_p = ctx.omega_prime();
    const auto along = [&](double t) { return d_complex(ctx, {t * omega, omega_p}).real() + 1.0; };
    const double t = solve_monotone(along, Bracket{0.01, 1.0}, detail::bisection_to_the_ulp);
    const complex z{t * omega, omega_p};

    constexpr double h = 1e-6;
    const complex slope = (s_squared(ctx, z + h) - s_squared(ctx, z - h)) / (2.0 * h);
    const complex pp = wp_prime(ctx, z);
    const double kappa = ctx.kappa();
    const double k = ctx.k();
    return {z,
            s_squared(ctx, z),
            std::abs(slope),
            (pp * pp).real(),
            std::pow(kappa, 6) / 16.0,
            std::pow(k, 6) / 16.0};
}

} // namespace hypell
