#pragma once

// Whole-library verification sweep: per modulus, run the amplitude, wp and
// family property checks and fold every residual into one report.

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "hypell/amplitude.hpp"
#include "hypell/errors.hpp"
#include "hypell/family.hpp"
#include "hypell/modulus.hpp"
#include "hypell/weierstrass.hpp"

namespace hypell {

struct KappaOutcome {
    double kappa = 0.0;
    bool passed = false;
    std::optional<ResidualReport> report; ///< absent when construction failed
    std::string failure;                  ///< reason, empty on success
};

struct VerificationResult {
    double tolerance = 0.0;
    bool passed = true;
    std::vector<KappaOutcome> outcomes;
};

namespace detail {

inline void amplitude_checks(const ModulusContext& ctx, ResidualReport& report) {
    const Amplitude amplitude(ctx);
    report.record("amplitude_period_bridge", std::abs(amplitude.u_of_phi(std::numbers::pi / 2) - ctx.omega()));
    report.record("amplitude_half_turn",
                  std::abs(amplitude.u_of_phi(std::numbers::pi) - 2.0 * amplitude.u_of_phi(std::numbers::pi / 2)));

    constexpr int round_trip_points = 21;
    for (int i = 0; i < round_trip_points; ++i) {
        const double phi = -1.4 + 2.8 * i / (round_trip_points - 1);
        report.record("amplitude_round_trip", std::abs(amplitude.phi_of_u(amplitude.u_of_phi(phi)) - phi));
    }

    const double lambda2 = ctx.lambda() * ctx.lambda();
    constexpr int ode_points = 101;
    const double span = ctx.omega() - 0.01;
    for (int i = 0; i < ode_points; ++i) {
        const double u = -span + 2.0 * span * i / (ode_points - 1);
        const AmplitudePoint pt = amplitude.point(u);
        const Trio t = amplitude.trio_at(pt);
        const AmplitudeDerivatives der = amplitude.derivatives_at(pt);
        report.record("amplitude_ode",
                      std::abs(der.d_prime * der.d_prime - 2.0 * (1.0 - t.d) * (t.d * t.d - lambda2)));
        report.record("amplitude_jacobian_identities",
                      std::max(std::abs(t.s * t.s + t.c * t.c - 1.0),
                               std::abs(ctx.kappa() * ctx.kappa() * t.s * t.s + t.d * t.d - 1.0)));
        const double d_even = amplitude.trio(-u).d;
        report.record("amplitude_d_even", std::abs(d_even - t.d));
    }
}

inline void weierstrass_checks(const ModulusContext& ctx, ResidualReport& report) {
    const double omega = ctx.omega();
    const double omega_p = ctx.omega_prime();
    const complex period_re{2.0 * omega, 0.0};
    const complex period_im{0.0, 2.0 * omega_p};

    report.record("wp_midpoint_e1", std::abs(wp(ctx, {omega, 0.0}) - ctx.e1()));
    report.record("wp_midpoint_e3", std::abs(wp(ctx, {omega, omega_p}) - ctx.e3()));
    report.record("wp_midpoint_e2", std::abs(wp(ctx, {0.0, omega_p}) - ctx.e2()));
    for (const complex half : {complex{omega, 0.0}, complex{omega, omega_p}, complex{0.0, omega_p}})
        report.record("wp_prime_midpoints", std::abs(wp_prime(ctx, half)));

    for (int i = 1; i <= 4; ++i) {
        for (int j = 1; j <= 4; ++j) {
            const complex z{0.37 * i, 0.53 * j};
            const complex p = wp(ctx, z);
            const double scale = std::max(1.0, std::abs(p));
            report.record("wp_periodicity",
                          std::max(std::abs(wp(ctx, z + period_re) - p), std::abs(wp(ctx, z + period_im) - p)) /
                              scale);
            report.record("wp_even", std::abs(wp(ctx, -z) - p) / scale);
            report.record("wp_real", std::abs(wp(ctx, std::conj(z)) - std::conj(p)) / scale);
        }
    }
    const double disc = ctx.kappa() * ctx.kappa() * ctx.kappa() * ctx.kappa() * ctx.lambda() * ctx.lambda();
    report.record("discriminant", std::abs(discriminant(ctx) - disc));
}

inline void family_checks(const ModulusContext& ctx, ResidualReport& report) {
    const double kappa2 = ctx.kappa() * ctx.kappa();
    const complex i_omega_p = ctx.half_period_imag();

    report.record("d_at_omega", std::abs(d_complex(ctx, {ctx.omega(), 0.0}) - ctx.lambda()));
    report.record("d_at_omega_plus_i_omega_prime",
                  std::abs(d_complex(ctx, {ctx.omega(), ctx.omega_prime()}) + ctx.lambda()));

    const ZeroPair zeros = find_zeros(ctx);
    report.record("zero_d_value", std::abs(d_complex(ctx, zeros.z_plus)));
    report.record("zero_wp_value", std::abs(wp(ctx, zeros.z_plus) - (0.5 * kappa2 - 1.0 / 3.0)));
    report.record("zero_wp_shifted_value", std::abs(wp(ctx, zeros.z_plus + i_omega_p) - 1.0 / 6.0));
    const complex pp = wp_prime(ctx, zeros.z_plus);
    report.record("zero_wp_prime_squared", std::abs(pp * pp - 0.5 * kappa2 * kappa2 * (kappa2 - 1.0)));
    report.record("zero_conjugate", std::abs(d_complex(ctx, zeros.z_minus)));

    report.record("pole_coefficient", std::abs(pole_coefficient(ctx) + 2.0));

    const SimpleZeroWitness witness = s_squared_simple_zero(ctx);
    report.record("s_squared_simple_zero_value", std::abs(witness.s_squared));
    report.record("s_squared_wp_prime_squared", std::abs(witness.wp_prime_squared - witness.kappa6_over_16));
}

} // namespace detail

/// Every check for one modulus, as a single report over `grid` (the default
/// fundamental-cell grid when absent).
inline ResidualReport verify_kappa(double kappa, const std::optional<GridSpec>& grid = std::nullopt) {
    const ModulusContext ctx = context_from_kappa(kappa);
    ResidualReport report = identity_residuals(ctx, grid.value_or(default_grid(ctx)));
    detail::amplitude_checks(ctx, report);
    detail::weierstrass_checks(ctx, report);
    detail::family_checks(ctx, report);
    return report;
}

/// Runs verify_kappa for each modulus; passes iff every residual is <= tol.
/// A library error for one modulus marks that modulus failed with the reason.
/// An empty list passes vacuously.
inline VerificationResult run_verification_suite(const std::vector<double>& kappas, double tol,
                                                 const std::optional<GridSpec>& grid = std::nullopt) {
    VerificationResult result;
    result.tolerance = tol;
    for (double kappa : kappas) {
        KappaOutcome outcome;
        outcome.kappa = kappa;
        try {
            outcome.report = verify_kappa(kappa, grid);
            outcome.passed = outcome.report->max_residual() <= tol;
            if (!outcome.passed) {
                for (const auto& [label, value] : outcome.report->residuals) {
                    if (value > tol) {
                        outcome.failure = "residual '" + label + "' exceeds tolerance";
                        break;
                    }
                }
            }
        } catch (const error& e) {
            outcome.passed = false;
            outcome.failure = e.what();
        }
        result.passed = result.passed && outcome.passed;
        result.outcomes.push_back(std::move(outcome));
    }
    return result;
}

} // namespace hypell
