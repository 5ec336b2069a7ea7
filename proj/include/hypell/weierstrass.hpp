#pragma once

// The coperiodic Weierstrass function wp(z; g2, g3) of the family.
//
// Primary route: wp(z) = e2 + (e1 - e2) / sn^2(scale z, k), which shares the
// lattice of the Jacobi layer by construction. Independent route: Laurent
// series near the origin followed by repeated duplication, which sees only
// the invariants.

#include <array>
#include <cmath>
#include <optional>

#include "hypell/errors.hpp"
#include "hypell/jacobi.hpp"
#include "hypell/modulus.hpp"

namespace hypell {

namespace detail {

struct ScaledArgument {
    complex v;      // scale * z, the sn argument
    bool near_pole; // v closer to an sn pole than to an sn zero
};

// Locates v = scale*z relative to the sn zeros 2mK + 2inK' and poles
// iK' + 2mK + 2inK', throwing pole_error near a lattice point of wp.
inline ScaledArgument scaled_argument(const ModulusContext& ctx, complex z, std::optional<double> pole_exclusion) {
    const double radius = pole_exclusion.value_or(ctx.default_pole_exclusion());
    const double two_omega = 2.0 * ctx.omega();
    const double two_omega_p = 2.0 * ctx.omega_prime();
    const complex lattice{two_omega * std::nearbyint(z.real() / two_omega),
                          two_omega_p * std::nearbyint(z.imag() / two_omega_p)};
    if (std::abs(z - lattice) < radius)
        throw pole_error("wp: argument within pole-exclusion radius of a lattice point");
    // Distance to the row of sn poles measured by the imaginary offset within a cell.
    const double offset = std::abs(z.imag() - lattice.imag());
    return {ctx.scale() * z, offset > 0.5 * ctx.omega_prime()};
}

} // namespace detail

/// wp(z) via the sn bridge. Near the sn poles (the points congruent to
/// i omega', where wp = e2) the shifted form k^2 sn^2(v - iK') is used.
inline complex wp(const ModulusContext& ctx, complex z, std::optional<double> pole_exclusion = std::nullopt) {
    const auto arg = detail::scaled_argument(ctx, z, pole_exclusion);
    const double spread = ctx.e1() - ctx.e2();
    const double k = ctx.k();
    if (arg.near_pole) {
        const complex w = arg.v - complex{0.0, ctx.jacobi_K_prime()};
        const complex sn = sn_cn_dn_complex(w, k, 0.0).sn;
        return ctx.e2() + spread * k * k * sn * sn;
    }
    const complex sn = sn_cn_dn_complex(arg.v, k, 0.0).sn;
    return ctx.e2() + spread / (sn * sn);
}

/// wp'(z) = -2 (e1 - e2)^(3/2) cn dn / sn^3 at v = scale z, or equivalently
/// 2 (e1 - e2)^(3/2) k^2 sn cn dn at v - iK'.
inline complex wp_prime(const ModulusContext& ctx, complex z, std::optional<double> pole_exclusion = std::nullopt) {
    const auto arg = detail::scaled_argument(ctx, z, pole_exclusion);
    const double spread = ctx.e1() - ctx.e2();
    const double factor = 2.0 * spread * std::sqrt(spread);
    const double k = ctx.k();
    if (arg.near_pole) {
        const complex w = arg.v - complex{0.0, ctx.jacobi_K_prime()};
        const auto [sn, cn, dn] = sn_cn_dn_complex(w, k, 0.0);
        return factor * k * k * sn * cn * dn;
    }
    const auto [sn, cn, dn] = sn_cn_dn_complex(arg.v, k, 0.0);
    return -factor * cn * dn / (sn * sn * sn);
}

/// Number of Laurent coefficients used by wp_oracle.
inline constexpr int wp_laurent_terms = 24;

/// Laurent coefficients c_n, n = 2 .. wp_laurent_terms + 1, of
/// wp(z) = z^-2 + sum c_n z^(2n-2):
/// c_2 = g2/20, c_3 = g3/28, c_n = 3 / ((2n+1)(n-3)) sum_{m=2}^{n-2} c_m c_{n-m}.
inline std::array<double, wp_laurent_terms + 2> wp_laurent_coefficients(double g2, double g3) {
    std::array<double, wp_laurent_terms + 2> c{};
    c[2] = g2 / 20.0;
    c[3] = g3 / 28.0;
    for (int n = 4; n < static_cast<int>(c.size()); ++n) {
        double sum = 0.0;
        for (int m = 2; m <= n - 2; ++m)
            sum += c[m] * c[n - m];
        c[n] = 3.0 * sum / ((2.0 * n + 1.0) * (n - 3.0));
    }
    return c;
}

/// Independent evaluation of wp(z; g2, g3): halve z until |z| <= 1/2, sum the
/// Laurent series there, then double back with
/// wp(2z) = -2 wp(z) + (6 wp^2 - g2/2)^2 / (4 (4 wp^3 - g2 wp - g3)).
///
/// Throws conditioning_error when a duplication denominator falls below 1e-12
/// (an intermediate point sits on a half-period).
inline complex wp_oracle(double g2, double g3, complex z) {
    if (z == complex{0.0, 0.0})
        throw pole_error("wp_oracle: z = 0 is a pole");
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw domain_error("wp_oracle: argument must be finite");

    int halvings = 0;
    complex w = z;
    while (std::abs(w) > 0.5) {
        w *= 0.5;
        ++halvings;
    }

    const auto coeffs = wp_laurent_coefficients(g2, g3);
    const complex w2 = w * w;
    complex series{0.0, 0.0};
    for (int n = static_cast<int>(coeffs.size()) - 1; n >= 2; --n)
        series = series * w2 + coeffs[n];
    complex p = 1.0 / w2 + series * w2;

    for (int i = 0; i < halvings; ++i) {
        const complex den = 4.0 * (4.0 * p * p * p - g2 * p - g3);
        if (std::abs(den) < 1e-12)
            throw conditioning_error("wp_oracle: duplication denominator vanishes");
        const complex num = 6.0 * p * p - 0.5 * g2;
        p = -2.0 * p + num * num / den;
    }
    return p;
}

} // namespace hypell
