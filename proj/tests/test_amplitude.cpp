#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "hypell/amplitude.hpp"
#include "oracles.hpp"

using namespace hypell;

namespace {
const double grid_kappas[] = {0.1, 0.3, 0.5, 0.7, 0.9};
}

TEST(UOfPhi, Values) {
    const auto ctx = context_from_kappa(0.6);
    const Amplitude amp(ctx);
    EXPECT_EQ(amp.u_of_phi(0.0), 0.0);
    // Termwise integration of the hypergeometric series: 0.30121012961062...
    EXPECT_NEAR(amp.u_of_phi(0.3), oracle::quarter_integral_series(0.6, 0.3), 1e-14);
    EXPECT_NEAR(amp.u_of_phi(0.3), 0.301211, 1e-5);
    EXPECT_NEAR(amp.u_of_phi(std::numbers::pi / 2), ctx.omega(), 1e-13);
    EXPECT_NEAR(amp.u_of_phi(1.2), oracle::quarter_integral_series(0.6, 1.2), 1e-13);
}

TEST(UOfPhi, OddIncreasingAndPeriodic) {
    const auto ctx = context_from_kappa(0.7);
    const Amplitude amp(ctx);
    double previous = -1e300;
    for (int i = -100; i <= 100; ++i) {
        const double phi = 0.05 * i;
        const double u = amp.u_of_phi(phi);
        EXPECT_EQ(amp.u_of_phi(-phi), -u);
        EXPECT_GT(u, previous);
        previous = u;
    }
    EXPECT_NEAR(amp.u_of_phi(std::numbers::pi), 2.0 * amp.u_of_phi(std::numbers::pi / 2), 1e-13);
}

TEST(PhiOfU, Values) {
    const auto ctx = context_from_kappa(0.6);
    const Amplitude amp(ctx);
    EXPECT_EQ(amp.phi_of_u(0.0), 0.0);
    EXPECT_NEAR(amp.phi_of_u(ctx.omega()), std::numbers::pi / 2, 1e-13);
    EXPECT_NEAR(amp.phi_of_u(oracle::quarter_integral_series(0.6, 0.3)), 0.3, 1e-13);
}

TEST(PhiOfU, RoundTripAndMonotone) {
    for (double kappa : grid_kappas) {
        const Amplitude amp(context_from_kappa(kappa));
        double previous = -1e300;
        for (int i = 0; i <= 100; ++i) {
            const double phi = -1.4 + 2.8 * i / 100.0;
            EXPECT_LE(std::abs(amp.phi_of_u(amp.u_of_phi(phi)) - phi), 1e-10);
            const double back = amp.phi_of_u(phi);
            EXPECT_GT(back, previous);
            previous = back;
        }
    }
}

TEST(PhiOfU, LargeArguments) {
    const Amplitude amp(context_from_kappa(0.9));
    for (double phi : {7.0, -11.3, 25.0})
        EXPECT_NEAR(amp.phi_of_u(amp.u_of_phi(phi)), phi, 1e-12);
}

TEST(TrioReal, Values) {
    const auto ctx = context_from_kappa(0.6);
    const auto [s0, c0, d0] = trio_real(ctx, 0.0);
    EXPECT_EQ(s0, 0.0);
    EXPECT_EQ(c0, 1.0);
    EXPECT_EQ(d0, 1.0);
    const auto [s, c, d] = trio_real(ctx, ctx.omega());
    EXPECT_NEAR(s, 1.0, 1e-15);
    EXPECT_NEAR(c, 0.0, 1e-13);
    EXPECT_NEAR(d, 0.8, 1e-15);
    const auto ctx3 = context_from_kappa(0.3);
    const auto t = trio_real(ctx3, 0.77);
    EXPECT_LE(std::abs(0.09 * t.s * t.s + t.d * t.d - 1.0), 1e-12);
    EXPECT_LE(std::abs(t.s * t.s + t.c * t.c - 1.0), 1e-12);
}

TEST(TrioReal, Parity) {
    const Amplitude amp(context_from_kappa(0.5));
    for (double u : {0.2, 0.9, 1.7, 3.1}) {
        const Trio plus = amp.trio(u);
        const Trio minus = amp.trio(-u);
        EXPECT_EQ(minus.s, -plus.s);
        EXPECT_EQ(minus.c, plus.c);
        EXPECT_EQ(minus.d, plus.d);
    }
}

TEST(TrioReal, RealPeriod) {
    const auto ctx = context_from_kappa(0.8);
    const Amplitude amp(ctx);
    for (double u : {0.1, 0.6, 1.3, 2.2})
        EXPECT_LE(std::abs(amp.trio(u + 2.0 * ctx.omega()).d - amp.trio(u).d), 1e-9);
}

TEST(Derivatives, AtOrigin) {
    const auto ctx = context_from_kappa(0.6);
    const auto [phi_p, psi_p, d_p] = derivatives_closed_form(ctx, 0.0);
    EXPECT_EQ(phi_p, 1.0);
    EXPECT_EQ(psi_p, 0.6);
    EXPECT_EQ(d_p, 0.0);
}

TEST(Derivatives, FiniteDifferences) {
    const auto ctx = context_from_kappa(0.6);
    const Amplitude amp(ctx);
    const double h = 1e-5;
    const double u = 0.5;
    const double fd = (amp.trio(u + h).d - amp.trio(u - h).d) / (2.0 * h);
    EXPECT_LE(std::abs(fd - amp.derivatives(u).d_prime), 1e-8);
}

TEST(Derivatives, OdeAndSquaredDerivatives) {
    for (double kappa : grid_kappas) {
        const auto ctx = context_from_kappa(kappa);
        const Amplitude amp(ctx);
        const double lambda2 = ctx.lambda() * ctx.lambda();
        const double span = ctx.omega() - 0.01;
        for (int i = 0; i <= 100; ++i) {
            const double u = -span + 2.0 * span * i / 100.0;
            const auto pt = amp.point(u);
            const auto [s, c, d] = amp.trio_at(pt);
            const auto der = amp.derivatives_at(pt);
            EXPECT_LE(std::abs(der.d_prime * der.d_prime - 2.0 * (1.0 - d) * (d * d - lambda2)), 1e-9);
            EXPECT_LE(std::abs(der.phi_prime * der.phi_prime - 2.0 * d * d / (d + 1.0)), 1e-9);
            EXPECT_LE(std::abs(der.psi_prime * der.psi_prime - 2.0 * (d * d - lambda2) / (d + 1.0)), 1e-9);
            EXPECT_NEAR(std::sin(pt.psi), kappa * std::sin(pt.phi), 1e-15);
        }
    }
    const auto ctx = context_from_kappa(0.6);
    const auto t = trio_real(ctx, 0.9);
    const auto der = derivatives_closed_form(ctx, 0.9);
    EXPECT_LE(std::abs(der.d_prime * der.d_prime - 2.0 * (1.0 - t.d) * (t.d * t.d - 0.64)), 1e-10);
}
