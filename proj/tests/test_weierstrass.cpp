#include <cmath>

#include <gtest/gtest.h>

#include "hypell/weierstrass.hpp"

using namespace hypell;

namespace {

// Points inside the fundamental rectangle, clear of the lattice and of half-periods.
std::vector<complex> sample_points(const ModulusContext& ctx) {
    std::vector<complex> pts;
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j)
            pts.push_back({(2.0 * ctx.omega()) * (i - 0.37) / 5.5, (2.0 * ctx.omega_prime()) * (j - 0.61) / 5.5});
    return pts;
}

} // namespace

TEST(Wp, MidpointValues) {
    const auto ctx = context_from_kappa(0.6);
    EXPECT_NEAR(wp(ctx, {ctx.omega(), 0.0}).real(), 17.0 / 30.0, 1e-13);
    EXPECT_NEAR(wp(ctx, {0.0, ctx.omega_prime()}).real(), -1.0 / 3.0, 1e-13);
    EXPECT_NEAR(wp(ctx, {ctx.omega(), ctx.omega_prime()}).real(), -7.0 / 30.0, 1e-13);
}

TEST(Wp, LeadingLaurentTerm) {
    const auto ctx = context_from_kappa(0.6);
    const complex z{0.01, 0.0};
    EXPECT_NEAR(std::abs(z * z * wp(ctx, z) - 1.0), 0.0, 1e-3);
    EXPECT_THROW(wp(ctx, {0.0, 0.0}), pole_error);
    EXPECT_THROW(wp(ctx, {2.0 * ctx.omega(), 2.0 * ctx.omega_prime() + 1e-5}), pole_error);
}

TEST(Wp, Symmetries) {
    for (double kappa : {0.2, 0.6, 0.95}) {
        const auto ctx = context_from_kappa(kappa);
        for (const complex z : sample_points(ctx)) {
            const complex p = wp(ctx, z);
            const double scale = std::max(1.0, std::abs(p));
            EXPECT_LE(std::abs(wp(ctx, z + 2.0 * ctx.omega()) - p), 1e-9 * scale);
            EXPECT_LE(std::abs(wp(ctx, z + complex{0.0, 2.0 * ctx.omega_prime()}) - p), 1e-9 * scale);
            EXPECT_LE(std::abs(wp(ctx, -z) - p), 1e-10 * scale);
            EXPECT_LE(std::abs(wp(ctx, std::conj(z)) - std::conj(p)), 1e-12 * scale);
        }
    }
}

TEST(WpPrime, OdeOddnessAndMidpoints) {
    const auto ctx = context_from_kappa(0.6);
    for (const complex z : sample_points(ctx)) {
        const complex p = wp(ctx, z);
        const complex pp = wp_prime(ctx, z);
        const double bound = 1e-9 * (1.0 + std::pow(std::abs(p), 3));
        EXPECT_LE(std::abs(pp * pp - (4.0 * p * p * p - ctx.g2() * p - ctx.g3())), bound);
    }
    const complex z{0.4, 0.2};
    EXPECT_LE(std::abs(wp_prime(ctx, -z) + wp_prime(ctx, z)), 1e-10);
    EXPECT_LE(std::abs(wp_prime(ctx, {ctx.omega(), 0.0})), 1e-8);
    EXPECT_LE(std::abs(wp_prime(ctx, {ctx.omega(), ctx.omega_prime()})), 1e-8);
    EXPECT_LE(std::abs(wp_prime(ctx, {0.0, ctx.omega_prime()})), 1e-8);
}

TEST(WpPrime, MatchesDifferenceQuotient) {
    const auto ctx = context_from_kappa(0.4);
    const double h = 1e-5;
    for (const complex z : sample_points(ctx)) {
        const complex fd = (wp(ctx, z + h) - wp(ctx, z - h)) / (2.0 * h);
        EXPECT_LE(std::abs(fd - wp_prime(ctx, z)), 1e-6 * std::max(1.0, std::abs(fd)));
    }
}

TEST(WpPrime, WhereDIsMinusOne) {
    // wp = kappa^2/4 - 1/3 lies on the segment (i omega', omega + i omega'), where wp is real
    // and increasing. Shifted cubic q = wp + 1/3 gives (wp')^2 = 4q^3 - 4q^2 + kappa^2 q = kappa^6/16.
    const auto ctx = context_from_kappa(0.6);
    const double target = 0.09 - 1.0 / 3.0;
    double lo = 0.01, hi = 1.0;
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        (wp(ctx, {mid * ctx.omega(), ctx.omega_prime()}).real() < target ? lo : hi) = mid;
    }
    const complex pp = wp_prime(ctx, {lo * ctx.omega(), ctx.omega_prime()});
    EXPECT_NEAR((pp * pp).real(), 0.0029160, 1e-10);
}

TEST(WpOracle, LaurentCoefficients) {
    const auto c = wp_laurent_coefficients(1.0, 2.0);
    EXPECT_DOUBLE_EQ(c[2], 1.0 / 20.0);
    EXPECT_DOUBLE_EQ(c[3], 2.0 / 28.0);
    EXPECT_DOUBLE_EQ(c[4], 1.0 / 1200.0);
    EXPECT_DOUBLE_EQ(c[5], 3.0 * 1.0 * 2.0 / 6160.0);
}

TEST(WpOracle, IndependentRoute) {
    const auto ctx = context_from_kappa(0.6);
    EXPECT_NEAR(wp_oracle(ctx.g2(), ctx.g3(), {ctx.omega(), 0.0}).real(), 17.0 / 30.0, 1e-11);
    const complex z{0.5, 0.3};
    EXPECT_LE(std::abs(wp(ctx, z) - wp_oracle(ctx.g2(), ctx.g3(), z)), 1e-9);
    const complex tiny{0.01, 0.0};
    EXPECT_NEAR(std::abs(tiny * tiny * wp_oracle(ctx.g2(), ctx.g3(), tiny) - 1.0), 0.0, 1e-3);
    EXPECT_THROW(wp_oracle(ctx.g2(), ctx.g3(), {0.0, 0.0}), pole_error);
}

TEST(WpOracle, AgreesAcrossModuli) {
    for (double kappa : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const auto ctx = context_from_kappa(kappa);
        for (const complex z : sample_points(ctx)) {
            const complex p = wp(ctx, z);
            EXPECT_LE(std::abs(p - wp_oracle(ctx.g2(), ctx.g3(), z)), 1e-9 * std::max(1.0, std::abs(p)));
        }
    }
}

TEST(WpOracle, ConditioningError) {
    // 2 omega halves to the half-period omega, where wp' vanishes.
    const auto ctx = context_from_kappa(0.6);
    EXPECT_THROW(wp_oracle(ctx.g2(), ctx.g3(), {2.0 * ctx.omega(), 0.0}), conditioning_error);
}
