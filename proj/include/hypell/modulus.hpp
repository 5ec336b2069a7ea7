#pragma once

// Per-kappa context: every scalar derived from the modulus kappa of the
// hypergeometric integrand, computed once and never mutated.

#include <cmath>

#include "hypell/errors.hpp"
#include "hypell/jacobi.hpp"

namespace hypell {

/// Scalar data of the family at modulus kappa in (0, 1).
///
/// lambda = sqrt(1 - kappa^2) and the coperiodic Weierstrass function has
/// invariants g2 = 4/3 - kappa^2, g3 = 8/27 - kappa^2/3, midpoint values
/// e1 = 1/6 + lambda/2 = wp(omega), e3 = 1/6 - lambda/2 = wp(omega + i omega'),
/// e2 = -1/3 = wp(i omega'), and fundamental periods 2 omega, 2i omega'.
/// The associated Jacobi functions have modulus k with k^2 = (1-lambda)/(1+lambda)
/// and argument scale sqrt(e1 - e2) = (1 + k^2)^(-1/2).
class ModulusContext {
public:
    static ModulusContext from_kappa(double kappa) {
        if (!(kappa > 0.0) || !(kappa < 1.0))
            throw domain_error("modulus context: kappa must lie in (0, 1)");
        ModulusContext ctx;
        ctx.kappa_ = kappa;
        ctx.lambda_ = std::sqrt((1.0 - kappa) * (1.0 + kappa));
        // k = sqrt((1-lambda)/(1+lambda)) = kappa / (1 + lambda), without cancellation.
        ctx.k_ = kappa / (1.0 + ctx.lambda_);
        ctx.kprime_ = std::sqrt(2.0 * ctx.lambda_ / (1.0 + ctx.lambda_));
        const double kappa2 = kappa * kappa;
        ctx.g2_ = 4.0 / 3.0 - kappa2;
        ctx.g3_ = 8.0 / 27.0 - kappa2 / 3.0;
        ctx.e1_ = 1.0 / 6.0 + 0.5 * ctx.lambda_;
        ctx.e3_ = 1.0 / 6.0 - 0.5 * ctx.lambda_;
        ctx.e2_ = -1.0 / 3.0;
        ctx.scale_ = std::sqrt(0.5 * (1.0 + ctx.lambda_));
        ctx.big_k_ = complete_K(ctx.k_);
        ctx.big_kp_ = complete_K(ctx.kprime_);
        ctx.omega_ = ctx.big_k_ / ctx.scale_;
        ctx.omega_prime_ = ctx.big_kp_ / ctx.scale_;
        return ctx;
    }

    /// Context for Jacobi modulus k, using kappa = 2k / (1 + k^2).
    static ModulusContext from_jacobi_k(double k) {
        if (!(k > 0.0) || !(k < 1.0))
            throw domain_error("modulus context: Jacobi modulus k must lie in (0, 1)");
        return from_kappa(2.0 * k / (1.0 + k * k));
    }

    double kappa() const { return kappa_; }
    double lambda() const { return lambda_; }
    double k() const { return k_; }
    double kprime() const { return kprime_; }
    double g2() const { return g2_; }
    double g3() const { return g3_; }
    double e1() const { return e1_; }
    double e3() const { return e3_; }
    double e2() const { return e2_; }
    double omega() const { return omega_; }
    double omega_prime() const { return omega_prime_; }
    double scale() const { return scale_; }
    /// K(k) and K(k'), the Jacobi quarter periods.
    double jacobi_K() const { return big_k_; }
    double jacobi_K_prime() const { return big_kp_; }

    /// i omega', the pole of d.
    complex half_period_imag() const { return {0.0, omega_prime_}; }
    /// Default pole-exclusion radius in the u-plane, 1e-3 min(omega, omega').
    double default_pole_exclusion() const { return 1e-3 * std::min(omega_, omega_prime_); }

private:
    ModulusContext() = default;

    double kappa_ = 0.0;
    double lambda_ = 0.0;
    double k_ = 0.0;
    double kprime_ = 0.0;
    double g2_ = 0.0;
    double g3_ = 0.0;
    double e1_ = 0.0;
    double e3_ = 0.0;
    double e2_ = 0.0;
    double scale_ = 0.0;
    double big_k_ = 0.0;
    double big_kp_ = 0.0;
    double omega_ = 0.0;
    double omega_prime_ = 0.0;
};

inline ModulusContext context_from_kappa(double kappa) { return ModulusContext::from_kappa(kappa); }
inline ModulusContext context_from_jacobi_k(double k) { return ModulusContext::from_jacobi_k(k); }

/// g2^3 - 27 g3^2, equal to kappa^4 (1 - kappa^2) > 0.
inline double discriminant(const ModulusContext& ctx) {
    const double g2 = ctx.g2();
    const double g3 = ctx.g3();
    return g2 * g2 * g2 - 27.0 * g3 * g3;
}

} // namespace hypell
