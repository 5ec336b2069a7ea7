#pragma once

// Real-line construction of the trio s, c, d.
//
//   u(phi) = integral_0^phi F(1/4, 3/4; 1/2; kappa^2 sin^2 theta) d theta,
//   sin psi = kappa sin phi,   s = sin phi,  c = cos phi,  d = cos psi.

#include <cmath>

#include "hypell/detail/amplitude_integral.hpp"
#include "hypell/hypergeometric.hpp"
#include "hypell/modulus.hpp"

namespace hypell {

/// A matched triple (u, phi, psi) on the real line.
struct AmplitudePoint {
    double u;
    double phi;
    double psi;
};

struct Trio {
    double s;
    double c;
    double d;
};

struct AmplitudeDerivatives {
    double phi_prime;
    double psi_prime;
    double d_prime;
};

namespace detail {

struct QuarterIntegrand {
    double kappa;
    double operator()(double theta) const {
        const double s = kappa * std::sin(theta);
        return f_quarter(s * s);
    }
};

} // namespace detail

/// u(phi) and its inverse at a fixed modulus. Holds the quarter period
/// u(pi/2) so repeated evaluations share it.
class Amplitude {
public:
    explicit Amplitude(const ModulusContext& ctx) : ctx_(ctx), integral_({ctx.kappa()}) {}

    const ModulusContext& context() const { return ctx_; }

    /// u(pi/2); equals the real half-period omega.
    double quarter() const { return integral_.quarter(); }

    double u_of_phi(double phi) const { return integral_.integral(phi); }

    double phi_of_u(double u) const { return integral_.inverse(u); }

    /// du/dphi = F(1/4, 3/4; 1/2; kappa^2 sin^2 phi) >= 1.
    double u_prime(double phi) const { return integral_.integrand(phi); }

    AmplitudePoint point(double u) const {
        const double phi = phi_of_u(u);
        return {u, phi, std::asin(ctx_.kappa() * std::sin(phi))};
    }

    Trio trio(double u) const { return trio_at(point(u)); }

    AmplitudeDerivatives derivatives(double u) const { return derivatives_at(point(u)); }

    Trio trio_at(const AmplitudePoint& p) const {
        const double s = std::sin(p.phi);
        return {s, std::cos(p.phi), std::cos(p.psi)};
    }

    /// phi' = cos psi / cos(psi/2), psi' = kappa cos phi / cos(psi/2),
    /// d' = -2 kappa sin(psi/2) cos phi.
    AmplitudeDerivatives derivatives_at(const AmplitudePoint& p) const {
        const double kappa = ctx_.kappa();
        const double half_cos = std::cos(0.5 * p.psi);
        const double c = std::cos(p.phi);
        return {std::cos(p.psi) / half_cos, kappa * c / half_cos, -2.0 * kappa * std::sin(0.5 * p.psi) * c};
    }

private:
    ModulusContext ctx_;
    detail::AmplitudeIntegral<detail::QuarterIntegrand> integral_;
};

inline double u_of_phi(const ModulusContext& ctx, double phi) { return Amplitude(ctx).u_of_phi(phi); }

inline double phi_of_u(const ModulusContext& ctx, double u) { return Amplitude(ctx).phi_of_u(u); }

inline Trio trio_real(const ModulusContext& ctx, double u) { return Amplitude(ctx).trio(u); }

inline AmplitudeDerivatives derivatives_closed_form(const ModulusContext& ctx, double u) {
    return Amplitude(ctx).derivatives(u);
}

} // namespace hypell
