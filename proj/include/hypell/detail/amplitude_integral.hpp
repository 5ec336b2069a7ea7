#pragma once

#include <cmath>
#include <numbers>
#include <utility>

#include "hypell/numerics.hpp"

namespace hypell::detail {

// Tolerances used for amplitude integrals and their inversion. Tighter than
// the library default so that finite differences of the inverse stay clean.
inline constexpr Tolerance amplitude_quadrature_tolerance{1e-15, 1e-15, 64};
inline constexpr Tolerance amplitude_root_tolerance{1e-15, 0.0, 64};

// u(phi) = integral_0^phi g(theta) d theta for an integrand g that is even,
// pi-periodic and >= 1, together with its inverse phi(u).
//
// phi is reduced to phi = n*pi + r with |r| <= pi/2, so every quadrature runs
// over at most a quarter period; u(n*pi + r) = 2n*u(pi/2) + u(r).
template <class Integrand>
class AmplitudeIntegral {
public:
    explicit AmplitudeIntegral(Integrand g) : g_(std::move(g)) {
        quarter_ = integrate_adaptive(g_, 0.0, std::numbers::pi / 2, amplitude_quadrature_tolerance);
    }

    // u(pi/2).
    double quarter() const { return quarter_; }

    double integrand(double phi) const { return g_(phi); }

    double integral(double phi) const {
        if (!std::isfinite(phi))
            throw domain_error("amplitude integral: argument must be finite");
        const double turns = std::nearbyint(phi / std::numbers::pi);
        const double r = phi - turns * std::numbers::pi;
        return 2.0 * turns * quarter_ + reduced(r);
    }

    double inverse(double u) const {
        if (!std::isfinite(u))
            throw domain_error("amplitude inverse: argument must be finite");
        const double turns = std::nearbyint(u / (2.0 * quarter_));
        const double r = u - 2.0 * turns * quarter_;
        if (r == 0.0)
            return turns * std::numbers::pi;
        constexpr double half_pi = std::numbers::pi / 2;
        // u(phi) >= phi on [0, pi/2], so the root lies between 0 and min(r, pi/2).
        const double edge = std::copysign(std::min(std::abs(r), half_pi), r);
        const Bracket bracket{std::min(0.0, edge), std::max(0.0, edge)};
        const double phi = solve_monotone([&](double x) { return reduced(x) - r; },
                                          [&](double x) { return g_(x); }, bracket,
                                          amplitude_root_tolerance, r * half_pi / quarter_);
        return turns * std::numbers::pi + phi;
    }

private:
    // Integral over [0, r], |r| <= pi/2; exactly odd in r.
    double reduced(double r) const {
        const double v = integrate_adaptive(g_, 0.0, std::abs(r), amplitude_quadrature_tolerance);
        return std::copysign(v, r);
    }

    Integrand g_;
    double quarter_ = 0.0;
};

} // namespace hypell::detail
