#pragma once

// Classical Jacobi layer: complete integral K via the AGM, sn/cn/dn by
// descending Landen transformation for real arguments, the addition theorem
// for complex arguments, and the amplitude am obtained by inverting the
// incomplete integral directly.

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>

#include "hypell/detail/amplitude_integral.hpp"
#include "hypell/errors.hpp"
#include "hypell/hypergeometric.hpp"
#include "hypell/numerics.hpp"

namespace hypell {

using complex = std::complex<double>;

struct JacobiTriple {
    double sn;
    double cn;
    double dn;
};

struct ComplexJacobiTriple {
    complex sn;
    complex cn;
    complex dn;
};

/// Complementary modulus sqrt(1 - k^2), computed as sqrt((1-k)(1+k)).
inline double complementary_modulus(double k) { return std::sqrt((1.0 - k) * (1.0 + k)); }

/// Complete elliptic integral of the first kind, K(k) = pi / (2 agm(1, k')).
inline double complete_K(double k) {
    if (!(k >= 0.0) || !(k < 1.0))
        throw domain_error("complete_K: requires 0 <= k < 1");
    return std::numbers::pi / (2.0 * agm(1.0, complementary_modulus(k), Tolerance{1e-16, 0.0, 64}));
}

/// sn, cn, dn for real x and modulus 0 <= k < 1.
///
/// Descending Landen (AGM) scheme: phi_N = 2^N a_N x, then
/// phi_{n-1} = (phi_n + asin(c_n / a_n sin phi_n)) / 2 down to phi_0 = am(x).
/// dn is taken as sqrt(1 - k^2 sn^2), which is positive on the real line.
inline JacobiTriple sn_cn_dn_real(double x, double k) {
    if (!(k >= 0.0) || !(k < 1.0))
        throw domain_error("sn_cn_dn_real: requires 0 <= k < 1");
    if (!std::isfinite(x))
        throw domain_error("sn_cn_dn_real: argument must be finite");
    if (k == 0.0)
        return {std::sin(x), std::cos(x), 1.0};

    constexpr int max_levels = 32;
    std::array<double, max_levels + 1> a{};
    std::array<double, max_levels + 1> c{};
    a[0] = 1.0;
    c[0] = k;
    double b = complementary_modulus(k);
    int levels = 0;
    while (std::abs(c[levels]) > std::numeric_limits<double>::epsilon()) {
        if (levels == max_levels)
            throw iteration_error("sn_cn_dn_real: Landen descent did not converge");
        const double an = a[levels];
        a[levels + 1] = 0.5 * (an + b);
        c[levels + 1] = 0.5 * (an - b);
        b = std::sqrt(an * b);
        ++levels;
    }

    // sn is odd and cn, dn are even; work with |x| so that conjugate and
    // reflected evaluations are bit-for-bit symmetric.
    double phi = std::ldexp(a[levels] * std::abs(x), levels);
    for (int n = levels; n > 0; --n)
        phi = 0.5 * (phi + std::asin(c[n] / a[n] * std::sin(phi)));

    const double sn = std::sin(phi);
    return {std::copysign(1.0, x) * sn, std::cos(phi), std::sqrt((1.0 - k * sn) * (1.0 + k * sn))};
}

/// sn, cn, dn at complex z = x + iy.
///
/// Addition theorem on x (modulus k) and iy, with the imaginary part handled by
/// Jacobi's imaginary transformation (modulus k'):
///   sn = (s d1 + i c d s1 c1) / D,  cn = (c c1 - i s d s1 d1) / D,
///   dn = (d c1 d1 - i k^2 s c s1) / D,  D = c1^2 + k^2 s^2 s1^2.
/// Throws pole_error within `pole_exclusion` of a pole iK' + 2mK + 2inK'.
inline ComplexJacobiTriple sn_cn_dn_complex(complex z, double k,
                                            std::optional<double> pole_exclusion = std::nullopt) {
    if (!(k >= 0.0) || !(k < 1.0))
        throw domain_error("sn_cn_dn_complex: requires 0 <= k < 1");
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw domain_error("sn_cn_dn_complex: argument must be finite");

    const double kp = complementary_modulus(k);
    const double big_k = complete_K(k);
    const double big_kp = complete_K(kp);
    const double radius = pole_exclusion.value_or(1e-3 * std::min(big_k, big_kp));
    const double m = std::nearbyint(z.real() / (2.0 * big_k));
    const double n = std::nearbyint((z.imag() - big_kp) / (2.0 * big_kp));
    const complex nearest_pole{2.0 * m * big_k, (2.0 * n + 1.0) * big_kp};
    if (std::abs(z - nearest_pole) < radius)
        throw pole_error("sn_cn_dn_complex: argument within pole-exclusion radius");

    const auto addition = [&](double x, double y) -> ComplexJacobiTriple {
        const auto [s, c, d] = sn_cn_dn_real(x, k);
        if (y == 0.0)
            return {complex{s}, complex{c}, complex{d}};
        const auto [s1, c1, d1] = sn_cn_dn_real(y, kp);
        const double k2 = k * k;
        const double den = c1 * c1 + k2 * s * s * s1 * s1;
        return {complex{s * d1, c * d * s1 * c1} / den, complex{c * c1, -s * d * s1 * d1} / den,
                complex{d * c1 * d1, -k2 * s * c * s1} / den};
    };

    // Near a pole the denominator above cancels; evaluate at w = z - (2n+1)iK'
    // instead and use sn(w + iK') = 1/(k sn w), cn = -i dn w/(k sn w),
    // dn = -i cn w/sn w. The shift by 2nK' is a period of sn and flips
    // cn and dn together when n is odd.
    const double offset = z.imag() - (2.0 * n + 1.0) * big_kp;
    if (k > 0.0 && std::abs(offset) < 0.5 * big_kp) {
        const auto [sw, cw, dw] = addition(z.real(), offset);
        const complex minus_i{0.0, -1.0};
        const double sign = std::fmod(std::abs(n), 2.0) == 1.0 ? -1.0 : 1.0;
        return {1.0 / (k * sw), sign * minus_i * dw / (k * sw), sign * minus_i * cw / sw};
    }
    return addition(z.real(), z.imag());
}

namespace detail {

struct ClassicalIntegrand {
    double kappa;
    double operator()(double theta) const {
        const double s = kappa * std::sin(theta);
        return f_classical(s * s);
    }
};

} // namespace detail

/// The classical amplitude: inverse of u = integral_0^phi (1 - kappa^2 sin^2)^(-1/2).
///
/// Built from quadrature and Newton inversion only, so it serves as a
/// cross-check on the Landen route of sn_cn_dn_real.
class ClassicalAmplitude {
public:
    explicit ClassicalAmplitude(double kappa) : kappa_(validated(kappa)), integral_({kappa_}) {}

    double kappa() const { return kappa_; }
    /// K(kappa) as the quarter-period integral.
    double quarter_period() const { return integral_.quarter(); }
    /// u(phi), the incomplete integral of the first kind.
    double integral(double phi) const { return integral_.integral(phi); }
    /// am(u).
    double am(double u) const { return integral_.inverse(u); }

    /// dn by definition (1): d am / du, via a Richardson-extrapolated central
    /// difference with step h and h/2.
    double dn_by_derivative(double u, double h = 1e-3) const {
        const auto central = [&](double step) { return (am(u + step) - am(u - step)) / (2.0 * step); };
        return (4.0 * central(0.5 * h) - central(h)) / 3.0;
    }

    /// dn by definition (2): sqrt(1 - kappa^2 sin^2 am u).
    double dn_by_amplitude(double u) const {
        const double s = kappa_ * std::sin(am(u));
        return std::sqrt((1.0 - s) * (1.0 + s));
    }

private:
    static double validated(double kappa) {
        if (!(kappa >= 0.0) || !(kappa < 1.0))
            throw domain_error("classical amplitude: requires 0 <= kappa < 1");
        return kappa;
    }

    double kappa_;
    detail::AmplitudeIntegral<detail::ClassicalIntegrand> integral_;
};

/// am(x) at modulus kappa by quadrature and Newton inversion.
inline double classical_am(double x, double kappa) { return ClassicalAmplitude(kappa).am(x); }

} // namespace hypell
