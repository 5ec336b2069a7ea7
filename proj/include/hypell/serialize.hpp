#pragma once

// JSON encodings used by the command-line tool. Keys are emitted in sorted
// order and no timestamps are written, so equal inputs give identical bytes.

#include <complex>

#include <json.hpp>

#include "hypell/family.hpp"
#include "hypell/modulus.hpp"
#include "hypell/verify.hpp"

namespace hypell {

inline nlohmann::json complex_to_json(complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

inline nlohmann::json to_json(const ModulusContext& ctx) {
    return {{"kappa", ctx.kappa()}, {"lambda", ctx.lambda()},   {"k", ctx.k()},
            {"kprime", ctx.kprime()}, {"g2", ctx.g2()},         {"g3", ctx.g3()},
            {"e1", ctx.e1()},         {"e3", ctx.e3()},         {"e2", ctx.e2()},
            {"omega", ctx.omega()},   {"omega_prime", ctx.omega_prime()}, {"scale", ctx.scale()}};
}

inline nlohmann::json to_json(const GridSpec& grid) {
    return {{"lower", complex_to_json(grid.lower)},
            {"upper", complex_to_json(grid.upper)},
            {"points_per_axis", grid.points_per_axis},
            {"pole_exclusion", grid.pole_exclusion}};
}

inline nlohmann::json to_json(const ResidualReport& report) {
    nlohmann::json residuals = nlohmann::json::object();
    for (const auto& [label, value] : report.residuals)
        residuals[label] = value;
    return {{"kappa", report.kappa},
            {"grid", to_json(report.grid)},
            {"residuals", residuals},
            {"skipped_points", report.skipped_points}};
}

inline nlohmann::json to_json(const ZeroPair& zeros) {
    return {{"z_plus", complex_to_json(zeros.z_plus)}, {"z_minus", complex_to_json(zeros.z_minus)}};
}

inline nlohmann::json to_json(const SimpleZeroWitness& w) {
    return {{"point", complex_to_json(w.point)},
            {"s_squared", complex_to_json(w.s_squared)},
            {"s_squared_slope", w.s_squared_slope},
            {"wp_prime_squared", w.wp_prime_squared},
            {"kappa6_over_16", w.kappa6_over_16},
            {"k6_over_16", w.k6_over_16}};
}

inline nlohmann::json to_json(const VerificationResult& result) {
    nlohmann::json outcomes = nlohmann::json::array();
    for (const auto& o : result.outcomes) {
        nlohmann::json entry = {{"kappa", o.kappa}, {"passed", o.passed}};
        if (o.report)
            entry["report"] = to_json(*o.report);
        if (!o.failure.empty())
            entry["failure"] = o.failure;
        outcomes.push_back(std::move(entry));
    }
    return {{"tolerance", result.tolerance}, {"passed", result.passed}, {"results", outcomes}};
}

} // namespace hypell
