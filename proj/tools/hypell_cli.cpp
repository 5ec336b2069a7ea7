// Command-line front end: context inspection, point evaluation, real-axis
// tables, zero finding and the verification sweep.
//
// Exit codes: 0 success / verification passed, 1 verification failed,
// 2 invalid input.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypell/hypell.hpp"
#include "hypell/serialize.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verification_failed = 1;
constexpr int exit_invalid_input = 2;

const CLI::Validator open_unit_interval = CLI::Validator(
    [](const std::string& text) -> std::string {
        double value = 0.0;
        try {
            value = std::stod(text);
        } catch (const std::exception&) {
            return "not a number: " + text;
        }
        if (!(value > 0.0 && value < 1.0))
            return "value must lie in (0, 1), got " + text;
        return {};
    },
    "(0,1)");

using Evaluator = hypell::complex (*)(const hypell::ModulusContext&, hypell::complex);

const std::map<std::string, Evaluator>& evaluators() {
    static const std::map<std::string, Evaluator> table = {
        {"d", [](const hypell::ModulusContext& c, hypell::complex z) { return hypell::d_complex(c, z); }},
        {"c", [](const hypell::ModulusContext& c, hypell::complex z) { return hypell::c_complex(c, z); }},
        {"s2", [](const hypell::ModulusContext& c, hypell::complex z) { return hypell::s_squared(c, z); }},
        {"wp", [](const hypell::ModulusContext& c, hypell::complex z) { return hypell::wp(c, z); }},
        {"wp-prime", [](const hypell::ModulusContext& c, hypell::complex z) { return hypell::wp_prime(c, z); }},
    };
    return table;
}

std::vector<std::string> function_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : evaluators())
        names.push_back(name);
    return names;
}

std::string format_double(double value) {
    if (std::isnan(value))
        return "nan";
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", value + 0.0); // no "-0"
    return buffer;
}

void print_json(const nlohmann::json& doc) { std::cout << doc.dump(2) << '\n'; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Elliptic functions generated by F(1/4, 3/4; 1/2; .): evaluation and verification"};
    app.require_subcommand(1);

    double kappa = 0.5;

    auto* context_cmd = app.add_subcommand("context", "Print the modulus context as JSON");
    context_cmd->add_option("--kappa", kappa, "Modulus kappa in (0,1)")->required()->check(open_unit_interval);

    std::string fn = "d";
    double re = 0.0;
    double im = 0.0;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate one function at a complex point");
    eval_cmd->add_option("--kappa", kappa, "Modulus kappa in (0,1)")->required()->check(open_unit_interval);
    eval_cmd->add_option("--fn", fn, "Function")->required()->check(CLI::IsMember(function_names()));
    eval_cmd->add_option("--re", re, "Real part of the argument");
    eval_cmd->add_option("--im", im, "Imaginary part of the argument");

    double from = 0.0;
    double to = 1.0;
    int steps = 10;
    std::string format = "csv";
    auto* table_cmd = app.add_subcommand("table", "Tabulate a function along the real axis");
    table_cmd->add_option("--kappa", kappa, "Modulus kappa in (0,1)")->required()->check(open_unit_interval);
    table_cmd->add_option("--fn", fn, "Function")->required()->check(CLI::IsMember(function_names()));
    table_cmd->add_option("--from", from, "First sample")->required();
    table_cmd->add_option("--to", to, "Last sample")->required();
    table_cmd->add_option("--steps", steps, "Number of intervals (steps + 1 samples)")
        ->required()
        ->check(CLI::PositiveNumber);
    table_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));

    auto* zeros_cmd = app.add_subcommand("zeros", "Locate the zeros of d and check wp there");
    zeros_cmd->add_option("--kappa", kappa, "Modulus kappa in (0,1)")->required()->check(open_unit_interval);

    std::vector<double> kappas;
    double tol = 1e-8;
    int points = 11;
    std::string report_path;
    auto* verify_cmd = app.add_subcommand("verify", "Run the verification sweep");
    verify_cmd->add_option("--kappas", kappas, "Comma-separated moduli in (0,1)")
        ->delimiter(',')
        ->check(open_unit_interval);
    verify_cmd->add_option("--tol", tol, "Pass threshold for every residual")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--points", points, "Grid points per axis")->check(CLI::Range(2, 401));
    verify_cmd->add_option("--report", report_path, "Also write the JSON report to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_invalid_input;
    }

    try {
        if (*context_cmd) {
            print_json(hypell::to_json(hypell::context_from_kappa(kappa)));
            return exit_ok;
        }

        if (*eval_cmd) {
            const auto ctx = hypell::context_from_kappa(kappa);
            const hypell::complex z{re, im};
            const hypell::complex value = evaluators().at(fn)(ctx, z);
            print_json({{"kappa", kappa},
                        {"fn", fn},
                        {"z", hypell::complex_to_json(z)},
                        {"value", hypell::complex_to_json(value)}});
            return exit_ok;
        }

        if (*table_cmd) {
            const auto ctx = hypell::context_from_kappa(kappa);
            const Evaluator evaluate = evaluators().at(fn);
            nlohmann::json rows = nlohmann::json::array();
            if (format == "csv")
                std::cout << "u,re,im\n";
            for (int i = 0; i <= steps; ++i) {
                const double u = from + (to - from) * i / steps;
                hypell::complex value{std::numeric_limits<double>::quiet_NaN(),
                                      std::numeric_limits<double>::quiet_NaN()};
                try {
                    value = evaluate(ctx, {u, 0.0});
                } catch (const hypell::pole_error&) {
                    // Samples at poles are reported as NaN rather than aborting the table.
                }
                if (format == "csv")
                    std::cout << format_double(u) << ',' << format_double(value.real()) << ','
                              << format_double(value.imag()) << '\n';
                else
                    rows.push_back({{"u", u}, {"re", value.real()}, {"im", value.imag()}});
            }
            if (format == "json")
                print_json({{"kappa", kappa}, {"fn", fn}, {"samples", rows}});
            return exit_ok;
        }

        if (*zeros_cmd) {
            const auto ctx = hypell::context_from_kappa(kappa);
            const auto zeros = hypell::find_zeros(ctx);
            const double kappa2 = kappa * kappa;
            const hypell::complex pp = hypell::wp_prime(ctx, zeros.z_plus);
            nlohmann::json doc = hypell::to_json(zeros);
            doc["kappa"] = kappa;
            doc["checks"] = {
                {"d_at_z_plus", hypell::complex_to_json(hypell::d_complex(ctx, zeros.z_plus))},
                {"wp_at_z_plus", hypell::complex_to_json(hypell::wp(ctx, zeros.z_plus))},
                {"wp_at_z_plus_expected", 0.5 * kappa2 - 1.0 / 3.0},
                {"wp_at_z_plus_shifted",
                 hypell::complex_to_json(hypell::wp(ctx, zeros.z_plus + ctx.half_period_imag()))},
                {"wp_at_z_plus_shifted_expected", 1.0 / 6.0},
                {"wp_prime_squared_at_z_plus", hypell::complex_to_json(pp * pp)},
                {"wp_prime_squared_expected", 0.5 * kappa2 * kappa2 * (kappa2 - 1.0)},
            };
            print_json(doc);
            return exit_ok;
        }

        if (*verify_cmd) {
            // The rectangle depends on kappa, so a custom density is applied per modulus.
            hypell::VerificationResult result;
            result.tolerance = tol;
            for (double k : kappas) {
                std::optional<hypell::GridSpec> per_kappa;
                if (points != 11) {
                    auto g = hypell::default_grid(hypell::context_from_kappa(k));
                    g.points_per_axis = points;
                    per_kappa = g;
                }
                auto partial = hypell::run_verification_suite({k}, tol, per_kappa);
                result.passed = result.passed && partial.passed;
                for (auto& o : partial.outcomes)
                    result.outcomes.push_back(std::move(o));
            }
            const std::string body = hypell::to_json(result).dump(2);
            std::cout << body << '\n';
            if (!report_path.empty()) {
                std::ofstream out(report_path);
                if (!out) {
                    std::cerr << "verify: cannot open report file " << report_path << '\n';
                    return exit_invalid_input;
                }
                out << body << '\n';
            }
            std::cerr << "verify: " << (result.passed ? "passed" : "FAILED") << " (" << result.outcomes.size()
                      << " moduli, tol " << tol << ")\n";
            return result.passed ? exit_ok : exit_verification_failed;
        }
    } catch (const hypell::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid_input;
    }
    return exit_invalid_input;
}
