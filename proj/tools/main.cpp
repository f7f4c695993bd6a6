// diffsum: exact-rational series summation by the two differential tail
// formulas (Euler-Maclaurin style for same-sign series, Boole style for
// alternating series), with coefficient tables and a self-check battery.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 mathematical domain error.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <limits>
#include <optional>
#include <string>

#include "diffsum/coefficients.hpp"
#include "diffsum/engine.hpp"
#include "diffsum/errors.hpp"
#include "diffsum/serialize.hpp"
#include "diffsum/verify.hpp"

namespace {

struct CommonFlags {
    int digits = 30;
    std::string format = "table";
    std::int64_t split = 10;
    std::string orders = "auto";
    int max_order = 16;
};

void add_output_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--digits", flags.digits, "Fractional digits in decimal output")
        ->check(CLI::Range(1, std::numeric_limits<int>::max()))
        ->capture_default_str();
    cmd->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
}

void add_summation_flags(CLI::App* cmd, CommonFlags& flags) {
    add_output_flags(cmd, flags);
    cmd->add_option("--split", flags.split, "Head/tail split index x")
        ->check(CLI::Range(std::int64_t{1}, std::numeric_limits<std::int64_t>::max()))
        ->capture_default_str();
    cmd->add_option("--orders", flags.orders, "Derivative orders K, or 'auto'")
        ->capture_default_str();
    cmd->add_option("--max-order", flags.max_order, "Order cap for the auto rule")
        ->check(CLI::Range(1, std::numeric_limits<int>::max()))
        ->capture_default_str();
}

diffsum::OutputFormat parse_format(const std::string& name) {
    if (name == "json") {
        return diffsum::OutputFormat::Json;
    }
    if (name == "csv") {
        return diffsum::OutputFormat::Csv;
    }
    return diffsum::OutputFormat::Table;
}

std::optional<int> parse_orders(const std::string& text) {
    if (text == "auto") {
        return std::nullopt;
    }
    size_t used = 0;
    int k = 0;
    try {
        k = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("--orders must be a positive integer or 'auto'");
    }
    if (used != text.size() || k < 1) {
        throw std::invalid_argument("--orders must be a positive integer or 'auto'");
    }
    return k;
}

int run_coeffs(const std::string& family, int count, const CommonFlags& flags) {
    const diffsum::OutputFormat format = parse_format(flags.format);
    if (family == "weights") {
        std::cout << diffsum::render_weight_rows(diffsum::engine_weights(count), format);
        return 0;
    }
    const diffsum::CoefficientTable table = family == "coth"
                                                ? diffsum::coth_coefficients(count)
                                                : diffsum::tanh_coefficients(count);
    std::cout << diffsum::render_coefficient_rows(table, flags.digits, format);
    return 0;
}

int run_sum(const std::string& series, int exponent, bool alternating, const CommonFlags& flags) {
    const std::optional<int> orders = parse_orders(flags.orders);
    diffsum::SeriesSumResult result;
    if (series == "zeta") {
        result = diffsum::zeta_sum(exponent, flags.split, orders, flags.max_order);
    } else if (series == "eta") {
        result = diffsum::eta_sum(exponent, flags.split, orders, flags.max_order);
    } else {
        const diffsum::PowerTerm term(exponent);
        const auto kind = alternating ? diffsum::SeriesKind::Alternating
                                      : diffsum::SeriesKind::SameSign;
        result = diffsum::sum_series_detailed(term, flags.split, kind, orders, flags.max_order);
    }
    diffsum::SumDescription description;
    description.series = series;
    description.exponent = exponent;
    description.split = flags.split;
    description.alternating = series == "eta" || alternating;
    description.exact = true;
    std::cout << diffsum::render_sum_result(description, result, flags.digits,
                                            parse_format(flags.format));
    return 0;
}

int run_verify(int depth) {
    const diffsum::VerificationReport report = diffsum::run_verification(depth);
    std::cout << diffsum::render_verification_report(report, depth);
    return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Series summation via differential tail formulas"};
    app.require_subcommand(1);

    std::string coeff_family;
    int coeff_count = 1;
    CommonFlags coeff_flags;
    CLI::App* coeffs = app.add_subcommand("coeffs", "Print coefficient or weight tables");
    coeffs->add_option("family", coeff_family, "coth, tanh or weights")
        ->required()
        ->check(CLI::IsMember({"coth", "tanh", "weights"}));
    coeffs->add_option("count", coeff_count, "Number of rows")
        ->required()
        ->check(CLI::Range(1, std::numeric_limits<int>::max()));
    add_output_flags(coeffs, coeff_flags);

    int zeta_n = 2;
    CommonFlags zeta_flags;
    CLI::App* zeta = app.add_subcommand("zeta", "Accelerated zeta(n) = sum 1/k^n");
    zeta->add_option("n", zeta_n, "Exponent n >= 2")->required();
    add_summation_flags(zeta, zeta_flags);

    int eta_n = 1;
    CommonFlags eta_flags;
    CLI::App* eta = app.add_subcommand("eta", "Accelerated eta(n) = sum (-1)^{k+1}/k^n");
    eta->add_option("n", eta_n, "Exponent n >= 1")->required();
    add_summation_flags(eta, eta_flags);

    int sum_exponent = 2;
    bool sum_alternating = false;
    CommonFlags sum_flags;
    CLI::App* sum = app.add_subcommand("sum", "Accelerated power-term series sum");
    sum->add_option("-n,--exponent", sum_exponent, "Power-term exponent")->required();
    sum->add_flag("--alternating", sum_alternating, "Alternating signs");
    add_summation_flags(sum, sum_flags);

    int verify_depth = 10;
    CLI::App* verify = app.add_subcommand("verify", "Run the identity cross-check battery");
    verify->add_option("--depth", verify_depth, "Coefficient depth to verify")
        ->check(CLI::Range(1, std::numeric_limits<int>::max()))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (coeffs->parsed()) {
            return run_coeffs(coeff_family, coeff_count, coeff_flags);
        }
        if (zeta->parsed()) {
            return run_sum("zeta", zeta_n, false, zeta_flags);
        }
        if (eta->parsed()) {
            return run_sum("eta", eta_n, true, eta_flags);
        }
        if (sum->parsed()) {
            return run_sum("sum", sum_exponent, sum_alternating, sum_flags);
        }
        if (verify->parsed()) {
            return run_verify(verify_depth);
        }
    } catch (const diffsum::DivergenceError& e) {
        std::cerr << "divergence: " << e.what() << "\n";
        return 3;
    } catch (const diffsum::PoleError& e) {
        std::cerr << "pole: " << e.what() << "\n";
        return 3;
    } catch (const diffsum::DivideByZeroError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const diffsum::SeriesDivisionError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
