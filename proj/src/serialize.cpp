#include "diffsum/serialize.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace diffsum {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string family_label(Family family) {
    return family == Family::Coth ? "coth" : "tanh";
}

std::string dump(const ordered_json& j) {
    return j.dump(2) + "\n";
}

}  // namespace

std::string render_coefficient_rows(const CoefficientTable& table, int digits,
                                    OutputFormat format) {
    const std::string family = family_label(table.family());
    const int count = table.max_index();

    if (format == OutputFormat::Csv) {
        std::ostringstream out;
        out << "k,family,numerator,denominator,decimal\n";
        for (int k = 1; k <= count; ++k) {
            const Rational& v = table.at(k);
            out << k << ',' << family << ',' << v.num().get_str() << ',' << v.den().get_str()
                << ',' << v.to_decimal(digits) << '\n';
        }
        return out.str();
    }
    if (format == OutputFormat::Json) {
        ordered_json rows = ordered_json::array();
        for (int k = 1; k <= count; ++k) {
            const Rational& v = table.at(k);
            rows.push_back({{"k", k},
                            {"family", family},
                            {"numerator", v.num().get_str()},
                            {"denominator", v.den().get_str()},
                            {"decimal", v.to_decimal(digits)}});
        }
        return dump(rows);
    }

    std::ostringstream out;
    out << std::left << std::setw(4) << "k" << std::setw(8) << "family" << "value\n";
    for (int k = 1; k <= count; ++k) {
        const Rational& v = table.at(k);
        out << std::left << std::setw(4) << k << std::setw(8) << family << v.str() << " = "
            << v.to_decimal(digits) << '\n';
    }
    return out.str();
}

std::string render_weight_rows(const EngineWeights& weights, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        std::ostringstream out;
        out << "k,e,f,ratio\n";
        for (int k = 1; k <= weights.max_order; ++k) {
            out << k << ',' << weights.e(k).str() << ',' << weights.f(k).str() << ','
                << (weights.f(k) / weights.e(k)).str() << '\n';
        }
        return out.str();
    }
    if (format == OutputFormat::Json) {
        ordered_json rows = ordered_json::array();
        for (int k = 1; k <= weights.max_order; ++k) {
            rows.push_back({{"k", k},
                            {"e", weights.e(k).str()},
                            {"f", weights.f(k).str()},
                            {"ratio", (weights.f(k) / weights.e(k)).str()}});
        }
        return dump(rows);
    }

    std::ostringstream out;
    out << std::left << std::setw(4) << "k" << std::setw(22) << "e (same-sign)" << std::setw(22)
        << "f (alternating)" << "f/e\n";
    for (int k = 1; k <= weights.max_order; ++k) {
        out << std::left << std::setw(4) << k << std::setw(22) << weights.e(k).str()
            << std::setw(22) << weights.f(k).str() << (weights.f(k) / weights.e(k)).str() << '\n';
    }
    return out.str();
}

std::string render_sum_result(const SumDescription& description, const SeriesSumResult& result,
                              int digits, OutputFormat format) {
    if (format == OutputFormat::Json) {
        ordered_json j;
        j["series"] = description.series;
        j["exponent"] = description.exponent;
        j["split"] = description.split;
        j["alternating"] = description.alternating;
        j["value_decimal"] = result.value.to_decimal(digits);
        if (description.exact) {
            j["value_rational"] = {{"num", result.value.num().get_str()},
                                   {"den", result.value.den().get_str()}};
        }
        j["head_decimal"] = result.head.to_decimal(digits);
        j["tail_sign"] = result.tail_sign;
        j["order_used"] = result.tail.order_used;
        j["order_capped"] = result.tail.order_capped;
        j["error_estimate_decimal"] = result.tail.error_estimate.to_decimal(digits);
        ordered_json contributions = ordered_json::array();
        for (const Contribution& c : result.tail.contributions) {
            contributions.push_back({{"label", c.label}, {"decimal", c.value.to_decimal(digits)}});
        }
        j["contributions"] = contributions;
        return dump(j);
    }
    if (format == OutputFormat::Csv) {
        std::ostringstream out;
        out << "field,value\n";
        out << "series," << description.series << '\n';
        out << "exponent," << description.exponent << '\n';
        out << "split," << description.split << '\n';
        out << "alternating," << (description.alternating ? "true" : "false") << '\n';
        out << "value_decimal," << result.value.to_decimal(digits) << '\n';
        if (description.exact) {
            out << "value_num," << result.value.num().get_str() << '\n';
            out << "value_den," << result.value.den().get_str() << '\n';
        }
        out << "head_decimal," << result.head.to_decimal(digits) << '\n';
        out << "tail_sign," << result.tail_sign << '\n';
        out << "order_used," << result.tail.order_used << '\n';
        out << "order_capped," << (result.tail.order_capped ? "true" : "false") << '\n';
        out << "error_estimate_decimal," << result.tail.error_estimate.to_decimal(digits) << '\n';
        for (const Contribution& c : result.tail.contributions) {
            out << "contribution:" << c.label << ',' << c.value.to_decimal(digits) << '\n';
        }
        return out.str();
    }

    std::ostringstream out;
    out << description.series << "(" << description.exponent << ")  split=" << description.split
        << "  orders=" << result.tail.order_used
        << (result.tail.order_capped ? " (capped)" : "") << '\n';
    out << "value           " << result.value.to_decimal(digits) << '\n';
    if (description.exact) {
        out << "exact           " << result.value.str() << '\n';
    }
    out << "head            " << result.head.to_decimal(digits) << '\n';
    out << "tail sign       " << result.tail_sign << '\n';
    out << "error estimate  " << result.tail.error_estimate.to_decimal(digits) << '\n';
    out << "contributions\n";
    for (const Contribution& c : result.tail.contributions) {
        out << "  " << std::left << std::setw(8) << c.label << c.value.to_decimal(digits) << '\n';
    }
    return out.str();
}

std::string render_verification_report(const VerificationReport& report, int depth) {
    std::ostringstream out;
    int passed = 0;
    for (const CheckResult& c : report.checks) {
        if (c.passed) {
            ++passed;
            out << "ok    " << c.name << '\n';
        } else {
            out << "FAIL  " << c.name << ": " << c.detail << '\n';
        }
    }
    out << passed << "/" << report.checks.size() << " checks passed (depth " << depth << ")\n";
    if (const CheckResult* failure = report.first_failure()) {
        out << "first failure: " << failure->name << '\n';
    }
    return out.str();
}

}  // namespace diffsum
