#pragma once

#include <json.hpp>

#include "falsetheta/series.hpp"
#include "falsetheta/verify.hpp"

namespace falsetheta {

/// { "q_truncation": N, "terms": [ {"z": i, "q": j, "c": "<decimal>"} ... ] }
/// with terms sorted by (q, z). Coefficients travel as decimal strings so
/// arbitrary-precision values stay portable.
[[nodiscard]] inline nlohmann::json series_to_json(const BivariateSeries& series) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [mono, c] : series.terms())
        terms.push_back({{"z", mono.z}, {"q", mono.q}, {"c", c.get_str()}});
    return {{"q_truncation", series.q_truncation()}, {"terms", std::move(terms)}};
}

[[nodiscard]] inline nlohmann::json report_to_json(const VerificationReport& report) {
    nlohmann::json failures = nlohmann::json::array();
    for (const Failure& f : report.failures)
        failures.push_back({{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
    return {{"schema", 1},
            {"suite", report.suite},
            {"parameters", report.parameters},
            {"status", report.passed() ? "pass" : "fail"},
            {"failures", std::move(failures)},
            {"elapsed_ms", report.elapsed_ms}};
}

[[nodiscard]] inline nlohmann::json reports_to_json(
    const std::vector<VerificationReport>& reports) {
    nlohmann::json entries = nlohmann::json::array();
    for (const VerificationReport& report : reports)
        entries.push_back(report_to_json(report));
    return {{"schema", 1}, {"reports", std::move(entries)}};
}

}  // namespace falsetheta
