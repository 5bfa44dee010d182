// Command-line front end: expands identities, lists signed pair enumerations,
// runs the involution and acceptance suites, and renders boxed diagrams.
// Exit codes: 0 all-pass, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "falsetheta/diagrams.hpp"
#include "falsetheta/json_io.hpp"
#include "falsetheta/verify.hpp"

using namespace falsetheta;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitUsage;
}

FamilySpec resolve_family(const std::string& name, int m, int r) {
    if (name == "fq4") return FamilySpec::fq4();
    if (name == "fq3p") return FamilySpec::fq3_prime();
    return FamilySpec::general(m, r);
}

IdentityId resolve_identity(const std::string& name, int m, int r) {
    if (name == "fq4") return IdentityId::fq4();
    if (name == "fq3") return IdentityId::fq3();
    return IdentityId::general_z(m, r);
}

/// Pair-spec syntax: comma-separated sizes, `o` suffix marking an overlined
/// first occurrence, e.g. "7,5o,5". Empty string means the empty
/// overpartition.
std::vector<PartEntry> parse_parts(const std::string& spec) {
    std::vector<PartEntry> entries;
    if (spec.empty()) return entries;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        const std::size_t comma = spec.find(',', pos);
        std::string token = spec.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        bool overlined = false;
        if (!token.empty() && token.back() == 'o') {
            overlined = true;
            token.pop_back();
        }
        if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed pair spec near '" + token + "'");
        entries.push_back({std::stoi(token), overlined});
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return entries;
}

std::string parts_text(const BoxedPair& pair) {
    std::string out;
    for (const PartRun& run : pair.pi().runs()) {
        for (int copy = 0; copy < run.multiplicity; ++copy) {
            if (!out.empty()) out += ",";
            out += std::to_string(run.size);
            if (run.overlined && copy == 0) out += "o";
        }
    }
    return out;
}

void write_json(const nlohmann::json& payload, const std::string& path) {
    if (path.empty()) return;
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot write " + path);
    file << payload.dump(2) << "\n";
}

int run_expand(const std::string& identity, int m, int r, int order,
               const std::string& format) {
    const IdentityId id = resolve_identity(identity, m, r);
    const BivariateSeries lhs = identity_lhs(id, order);
    const BivariateSeries rhs = identity_rhs(id, order);
    const BivariateSeries difference = lhs - rhs;
    const bool equal = difference.is_zero();
    if (format == "json") {
        const nlohmann::json payload = {{"identity", id.name()},
                                        {"q_truncation", order},
                                        {"equal", equal},
                                        {"lhs", series_to_json(lhs)},
                                        {"rhs", series_to_json(rhs)},
                                        {"difference", series_to_json(difference)}};
        std::cout << payload.dump(2) << "\n";
    } else {
        std::cout << "identity: " << id.name() << "  (to q^" << order << ")\n";
        std::cout << "lhs = " << to_string(lhs) << "\n";
        std::cout << "rhs = " << to_string(rhs) << "\n";
        std::cout << "difference = " << to_string(difference) << "\n";
    }
    return equal ? kExitPass : kExitFailure;
}

int run_enumerate(const std::string& family_name, int m, int r, int n,
                  const std::string& format) {
    const FamilySpec family = resolve_family(family_name, m, r);
    const std::vector<BoxedPair> pairs = enumerate_pairs(n, family);
    ParityCounts counts;
    for (const BoxedPair& pair : pairs) (sign(pair) > 0 ? counts.even : counts.odd) += 1;
    const long long total = counts.even - counts.odd;
    const int predicted = predicted_count(n, family);

    if (format == "json") {
        nlohmann::json listing = nlohmann::json::array();
        for (const BoxedPair& pair : pairs) {
            nlohmann::json entry = {{"k", pair.k()},
                                    {"parts", parts_text(pair)},
                                    {"sign", sign(pair)},
                                    {"q_weight", q_weight(pair)}};
            if (family.is_general()) {
                entry["z_weight"] = z_weight(pair);
                entry["class"] = to_string(classify(pair));
            }
            listing.push_back(std::move(entry));
        }
        const nlohmann::json payload = {{"family", family.name()},
                                        {"n", n},
                                        {"pairs", std::move(listing)},
                                        {"count", pairs.size()},
                                        {"even", counts.even},
                                        {"odd", counts.odd},
                                        {"signed", total},
                                        {"predicted", predicted}};
        std::cout << payload.dump(2) << "\n";
    } else {
        for (const BoxedPair& pair : pairs) {
            std::cout << to_string(pair) << " sign=" << (sign(pair) > 0 ? "+1" : "-1")
                      << " q=" << q_weight(pair);
            if (family.is_general())
                std::cout << " z=" << z_weight(pair)
                          << " class=" << to_string(classify(pair));
            std::cout << "\n";
        }
        std::cout << "pairs=" << pairs.size() << " even=" << counts.even
                  << " odd=" << counts.odd << " signed=" << total
                  << " predicted=" << predicted << "\n";
    }
    return total == predicted ? kExitPass : kExitFailure;
}

int print_report(const VerificationReport& report, const std::string& format,
                 const std::string& out) {
    if (format == "json")
        std::cout << report_to_json(report).dump(2) << "\n";
    else {
        std::cout << format_report_line(report) << "\n";
        for (const Failure& f : report.failures)
            std::cout << "    " << f.input << " | expected: " << f.expected
                      << " | actual: " << f.actual << "\n";
    }
    write_json(report_to_json(report), out);
    return report.passed() ? kExitPass : kExitFailure;
}

int run_involution(const std::string& family_name, int m, int r, int n_max,
                   const std::string& format, const std::string& out) {
    if (family_name == "fq3p")
        return usage_error("no involution is known for the fq3p family; "
                           "only enumeration and fixed-point candidates are available");
    const FamilySpec family = resolve_family(family_name, m, r);
    return print_report(involution_suite(family, n_max), format, out);
}

int run_fixed_points(const std::string& family_name, int m, int r, int n_max,
                     const std::string& format) {
    const FamilySpec family = resolve_family(family_name, m, r);
    struct Entry {
        int n;
        BoxedPair pair;
    };
    std::vector<Entry> found;
    if (family.is_general()) {
        for (int n = 0; n <= n_max; ++n)
            for (const BoxedPair& pair : fixed_points(n, family))
                found.push_back({n, pair});
    } else {
        for (int k = 0; 3 * k * (k + 1) / 2 <= n_max; ++k) {
            const BoxedPair candidate = fq3_conjectured_fixed_point(k);
            found.push_back({q_weight(candidate), candidate});
        }
    }
    if (format == "json") {
        nlohmann::json listing = nlohmann::json::array();
        for (const Entry& entry : found)
            listing.push_back({{"n", entry.n},
                               {"k", entry.pair.k()},
                               {"parts", parts_text(entry.pair)},
                               {"sign", sign(entry.pair)},
                               {"conjectured", family.is_fq3_prime()}});
        const nlohmann::json payload = {{"family", family.name()},
                                        {"n_max", n_max},
                                        {"fixed_points", std::move(listing)}};
        std::cout << payload.dump(2) << "\n";
    } else {
        for (const Entry& entry : found) {
            std::cout << "n=" << entry.n << " " << to_string(entry.pair)
                      << " sign=" << (sign(entry.pair) > 0 ? "+1" : "-1");
            if (family.is_fq3_prime()) std::cout << " conjectured";
            std::cout << "\n";
        }
    }
    return kExitPass;
}

int run_render(int k, const std::string& parts, int m, int r) {
    const BoxedPair pair(k, Overpartition::from_parts(parse_parts(parts)),
                         FamilySpec::general(m, r));
    std::cout << render(pair);
    return kExitPass;
}

int run_report_all(const std::string& format, const std::string& out) {
    const std::vector<VerificationReport> reports = run_acceptance();
    bool all_passed = true;
    for (const VerificationReport& report : reports)
        all_passed = all_passed && report.passed();
    if (format == "json") {
        std::cout << reports_to_json(reports).dump(2) << "\n";
    } else {
        for (const VerificationReport& report : reports)
            std::cout << format_report_line(report) << "\n";
        std::cout << (all_passed ? "all suites passed" : "some suites FAILED") << "\n";
    }
    write_json(reports_to_json(reports), out);
    return all_passed ? kExitPass : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of false theta identities via q-series expansion, "
                 "signed overpartition-pair enumeration, and sign-reversing involutions"};
    app.require_subcommand(1);

    std::string identity, family, format = "text", parts, out;
    int m = 0, r = 0, n = 0, n_max = 0, k = 0;

    CLI::App* expand = app.add_subcommand("expand", "Expand both sides of an identity");
    expand->add_option("--identity", identity, "fq4, fq3, or general")
        ->required()
        ->check(CLI::IsMember({"fq4", "fq3", "general"}));
    expand->add_option("--m", m, "modulus for general");
    expand->add_option("--r", r, "residue for general");
    expand->add_option("--n", n, "q-truncation order")
        ->required()
        ->check(CLI::NonNegativeNumber);
    expand->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "List the weight-n pairs with signs, weights and classes");
    enumerate->add_option("--family", family, "fq4, fq3p, or general")
        ->required()
        ->check(CLI::IsMember({"fq4", "fq3p", "general"}));
    enumerate->add_option("--m", m, "modulus for general");
    enumerate->add_option("--r", r, "residue for general");
    enumerate->add_option("--n", n, "weight")->required()->check(CLI::NonNegativeNumber);
    enumerate->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* involution = app.add_subcommand(
        "involution", "Run the full involution property suite up to n-max");
    involution->add_option("--family", family, "fq4 or general")
        ->required()
        ->check(CLI::IsMember({"fq4", "fq3p", "general"}));
    involution->add_option("--m", m, "modulus for general");
    involution->add_option("--r", r, "residue for general");
    involution->add_option("--n-max", n_max, "largest weight checked")
        ->required()
        ->check(CLI::NonNegativeNumber);
    involution->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    involution->add_option("--out", out, "write the JSON report here");

    CLI::App* fixed = app.add_subcommand(
        "fixed-points", "List involution survivors (or conjectured ones for fq3p)");
    fixed->add_option("--family", family, "fq4, fq3p, or general")
        ->required()
        ->check(CLI::IsMember({"fq4", "fq3p", "general"}));
    fixed->add_option("--m", m, "modulus for general");
    fixed->add_option("--r", r, "residue for general");
    fixed->add_option("--n-max", n_max, "largest weight listed")
        ->required()
        ->check(CLI::NonNegativeNumber);
    fixed->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* render_cmd =
        app.add_subcommand("render", "Print the boxed m-modular diagram of a pair");
    render_cmd->add_option("--k", k, "box count")->required()->check(
        CLI::NonNegativeNumber);
    render_cmd->add_option("--parts", parts,
                           "comma-separated sizes, `o` marks an overline (e.g. 7,5o,5)");
    render_cmd->add_option("--m", m, "modulus")->default_val(2);
    render_cmd->add_option("--r", r, "residue")->default_val(1);

    CLI::App* report = app.add_subcommand(
        "report-all", "Run every acceptance suite and emit a machine-readable report");
    report->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    report->add_option("--out", out, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (expand->parsed()) return run_expand(identity, m, r, n, format);
        if (enumerate->parsed()) return run_enumerate(family, m, r, n, format);
        if (involution->parsed()) return run_involution(family, m, r, n_max, format, out);
        if (fixed->parsed()) return run_fixed_points(family, m, r, n_max, format);
        if (render_cmd->parsed()) return run_render(k, parts, m, r);
        if (report->parsed()) return run_report_all(format, out);
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    } catch (const std::out_of_range& e) {
        return usage_error(e.what());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitFailure;
    }
    return usage_error("no subcommand given");
}
