#pragma once

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "falsetheta/diagrams.hpp"
#include "falsetheta/series.hpp"

namespace falsetheta {

struct Failure {
    std::string input;
    std::string expected;
    std::string actual;
};

/// Outcome of one verification suite. A report passes exactly when its
/// failure list is empty; given the same parameters the contents are
/// deterministic regardless of how many threads ran the checks.
struct VerificationReport {
    std::string suite;
    std::string parameters;
    std::vector<Failure> failures;
    long long elapsed_ms = 0;

    [[nodiscard]] bool passed() const { return failures.empty(); }
};

/// Worker count: FALSETHETA_THREADS when set to a positive integer, else the
/// hardware concurrency (at least 1).
[[nodiscard]] inline int thread_budget() {
    if (const char* env = std::getenv("FALSETHETA_THREADS")) {
        const int value = std::atoi(env);
        if (value >= 1) return value;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(i) for i in [begin, end) across the thread budget. fn must not
/// throw; workers write only to their own index's slot.
template <typename Fn>
void parallel_for_index(int begin, int end, Fn&& fn) {
    const int count = end - begin;
    const int workers = std::min(thread_budget(), count);
    if (workers <= 1) {
        for (int i = begin; i < end; ++i) fn(i);
        return;
    }
    std::atomic<int> next{begin};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (int i; (i = next.fetch_add(1)) < end;) fn(i);
        });
    }
    for (std::thread& worker : pool) worker.join();
}

namespace detail {

template <typename Body>
[[nodiscard]] VerificationReport timed_report(std::string suite, std::string parameters,
                                              Body&& body, long long budget_ms = 0) {
    VerificationReport report;
    report.suite = std::move(suite);
    report.parameters = std::move(parameters);
    const auto start = std::chrono::steady_clock::now();
    body(report);
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (budget_ms > 0 && report.elapsed_ms >= budget_ms)
        report.failures.push_back({"runtime", "< " + std::to_string(budget_ms) + " ms",
                                   std::to_string(report.elapsed_ms) + " ms"});
    return report;
}

inline void expect(VerificationReport& report, bool ok, std::string input,
                   std::string expected, std::string actual) {
    if (!ok)
        report.failures.push_back({std::move(input), std::move(expected), std::move(actual)});
}

[[nodiscard]] inline std::string series_diff_summary(const BivariateSeries& a,
                                                     const BivariateSeries& b) {
    std::string text = "difference " + to_string(a - b);
    if (text.size() > 200) text = text.substr(0, 197) + "...";
    return text;
}

/// All involution properties at a single weight: classification totality,
/// partner validity, sign reversal, weight preservation, the class-mapping
/// table, self-inverseness, the exact fixed-point set, and the telescoped
/// signed sum against the closed form.
[[nodiscard]] inline std::vector<Failure> check_involution_at(const FamilySpec& family,
                                                              int n) {
    std::vector<Failure> failures;
    const std::string at = "n=" + std::to_string(n) + " ";
    auto fail = [&](const std::string& input, std::string expected, std::string actual) {
        failures.push_back({at + input, std::move(expected), std::move(actual)});
    };

    long long signed_total = 0;
    long long fixed_signed = 0;
    std::vector<BoxedPair> fixed;
    for (const BoxedPair& pair : enumerate_pairs(n, family)) {
        signed_total += sign(pair);
        try {
            const PairClass cls = classify(pair);
            const InvolutionStep step = involution_partner(pair);
            if (step.fixed) {
                if (cls != PairClass::Case4Fixed)
                    fail(to_string(pair), "fixed only in Case4Fixed", to_string(cls));
                fixed.push_back(pair);
                fixed_signed += sign(pair);
                continue;
            }
            if (cls == PairClass::Case4Fixed)
                fail(to_string(pair), "Case4Fixed pairs stay fixed", to_string(step.partner));
            if (step.partner == pair)
                fail(to_string(pair), "a distinct partner", "the pair itself");
            if (sign(step.partner) != -sign(pair))
                fail(to_string(pair), "partner of opposite sign",
                     "partner " + to_string(step.partner));
            if (q_weight(step.partner) != q_weight(pair))
                fail(to_string(pair), "q-weight " + std::to_string(q_weight(pair)),
                     "partner q-weight " + std::to_string(q_weight(step.partner)));
            if (z_weight(step.partner) != z_weight(pair))
                fail(to_string(pair), "z-weight " + std::to_string(z_weight(pair)),
                     "partner z-weight " + std::to_string(z_weight(step.partner)));
            const PairClass expected_cls = partner_class(cls);
            const PairClass actual_cls = classify(step.partner);
            if (actual_cls != expected_cls)
                fail(to_string(pair),
                     std::string("partner in ") + to_string(expected_cls),
                     std::string(to_string(actual_cls)) + " " + to_string(step.partner));
            const InvolutionStep back = involution_partner(step.partner);
            if (back.fixed || !(back.partner == pair))
                fail(to_string(pair), "partner maps straight back",
                     back.fixed ? "partner is fixed" : "partner of partner " +
                                                           to_string(back.partner));
        } catch (const std::exception& e) {
            fail(to_string(pair), "no error", e.what());
        }
    }

    const std::vector<BoxedPair> survivors = fixed_points(n, family);
    if (fixed.size() != survivors.size()) {
        fail("fixed points", std::to_string(survivors.size()) + " survivor(s)",
             std::to_string(fixed.size()) + " fixed pair(s)");
    } else {
        for (std::size_t i = 0; i < fixed.size(); ++i)
            if (!(fixed[i] == survivors[i]))
                fail("fixed points", to_string(survivors[i]), to_string(fixed[i]));
    }
    if (signed_total != fixed_signed)
        fail("telescoped sum", "all non-fixed pairs cancel",
             std::to_string(signed_total) + " vs fixed " + std::to_string(fixed_signed));
    const int predicted = predicted_count(n, family);
    if (fixed_signed != predicted)
        fail("telescoped sum", std::to_string(predicted), std::to_string(fixed_signed));
    return failures;
}

}  // namespace detail

/// The full involution property suite for every weight up to n_max. General
/// families only; weights are checked in parallel and reported in order.
[[nodiscard]] inline VerificationReport involution_suite(const FamilySpec& family,
                                                         int n_max) {
    detail::require_general(family, "involution_suite");
    return detail::timed_report(
        "involution", "family=" + family.name() + " n_max=" + std::to_string(n_max),
        [&](VerificationReport& report) {
            std::vector<std::vector<Failure>> per_n(static_cast<std::size_t>(n_max) + 1);
            parallel_for_index(0, n_max + 1, [&](int n) {
                try {
                    per_n[n] = detail::check_involution_at(family, n);
                } catch (const std::exception& e) {
                    per_n[n] = {{"n=" + std::to_string(n), "no error", e.what()}};
                }
            });
            for (std::vector<Failure>& chunk : per_n)
                report.failures.insert(report.failures.end(),
                                       std::make_move_iterator(chunk.begin()),
                                       std::make_move_iterator(chunk.end()));
        });
}

/// Cross-checks the independent computation routes coefficient by
/// coefficient: series expansion, signed enumeration, the telescoped
/// involution sum (general families), and the closed form.
[[nodiscard]] inline VerificationReport triple_agreement_suite(const FamilySpec& family,
                                                               int n_max) {
    return detail::timed_report(
        "triple-agreement", "family=" + family.name() + " n_max=" + std::to_string(n_max),
        [&](VerificationReport& report) {
            const IdentityId id =
                family.is_general()
                    ? IdentityId::general_z(family.modulus(), family.residue())
                    : IdentityId::fq3();
            const BivariateSeries series = identity_lhs(id, n_max).at_z_one();
            for (int n = 0; n <= n_max; ++n) {
                const std::string at = "n=" + std::to_string(n);
                const long long from_series = series.coefficient(0, n).get_si();
                const long long from_enumeration = signed_count(n, family);
                const long long predicted = predicted_count(n, family);
                detail::expect(report, from_series == from_enumeration, at,
                               "series = enumeration",
                               std::to_string(from_series) + " vs " +
                                   std::to_string(from_enumeration));
                detail::expect(report, from_enumeration == predicted, at,
                               "enumeration = closed form",
                               std::to_string(from_enumeration) + " vs " +
                                   std::to_string(predicted));
                if (family.is_general()) {
                    long long from_involution = 0;
                    for (const BoxedPair& pair : enumerate_pairs(n, family))
                        if (involution_partner(pair).fixed) from_involution += sign(pair);
                    detail::expect(report, from_involution == predicted, at,
                                   "involution survivors = closed form",
                                   std::to_string(from_involution) + " vs " +
                                       std::to_string(predicted));
                }
            }
        });
}

// ---------------------------------------------------------------------------
// Acceptance suite. Each check pins its sizes and tolerances (all exact).
// ---------------------------------------------------------------------------

/// The fq4 identity to q^200; the value's support must be exactly (-1)^j at
/// q^{2j(j+1)}. Budget 5 s.
[[nodiscard]] inline VerificationReport acceptance_fq4_identity() {
    return detail::timed_report(
        "fq4-identity", "N=200",
        [&](VerificationReport& report) {
            const int order = 200;
            const BivariateSeries lhs = identity_lhs(IdentityId::fq4(), order);
            const BivariateSeries rhs = identity_rhs(IdentityId::fq4(), order);
            detail::expect(report, lhs == rhs, "lhs vs rhs", "equal series",
                           detail::series_diff_summary(lhs, rhs));
            BivariateSeries support(order);
            for (long long j = 0; 2 * j * (j + 1) <= order; ++j)
                support.add_term(0, static_cast<int>(2 * j * (j + 1)),
                                 j % 2 == 0 ? 1 : -1);
            detail::expect(report, lhs == support, "lhs support",
                           "(-1)^j exactly at q^{2j(j+1)}",
                           detail::series_diff_summary(lhs, support));
        },
        5000);
}

/// Signed counts against the closed form for every weight up to 30, with the
/// three nonzero values in range pinned explicitly. Budget 30 s.
[[nodiscard]] inline VerificationReport acceptance_fq4_signed_counts() {
    return detail::timed_report(
        "fq4-signed-counts", "n_max=30",
        [&](VerificationReport& report) {
            const FamilySpec family = FamilySpec::fq4();
            const int n_max = 30;
            std::vector<long long> counts(static_cast<std::size_t>(n_max) + 1);
            parallel_for_index(0, n_max + 1,
                               [&](int n) { counts[n] = signed_count(n, family); });
            for (int n = 0; n <= n_max; ++n)
                detail::expect(report, counts[n] == predicted_count(n, family),
                               "n=" + std::to_string(n),
                               std::to_string(predicted_count(n, family)),
                               std::to_string(counts[n]));
            const std::vector<std::pair<int, long long>> pinned = {
                {4, -1}, {12, 1}, {24, -1}};
            for (const auto& [n, value] : pinned)
                detail::expect(report, counts[n] == value, "pinned n=" + std::to_string(n),
                               std::to_string(value), std::to_string(counts[n]));
        },
        30000);
}

/// The full involution suite for the fq4 family to n = 22. Budget 60 s.
[[nodiscard]] inline VerificationReport acceptance_fq4_involution() {
    VerificationReport report = involution_suite(FamilySpec::fq4(), 22);
    report.suite = "fq4-involution";
    if (report.elapsed_ms >= 60000)
        report.failures.push_back(
            {"runtime", "< 60000 ms", std::to_string(report.elapsed_ms) + " ms"});
    return report;
}

/// The four worked diagram-map examples, bit-exact.
[[nodiscard]] inline VerificationReport acceptance_worked_examples() {
    return detail::timed_report(
        "diagram-worked-examples", "fq4 family", [&](VerificationReport& report) {
            const FamilySpec fam = FamilySpec::fq4();
            auto pair = [&](int k, const std::vector<PartEntry>& parts) {
                return BoxedPair(k, Overpartition::from_parts(parts), fam);
            };
            auto check = [&](const std::string& name, const BoxedPair& actual,
                             const BoxedPair& expected) {
                detail::expect(report, actual == expected, name, to_string(expected),
                               to_string(actual));
            };
            check("conjugate of (4 | 9,9,7,7,5,5,3)",
                  conjugate(pair(4, {{9}, {9}, {7}, {7}, {5}, {5}, {3}})),
                  pair(7, {{15}, {13}, {9}, {5}}));
            check("conjugate of (3 | 7,5o,5,5,3o,1,1,1)",
                  conjugate(pair(3, {{7}, {5, true}, {5}, {5}, {3, true}, {1}, {1}, {1}})),
                  pair(8, {{11}, {9, true}, {3, true}}));
            const auto phi_s_image = phi_s(pair(4, {{9}, {9}, {9}, {7, true}, {7}, {5, true}}));
            detail::expect(report, phi_s_image.has_value(),
                           "phi_s of (4 | 9,9,9,7o,7,5o)", "defined", "undefined");
            if (phi_s_image)
                check("phi_s of (4 | 9,9,9,7o,7,5o)", *phi_s_image,
                      pair(5, {{11}, {11}, {11}, {7, true}, {5, true}}));
            const auto phi_r_image =
                phi_r(pair(5, {{11}, {11}, {9}, {9}, {7, true}, {7}, {7}}));
            detail::expect(report, phi_r_image.has_value(),
                           "phi_r of (5 | 11,11,9,9,7o,7,7)", "defined", "undefined");
            if (phi_r_image)
                check("phi_r of (5 | 11,11,9,9,7o,7,7)", *phi_r_image,
                      pair(8, {{17}, {17}, {15}, {9, true}}));
        });
}

/// The z-refined identity to q^100 with exact support {(z^{2j}, q^{2j(j+1)})}.
[[nodiscard]] inline VerificationReport acceptance_bivariate_refinement() {
    return detail::timed_report(
        "fq4-bivariate-refinement", "N=100", [&](VerificationReport& report) {
            const int order = 100;
            const IdentityId id = IdentityId::general_z(2, 1);
            const BivariateSeries lhs = identity_lhs(id, order);
            const BivariateSeries rhs = identity_rhs(id, order);
            detail::expect(report, lhs == rhs, "lhs vs rhs", "equal series",
                           detail::series_diff_summary(lhs, rhs));
            BivariateSeries support(order);
            for (long long j = 0; 2 * j * (j + 1) <= order; ++j)
                support.add_term(static_cast<int>(2 * j), static_cast<int>(2 * j * (j + 1)),
                                 j % 2 == 0 ? 1 : -1);
            detail::expect(report, lhs == support, "lhs support",
                           "(-1)^j z^{2j} exactly at q^{2j(j+1)}",
                           detail::series_diff_summary(lhs, support));
        });
}

/// The general-family identities: bivariate equality to q^80 for five (m,r)
/// choices, the enumeration cross-check to q^25 for each, and the involution
/// suite to n = 16 for three of them.
[[nodiscard]] inline VerificationReport acceptance_general_families() {
    return detail::timed_report(
        "general-families", "(m,r) in {(3,1),(3,2),(4,1),(4,3),(5,2)}",
        [&](VerificationReport& report) {
            const std::vector<std::pair<int, int>> params = {
                {3, 1}, {3, 2}, {4, 1}, {4, 3}, {5, 2}};
            for (const auto& [m, r] : params) {
                const IdentityId id = IdentityId::general_z(m, r);
                const std::string at = id.name();
                const BivariateSeries lhs = identity_lhs(id, 80);
                const BivariateSeries rhs = identity_rhs(id, 80);
                detail::expect(report, lhs == rhs, at + " N=80", "equal series",
                               detail::series_diff_summary(lhs, rhs));
                const BivariateSeries enumerated =
                    series_from_enumeration(FamilySpec::general(m, r), 25);
                const BivariateSeries expanded = identity_lhs(id, 25);
                detail::expect(report, enumerated == expanded, at + " N=25",
                               "enumeration matches expansion",
                               detail::series_diff_summary(enumerated, expanded));
            }
            for (const auto& [m, r] :
                 std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {4, 1}}) {
                const FamilySpec family = FamilySpec::general(m, r);
                for (Failure failure : involution_suite(family, 16).failures) {
                    failure.input = family.name() + " " + failure.input;
                    report.failures.push_back(std::move(failure));
                }
            }
        });
}

/// The fq3 identity to q^200 and the fq3' signed counts to n = 25.
[[nodiscard]] inline VerificationReport acceptance_fq3() {
    return detail::timed_report(
        "fq3-identity-and-counts", "N=200 n_max=25", [&](VerificationReport& report) {
            const BivariateSeries lhs = identity_lhs(IdentityId::fq3(), 200);
            const BivariateSeries rhs = false_theta(3, 200);
            detail::expect(report, lhs == rhs, "lhs vs false_theta(3)", "equal series",
                           detail::series_diff_summary(lhs, rhs));
            const FamilySpec family = FamilySpec::fq3_prime();
            const int n_max = 25;
            std::vector<long long> counts(static_cast<std::size_t>(n_max) + 1);
            parallel_for_index(0, n_max + 1,
                               [&](int n) { counts[n] = signed_count(n, family); });
            for (int n = 0; n <= n_max; ++n)
                detail::expect(report, counts[n] == predicted_count(n, family),
                               "n=" + std::to_string(n),
                               std::to_string(predicted_count(n, family)),
                               std::to_string(counts[n]));
            detail::expect(report, counts[3] == -1, "pinned n=3", "-1",
                           std::to_string(counts[3]));
        });
}

/// Conjectured fq3' survivors for k up to 12: membership, weight and sign
/// only — no involution is claimed for this family.
[[nodiscard]] inline VerificationReport acceptance_fq3_fixed_candidates() {
    return detail::timed_report(
        "fq3-fixed-point-candidates", "k_max=12", [&](VerificationReport& report) {
            for (int k = 0; k <= 12; ++k) {
                const std::string at = "k=" + std::to_string(k);
                try {
                    const BoxedPair candidate = fq3_conjectured_fixed_point(k);
                    detail::expect(report, q_weight(candidate) == 3 * k * (k + 1) / 2, at,
                                   "q-weight " + std::to_string(3 * k * (k + 1) / 2),
                                   std::to_string(q_weight(candidate)));
                    const int expected_sign = k % 2 == 0 ? 1 : -1;
                    detail::expect(report, sign(candidate) == expected_sign, at,
                                   "sign " + std::to_string(expected_sign),
                                   std::to_string(sign(candidate)));
                } catch (const std::exception& e) {
                    detail::expect(report, false, at, "a valid pair", e.what());
                }
            }
        });
}

/// Randomized ring laws and inversion (fixed seed), the enumeration
/// round-trip, the z = 1 specialization, and classification totality.
[[nodiscard]] inline VerificationReport acceptance_property_suites() {
    return detail::timed_report(
        "property-suites", "seeded random, N<=30", [&](VerificationReport& report) {
            std::mt19937 rng(20250808);
            auto random_series = [&](int order, bool unit_constant) {
                BivariateSeries s(order);
                if (unit_constant) s.add_term(0, 0, 1);
                std::uniform_int_distribution<int> term_count(0, 12);
                std::uniform_int_distribution<int> q_degree(1, order);
                std::uniform_int_distribution<int> z_degree(0, 4);
                std::uniform_int_distribution<int> coeff(-9, 9);
                const int terms = term_count(rng);
                for (int t = 0; t < terms; ++t)
                    s.add_term(z_degree(rng), q_degree(rng), coeff(rng));
                if (!unit_constant) s.add_term(0, 0, coeff(rng));
                return s;
            };
            std::uniform_int_distribution<int> order_dist(5, 30);
            for (int round = 0; round < 40; ++round) {
                const int order = order_dist(rng);
                const BivariateSeries a = random_series(order, false);
                const BivariateSeries b = random_series(order, false);
                const BivariateSeries c = random_series(order, false);
                const std::string at = "round " + std::to_string(round);
                detail::expect(report, (a + b) + c == a + (b + c), at,
                               "addition associates", "mismatch");
                detail::expect(report, a + b == b + a, at, "addition commutes", "mismatch");
                detail::expect(report, a * b == b * a, at, "product commutes", "mismatch");
                detail::expect(report, (a * b) * c == a * (b * c), at,
                               "product associates", "mismatch");
                detail::expect(report, a * (b + c) == a * b + a * c, at,
                               "product distributes", "mismatch");
                detail::expect(report, (a - a).is_zero(), at, "a - a = 0", "mismatch");
                const BivariateSeries unit = random_series(order, true);
                detail::expect(report, unit * unit.inverse() == BivariateSeries::one(order),
                               at, "u * u^-1 = 1", "mismatch");
                detail::expect(report, unit.inverse().inverse() == unit, at,
                               "(u^-1)^-1 = u", "mismatch");
            }

            auto round_trip = [&](const FamilySpec& family, int n_max) {
                for (int n = 0; n <= n_max; ++n) {
                    const std::vector<BoxedPair> pairs = enumerate_pairs(n, family);
                    const std::string at = family.name() + " n=" + std::to_string(n);
                    for (std::size_t i = 0; i < pairs.size(); ++i) {
                        detail::expect(report, q_weight(pairs[i]) == n,
                                       at + " " + to_string(pairs[i]),
                                       "q-weight " + std::to_string(n),
                                       std::to_string(q_weight(pairs[i])));
                        if (i > 0)
                            detail::expect(report, listing_less(pairs[i - 1], pairs[i]), at,
                                           "strictly increasing listing (no duplicates)",
                                           to_string(pairs[i - 1]) + " !< " +
                                               to_string(pairs[i]));
                    }
                }
            };
            round_trip(FamilySpec::fq4(), 25);
            round_trip(FamilySpec::fq3_prime(), 25);

            // z = 1 specialization of the refined counts
            for (int n = 0; n <= 25; ++n) {
                long long collapsed = 0;
                for (const long long coefficient : signed_bivariate(n, FamilySpec::fq4()))
                    collapsed += coefficient;
                detail::expect(report, collapsed == signed_count(n, FamilySpec::fq4()),
                               "z=1 at n=" + std::to_string(n),
                               std::to_string(signed_count(n, FamilySpec::fq4())),
                               std::to_string(collapsed));
            }

            // classification totality
            for (int n = 0; n <= 22; ++n) {
                for (const BoxedPair& pair : enumerate_pairs(n, FamilySpec::fq4())) {
                    try {
                        (void)classify(pair);
                    } catch (const std::exception& e) {
                        detail::expect(report, false, to_string(pair), "a class", e.what());
                    }
                }
            }
        });
}

/// Every acceptance check, in report order.
[[nodiscard]] inline std::vector<VerificationReport> run_acceptance() {
    return {
        acceptance_fq4_identity(),
        acceptance_fq4_signed_counts(),
        acceptance_fq4_involution(),
        acceptance_worked_examples(),
        acceptance_bivariate_refinement(),
        acceptance_general_families(),
        acceptance_fq3(),
        acceptance_fq3_fixed_candidates(),
        acceptance_property_suites(),
    };
}

/// One status line per report: "[PASS] suite (parameters, 123 ms)".
[[nodiscard]] inline std::string format_report_line(const VerificationReport& report) {
    std::string line = report.passed() ? "[PASS] " : "[FAIL] ";
    line += report.suite + " (" + report.parameters + ", " +
            std::to_string(report.elapsed_ms) + " ms)";
    return line;
}

}  // namespace falsetheta
