#pragma once

#include <algorithm>
#include <vector>

#include "falsetheta/boxed_pair.hpp"

namespace falsetheta {

namespace detail {

/// Emits every overpartition of `remaining` drawn from sizes[idx..] (strictly
/// descending), honoring the family's overline rule at box count k. Bounded
/// parts and strictly shrinking remainder guarantee termination.
inline void collect_overpartitions(const FamilySpec& family, int k,
                                   const std::vector<int>& sizes, std::size_t idx,
                                   int remaining, std::vector<PartRun>& acc,
                                   std::vector<Overpartition>& out) {
    if (remaining == 0) {
        out.push_back(Overpartition::from_runs(acc));
        return;
    }
    for (std::size_t i = idx; i < sizes.size(); ++i) {
        const int size = sizes[i];
        if (size > remaining) continue;
        const bool can_overline = family.overline_allowed(k, size);
        for (int copies = 1; copies * size <= remaining; ++copies) {
            acc.push_back({size, copies, false});
            collect_overpartitions(family, k, sizes, i + 1,
                                   remaining - copies * size, acc, out);
            if (can_overline) {
                acc.back().overlined = true;
                collect_overpartitions(family, k, sizes, i + 1,
                                       remaining - copies * size, acc, out);
            }
            acc.pop_back();
        }
    }
}

[[nodiscard]] inline std::vector<int> admissible_sizes(const FamilySpec& family,
                                                       int k, int cap) {
    std::vector<int> sizes;
    if (family.is_general()) {
        const int m = family.modulus();
        for (int s = family.max_part(k); s >= family.residue(); s -= m)
            if (s <= cap) sizes.push_back(s);
    } else {
        for (int s = std::min(family.max_part(k), cap); s >= 1; --s)
            sizes.push_back(s);
    }
    return sizes;
}

}  // namespace detail

/// All pairs of the family with q-weight n, each exactly once, ordered by
/// k ascending then the overpartition listing order. Empty for n < 0.
[[nodiscard]] inline std::vector<BoxedPair> enumerate_pairs(int n,
                                                            const FamilySpec& family) {
    std::vector<BoxedPair> pairs;
    if (n < 0) return pairs;
    const int box_weight = family.is_general() ? family.residue() : 1;
    for (int k = 0; k * box_weight <= n; ++k) {
        const int target = n - k * box_weight;
        std::vector<Overpartition> found;
        std::vector<PartRun> acc;
        const std::vector<int> sizes = detail::admissible_sizes(family, k, target);
        detail::collect_overpartitions(family, k, sizes, 0, target, acc, found);
        std::sort(found.begin(), found.end(),
                  [](const Overpartition& a, const Overpartition& b) {
                      return listing_less(a, b);
                  });
        for (Overpartition& pi : found)
            pairs.emplace_back(k, std::move(pi), family);
    }
    return pairs;
}

struct ParityCounts {
    long long even = 0;
    long long odd = 0;
};

/// Counts of weight-n pairs split by the parity of ν(π̄).
[[nodiscard]] inline ParityCounts parity_counts(int n, const FamilySpec& family) {
    ParityCounts counts;
    for (const BoxedPair& pair : enumerate_pairs(n, family))
        (sign(pair) > 0 ? counts.even : counts.odd) += 1;
    return counts;
}

/// even_count - odd_count: the signed enumeration of weight-n pairs.
[[nodiscard]] inline long long signed_count(int n, const FamilySpec& family) {
    const ParityCounts counts = parity_counts(n, family);
    return counts.even - counts.odd;
}

/// Signed enumeration refined by z-weight: coefficient j is the signed count
/// of pairs with k + ν(π̄) = j. Trailing zeros trimmed; the zero polynomial is
/// an empty vector. General families only.
[[nodiscard]] inline std::vector<long long> signed_bivariate(int n,
                                                             const FamilySpec& family) {
    if (!family.is_general())
        throw NotApplicable("signed_bivariate: general families only");
    std::vector<long long> coeffs;
    for (const BoxedPair& pair : enumerate_pairs(n, family)) {
        const int degree = z_weight(pair);
        if (degree >= static_cast<int>(coeffs.size())) coeffs.resize(degree + 1, 0);
        coeffs[degree] += sign(pair);
    }
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return coeffs;
}

/// Closed-form value the signed enumeration telescopes to: for general(m,r),
/// (-1)^j when n = j(mj+2r) for some j >= 0, else 0; for fq3_prime, (-1)^j
/// when n = 3j(j+1)/2, else 0.
[[nodiscard]] inline int predicted_count(int n, const FamilySpec& family) {
    if (n < 0) return 0;
    for (long long j = 0;; ++j) {
        const long long weight = family.is_general()
                                     ? j * (family.modulus() * j + 2 * family.residue())
                                     : 3 * j * (j + 1) / 2;
        if (weight > n) return 0;
        if (weight == n) return j % 2 == 0 ? 1 : -1;
    }
}

}  // namespace falsetheta
