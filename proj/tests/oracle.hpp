#pragma once

// Brute-force reference enumeration for cross-checking enumerate_pairs. Kept
// deliberately different from the library path: flat non-increasing part
// lists generated by a minimum-part recursion, with overlines applied as
// explicit subsets of the eligible distinct sizes.

#include <algorithm>
#include <string>
#include <vector>

#include "falsetheta/boxed_pair.hpp"

namespace oracle {

inline void flat_partitions(const falsetheta::FamilySpec& family, int k, int remaining,
                            int max_size, std::vector<int>& current,
                            std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int size = std::min(max_size, remaining); size >= 1; --size) {
        if (!family.size_allowed(k, size)) continue;
        current.push_back(size);
        flat_partitions(family, k, remaining - size, size, current, out);
        current.pop_back();
    }
}

inline std::vector<falsetheta::BoxedPair> pairs_by_brute_force(
    int n, const falsetheta::FamilySpec& family) {
    using falsetheta::BoxedPair;
    using falsetheta::Overpartition;
    using falsetheta::PartEntry;

    std::vector<BoxedPair> result;
    const int box_weight = family.is_general() ? family.residue() : 1;
    for (int k = 0; k * box_weight <= n; ++k) {
        const int target = n - k * box_weight;
        std::vector<std::vector<int>> partitions;
        std::vector<int> current;
        flat_partitions(family, k, target, family.max_part(k), current, partitions);
        for (const std::vector<int>& parts : partitions) {
            std::vector<int> overlinable;
            for (std::size_t i = 0; i < parts.size(); ++i)
                if ((i == 0 || parts[i] != parts[i - 1]) &&
                    family.overline_allowed(k, parts[i]))
                    overlinable.push_back(parts[i]);
            const std::size_t subsets = std::size_t(1) << overlinable.size();
            for (std::size_t mask = 0; mask < subsets; ++mask) {
                std::vector<PartEntry> entries;
                entries.reserve(parts.size());
                for (std::size_t i = 0; i < parts.size(); ++i) {
                    bool overlined = false;
                    if (i == 0 || parts[i] != parts[i - 1]) {
                        for (std::size_t bit = 0; bit < overlinable.size(); ++bit)
                            if ((mask >> bit & 1u) && overlinable[bit] == parts[i])
                                overlined = true;
                    }
                    entries.push_back({parts[i], overlined});
                }
                result.emplace_back(k, Overpartition::from_parts(entries), family);
            }
        }
    }
    return result;
}

/// Canonical sorted multiset of pair listings for set comparison.
inline std::vector<std::string> canonical_listing(
    const std::vector<falsetheta::BoxedPair>& pairs) {
    std::vector<std::string> listing;
    listing.reserve(pairs.size());
    for (const falsetheta::BoxedPair& pair : pairs)
        listing.push_back(falsetheta::to_string(pair));
    std::sort(listing.begin(), listing.end());
    return listing;
}

inline long long signed_by_brute_force(int n, const falsetheta::FamilySpec& family) {
    long long total = 0;
    for (const falsetheta::BoxedPair& pair : pairs_by_brute_force(n, family))
        total += falsetheta::sign(pair);
    return total;
}

}  // namespace oracle
