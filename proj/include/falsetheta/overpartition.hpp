#pragma once

#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "falsetheta/errors.hpp"

namespace falsetheta {

/// Sentinel returned as the smallest part of the empty overpartition; it
/// compares greater than every real part size.
inline constexpr int kInfiniteSize = std::numeric_limits<int>::max();

/// One part occurrence as supplied by a caller: a size and whether this
/// occurrence is overlined.
struct PartEntry {
    int size = 0;
    bool overlined = false;
};

/// A maximal run of equal parts. `overlined` means the first (topmost) copy
/// of this size carries the overline; the remaining copies never do.
struct PartRun {
    int size = 0;
    int multiplicity = 0;
    bool overlined = false;

    friend bool operator==(const PartRun&, const PartRun&) = default;
};

/// An overpartition in canonical run-length form: runs with strictly
/// decreasing sizes and multiplicities >= 1. At most one copy per size may be
/// overlined, and the run-level flag pins it to the first appearance, so the
/// first-appearance rule cannot be violated structurally. The empty
/// overpartition is valid.
class Overpartition {
public:
    Overpartition() = default;

    /// Canonicalizes a list of part occurrences (any order). Throws
    /// NonPositivePart for sizes < 1 and DuplicateOverline if one size is
    /// flagged overlined twice.
    static Overpartition from_parts(const std::vector<PartEntry>& entries) {
        std::map<int, std::pair<int, int>> by_size;  // size -> (copies, overlines)
        for (const PartEntry& e : entries) {
            if (e.size < 1)
                throw NonPositivePart("part size must be positive, got " +
                                      std::to_string(e.size));
            auto& slot = by_size[e.size];
            ++slot.first;
            if (e.overlined) ++slot.second;
        }
        std::vector<PartRun> runs;
        runs.reserve(by_size.size());
        for (auto it = by_size.rbegin(); it != by_size.rend(); ++it) {
            if (it->second.second > 1)
                throw DuplicateOverline("size " + std::to_string(it->first) +
                                        " overlined more than once");
            runs.push_back({it->first, it->second.first, it->second.second == 1});
        }
        Overpartition result;
        result.runs_ = std::move(runs);
        return result;
    }

    /// Adopts runs already in canonical form; validates strict size decrease
    /// and positive sizes/multiplicities.
    static Overpartition from_runs(std::vector<PartRun> runs) {
        int previous = kInfiniteSize;
        for (const PartRun& run : runs) {
            if (run.size < 1)
                throw NonPositivePart("run size must be positive, got " +
                                      std::to_string(run.size));
            if (run.multiplicity < 1)
                throw NonPositivePart("run multiplicity must be positive");
            if (run.size >= previous)
                throw NonPositivePart("run sizes must be strictly decreasing");
            previous = run.size;
        }
        Overpartition result;
        result.runs_ = std::move(runs);
        return result;
    }

    [[nodiscard]] const std::vector<PartRun>& runs() const { return runs_; }
    [[nodiscard]] bool empty() const { return runs_.empty(); }

    /// Number of parts.
    [[nodiscard]] int part_count() const {
        int count = 0;
        for (const PartRun& run : runs_) count += run.multiplicity;
        return count;
    }

    /// Sum of all parts.
    [[nodiscard]] int total() const {
        int sum = 0;
        for (const PartRun& run : runs_) sum += run.size * run.multiplicity;
        return sum;
    }

    /// Smallest part size, kInfiniteSize when empty.
    [[nodiscard]] int smallest() const {
        return runs_.empty() ? kInfiniteSize : runs_.back().size;
    }

    /// Multiplicity of the smallest part, 0 when empty.
    [[nodiscard]] int smallest_multiplicity() const {
        return runs_.empty() ? 0 : runs_.back().multiplicity;
    }

    [[nodiscard]] bool smallest_overlined() const {
        return !runs_.empty() && runs_.back().overlined;
    }

    [[nodiscard]] int multiplicity_of(int size) const {
        for (const PartRun& run : runs_) {
            if (run.size == size) return run.multiplicity;
            if (run.size < size) break;
        }
        return 0;
    }

    [[nodiscard]] bool has_part(int size) const { return multiplicity_of(size) > 0; }

    [[nodiscard]] bool overlined_at(int size) const {
        for (const PartRun& run : runs_) {
            if (run.size == size) return run.overlined;
            if (run.size < size) break;
        }
        return false;
    }

    /// Number of parts of size >= `size` (column height in the diagram).
    [[nodiscard]] int count_parts_at_least(int size) const {
        int count = 0;
        for (const PartRun& run : runs_) {
            if (run.size < size) break;
            count += run.multiplicity;
        }
        return count;
    }

    friend bool operator==(const Overpartition&, const Overpartition&) = default;

private:
    std::vector<PartRun> runs_;  // strictly decreasing sizes
};

/// Listing order used wherever output must be byte-stable: runs compared
/// left to right with larger sizes first, plain before overlined, then higher
/// multiplicity first; a strict prefix precedes its extensions.
[[nodiscard]] inline bool listing_less(const Overpartition& a, const Overpartition& b) {
    const auto& x = a.runs();
    const auto& y = b.runs();
    const std::size_t limit = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < limit; ++i) {
        if (x[i].size != y[i].size) return x[i].size > y[i].size;
        if (x[i].overlined != y[i].overlined) return !x[i].overlined;
        if (x[i].multiplicity != y[i].multiplicity)
            return x[i].multiplicity > y[i].multiplicity;
    }
    return x.size() < y.size();
}

}  // namespace falsetheta
