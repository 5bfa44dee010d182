#pragma once

#include <string>
#include <utility>

#include "falsetheta/errors.hpp"
#include "falsetheta/family.hpp"
#include "falsetheta/overpartition.hpp"

namespace falsetheta {

/// A boxed pair (k, π̄): a non-negative box count together with an
/// overpartition whose parts obey the family's size and overline bounds.
/// Construction validates every family invariant; a BoxedPair that exists is
/// valid.
class BoxedPair {
public:
    BoxedPair(int k, Overpartition pi, FamilySpec family)
        : k_(k), pi_(std::move(pi)), family_(family) {
        if (k_ < 0) throw InvalidPair("box count must be non-negative");
        for (const PartRun& run : pi_.runs()) {
            if (!family_.size_allowed(k_, run.size))
                throw InvalidPair("part " + std::to_string(run.size) +
                                  " not allowed in " + family_.name() +
                                  " with k=" + std::to_string(k_));
            if (run.overlined && !family_.overline_allowed(k_, run.size))
                throw InvalidPair("overline on part " + std::to_string(run.size) +
                                  " not allowed in " + family_.name() +
                                  " with k=" + std::to_string(k_));
        }
    }

    [[nodiscard]] int k() const { return k_; }
    [[nodiscard]] const Overpartition& pi() const { return pi_; }
    [[nodiscard]] const FamilySpec& family() const { return family_; }

    friend bool operator==(const BoxedPair&, const BoxedPair&) = default;

private:
    int k_;
    Overpartition pi_;
    FamilySpec family_;
};

/// The four statistics driving classification.
struct PairStats {
    int nu;        // number of parts
    int smallest;  // kInfiniteSize for the empty overpartition
    int nu_s;      // multiplicity of the smallest part, 0 when empty
    int nu_ell;    // multiplicity of the largest admissible size, 0 if absent
};

[[nodiscard]] inline PairStats stats(const BoxedPair& pair) {
    const Overpartition& pi = pair.pi();
    return PairStats{
        pi.part_count(),
        pi.smallest(),
        pi.smallest_multiplicity(),
        pi.multiplicity_of(pair.family().max_part(pair.k())),
    };
}

/// Exponent of q carried by the pair: r·k + |π̄| for general(m,r), k + |π̄|
/// for fq3_prime.
[[nodiscard]] inline int q_weight(const BoxedPair& pair) {
    const int box = pair.family().is_general() ? pair.family().residue() * pair.k()
                                               : pair.k();
    return box + pair.pi().total();
}

/// Exponent of z: the number of residue cells in the diagram, k + ν(π̄).
/// Defined for general families only.
[[nodiscard]] inline int z_weight(const BoxedPair& pair) {
    if (!pair.family().is_general())
        throw ZWeightUndefined("z-weight is defined for general families only");
    return pair.k() + pair.pi().part_count();
}

/// (-1)^ν — the signed-counting weight.
[[nodiscard]] inline int sign(const BoxedPair& pair) {
    return pair.pi().part_count() % 2 == 0 ? 1 : -1;
}

/// Compact form used in listings and failure messages, e.g. "(3 | 7,5o,5)".
/// Overlined copies carry an `o` suffix; the empty overpartition prints "-".
[[nodiscard]] inline std::string to_string(const BoxedPair& pair) {
    std::string out = "(" + std::to_string(pair.k()) + " | ";
    if (pair.pi().empty()) {
        out += "-";
    } else {
        bool first = true;
        for (const PartRun& run : pair.pi().runs()) {
            for (int copy = 0; copy < run.multiplicity; ++copy) {
                if (!first) out += ",";
                out += std::to_string(run.size);
                if (run.overlined && copy == 0) out += "o";
                first = false;
            }
        }
    }
    return out + ")";
}

/// Listing order for pairs of equal weight: k ascending, then the
/// overpartition listing order.
[[nodiscard]] inline bool listing_less(const BoxedPair& a, const BoxedPair& b) {
    if (a.k() != b.k()) return a.k() < b.k();
    return listing_less(a.pi(), b.pi());
}

}  // namespace falsetheta
