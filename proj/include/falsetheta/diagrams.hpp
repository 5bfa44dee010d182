#pragma once

#include <optional>
#include <string>
#include <vector>

#include "falsetheta/boxed_pair.hpp"
#include "falsetheta/enumeration.hpp"

namespace falsetheta {

/// Disjoint classes covering every general-family pair. ConjOdd holds all
/// pairs with k + ν odd; the rest have k + ν even and split on the smallest
/// part s against the threshold t = m·ν_ℓ + r (the size whose row matches the
/// rightmost column of the boxed diagram):
///
///   PhiSSingle      s < t, smallest appears once
///   Case2           s < t, smallest appears more than once
///   PhiSMulti       s = t, s not maximal, smallest appears more than once
///   Case1Plain      s = t, s not maximal, appears once, not overlined
///   Case1Overlined  s = t, s not maximal, appears once, overlined
///   PhiR            s > t and a part of size m(k-1)+r is present
///   Case3           s > t and no part of size m(k-1)+r (covers (k, empty)
///                   with k even > 0 via s = infinity)
///   Case4Fixed      s = t = m·k + r, i.e. π̄ = ((mk+r)^k), including (0, empty)
enum class PairClass {
    ConjOdd,
    PhiSSingle,
    PhiSMulti,
    PhiR,
    Case1Plain,
    Case1Overlined,
    Case2,
    Case3,
    Case4Fixed,
};

[[nodiscard]] inline const char* to_string(PairClass cls) {
    switch (cls) {
        case PairClass::ConjOdd: return "ConjOdd";
        case PairClass::PhiSSingle: return "PhiSSingle";
        case PairClass::PhiSMulti: return "PhiSMulti";
        case PairClass::PhiR: return "PhiR";
        case PairClass::Case1Plain: return "Case1Plain";
        case PairClass::Case1Overlined: return "Case1Overlined";
        case PairClass::Case2: return "Case2";
        case PairClass::Case3: return "Case3";
        case PairClass::Case4Fixed: return "Case4Fixed";
    }
    return "?";
}

namespace detail {

inline void require_general(const FamilySpec& family, const char* what) {
    if (!family.is_general())
        throw NotApplicable(std::string(what) + ": defined for general families only");
}

}  // namespace detail

/// Reflection of the boxed m-modular diagram across the anti-diagonal. The
/// box row becomes the leading column, so the conjugate is (ν(π̄), π̄') where
/// π̄' has k parts and the i-th is m·#{parts of π̄ >= m·i+r} + r. An overline
/// on a part of size m·j+r moves to the (j+1)-st conjugate part — including
/// j = 0, which lands on the first part; that case is what keeps conjugation
/// an involution when a smallest-residue part is overlined. Preserves q- and
/// z-weights; self-inverse.
[[nodiscard]] inline BoxedPair conjugate(const BoxedPair& pair) {
    detail::require_general(pair.family(), "conjugate");
    const int m = pair.family().modulus();
    const int r = pair.family().residue();
    const Overpartition& pi = pair.pi();

    std::vector<PartEntry> parts(static_cast<std::size_t>(pair.k()));
    for (int i = 1; i <= pair.k(); ++i)
        parts[i - 1].size = m * pi.count_parts_at_least(m * i + r) + r;

    for (const PartRun& run : pi.runs()) {
        if (!run.overlined) continue;
        const int position = (run.size - r) / m;  // 0-based index of part j+1
        if (position >= static_cast<int>(parts.size()))
            throw InternalInconsistency("conjugate: overline transfer out of range for " +
                                        to_string(pair));
        if (position > 0 && parts[position - 1].size == parts[position].size)
            throw InternalInconsistency("conjugate: overline would not sit on a first "
                                        "appearance for " + to_string(pair));
        parts[position].overlined = true;
    }
    return BoxedPair(pi.part_count(), Overpartition::from_parts(parts), pair.family());
}

/// Fixes the bottom row of the boxed diagram and conjugates the rest: detach
/// one copy of the smallest part (it keeps its overline only when it is the
/// sole, hence first, copy), conjugate the remaining pair, and reattach the
/// detached row at the bottom. Returns nullopt when the reattached row would
/// break the shape or the overline rules — that is the map's domain boundary,
/// not an error. On success k maps to ν(π̄) - 1 and ν to k + 1, and both
/// weights are preserved.
[[nodiscard]] inline std::optional<BoxedPair> phi_s(const BoxedPair& pair) {
    detail::require_general(pair.family(), "phi_s");
    if (pair.pi().empty()) return std::nullopt;

    std::vector<PartRun> runs = pair.pi().runs();
    const int detached_size = runs.back().size;
    const bool detached_overline = runs.back().multiplicity == 1 && runs.back().overlined;
    if (runs.back().multiplicity == 1)
        runs.pop_back();
    else
        --runs.back().multiplicity;

    const BoxedPair conj = conjugate(
        BoxedPair(pair.k(), Overpartition::from_runs(std::move(runs)), pair.family()));

    std::vector<PartRun> reattached = conj.pi().runs();
    if (!reattached.empty() && reattached.back().size < detached_size)
        return std::nullopt;  // row would stick out past the new bottom
    if (!reattached.empty() && reattached.back().size == detached_size) {
        if (detached_overline) return std::nullopt;  // no longer a first appearance
        ++reattached.back().multiplicity;
    } else {
        reattached.push_back({detached_size, 1, detached_overline});
    }
    try {
        return BoxedPair(conj.k(), Overpartition::from_runs(std::move(reattached)),
                         pair.family());
    } catch (const InvalidPair&) {
        return std::nullopt;  // detached row exceeds the shrunken bounds
    }
}

/// The column-fixing variant: conjugate, phi_s, conjugate. Defined exactly
/// where the inner phi_s is.
[[nodiscard]] inline std::optional<BoxedPair> phi_r(const BoxedPair& pair) {
    const std::optional<BoxedPair> inner = phi_s(conjugate(pair));
    if (!inner) return std::nullopt;
    return conjugate(*inner);
}

/// Total classification of a general-family pair into exactly one PairClass.
[[nodiscard]] inline PairClass classify(const BoxedPair& pair) {
    detail::require_general(pair.family(), "classify");
    const PairStats st = stats(pair);
    if ((pair.k() + st.nu) % 2 == 1) return PairClass::ConjOdd;

    if (pair.pi().empty())
        return pair.k() == 0 ? PairClass::Case4Fixed : PairClass::Case3;

    const int m = pair.family().modulus();
    const int r = pair.family().residue();
    const int threshold = m * st.nu_ell + r;
    if (st.smallest < threshold)
        return st.nu_s == 1 ? PairClass::PhiSSingle : PairClass::Case2;
    if (st.smallest == threshold) {
        if (st.smallest == pair.family().max_part(pair.k())) return PairClass::Case4Fixed;
        if (st.nu_s > 1) return PairClass::PhiSMulti;
        return pair.pi().smallest_overlined() ? PairClass::Case1Overlined
                                              : PairClass::Case1Plain;
    }
    return pair.pi().has_part(m * (pair.k() - 1) + r) ? PairClass::PhiR
                                                      : PairClass::Case3;
}

/// The class a non-fixed pair's partner must land in.
[[nodiscard]] inline PairClass partner_class(PairClass cls) {
    switch (cls) {
        case PairClass::Case1Plain: return PairClass::Case2;
        case PairClass::Case2: return PairClass::Case1Plain;
        case PairClass::Case1Overlined: return PairClass::Case3;
        case PairClass::Case3: return PairClass::Case1Overlined;
        default: return cls;  // the remaining classes are closed
    }
}

struct InvolutionStep {
    BoxedPair partner;
    bool fixed;
};

namespace detail {

[[nodiscard]] inline BoxedPair with_smallest_overline(const BoxedPair& pair, bool flag) {
    std::vector<PartRun> runs = pair.pi().runs();
    if (runs.empty())
        throw InternalInconsistency("overline toggle on an empty overpartition");
    if (runs.back().overlined == flag)
        throw InternalInconsistency("overline toggle is a no-op on " + to_string(pair));
    runs.back().overlined = flag;
    return BoxedPair(pair.k(), Overpartition::from_runs(std::move(runs)), pair.family());
}

}  // namespace detail

/// One step of the global sign-reversing involution: dispatches on the class
/// and returns the cancelling partner, or the pair itself with fixed = true
/// for Case4Fixed. Every non-fixed partner has the opposite sign, the same
/// q- and z-weights, and maps straight back. A nullopt or invalid result from
/// any branch is a bug in the maps and raises InternalInconsistency.
[[nodiscard]] inline InvolutionStep involution_partner(const BoxedPair& pair) {
    const PairClass cls = classify(pair);
    try {
        switch (cls) {
            case PairClass::Case4Fixed:
                return {pair, true};
            case PairClass::ConjOdd:
                return {conjugate(pair), false};
            case PairClass::PhiSSingle:
            case PairClass::PhiSMulti:
            case PairClass::Case1Plain:
            case PairClass::Case2: {
                std::optional<BoxedPair> image = phi_s(pair);
                if (!image)
                    throw InternalInconsistency("phi_s undefined on " + to_string(pair));
                return {*image, false};
            }
            case PairClass::PhiR: {
                std::optional<BoxedPair> image = phi_r(pair);
                if (!image)
                    throw InternalInconsistency("phi_r undefined on " + to_string(pair));
                return {*image, false};
            }
            case PairClass::Case1Overlined: {
                // strip the overline, phi_s, then conjugate
                std::optional<BoxedPair> image =
                    phi_s(detail::with_smallest_overline(pair, false));
                if (!image)
                    throw InternalInconsistency("phi_s undefined inside the overlined "
                                                "chain on " + to_string(pair));
                return {conjugate(*image), false};
            }
            case PairClass::Case3: {
                // the reverse chain: conjugate, phi_s, re-add the overline
                std::optional<BoxedPair> image = phi_s(conjugate(pair));
                if (!image)
                    throw InternalInconsistency("phi_s undefined inside the reverse "
                                                "chain on " + to_string(pair));
                return {detail::with_smallest_overline(*image, true), false};
            }
        }
    } catch (const InvalidPair& e) {
        throw InternalInconsistency("involution produced an invalid pair from " +
                                    to_string(pair) + ": " + e.what());
    }
    throw InternalInconsistency("unhandled class for " + to_string(pair));
}

/// The surviving pairs of weight n: for general(m,r) the single pair
/// (j, ((mj+r)^j)) when n = j(mj+2r), otherwise none.
[[nodiscard]] inline std::vector<BoxedPair> fixed_points(int n, const FamilySpec& family) {
    detail::require_general(family, "fixed_points");
    std::vector<BoxedPair> result;
    if (n < 0) return result;
    const int m = family.modulus();
    const int r = family.residue();
    for (long long j = 0;; ++j) {
        const long long weight = j * (m * j + 2 * r);
        if (weight > n) break;
        if (weight != n) continue;
        std::vector<PartRun> runs;
        if (j > 0)
            runs.push_back({static_cast<int>(m * j + r), static_cast<int>(j), false});
        result.emplace_back(static_cast<int>(j), Overpartition::from_runs(std::move(runs)),
                            family);
        break;
    }
    return result;
}

/// The conjectured survivor for the fq3_prime family: (k, (2k, 2k-1, ..., k+1)),
/// a valid pair of q-weight 3k(k+1)/2 and sign (-1)^k. Only candidate checks
/// are provided; no involution is known for this family.
[[nodiscard]] inline BoxedPair fq3_conjectured_fixed_point(int k) {
    if (k < 0) throw std::invalid_argument("fq3_conjectured_fixed_point: k must be >= 0");
    std::vector<PartRun> runs;
    for (int size = 2 * k; size >= k + 1; --size) runs.push_back({size, 1, false});
    return BoxedPair(k, Overpartition::from_runs(std::move(runs)),
                     FamilySpec::fq3_prime());
}

/// Text form of the boxed m-modular diagram: the box row "0 r r ... r"
/// (k copies of r), then one line per part — a part m·j+r prints as "r"
/// followed by j copies of "m", and the final cell of an overlined part gets
/// a '*' suffix. Every line is newline-terminated.
[[nodiscard]] inline std::string render(const BoxedPair& pair) {
    detail::require_general(pair.family(), "render");
    const int m = pair.family().modulus();
    const int r = pair.family().residue();
    std::string out = "0";
    for (int i = 0; i < pair.k(); ++i) out += " " + std::to_string(r);
    out += "\n";
    for (const PartRun& run : pair.pi().runs()) {
        for (int copy = 0; copy < run.multiplicity; ++copy) {
            out += std::to_string(r);
            for (int cell = 0; cell < (run.size - r) / m; ++cell)
                out += " " + std::to_string(m);
            if (run.overlined && copy == 0) out += "*";
            out += "\n";
        }
    }
    return out;
}

}  // namespace falsetheta
