#pragma once

#include <string>

#include "falsetheta/errors.hpp"

namespace falsetheta {

/// Which constrained family a boxed pair (k, π̄) lives in.
///
/// general(m, r): parts congruent to r mod m, sizes at most m·k + r, overlines
/// only on sizes at most m·(k-1) + r. fq4() = general(2, 1) is the family of
/// pairs with odd parts at most 2k+1 and overlined parts at most 2k-1.
///
/// fq3_prime(): parts of any parity at most 2k+1, overlined parts odd and at
/// most 2k-1.
class FamilySpec {
public:
    static FamilySpec general(int modulus, int residue) {
        if (modulus < 2)
            throw InvalidFamily("modulus must be >= 2, got " + std::to_string(modulus));
        if (residue < 1 || residue >= modulus)
            throw InvalidFamily("residue must satisfy 1 <= r < m, got r=" +
                                std::to_string(residue) + " m=" + std::to_string(modulus));
        return FamilySpec(Kind::General, modulus, residue);
    }

    static FamilySpec fq4() { return general(2, 1); }

    static FamilySpec fq3_prime() { return FamilySpec(Kind::FQ3Prime, 0, 0); }

    [[nodiscard]] bool is_general() const { return kind_ == Kind::General; }
    [[nodiscard]] bool is_fq3_prime() const { return kind_ == Kind::FQ3Prime; }

    [[nodiscard]] int modulus() const {
        require_general("modulus");
        return modulus_;
    }

    [[nodiscard]] int residue() const {
        require_general("residue");
        return residue_;
    }

    /// Largest part size admissible with box count k.
    [[nodiscard]] int max_part(int k) const {
        return is_general() ? modulus_ * k + residue_ : 2 * k + 1;
    }

    /// Largest overlinable size with box count k; below 1 means no overlines.
    [[nodiscard]] int overline_limit(int k) const {
        return is_general() ? modulus_ * (k - 1) + residue_ : 2 * k - 1;
    }

    [[nodiscard]] bool size_allowed(int k, int size) const {
        if (size < 1 || size > max_part(k)) return false;
        return !is_general() || size % modulus_ == residue_ % modulus_;
    }

    [[nodiscard]] bool overline_allowed(int k, int size) const {
        if (size > overline_limit(k)) return false;
        return !is_fq3_prime() || size % 2 == 1;
    }

    [[nodiscard]] std::string name() const {
        if (is_fq3_prime()) return "fq3p";
        return "general(" + std::to_string(modulus_) + "," + std::to_string(residue_) + ")";
    }

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;

private:
    enum class Kind { General, FQ3Prime };

    FamilySpec(Kind kind, int modulus, int residue)
        : kind_(kind), modulus_(modulus), residue_(residue) {}

    void require_general(const char* what) const {
        if (!is_general())
            throw NotApplicable(std::string(what) + ": defined for general families only");
    }

    Kind kind_;
    int modulus_;
    int residue_;
};

}  // namespace falsetheta
