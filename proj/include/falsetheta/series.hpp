#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "falsetheta/enumeration.hpp"
#include "falsetheta/errors.hpp"

namespace falsetheta {

using Coefficient = mpz_class;

/// Exponent pair; the (q, z) member order gives the map ordering used for
/// serialization and deterministic printing.
struct Monomial {
    int q = 0;
    int z = 0;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Truncated formal power series in z and q over exact integers. Terms with
/// q-degree beyond the truncation order are dropped; z-degrees are never
/// truncated independently (in every construction here each z carries at
/// least q^1, so they stay bounded). Only nonzero coefficients are stored.
class BivariateSeries {
public:
    explicit BivariateSeries(int q_truncation) : q_truncation_(q_truncation) {}

    static BivariateSeries one(int q_truncation) {
        BivariateSeries s(q_truncation);
        s.add_term(0, 0, 1);
        return s;
    }

    static BivariateSeries monomial(const Coefficient& c, int z_degree, int q_degree,
                                    int q_truncation) {
        BivariateSeries s(q_truncation);
        s.add_term(z_degree, q_degree, c);
        return s;
    }

    [[nodiscard]] int q_truncation() const { return q_truncation_; }
    [[nodiscard]] const std::map<Monomial, Coefficient>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    [[nodiscard]] Coefficient coefficient(int z_degree, int q_degree) const {
        const auto it = terms_.find(Monomial{q_degree, z_degree});
        return it == terms_.end() ? Coefficient(0) : it->second;
    }

    [[nodiscard]] int max_z_degree() const {
        int max = 0;
        for (const auto& [mono, c] : terms_) max = std::max(max, mono.z);
        return max;
    }

    /// Accumulates c into the (z, q) term, dropping truncated degrees and
    /// erasing coefficients that cancel to zero.
    void add_term(int z_degree, int q_degree, const Coefficient& c) {
        if (q_degree > q_truncation_ || c == 0) return;
        const Monomial key{q_degree, z_degree};
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Same series with every term multiplied by z^dz q^dq.
    [[nodiscard]] BivariateSeries shifted(int dz, int dq) const {
        BivariateSeries result(q_truncation_);
        for (const auto& [mono, c] : terms_)
            result.add_term(mono.z + dz, mono.q + dq, c);
        return result;
    }

    /// Collapses z by substituting z = 1 (sums coefficients per q-degree).
    [[nodiscard]] BivariateSeries at_z_one() const {
        BivariateSeries result(q_truncation_);
        for (const auto& [mono, c] : terms_) result.add_term(0, mono.q, c);
        return result;
    }

    /// Product truncated at q-degree `q_cap` (further capped by the
    /// truncation order). Callers that immediately shift the product by q^d
    /// pass q_cap = truncation - d to skip coefficients the shift discards.
    [[nodiscard]] static BivariateSeries mul_truncated(const BivariateSeries& a,
                                                       const BivariateSeries& b,
                                                       int q_cap) {
        if (a.q_truncation_ != b.q_truncation_)
            throw TruncationMismatch("product operands have different q-truncations");
        BivariateSeries result(a.q_truncation_);
        const int cap = std::min(q_cap, a.q_truncation_);
        if (cap < 0 || a.is_zero() || b.is_zero()) return result;
        const int z_span = a.max_z_degree() + b.max_z_degree() + 1;
        std::vector<std::vector<Coefficient>> grid(
            static_cast<std::size_t>(cap) + 1,
            std::vector<Coefficient>(static_cast<std::size_t>(z_span)));
        for (const auto& [ma, ca] : a.terms_) {
            if (ma.q > cap) break;  // map is ordered by q first
            for (const auto& [mb, cb] : b.terms_) {
                if (ma.q + mb.q > cap) break;
                mpz_addmul(grid[ma.q + mb.q][ma.z + mb.z].get_mpz_t(),
                           ca.get_mpz_t(), cb.get_mpz_t());
            }
        }
        for (int q = 0; q <= cap; ++q)
            for (int z = 0; z < z_span; ++z)
                if (grid[q][z] != 0)
                    result.terms_.emplace(Monomial{q, z}, std::move(grid[q][z]));
        return result;
    }

    /// Multiplicative inverse up to truncation. Requires the whole q^0 slice
    /// to be exactly 1 (viewing the series in q with z-polynomial
    /// coefficients); otherwise no truncation-sound inverse exists here.
    [[nodiscard]] BivariateSeries inverse() const {
        const int order = q_truncation_;
        // q-slices as z-polynomials
        std::vector<std::map<int, Coefficient>> slice(static_cast<std::size_t>(order) + 1);
        for (const auto& [mono, c] : terms_) slice[mono.q][mono.z] = c;
        if (slice[0].size() != 1 || slice[0].count(0) == 0 || slice[0].at(0) != 1)
            throw NonUnitConstant("inverse requires the q^0 slice to equal 1");

        // b[0] = 1; b[d] = -sum_{j=1..d} a[j] * b[d-j]
        std::vector<std::map<int, Coefficient>> inv(static_cast<std::size_t>(order) + 1);
        inv[0][0] = 1;
        for (int d = 1; d <= order; ++d) {
            std::map<int, Coefficient>& out = inv[d];
            for (int j = 1; j <= d; ++j) {
                if (slice[j].empty()) continue;
                for (const auto& [za, ca] : slice[j]) {
                    for (const auto& [zb, cb] : inv[d - j]) {
                        mpz_submul(out[za + zb].get_mpz_t(), ca.get_mpz_t(),
                                   cb.get_mpz_t());
                    }
                }
            }
            std::erase_if(out, [](const auto& entry) { return entry.second == 0; });
        }

        BivariateSeries result(order);
        for (int d = 0; d <= order; ++d)
            for (const auto& [z, c] : inv[d]) result.terms_.emplace(Monomial{d, z}, c);
        return result;
    }

    friend BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b) {
        if (a.q_truncation_ != b.q_truncation_)
            throw TruncationMismatch("sum operands have different q-truncations");
        BivariateSeries result = a;
        for (const auto& [mono, c] : b.terms_) result.add_term(mono.z, mono.q, c);
        return result;
    }

    friend BivariateSeries operator-(const BivariateSeries& a) {
        BivariateSeries result(a.q_truncation_);
        for (const auto& [mono, c] : a.terms_) result.terms_.emplace(mono, -c);
        return result;
    }

    friend BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b) {
        return a + (-b);
    }

    friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
        return mul_truncated(a, b, a.q_truncation_);
    }

    friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

private:
    int q_truncation_;
    std::map<Monomial, Coefficient> terms_;
};

/// Product of `count` factors (1 + sign·Z·q^{base_exp + step·j}),
/// j = 0..count-1, where Z is z when z_on and 1 otherwise. Factors whose
/// exponent exceeds the truncation are identically 1 and skipped. count = 0
/// gives the empty product 1.
[[nodiscard]] inline BivariateSeries pochhammer_signed(int sign, bool z_on, int base_exp,
                                                       int step, int count,
                                                       int q_truncation) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("pochhammer_signed: sign must be +1 or -1");
    if (base_exp < 1 || step < 1 || count < 0)
        throw std::invalid_argument("pochhammer_signed: need base_exp >= 1, step >= 1, count >= 0");
    BivariateSeries acc = BivariateSeries::one(q_truncation);
    for (int j = 0; j < count; ++j) {
        const long long exponent = base_exp + static_cast<long long>(step) * j;
        if (exponent > q_truncation) break;
        BivariateSeries factor = BivariateSeries::one(q_truncation);
        factor.add_term(z_on ? 1 : 0, static_cast<int>(exponent), sign);
        acc = acc * factor;
    }
    return acc;
}

/// The false theta series at q^scale: sum of (-1)^n q^{scale·n(n+1)/2}.
[[nodiscard]] inline BivariateSeries false_theta(int scale, int q_truncation) {
    if (scale < 1) throw std::invalid_argument("false_theta: scale must be >= 1");
    BivariateSeries result(q_truncation);
    for (long long n = 0;; ++n) {
        const long long exponent = scale * n * (n + 1) / 2;
        if (exponent > q_truncation) break;
        result.add_term(0, static_cast<int>(exponent), n % 2 == 0 ? 1 : -1);
    }
    return result;
}

/// Which identity to expand. fq4 and fq3 are the univariate sums evaluating
/// to false_theta(4) and false_theta(3); general_z(m, r) is the bivariate
/// family whose (2,1) member refines fq4 by a power of z.
class IdentityId {
public:
    enum class Kind { FQ4, FQ3, GeneralZ };

    static IdentityId fq4() { return IdentityId(Kind::FQ4, 2, 1); }
    static IdentityId fq3() { return IdentityId(Kind::FQ3, 2, 1); }
    static IdentityId general_z(int modulus, int residue) {
        FamilySpec::general(modulus, residue);  // range check
        return IdentityId(Kind::GeneralZ, modulus, residue);
    }

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] int modulus() const { return modulus_; }
    [[nodiscard]] int residue() const { return residue_; }

    /// The pair family whose signed enumeration matches this identity's LHS.
    [[nodiscard]] FamilySpec family() const {
        return kind_ == Kind::FQ3 ? FamilySpec::fq3_prime()
                                  : FamilySpec::general(modulus_, residue_);
    }

    [[nodiscard]] std::string name() const {
        switch (kind_) {
            case Kind::FQ4: return "fq4";
            case Kind::FQ3: return "fq3";
            case Kind::GeneralZ:
                return "general(" + std::to_string(modulus_) + "," +
                       std::to_string(residue_) + ")";
        }
        return "?";
    }

    friend bool operator==(const IdentityId&, const IdentityId&) = default;

private:
    IdentityId(Kind kind, int modulus, int residue)
        : kind_(kind), modulus_(modulus), residue_(residue) {}

    Kind kind_;
    int modulus_;
    int residue_;
};

namespace detail {

/// (1 + sign·Z·q^e) as a series; exponents past the truncation collapse to 1.
[[nodiscard]] inline BivariateSeries binomial_factor(int sign, bool z_on, int exponent,
                                                     int q_truncation) {
    BivariateSeries factor = BivariateSeries::one(q_truncation);
    if (exponent <= q_truncation) factor.add_term(z_on ? 1 : 0, exponent, sign);
    return factor;
}

}  // namespace detail

/// Expands the identity's sum side. The n-th summand is
///   numerator(n) · Z^n q^{w·n} / denominator(n)
/// with w = r for general_z and w = 1 otherwise, so its lowest q-order is at
/// least w·n and summing while w·n <= truncation is exact.
///
///   fq4:          (q;q^2)_n q^n / (-q;q^2)_{n+1}
///   fq3:          (q;q^2)_n q^n / (-q;q)_{2n+1}
///   general_z:    (zq^r;q^m)_n z^n q^{rn} / (-zq^r;q^m)_{n+1}
[[nodiscard]] inline BivariateSeries identity_lhs(const IdentityId& id, int q_truncation) {
    const bool z_on = id.kind() == IdentityId::Kind::GeneralZ;
    const bool fq3 = id.kind() == IdentityId::Kind::FQ3;
    const int m = z_on ? id.modulus() : 2;
    const int r = z_on ? id.residue() : 1;
    const int summand_order = z_on ? r : 1;

    BivariateSeries acc(q_truncation);
    BivariateSeries num = BivariateSeries::one(q_truncation);
    BivariateSeries inv_den =
        detail::binomial_factor(+1, z_on, fq3 ? 1 : r, q_truncation).inverse();

    for (int n = 0; static_cast<long long>(n) * summand_order <= q_truncation; ++n) {
        if (n > 0) {
            const int num_exp = r + m * (n - 1);
            if (num_exp <= q_truncation)
                num = num * detail::binomial_factor(-1, z_on, num_exp, q_truncation);
            if (fq3) {
                for (int e = 2 * n; e <= 2 * n + 1; ++e)
                    if (e <= q_truncation)
                        inv_den = inv_den *
                                  detail::binomial_factor(+1, false, e, q_truncation)
                                      .inverse();
            } else {
                const int den_exp = r + m * n;
                if (den_exp <= q_truncation)
                    inv_den = inv_den *
                              detail::binomial_factor(+1, z_on, den_exp, q_truncation)
                                  .inverse();
            }
        }
        const int q_shift = summand_order * n;
        acc = acc + BivariateSeries::mul_truncated(num, inv_den, q_truncation - q_shift)
                        .shifted(z_on ? n : 0, q_shift);
    }
    return acc;
}

/// The closed side: false_theta(4) for fq4, false_theta(3) for fq3, and
/// sum of (-1)^j z^{2j} q^{j(mj+2r)} for general_z.
[[nodiscard]] inline BivariateSeries identity_rhs(const IdentityId& id, int q_truncation) {
    switch (id.kind()) {
        case IdentityId::Kind::FQ4: return false_theta(4, q_truncation);
        case IdentityId::Kind::FQ3: return false_theta(3, q_truncation);
        case IdentityId::Kind::GeneralZ: break;
    }
    BivariateSeries result(q_truncation);
    const int m = id.modulus();
    const int r = id.residue();
    for (long long j = 0;; ++j) {
        const long long exponent = j * (m * j + 2 * r);
        if (exponent > q_truncation) break;
        result.add_term(static_cast<int>(2 * j), static_cast<int>(exponent),
                        j % 2 == 0 ? 1 : -1);
    }
    return result;
}

/// The combinatorial route to the same series: signed enumeration of pairs
/// assembled coefficient by coefficient. For general families the z-degree
/// records k + ν(π̄); for fq3_prime everything sits at z^0.
[[nodiscard]] inline BivariateSeries series_from_enumeration(const FamilySpec& family,
                                                             int q_truncation) {
    BivariateSeries result(q_truncation);
    for (int n = 0; n <= q_truncation; ++n) {
        if (family.is_general()) {
            const std::vector<long long> poly = signed_bivariate(n, family);
            for (int degree = 0; degree < static_cast<int>(poly.size()); ++degree)
                result.add_term(degree, n, static_cast<long>(poly[degree]));
        } else {
            result.add_term(0, n, static_cast<long>(signed_count(n, family)));
        }
    }
    return result;
}

/// Human-readable polynomial form, terms ordered by (q, z); "0" when empty.
[[nodiscard]] inline std::string to_string(const BivariateSeries& series) {
    if (series.is_zero()) return "0";
    std::string out;
    for (const auto& [mono, c] : series.terms()) {
        const bool negative = c < 0;
        const Coefficient magnitude = negative ? Coefficient(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string factors;
        if (mono.z > 0) factors += mono.z == 1 ? "z" : "z^" + std::to_string(mono.z);
        if (mono.q > 0) {
            if (!factors.empty()) factors += "*";
            factors += mono.q == 1 ? "q" : "q^" + std::to_string(mono.q);
        }
        if (factors.empty()) {
            out += magnitude.get_str();
        } else {
            if (magnitude != 1) out += magnitude.get_str() + "*";
            out += factors;
        }
    }
    return out;
}

}  // namespace falsetheta
