#include <catch2/catch.hpp>

#include "falsetheta/boxed_pair.hpp"

using namespace falsetheta;

namespace {

BoxedPair bp(int k, const std::vector<PartEntry>& entries,
             const FamilySpec& family = FamilySpec::fq4()) {
    return BoxedPair(k, Overpartition::from_parts(entries), family);
}

}  // namespace

TEST_CASE("family parameter validation") {
    CHECK_THROWS_AS(FamilySpec::general(1, 0), InvalidFamily);
    CHECK_THROWS_AS(FamilySpec::general(3, 0), InvalidFamily);  // r = 0 excluded
    CHECK_THROWS_AS(FamilySpec::general(3, 3), InvalidFamily);
    CHECK(FamilySpec::general(2, 1) == FamilySpec::fq4());
    CHECK(FamilySpec::fq3_prime().is_fq3_prime());
    CHECK_THROWS_AS(FamilySpec::fq3_prime().modulus(), NotApplicable);
}

TEST_CASE("family size and overline bounds") {
    const FamilySpec fq4 = FamilySpec::fq4();
    CHECK(fq4.max_part(3) == 7);
    CHECK(fq4.overline_limit(3) == 5);
    CHECK(fq4.size_allowed(3, 7));
    CHECK_FALSE(fq4.size_allowed(3, 9));
    CHECK_FALSE(fq4.size_allowed(3, 4));  // wrong residue

    const FamilySpec g31 = FamilySpec::general(3, 1);
    CHECK(g31.max_part(2) == 7);
    CHECK(g31.size_allowed(2, 4));
    CHECK_FALSE(g31.size_allowed(2, 5));

    const FamilySpec fq3p = FamilySpec::fq3_prime();
    CHECK(fq3p.size_allowed(1, 2));           // even parts allowed
    CHECK(fq3p.overline_allowed(1, 1));
    CHECK_FALSE(fq3p.overline_allowed(1, 2));  // overlines must be odd
    CHECK_FALSE(fq3p.overline_allowed(1, 3));  // and at most 2k-1
}

TEST_CASE("pair construction enforces the family invariants") {
    CHECK_THROWS_AS(bp(1, {{5}, {4}}, FamilySpec::general(3, 2)), InvalidPair);
    CHECK_THROWS_AS(bp(1, {{5}}), InvalidPair);            // 5 > 2k+1
    CHECK_THROWS_AS(bp(1, {{3, true}}), InvalidPair);      // overline above 2k-1
    CHECK_THROWS_AS(bp(-1, {}), InvalidPair);
    CHECK_THROWS_AS(bp(1, {{3, true}}, FamilySpec::fq3_prime()), InvalidPair);
    CHECK_THROWS_AS(bp(1, {{2, true}, {1}}, FamilySpec::fq3_prime()), InvalidPair);
    CHECK_NOTHROW(bp(1, {{3}}));
    CHECK_NOTHROW(bp(1, {{2}, {1, true}}, FamilySpec::fq3_prime()));
    CHECK_NOTHROW(bp(4, {}));
}

TEST_CASE("statistics of a worked pair") {
    const PairStats st = stats(bp(4, {{9}, {9}, {7}, {7}, {5}, {5}, {3}}));
    CHECK(st.nu == 7);
    CHECK(st.smallest == 3);
    CHECK(st.nu_s == 1);
    CHECK(st.nu_ell == 2);
}

TEST_CASE("statistics of a single maximal part and of the empty overpartition") {
    const PairStats one = stats(bp(1, {{3}}));
    CHECK(one.nu == 1);
    CHECK(one.smallest == 3);
    CHECK(one.nu_s == 1);
    CHECK(one.nu_ell == 1);

    const PairStats empty = stats(bp(4, {}));
    CHECK(empty.nu == 0);
    CHECK(empty.smallest == kInfiniteSize);
    CHECK(empty.nu_s == 0);
    CHECK(empty.nu_ell == 0);
}

TEST_CASE("weights and sign") {
    const BoxedPair pair = bp(1, {{3}});
    CHECK(q_weight(pair) == 4);
    CHECK(z_weight(pair) == 2);
    CHECK(sign(pair) == -1);

    const BoxedPair trivial = bp(0, {});
    CHECK(q_weight(trivial) == 0);
    CHECK(z_weight(trivial) == 0);
    CHECK(sign(trivial) == 1);

    // general(m,r) pairs carry r per box
    const BoxedPair general = BoxedPair(2, Overpartition::from_parts({{5}}),
                                        FamilySpec::general(3, 2));
    CHECK(q_weight(general) == 9);

    const BoxedPair primed = BoxedPair(2, Overpartition::from_parts({{2}}),
                                       FamilySpec::fq3_prime());
    CHECK(q_weight(primed) == 4);
    CHECK_THROWS_AS(z_weight(primed), ZWeightUndefined);
}

TEST_CASE("pair listing text") {
    CHECK(to_string(bp(3, {{7}, {5, true}, {5}, {3}})) == "(3 | 7,5o,5,3)");
    CHECK(to_string(bp(4, {})) == "(4 | -)");
}
