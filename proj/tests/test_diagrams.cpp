#include <catch2/catch.hpp>

#include "falsetheta/diagrams.hpp"
#include "falsetheta/enumeration.hpp"

using namespace falsetheta;

namespace {

BoxedPair bp(int k, const std::vector<PartEntry>& entries,
             const FamilySpec& family = FamilySpec::fq4()) {
    return BoxedPair(k, Overpartition::from_parts(entries), family);
}

}  // namespace

TEST_CASE("conjugation of worked pairs") {
    CHECK(conjugate(bp(4, {{9}, {9}, {7}, {7}, {5}, {5}, {3}})) ==
          bp(7, {{15}, {13}, {9}, {5}}));
    CHECK(conjugate(bp(3, {{7}, {5, true}, {5}, {5}, {3, true}, {1}, {1}, {1}})) ==
          bp(8, {{11}, {9, true}, {3, true}}));
}

TEST_CASE("conjugation of boxed rows and the empty pair") {
    CHECK(conjugate(bp(3, {})) == bp(0, {{1}, {1}, {1}}));
    CHECK(conjugate(bp(0, {})) == bp(0, {}));
    CHECK(conjugate(bp(2, {}, FamilySpec::general(3, 2))) ==
          bp(0, {{2}, {2}}, FamilySpec::general(3, 2)));
}

TEST_CASE("an overlined smallest-residue part survives conjugation") {
    // the overline moves to the first conjugate part, keeping the map an
    // involution
    CHECK(conjugate(bp(1, {{1, true}})) == bp(1, {{1, true}}));
    CHECK(conjugate(bp(2, {{1, true}, {1}})) == bp(2, {{1, true}, {1}}));
}

TEST_CASE("conjugation is a weight-preserving involution that swaps k and nu") {
    const std::vector<FamilySpec> families = {FamilySpec::fq4(),
                                              FamilySpec::general(3, 1)};
    for (const FamilySpec& family : families) {
        for (int n = 0; n <= 12; ++n) {
            for (const BoxedPair& pair : enumerate_pairs(n, family)) {
                INFO(family.name() << " " << to_string(pair));
                const BoxedPair image = conjugate(pair);
                CHECK(image.k() == pair.pi().part_count());
                CHECK(image.pi().part_count() == pair.k());
                CHECK(q_weight(image) == q_weight(pair));
                CHECK(z_weight(image) == z_weight(pair));
                CHECK(conjugate(image) == pair);
                const bool odd = (pair.k() + pair.pi().part_count()) % 2 == 1;
                CHECK(sign(image) == (odd ? -sign(pair) : sign(pair)));
            }
        }
    }
}

TEST_CASE("phi_s on the worked pair") {
    const auto image = phi_s(bp(4, {{9}, {9}, {9}, {7, true}, {7}, {5, true}}));
    REQUIRE(image.has_value());
    CHECK(*image == bp(5, {{11}, {11}, {11}, {7, true}, {5, true}}));
}

TEST_CASE("phi_s on small pairs") {
    const auto image = phi_s(bp(0, {{1}, {1}}));
    REQUIRE(image.has_value());
    CHECK(*image == bp(1, {{1}}));

    CHECK_FALSE(phi_s(bp(1, {{3}})).has_value());  // the removed row sticks out
    CHECK_FALSE(phi_s(bp(0, {})).has_value());
}

TEST_CASE("phi_s keeps weights and trades k for the part count") {
    for (int n = 0; n <= 12; ++n) {
        for (const BoxedPair& pair : enumerate_pairs(n, FamilySpec::fq4())) {
            const auto image = phi_s(pair);
            if (!image) continue;
            INFO(to_string(pair));
            CHECK(image->k() == pair.pi().part_count() - 1);
            CHECK(image->pi().part_count() == pair.k() + 1);
            CHECK(q_weight(*image) == q_weight(pair));
            CHECK(z_weight(*image) == z_weight(pair));
        }
    }
}

TEST_CASE("phi_s is defined whenever the bottom row is short enough") {
    // defined when (s-r)/m < nu_ell, and when (s-r)/m = nu_ell with s below
    // the maximal size and an unoverlined bottom copy
    for (int n = 0; n <= 12; ++n) {
        for (const BoxedPair& pair : enumerate_pairs(n, FamilySpec::fq4())) {
            if (pair.pi().empty()) continue;
            const PairStats st = stats(pair);
            const int row = (st.smallest - 1) / 2;
            const bool bottom_overlined = st.nu_s == 1 && pair.pi().smallest_overlined();
            const bool guaranteed =
                row < st.nu_ell ||
                (row == st.nu_ell && st.smallest < pair.family().max_part(pair.k()) &&
                 !bottom_overlined);
            if (guaranteed) {
                INFO(to_string(pair));
                CHECK(phi_s(pair).has_value());
            }
        }
    }
}

TEST_CASE("phi_r on the worked pair") {
    const auto image = phi_r(bp(5, {{11}, {11}, {9}, {9}, {7, true}, {7}, {7}}));
    REQUIRE(image.has_value());
    CHECK(*image == bp(8, {{17}, {17}, {15}, {9, true}}));
    CHECK_FALSE(phi_r(bp(1, {{3}})).has_value());
}

TEST_CASE("phi_r is a sign-reversing involution on its class") {
    for (int n = 0; n <= 14; ++n) {
        for (const BoxedPair& pair : enumerate_pairs(n, FamilySpec::fq4())) {
            if (classify(pair) != PairClass::PhiR) continue;
            INFO(to_string(pair));
            const auto image = phi_r(pair);
            REQUIRE(image.has_value());
            CHECK(classify(*image) == PairClass::PhiR);
            CHECK(sign(*image) == -sign(pair));
            CHECK(q_weight(*image) == q_weight(pair));
            const auto back = phi_r(*image);
            REQUIRE(back.has_value());
            CHECK(*back == pair);
        }
    }
}

TEST_CASE("classification of pinned pairs") {
    CHECK(classify(bp(1, {{3}})) == PairClass::Case4Fixed);
    CHECK(classify(bp(0, {})) == PairClass::Case4Fixed);
    CHECK(classify(bp(3, {{3}, {3}})) == PairClass::ConjOdd);
    CHECK(classify(bp(3, {})) == PairClass::ConjOdd);
    CHECK(classify(bp(0, {{1}, {1}, {1}, {1}})) == PairClass::Case2);
    CHECK(classify(bp(2, {})) == PairClass::Case3);
    CHECK(classify(bp(1, {{1, true}})) == PairClass::Case1Overlined);
    CHECK(classify(bp(3, {{1}})) == PairClass::Case1Plain);
    CHECK(classify(bp(4, {{9}, {9}, {9}, {7, true}, {7}, {5, true}})) ==
          PairClass::PhiSSingle);
    CHECK(classify(bp(3, {{7}, {3}, {3}})) == PairClass::PhiSMulti);
    CHECK(classify(bp(5, {{11}, {11}, {9}, {9}, {7, true}, {7}, {7}})) == PairClass::PhiR);
}

TEST_CASE("involution partners of pinned pairs") {
    const InvolutionStep fixed = involution_partner(bp(1, {{3}}));
    CHECK(fixed.fixed);
    CHECK(fixed.partner == bp(1, {{3}}));

    const InvolutionStep odd = involution_partner(bp(3, {{3}, {3}}));
    CHECK_FALSE(odd.fixed);
    CHECK(odd.partner == bp(2, {{5}, {1}, {1}}));

    const InvolutionStep case2 = involution_partner(bp(0, {{1}, {1}, {1}, {1}}));
    CHECK_FALSE(case2.fixed);
    CHECK(case2.partner == bp(3, {{1}}));
    CHECK(classify(case2.partner) == PairClass::Case1Plain);
    CHECK(sign(case2.partner) == -1);

    // the overline chain and its reverse
    const InvolutionStep case3 = involution_partner(bp(2, {}));
    CHECK(case3.partner == bp(1, {{1, true}}));
    const InvolutionStep back = involution_partner(bp(1, {{1, true}}));
    CHECK(back.partner == bp(2, {}));
}

TEST_CASE("fixed points sit exactly at the closed-form weights") {
    const auto at4 = fixed_points(4, FamilySpec::fq4());
    REQUIRE(at4.size() == 1);
    CHECK(at4[0] == bp(1, {{3}}));

    const auto at12 = fixed_points(12, FamilySpec::fq4());
    REQUIRE(at12.size() == 1);
    CHECK(at12[0] == bp(2, {{5}, {5}}));

    const auto at5 = fixed_points(5, FamilySpec::general(3, 1));
    REQUIRE(at5.size() == 1);
    CHECK(at5[0] == bp(1, {{4}}, FamilySpec::general(3, 1)));

    CHECK(fixed_points(5, FamilySpec::fq4()).empty());
    const auto at0 = fixed_points(0, FamilySpec::fq4());
    REQUIRE(at0.size() == 1);
    CHECK(at0[0] == bp(0, {}));
}

TEST_CASE("conjectured primed survivors") {
    CHECK(fq3_conjectured_fixed_point(0) == bp(0, {}, FamilySpec::fq3_prime()));
    CHECK(fq3_conjectured_fixed_point(1) == bp(1, {{2}}, FamilySpec::fq3_prime()));
    CHECK(fq3_conjectured_fixed_point(3) ==
          bp(3, {{6}, {5}, {4}}, FamilySpec::fq3_prime()));
    for (int k = 0; k <= 12; ++k) {
        const BoxedPair candidate = fq3_conjectured_fixed_point(k);
        CHECK(q_weight(candidate) == 3 * k * (k + 1) / 2);
        CHECK(sign(candidate) == (k % 2 == 0 ? 1 : -1));
    }
    CHECK_THROWS_AS(fq3_conjectured_fixed_point(-1), std::invalid_argument);
}

TEST_CASE("diagram text") {
    CHECK(render(bp(3, {{7}, {5, true}, {5}, {5}, {3, true}, {1}, {1}, {1}})) ==
          "0 1 1 1\n"
          "1 2 2 2\n"
          "1 2 2*\n"
          "1 2 2\n"
          "1 2 2\n"
          "1 2*\n"
          "1\n"
          "1\n"
          "1\n");
    CHECK(render(bp(0, {})) == "0\n");
    CHECK(render(bp(1, {{4}}, FamilySpec::general(3, 1))) == "0 1\n1 3\n");
}

TEST_CASE("diagram maps reject the primed family") {
    const BoxedPair primed = bp(1, {{2}}, FamilySpec::fq3_prime());
    CHECK_THROWS_AS(conjugate(primed), NotApplicable);
    CHECK_THROWS_AS(phi_s(primed), NotApplicable);
    CHECK_THROWS_AS(classify(primed), NotApplicable);
    CHECK_THROWS_AS(render(primed), NotApplicable);
    CHECK_THROWS_AS(fixed_points(3, FamilySpec::fq3_prime()), NotApplicable);
}
