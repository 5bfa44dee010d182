#include <catch2/catch.hpp>

#include "falsetheta/series.hpp"

using namespace falsetheta;

TEST_CASE("fq4 expansion to q^24") {
    const BivariateSeries lhs = identity_lhs(IdentityId::fq4(), 24);
    const BivariateSeries rhs = identity_rhs(IdentityId::fq4(), 24);
    CHECK(lhs == rhs);
    CHECK(to_string(lhs) == "1 - q^4 + q^12 - q^24");
}

TEST_CASE("z-refined expansion to q^12") {
    const BivariateSeries lhs = identity_lhs(IdentityId::general_z(2, 1), 12);
    const BivariateSeries rhs = identity_rhs(IdentityId::general_z(2, 1), 12);
    CHECK(lhs == rhs);
    CHECK(to_string(lhs) == "1 - z^2*q^4 + z^4*q^12");
}

TEST_CASE("fq3 expansion to q^9") {
    const BivariateSeries lhs = identity_lhs(IdentityId::fq3(), 9);
    const BivariateSeries rhs = identity_rhs(IdentityId::fq3(), 9);
    CHECK(lhs == rhs);
    CHECK(to_string(lhs) == "1 - q^3 + q^9");
}

TEST_CASE("the closed sides have single-signed support at the predicted exponents") {
    const BivariateSeries general = identity_rhs(IdentityId::general_z(3, 2), 40);
    BivariateSeries expected(40);
    expected.add_term(0, 0, 1);
    expected.add_term(2, 7, -1);   // 1*(3+4)
    expected.add_term(4, 20, 1);   // 2*(6+4)
    expected.add_term(6, 39, -1);  // 3*(9+4)
    CHECK(general == expected);
    const BivariateSeries fq4 = identity_rhs(IdentityId::fq4(), 200);
    for (const auto& [mono, c] : fq4.terms()) CHECK((c == 1 || c == -1));
}

TEST_CASE("setting z = 1 in the refinement recovers the univariate identity") {
    CHECK(identity_lhs(IdentityId::general_z(2, 1), 20).at_z_one() ==
          identity_lhs(IdentityId::fq4(), 20));
    CHECK(identity_rhs(IdentityId::general_z(2, 1), 20).at_z_one() ==
          identity_rhs(IdentityId::fq4(), 20));
}

TEST_CASE("signed enumeration assembles into the expansion") {
    CHECK(series_from_enumeration(FamilySpec::fq4(), 12) ==
          identity_lhs(IdentityId::general_z(2, 1), 12));
    CHECK(series_from_enumeration(FamilySpec::general(3, 2), 14) ==
          identity_lhs(IdentityId::general_z(3, 2), 14));
    CHECK(series_from_enumeration(FamilySpec::fq3_prime(), 9) ==
          identity_lhs(IdentityId::fq3(), 9));
    CHECK(series_from_enumeration(FamilySpec::fq4(), 0) == BivariateSeries::one(0));
    CHECK(series_from_enumeration(FamilySpec::fq3_prime(), 0) == BivariateSeries::one(0));
}

TEST_CASE("identity ids expose their families") {
    CHECK(IdentityId::fq4().family() == FamilySpec::fq4());
    CHECK(IdentityId::fq3().family() == FamilySpec::fq3_prime());
    CHECK(IdentityId::general_z(4, 3).family() == FamilySpec::general(4, 3));
    CHECK_THROWS_AS(IdentityId::general_z(4, 0), InvalidFamily);
    CHECK(IdentityId::general_z(3, 2).name() == "general(3,2)");
}
