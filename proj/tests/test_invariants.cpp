#include "dehn/invariants.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace dehn;

namespace {

Rational rat(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace

TEST_CASE("cw_lens values") {
    CHECK(cw_lens(3, 1) == rat(-1, 36));
    CHECK(cw_lens(1, 0) == 0);
    CHECK(cw_lens(2, 1) == 0);
    CHECK(cw_lens(3, 2) == rat(1, 36));
    CHECK(cw_lens(3, -1) == rat(1, 36));  // negative q reduces mod p
    CHECK_THROWS_AS(cw_lens(4, 2), std::domain_error);
    CHECK_THROWS_AS(cw_lens(0, 1), std::domain_error);
}

TEST_CASE("LensSpace canonicalizes the surgery coefficient") {
    LensSpace l(3, -1);
    CHECK(l.q == 2);
    CHECK(LensSpace(3, 7).q == 1);
    CHECK(LensSpace(1, 0).q == 0);
    CHECK_THROWS_AS(LensSpace(4, 2), std::domain_error);
    CHECK(cw_lens(l) == cw_lens(3, 2));
}

TEST_CASE("cw_lens orientation and inverse identities (sample range)") {
    for (Int p = 2; p <= 60; ++p) {
        for (Int q = 2; q < p; ++q) {
            if (gcd(p, q) != 1) continue;
            CHECK(cw_lens(p, p - q) == -cw_lens(p, q));
            CHECK(cw_lens(p, q) == cw_lens(p, mod_inverse(q, p)));
        }
    }
}

TEST_CASE("cw_surgery") {
    CHECK(cw_surgery(0, 5, 3) == cw_lens(5, 3));
    CHECK(cw_surgery(2, 1, 1) == 1);    // trefoil +1: the Poincare sphere
    CHECK(cw_surgery(-2, 1, 2) == -2);  // figure-eight 1/2
    CHECK_THROWS_AS(cw_surgery(2, 0, 1), std::domain_error);
    CHECK_THROWS_AS(cw_surgery(2, 4, 2), std::domain_error);
}

TEST_CASE("prop51_required_sum") {
    CHECK_FALSE(prop51_required_sum(3).has_value());
    CHECK_FALSE(prop51_required_sum(6).has_value());
    REQUIRE(prop51_required_sum(7).has_value());
    CHECK(*prop51_required_sum(7) == 5);
    REQUIRE(prop51_required_sum(2).has_value());
    CHECK(*prop51_required_sum(2) == 0);
    CHECK_THROWS_AS(prop51_required_sum(0), std::domain_error);
}

TEST_CASE("prop51 obstruction for multiples of 3") {
    for (Int p = 3; p <= 3000; p += 3) CHECK_FALSE(prop51_required_sum(p).has_value());
}

TEST_CASE("cw_lens closed form ties the obstruction to the surgery formula") {
    // lambda(L(p,1)) = -(p-1)(p-2)/(24p), so comparing the p and -p surgery
    // formulas forces 6(dd + dd') = p^2 - 3p + 2 = -48p * lambda(L(p,1)) / 4
    for (Int p = 2; p <= 200; ++p) {
        Rational closed(-(p - 1) * (p - 2), 24 * p);
        closed.canonicalize();
        CHECK(cw_lens(p, 1) == closed);
        CHECK(Rational(-48) * Rational(p) * cw_lens(p, 1) == 2 * Rational(p * p - 3 * p + 2));
        if (auto sum = prop51_required_sum(p)) {
            CHECK(Rational(6) * Rational(*sum) == Rational(p * p - 3 * p + 2));
        }
    }
}

TEST_CASE("d_lens base case and examples") {
    CHECK(d_lens(1, 0, 0) == 0);
    CHECK(d_lens(2, 1, 0) == rat(1, 4));
    CHECK(d_lens(3, 1, 1) == rat(-1, 6));
    CHECK(d_lens(5, 2, 0) == rat(2, 5));
    CHECK_THROWS_AS(d_lens(4, 2, 0), std::domain_error);
    CHECK_THROWS_AS(d_lens(2, 0, 0), std::domain_error);
    CHECK_THROWS_AS(d_lens(3, 1, 4), std::domain_error);
    CHECK_THROWS_AS(d_lens(3, 1, -1), std::domain_error);
}

TEST_CASE("d_lens closed form for q = 1 (sample range)") {
    for (Int p = 1; p <= 60; ++p) {
        for (Int i = 0; i < p; ++i) {
            Rational expected((p - 2 * i) * (p - 2 * i) - p, 4 * p);
            expected.canonicalize();
            CHECK(d_lens(p, 1, i) == expected);
        }
    }
}

TEST_CASE("VSequence validation and implicit zeros") {
    VSequence v({2, 1, 0});
    CHECK(v.at(0) == 2);
    CHECK(v.at(2) == 0);
    CHECK(v.at(100) == 0);
    CHECK(VSequence{}.at(0) == 0);
    CHECK_THROWS_AS(VSequence({1, 2}), std::domain_error);
    CHECK_THROWS_AS(VSequence({-1}), std::domain_error);
}

TEST_CASE("d_surgery") {
    // zero V-sequence reduces to the lens value
    for (Int i = 0; i < 5; ++i) CHECK(d_surgery(5, 2, i, VSequence{}) == d_lens(5, 2, i));
    CHECK(d_surgery(5, 1, 0, VSequence({2, 1, 0})) == -3);
    CHECK(d_surgery(2, 1, 0, VSequence({1})) == rat(-7, 4));
    // +1 surgery on the right trefoil (V = [1]): the Poincare sphere, d = -2
    CHECK(d_surgery(1, 1, 0, VSequence({1})) == -2);
    CHECK_THROWS_AS(d_surgery(5, 1, 5, VSequence{}), std::domain_error);
    CHECK_THROWS_AS(d_surgery(0, 1, 0, VSequence{}), std::domain_error);
}

TEST_CASE("d_gap_max") {
    CHECK(d_gap_max(5, 2) == rat(-3, 5));
    CHECK(d_gap_max(11, 2) == rat(-15, 11));
    CHECK(d_gap_max(101, 2) < d_gap_max(11, 2));
    CHECK_THROWS_AS(d_gap_max(5, 1), std::domain_error);
    CHECK_THROWS_AS(d_gap_max(4, 2), std::domain_error);
}
