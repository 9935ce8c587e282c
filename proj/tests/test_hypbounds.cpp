#include "dehn/hypbounds.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace dehn;
using doctest::Approx;

TEST_CASE("normalized_length_lower") {
    CHECK(normalized_length_lower(0) == 0.0);
    CHECK(normalized_length_lower(5) == 1.0);
    CHECK(normalized_length_lower(-55) == 11.0);
}

TEST_CASE("core_geodesic_bound") {
    CHECK(core_geodesic_bound(10.69) == Approx(0.0734903).epsilon(1e-5));
    CHECK(core_geodesic_bound(10.69) <= 0.0735 + 1e-4);
    CHECK(core_geodesic_bound(20.0) == Approx(0.016926).epsilon(1e-4));
    CHECK_THROWS_AS(core_geodesic_bound(10.0), std::domain_error);
}

TEST_CASE("filling_constants") {
    FillingConstants unit = filling_constants(1.0);
    CHECK(unit.c == Approx(0.0735).epsilon(1e-12));
    CHECK(unit.D == Approx(10.69).epsilon(1e-12));

    FillingConstants tiny = filling_constants(0.01);
    CHECK(tiny.c == Approx(0.005052).epsilon(1e-12));
    CHECK(tiny.D == Approx(35.67).epsilon(1e-3));

    FillingConstants huge = filling_constants(1e9);
    CHECK(huge.c == unit.c);
    CHECK(huge.D == unit.D);

    CHECK_THROWS_AS(filling_constants(0.0), std::domain_error);
    CHECK_THROWS_AS(filling_constants(-1.0), std::domain_error);
}

TEST_CASE("safe_q_threshold") {
    CHECK(safe_q_threshold(1.0) == Approx(53.45).epsilon(1e-9));
    CHECK(safe_q_threshold(0.01) == Approx(178.3).epsilon(1e-3));
    CHECK(safe_q_threshold(0.01) >= safe_q_threshold(1.0));
}

TEST_CASE("c and D stay on the proven side and are monotone in sys") {
    double prev_c = 0.0, prev_d = 1e9;
    for (double sys : {1e-3, 1e-2, 1e-1, 1.0, 10.0}) {
        FillingConstants fc = filling_constants(sys);
        CHECK(fc.c <= 0.0735);
        CHECK(fc.D >= 10.69);
        CHECK(fc.c >= prev_c);
        CHECK(fc.D <= prev_d);
        prev_c = fc.c;
        prev_d = fc.D;
    }
}
