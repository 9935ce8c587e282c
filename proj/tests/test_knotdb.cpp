#include "dehn/knotdb.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace dehn;

TEST_CASE("torus_alexander") {
    CHECK(torus_alexander(3, 2) == LaurentPoly1::from_terms({{0, 1}, {1, -1}, {2, 1}}));
    CHECK(torus_alexander(5, 2) == LaurentPoly1::from_terms({{0, 1}, {1, -1}, {2, 1}, {3, -1}, {4, 1}}));
    CHECK(torus_alexander(2, 3) == torus_alexander(3, 2));
    CHECK(torus_alexander(2, -3) == torus_alexander(2, 3));  // mirror-invariant
    CHECK_THROWS_AS(torus_alexander(4, 2), std::domain_error);
    CHECK_THROWS_AS(torus_alexander(1, 2), std::domain_error);
}

TEST_CASE("torus_alexander is palindromic and exact over a sample") {
    for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}, {4, 5}}) {
        LaurentPoly1 f = torus_alexander(a, b);
        CHECK_NOTHROW(symmetric_normalize(f));
        CHECK(f.eval_at_one() == 1);
        CHECK(f.max_exp() - f.min_exp() == (a - 1) * (b - 1));  // span 2g
    }
}

TEST_CASE("embedded fixtures") {
    const auto& fixtures = embedded_fixtures();

    const LinkRecord& l9a20 = fixture_link("L9a20");
    CHECK(l9a20.linking_number == 1);
    CHECK(l9a20.unknotted == std::pair<bool, bool>{true, true});
    REQUIRE(l9a20.multivariable.term_count() == 13);
    std::multiset<Int> coeffs;
    for (const auto& [e, c] : l9a20.multivariable.terms()) coeffs.insert(c);
    CHECK(coeffs == std::multiset<Int>{1, -3, -1, 3, 4, -1, -7, -1, 4, 3, -1, -3, 1});

    const KnotRecord& trefoil = fixture_knot("K3a1");
    CHECK(eq_up_to_units(trefoil.alexander, LaurentPoly1::from_terms({{-1, 1}, {0, -1}, {1, 1}})));
    CHECK(trefoil.genus == Int(1));
    CHECK(trefoil.torus == std::pair<Int, Int>{3, 2});
    CHECK(trefoil.lspace_knot == true);

    const KnotRecord& cinquefoil = fixture_knot("K5a2");
    CHECK(cinquefoil.genus == Int(2));
    CHECK(cinquefoil.torus == std::pair<Int, Int>{5, 2});
    CHECK(cinquefoil.lspace_knot == true);

    const KnotRecord& fig8 = fixture_knot("K4a1");
    CHECK(eq_up_to_units(fig8.alexander, LaurentPoly1::from_terms({{-1, -1}, {0, 3}, {1, -1}})));
    CHECK(fig8.mirror_of == "K4a1");
    CHECK(fig8.lspace_knot == false);

    // the twist family H_n = T(2, 1-2n)
    CHECK(fixture_knot("H_-1").torus == std::pair<Int, Int>{2, 3});
    CHECK(eq_up_to_units(fixture_knot("H_-1").alexander, trefoil.alexander));
    CHECK(fixture_knot("H_2").torus == std::pair<Int, Int>{2, -3});
    CHECK(fixture_knot("H_2").mirror_of == "K3a1");
    CHECK(fixture_knot("H_2").lspace_knot == false);
    CHECK(fixture_knot("H_3").mirror_of == "K5a2");
    CHECK(fixture_knot("H_-3").torus == std::pair<Int, Int>{2, 7});
    CHECK(fixture_knot("H_-3").genus == Int(3));

    CHECK(find_record(fixtures, "nope") == nullptr);
    CHECK_THROWS_AS(fixture_link("K3a1"), std::invalid_argument);
}

TEST_CASE("fixtures round-trip through the JSON-lines format") {
    const auto& fixtures = embedded_fixtures();
    std::string dumped = dump_records(fixtures);
    std::vector<Record> loaded = load_records(dumped);
    REQUIRE(loaded.size() == fixtures.size());
    CHECK(dump_records(loaded) == dumped);
    for (std::size_t i = 0; i < fixtures.size(); ++i) {
        CHECK(record_name(loaded[i]) == record_name(fixtures[i]));
    }
}

TEST_CASE("load_records validation") {
    CHECK(load_records("").empty());
    CHECK(load_records("\n  \n").empty());

    // knot with a non-symmetrizable polynomial fails the symmetric check
    std::string bad_knot =
        R"({"type":"knot","name":"bad","alexander":[{"e":[0],"c":-1},{"e":[1],"c":2}],"genus":1})";
    CHECK_THROWS_WITH_AS(load_records(bad_knot), doctest::Contains("symmetric"), std::invalid_argument);

    // genus too small for the Alexander span
    std::string bad_genus =
        R"({"type":"knot","name":"g","alexander":[{"e":[-2],"c":1},{"e":[-1],"c":-1},{"e":[0],"c":1},{"e":[1],"c":-1},{"e":[2],"c":1}],"genus":1})";
    CHECK_THROWS_WITH_AS(load_records(bad_genus), doctest::Contains("genus"), std::invalid_argument);

    // torus parameters must match the polynomial
    std::string bad_torus =
        R"({"type":"knot","name":"t","alexander":[{"e":[-1],"c":1},{"e":[0],"c":-1},{"e":[1],"c":1}],"torus":[5,2]})";
    CHECK_THROWS_WITH_AS(load_records(bad_torus), doctest::Contains("torus"), std::invalid_argument);

    // Torres condition: |Delta(1,1)| must equal |lk|
    std::string bad_link =
        R"({"type":"link","name":"l","components":2,"linking_number":2,"unknotted":[true,true],"multivariable":[{"e":[0,0],"c":1}]})";
    CHECK_THROWS_WITH_AS(load_records(bad_link), doctest::Contains("Torres"), std::invalid_argument);

    // malformed JSON names the line
    CHECK_THROWS_WITH_AS(load_records("{\"type\":"), doctest::Contains("line 1"), std::invalid_argument);

    // unknown type
    CHECK_THROWS_AS(load_records(R"({"type":"graph","name":"x"})"), std::invalid_argument);
}

TEST_CASE("big coefficients survive the string fallback") {
    KnotRecord big;
    big.name = "big";
    Int huge("123456789012345678901234567890");
    // symmetric with Delta(1) = 1: huge t^-1 + (1 - 2 huge) + huge t
    big.alexander =
        LaurentPoly1::from_terms({{-1, huge}, {0, 1 - 2 * huge}, {1, huge}});
    std::string dumped = dump_records({Record(big)});
    std::vector<Record> loaded = load_records(dumped);
    REQUIRE(loaded.size() == 1);
    CHECK(std::get<KnotRecord>(loaded[0]).alexander == big.alexander);
}

TEST_CASE("L9a20 collapses consistently with linking number one") {
    const LinkRecord& l9a20 = fixture_link("L9a20");
    LaurentPoly1 merged = substitute(l9a20.multivariable, 1, 1);
    CHECK(abs(merged.eval_at_one()) == 1);
    LaurentPoly1 collapsed = substitute(l9a20.multivariable, 1, 0);
    CHECK(eq_up_to_units(collapsed, LaurentPoly1::from_terms({{0, 1}})));
}
