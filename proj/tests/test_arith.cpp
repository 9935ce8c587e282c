#include "dehn/arith.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace dehn;

TEST_CASE("normalize_slope forces p >= 0 and reduces") {
    Slope a = normalize_slope(-3, 2);
    CHECK(a.p() == 3);
    CHECK(a.q() == -2);

    Slope b = normalize_slope(6, 4);
    CHECK(b.p() == 3);
    CHECK(b.q() == 2);

    Slope inf = normalize_slope(5, 0);
    CHECK(inf.p() == 1);
    CHECK(inf.q() == 0);
    CHECK(inf.is_infinity());

    Slope zero = normalize_slope(0, -7);
    CHECK(zero.p() == 0);
    CHECK(zero.q() == 1);

    CHECK_THROWS_AS(normalize_slope(0, 0), std::domain_error);
}

TEST_CASE("slope ordering is by value with infinity last") {
    CHECK(normalize_slope(1, -4) < normalize_slope(1, 4));
    CHECK(normalize_slope(1, 4) < normalize_slope(3, 4));
    CHECK(normalize_slope(3, 4) < normalize_slope(1, 0));
    CHECK_FALSE(normalize_slope(1, 0) < normalize_slope(1, 0));
}

TEST_CASE("negative continued fractions") {
    CHECK(neg_continued_fraction(3, 1).terms == std::vector<Int>{3});
    CHECK(neg_continued_fraction(7, 2).terms == std::vector<Int>{4, 2});
    CHECK(neg_continued_fraction(5, 3).terms == std::vector<Int>{2, 3});
    CHECK_THROWS_AS(neg_continued_fraction(2, 3), std::domain_error);
    CHECK_THROWS_AS(neg_continued_fraction(3, 0), std::domain_error);
    CHECK_THROWS_AS(neg_continued_fraction(6, 4), std::domain_error);
}

TEST_CASE("expansion reproduces p/q exactly with all terms >= 2 (p <= 300)") {
    for (Int p = 2; p <= 300; ++p) {
        for (Int q = 1; q < p; ++q) {
            if (gcd(p, q) != 1) continue;
            NegContFrac cf = neg_continued_fraction(p, q);
            for (const auto& a : cf.terms) REQUIRE(a >= 2);
            Rational expected(p, q);
            expected.canonicalize();
            REQUIRE(cf.value() == expected);
        }
    }
}

TEST_CASE("mod_inverse") {
    CHECK(mod_inverse(1, 3) == 1);
    CHECK(mod_inverse(2, 5) == 3);
    CHECK(mod_inverse(3, 7) == 5);
    CHECK(mod_inverse(9, 1) == 0);  // degenerate modulus, by convention
    CHECK_THROWS_AS(mod_inverse(2, 4), std::domain_error);

    for (Int p = 2; p < 80; ++p) {
        for (Int q = 1; q < p; ++q) {
            if (gcd(q, p) != 1) continue;
            Int r = mod_inverse(q, p);
            CHECK(r > 0);
            CHECK(r < p);
            CHECK(q * r % p == 1);
        }
    }
}

TEST_CASE("legendre examples and supplements") {
    CHECK(legendre(1, 5) == 1);
    CHECK(legendre(2, 5) == -1);
    CHECK(legendre(-1, 13) == 1);
    CHECK(legendre(10, 5) == 0);
    CHECK_THROWS_AS(legendre(2, 9), std::domain_error);
    CHECK_THROWS_AS(legendre(2, 2), std::domain_error);
}

TEST_CASE("legendre agrees with the brute-force residue table") {
    for (const auto& p : odd_primes_upto(200)) {
        std::set<Int> squares = residues_mod(p);
        REQUIRE(squares.size() == static_cast<std::size_t>(mpz_get_ui(Int((p - 1) / 2).get_mpz_t())));
        for (Int a = 1; a < p; ++a) {
            REQUIRE(legendre(a, p) == (squares.count(a) ? 1 : -1));
        }
    }
}

TEST_CASE("residues_mod small cases") {
    CHECK(residues_mod(3) == std::set<Int>{1});
    CHECK(residues_mod(5) == std::set<Int>{1, 4});
    CHECK(residues_mod(7) == std::set<Int>{1, 2, 4});
}

TEST_CASE("reciprocity sign") {
    CHECK(reciprocity_sign(3, 5) == 1);
    CHECK(reciprocity_sign(3, 7) == -1);
    CHECK(reciprocity_sign(13, 17) == 1);
    CHECK_THROWS_AS(reciprocity_sign(5, 5), std::domain_error);
    CHECK_THROWS_AS(reciprocity_sign(2, 5), std::domain_error);

    auto primes = odd_primes_upto(60);
    for (const auto& p1 : primes) {
        for (const auto& p2 : primes) {
            if (p1 == p2) continue;
            CHECK(legendre(p1, p2) * legendre(p2, p1) == reciprocity_sign(p1, p2));
        }
    }
}

TEST_CASE("crt combines and validates") {
    Congruence c = crt({{1, 8}, {1, 3}, {2, 5}});
    CHECK(c.residue == 97);
    CHECK(c.modulus == 120);

    Congruence trivial = crt({{0, 1}});
    CHECK(trivial.residue == 0);
    CHECK(trivial.modulus == 1);

    Congruence two = crt({{1, 2}, {0, 3}});
    CHECK(two.residue == 3);
    CHECK(two.modulus == 6);

    CHECK_THROWS_WITH_AS(crt({{1, 4}, {1, 6}}), doctest::Contains("4"), std::domain_error);
}

TEST_CASE("crt result satisfies every congruence (brute force, M <= 10^4)") {
    std::vector<std::vector<Congruence>> systems = {
        {{3, 7}, {4, 11}, {5, 13}},
        {{1, 8}, {2, 9}, {3, 25}},
        {{0, 2}, {2, 3}, {3, 5}, {5, 7}},
    };
    for (const auto& sys : systems) {
        Congruence c = crt(sys);
        REQUIRE(c.modulus <= 10000);
        for (Int x = 0; x < c.modulus; ++x) {
            bool all = true;
            for (const auto& g : sys) all = all && (x % g.modulus == g.residue);
            REQUIRE(all == (x == c.residue));
        }
    }
}

TEST_CASE("primes_in_ap") {
    PrimeSearchResult r = primes_in_ap(1, 4, 3, 100);
    CHECK(r.primes == std::vector<Int>{5, 13, 17});
    CHECK_FALSE(r.exhausted);

    PrimeSearchResult all = primes_in_ap(1, 1, 2, 10);
    CHECK(all.primes == std::vector<Int>{2, 3});

    CHECK_THROWS_AS(primes_in_ap(2, 4, 1, 100), std::domain_error);

    PrimeSearchResult few = primes_in_ap(1, 4, 100, 20);
    CHECK(few.primes == std::vector<Int>{5, 13, 17});
    CHECK(few.exhausted);
}

TEST_CASE("is_squarefree") {
    CHECK(is_squarefree(1));
    CHECK_FALSE(is_squarefree(12));
    CHECK(is_squarefree(30));
    CHECK_THROWS_AS(is_squarefree(0), std::domain_error);

    // naive oracle
    for (Int n = 1; n <= 500; ++n) {
        bool naive = true;
        for (Int d = 2; d * d <= n; ++d) {
            if (n % (d * d) == 0) naive = false;
        }
        REQUIRE(is_squarefree(n) == naive);
    }
}

TEST_CASE("is_prime is exact against trial division") {
    auto naive = [](const Int& n) {
        if (n < 2) return false;
        for (Int d = 2; d * d <= n; ++d) {
            if (n % d == 0) return false;
        }
        return true;
    };
    for (Int n = 1; n <= 5000; ++n) REQUIRE(is_prime(n) == naive(n));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(97));
    CHECK(is_prime(4201));
    CHECK(is_prime(Int("2305843009213693951")));   // 2^61 - 1
    CHECK_FALSE(is_prime(Int("147573952589676412927")));  // 2^67 - 1 = 193707721 * 761838257287
    // trial division still decides beyond the proven Miller-Rabin bound
    CHECK_FALSE(is_prime(Int("10000000000000000000000000")));
    // 2^89 - 1 survives trial division and exceeds the proven range
    CHECK_THROWS_AS(is_prime(Int("618970019642690137449562111")), std::out_of_range);
    CHECK(is_prime_proven_bound() == Int("3317044064679887385961981"));
}

TEST_CASE("sqrt_mod returns the least verified root") {
    for (const auto& p : odd_primes_upto(100)) {
        for (const auto& a : residues_mod(p)) {
            Int r = sqrt_mod(a, p);
            CHECK(r * r % p == a);
            CHECK(2 * r <= p);  // least of the two roots
        }
    }
    // p = 1 (mod 8) exercises the full Tonelli-Shanks branch
    CHECK(sqrt_mod(2, 4201) * sqrt_mod(2, 4201) % 4201 == 2);
    CHECK_THROWS_AS(sqrt_mod(2, 5), std::domain_error);
}

TEST_CASE("odd_primes_upto") {
    CHECK(odd_primes_upto(10) == std::vector<Int>{3, 5, 7});
    CHECK(odd_primes_upto(2).empty());
}
