#include <doctest.h>

#include <random>

#include "dncheck/errors.hpp"
#include "dncheck/modp.hpp"
#include "oracles.hpp"

using namespace dncheck;

TEST_CASE("modulus construction") {
    CHECK(Modulus(7, 1).m() == 7);
    CHECK(Modulus(7, 2).m() == 49);
    CHECK(Modulus(2147483647, 2).m() == 2147483647ull * 2147483647ull);
    CHECK_THROWS_AS(Modulus(9, 1), NotPrime);
    CHECK_THROWS_AS(Modulus(2, 1), NotPrime);
    CHECK_THROWS_AS(Modulus(2147483659ull, 1), NotPrime);
    CHECK_THROWS_AS(Modulus(7, 3), std::invalid_argument);
}

TEST_CASE("is_prime matches trial division below 10^5") {
    for (u64 n = 0; n < 100000; ++n) {
        bool trial = n >= 2;
        for (u64 d = 2; d * d <= n && trial; ++d) trial = n % d != 0;
        REQUIRE(is_prime(n) == trial);
    }
    CHECK(is_prime(2147483647));
    CHECK_FALSE(is_prime(2147483647ull * 3));
    CHECK_FALSE(is_prime(3215031751ull));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("mod_inv") {
    const Modulus m25(5, 2);
    CHECK(mod_inv(Residue(m25, 3)).value() == 17);
    CHECK(mod_inv(Residue(m25, 1)).value() == 1);
    CHECK_THROWS_AS(mod_inv(Residue(m25, 5)), NotInvertible);
    CHECK_THROWS_AS(mod_inv(Residue(m25, 0)), NotInvertible);
}

TEST_CASE("mod_inv property over random residues") {
    std::mt19937_64 rng(11);
    for (u64 p : {3ull, 5ull, 101ull, 65537ull, 2147483647ull}) {
        for (int e : {1, 2}) {
            const Modulus mod(p, e);
            for (int i = 0; i < 200; ++i) {
                u64 v = rng() % mod.m();
                if (v % p == 0) continue;
                Residue a(mod, v);
                REQUIRE((a * mod_inv(a)).value() == 1);
            }
        }
    }
}

TEST_CASE("mod_pow") {
    // Big-integer oracle for the 2^12 mod 13^2 example.
    CHECK(oracle::big_mod(oracle::BigInt(1) << 12, 169) == 40);
    CHECK(mod_pow(Residue(Modulus(13, 2), 2), 12).value() == 40);
    CHECK(mod_pow(Residue(Modulus(13, 2), 7), 0).value() == 1);
    CHECK(mod_pow(Residue(Modulus(13, 1), 2), 12).value() == 1);

    std::mt19937_64 rng(3);
    for (u64 p : {7ull, 1009ull, 2147483629ull}) {
        const Modulus mod(p, 1);
        for (int i = 0; i < 100; ++i) {
            u64 a = 1 + rng() % (p - 1);
            REQUIRE(mod_pow(Residue(mod, a), p - 1).value() == 1);
        }
    }
}

TEST_CASE("double-width products near the top of the range") {
    const Modulus mod(2147483647, 2);
    const u64 m = mod.m();
    Residue a(mod, m - 1);
    CHECK((a * a).value() == 1);
    Residue b(mod, m - 2);
    boost::multiprecision::cpp_int exact = boost::multiprecision::cpp_int(m - 1) * (m - 2);
    CHECK((a * b).value() == oracle::big_mod(exact, m));
}

TEST_CASE("embed_rational") {
    CHECK(embed_rational(-1, 4, Modulus(7, 1)).value() == 5);
    CHECK(embed_rational(-1, 6, Modulus(5, 2)).value() == 4);
    CHECK(embed_rational(0, 1, Modulus(11, 2)).value() == 0);
    CHECK(embed_rational(3, -4, Modulus(7, 1)) == embed_rational(-3, 4, Modulus(7, 1)));
    CHECK_THROWS_AS(embed_rational(1, 14, Modulus(7, 1)), DenominatorDivisibleByP);
    CHECK_THROWS_AS(embed_rational(1, 0, Modulus(7, 1)), DenominatorDivisibleByP);
}

TEST_CASE("embed_rational is a ring homomorphism on p-integral rationals") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<i64> num(-500, 500), den(1, 500);
    for (u64 p : {3ull, 7ull, 97ull}) {
        for (int e : {1, 2}) {
            const Modulus mod(p, e);
            for (int i = 0; i < 300; ++i) {
                i64 a = num(rng), b = den(rng), c = num(rng), d = den(rng);
                if (b % static_cast<i64>(p) == 0 || d % static_cast<i64>(p) == 0) continue;
                Residue ab = embed_rational(a, b, mod);
                Residue cd = embed_rational(c, d, mod);
                REQUIRE(ab * embed_rational(b, 1, mod) == embed_rational(a, 1, mod));
                REQUIRE(ab + cd == embed_rational(a * d + b * c, b * d, mod));
                REQUIRE(ab * cd == embed_rational(a * c, b * d, mod));
            }
        }
    }
}

TEST_CASE("mismatched moduli are rejected") {
    CHECK_THROWS_AS(Residue(Modulus(7, 1), 1) + Residue(Modulus(7, 2), 1), ModulusMismatch);
    CHECK_THROWS_AS(Residue(Modulus(7, 1), 1) * Residue(Modulus(11, 1), 1), ModulusMismatch);
}

TEST_CASE("valuated residues") {
    const Modulus m49(7, 2);
    SUBCASE("multiply") {
        auto r = vr_mul(ValuatedResidue(m49, 1, 10), ValuatedResidue(m49, 0, 5));
        CHECK(r.valuation() == 1);
        CHECK(r.unit() == 1);
    }
    SUBCASE("divide") {
        auto r = vr_div(ValuatedResidue(m49, 1, 3), ValuatedResidue(m49, 1, 3));
        CHECK(r.valuation() == 0);
        CHECK(r.unit() == 1);
        auto s = vr_div(ValuatedResidue(m49, 0, 2), ValuatedResidue(m49, 1, 1));
        CHECK(s.valuation() == -1);
        CHECK(s.unit() == 2);
        CHECK_THROWS_AS(vr_div(s, ValuatedResidue::exact_zero(m49)), DivisionByExactZero);
    }
    SUBCASE("collapse") {
        CHECK(vr_collapse(ValuatedResidue(m49, 1, 10)).value() == 21);
        CHECK(vr_collapse(ValuatedResidue(m49, 2, 3)).value() == 0);
        CHECK(vr_collapse(ValuatedResidue::exact_zero(m49)).value() == 0);
        CHECK_THROWS_AS(vr_collapse(ValuatedResidue(m49, -1, 2)), NegativeValuation);
    }
    SUBCASE("exact zero absorbs") {
        auto z = vr_mul(ValuatedResidue::exact_zero(m49), ValuatedResidue(m49, -3, 2));
        CHECK(z.is_exact_zero());
        CHECK(vr_div(z, ValuatedResidue(m49, 1, 1)).is_exact_zero());
    }
    SUBCASE("from_integer strips p") {
        auto v = ValuatedResidue::from_integer(m49, 70);
        CHECK(v.valuation() == 1);
        CHECK(v.unit() == 10);
        auto w = ValuatedResidue::from_integer(m49, -343 * 2);
        CHECK(w.valuation() == 3);
        CHECK(w.unit() == 47);
        CHECK(ValuatedResidue::from_integer(m49, 0).is_exact_zero());
    }
    CHECK_THROWS_AS(ValuatedResidue(m49, 0, 14), std::invalid_argument);
}

TEST_CASE("collapse is multiplicative where defined") {
    std::mt19937_64 rng(17);
    for (u64 p : {5ull, 13ull, 1009ull}) {
        const Modulus mod(p, 2);
        for (int i = 0; i < 500; ++i) {
            i64 a = static_cast<i64>(rng() % 100000) - 50000;
            i64 b = static_cast<i64>(rng() % 100000) - 50000;
            auto x = ValuatedResidue::from_integer(mod, a);
            auto y = ValuatedResidue::from_integer(mod, b);
            REQUIRE(vr_collapse(vr_mul(x, y)) == vr_collapse(x) * vr_collapse(y));
            REQUIRE(vr_collapse(x) == Residue::from_signed(mod, a));
        }
    }
}
