#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "y2p/field.hpp"

using namespace y2p;

TEST_CASE("prime validation") {
    CHECK_NOTHROW(FieldSpec::prime_field(2));
    CHECK_NOTHROW(FieldSpec::prime_field(65521));
    CHECK_THROWS_AS(FieldSpec::prime_field(1), Error);
    CHECK_THROWS_AS(FieldSpec::prime_field(4), Error);
    CHECK_THROWS_AS(FieldSpec::prime_field(91), Error); // 7*13
    CHECK_THROWS_AS(FieldSpec::extension(6, 2), Error);
}

TEST_CASE("deterministic moduli") {
    // F_4 = F_2[x]/(x^2+x+1), the unique irreducible quadratic
    auto f4 = FieldSpec::extension(2, 2);
    CHECK(f4.modulus == std::vector<uint32_t>{1, 1, 1});
    // F_9: x^2+1 is irreducible over F_3 and least in the scan order
    auto f9 = FieldSpec::extension(3, 2);
    CHECK(f9.modulus == std::vector<uint32_t>{1, 0, 1});
    // F_8: x^3+x+1 beats x^3+x^2+1 in the base-p digit order
    auto f8 = FieldSpec::extension(2, 3);
    CHECK(f8.modulus == std::vector<uint32_t>{1, 1, 0, 1});
}

TEST_CASE("field axioms on random triples") {
    const std::pair<uint32_t, uint32_t> cases[] = {{2, 1}, {2, 2}, {3, 1}, {5, 1}};
    std::mt19937_64 rng(7);
    for (auto [p, m] : cases) {
        FieldSpec f = m == 1 ? FieldSpec::prime_field(p) : FieldSpec::extension(p, m);
        auto elems = all_elements(f);
        auto pick = [&]() { return elems[rng() % elems.size()]; };
        for (int i = 0; i < 10000; ++i) {
            FieldScalar a = pick(), b = pick(), c = pick();
            CHECK(a + b == b + a);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + FieldScalar::zero(f) == a);
            CHECK(a * FieldScalar::one(f) == a);
            CHECK((a - a).is_zero());
            if (!a.is_zero()) {
                CHECK((a * a.inverse()).is_one());
                CHECK(a / a == FieldScalar::one(f));
            }
        }
    }
}

TEST_CASE("x^(p^m) = x for every element") {
    for (auto [p, m] : {std::pair<uint32_t, uint32_t>{2, 2}, {2, 3}, {3, 2}, {5, 1}}) {
        FieldSpec f = m == 1 ? FieldSpec::prime_field(p) : FieldSpec::extension(p, m);
        for (const auto& x : all_elements(f)) CHECK(x.pow(f.order()) == x);
    }
}

TEST_CASE("m=1 arithmetic is integer arithmetic mod p") {
    FieldSpec f = FieldSpec::prime_field(7);
    for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b) {
            CHECK(bracket(FieldScalar::from_int(f, a) + FieldScalar::from_int(f, b)) ==
                  static_cast<uint32_t>((a + b) % 7));
            CHECK(bracket(FieldScalar::from_int(f, a) * FieldScalar::from_int(f, b)) ==
                  static_cast<uint32_t>((a * b) % 7));
        }
}

TEST_CASE("frobenius_fix spec examples") {
    auto f4 = FieldSpec::extension(2, 2);
    CHECK(frobenius_fix(FieldScalar::one(f4)));
    CHECK_FALSE(frobenius_fix(FieldScalar::generator(f4))); // w^2 = w+1 != w
    auto f3 = FieldSpec::prime_field(3);
    for (const auto& x : all_elements(f3)) CHECK(frobenius_fix(x));
}

TEST_CASE("frobenius_fix agrees with prime-subfield enumeration up to order 64") {
    const std::pair<uint32_t, uint32_t> cases[] = {{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6},
                                                   {3, 2}, {3, 3}, {5, 2}, {7, 2}};
    for (auto [p, m] : cases) {
        FieldSpec f = FieldSpec::extension(p, m);
        size_t fixed = 0;
        for (const auto& x : all_elements(f)) {
            bool in_prime = false;
            for (uint32_t k = 0; k < p; ++k)
                if (x == FieldScalar::from_int(f, k)) in_prime = true;
            CHECK(frobenius_fix(x) == in_prime);
            fixed += frobenius_fix(x);
        }
        CHECK(fixed == p);
    }
}

TEST_CASE("bracket spec examples") {
    auto f5 = FieldSpec::prime_field(5);
    CHECK(bracket(FieldScalar::from_int(f5, 3)) == 3);
    CHECK(bracket(FieldScalar::from_int(f5, -1)) == 4);
    auto f2 = FieldSpec::prime_field(2);
    CHECK(bracket(FieldScalar::from_int(f2, 0)) == 0);
    // outside the prime subfield: domain error
    auto f4 = FieldSpec::extension(2, 2);
    CHECK_THROWS_AS(bracket(FieldScalar::generator(f4)), Error);
}

TEST_CASE("extension generator arithmetic in F_4") {
    auto f4 = FieldSpec::extension(2, 2);
    FieldScalar w = FieldScalar::generator(f4);
    CHECK(w * w == w + FieldScalar::one(f4)); // w^2 = w + 1
    CHECK((w * w * w).is_one());              // w^3 = 1
    CHECK(w.inverse() == w * w);
}
