#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "y2p/series.hpp"

using namespace y2p;

namespace {

LowerSeries ls(const FieldSpec& f, std::initializer_list<int64_t> coeffs) {
    std::vector<FieldScalar> c;
    for (int64_t v : coeffs) c.push_back(FieldScalar::from_int(f, v));
    return LowerSeries::from_coeffs(f, std::move(c));
}

Poly upoly(const FieldSpec& f, std::initializer_list<int64_t> ascending) {
    std::vector<FieldScalar> c;
    for (int64_t v : ascending) c.push_back(FieldScalar::from_int(f, v));
    return Poly::from_coeffs(f, std::move(c));
}

// all coefficient vectors (c_1..c_n) over F_p, as series
std::vector<LowerSeries> all_series(const FieldSpec& f, size_t n) {
    std::vector<LowerSeries> out;
    std::vector<uint32_t> v(n, 0);
    while (true) {
        std::vector<FieldScalar> c{FieldScalar::one(f)};
        for (uint32_t x : v) c.push_back(FieldScalar::from_int(f, x));
        out.push_back(LowerSeries::from_coeffs(f, std::move(c)));
        size_t i = 0;
        for (; i < n; ++i) {
            if (++v[i] < f.p) break;
            v[i] = 0;
        }
        if (i == n) break;
    }
    return out;
}

} // namespace

TEST_CASE("is_restricted spec examples") {
    auto f3 = FieldSpec::prime_field(3);
    CHECK(is_restricted(ls(f3, {1, 2})));
    CHECK(is_restricted(LowerSeries::one(f3)));

    auto f4 = FieldSpec::extension(2, 2);
    FieldScalar w = FieldScalar::generator(f4);
    CHECK_FALSE(is_restricted(
        LowerSeries::from_coeffs(f4, {FieldScalar::one(f4), w})));
}

TEST_CASE("product_shifts spec examples") {
    auto f2 = FieldSpec::prime_field(2);
    auto [l2, r2] = product_shifts(ls(f2, {1, 1}));
    CHECK(l2 == upoly(f2, {0, 1, 1})); // u^2 + u
    CHECK(r2 == upoly(f2, {0, 1, 1}));

    auto f3 = FieldSpec::prime_field(3);
    auto [l3, r3] = product_shifts(LowerSeries::one(f3));
    CHECK(l3 == upoly(f3, {1}));
    CHECK(r3 == upoly(f3, {1}));

    auto f4 = FieldSpec::extension(2, 2);
    FieldScalar w = FieldScalar::generator(f4);
    auto [l4, r4] = product_shifts(LowerSeries::from_coeffs(f4, {FieldScalar::one(f4), w}));
    // (u+w)(u+1+w) = u^2 + u + 1 using w^2 = w+1
    CHECK(l4 == Poly::from_coeffs(f4, {FieldScalar::one(f4), FieldScalar::one(f4),
                                       FieldScalar::one(f4)}));
    CHECK(r4 == Poly::from_coeffs(f4, {FieldScalar::zero(f4), FieldScalar::one(f4),
                                       FieldScalar::one(f4)}));
}

TEST_CASE("elementary symmetric series") {
    auto f5 = FieldSpec::prime_field(5);
    auto s = elementary_symmetric_series(
        f5, {FieldScalar::from_int(f5, 1), FieldScalar::from_int(f5, 2)});
    CHECK(s == ls(f5, {1, 3, 2}));
    CHECK(elementary_symmetric_series(f5, {}) == LowerSeries::one(f5));
    auto zeros = elementary_symmetric_series(
        f5, std::vector<FieldScalar>(3, FieldScalar::zero(f5)));
    CHECK(zeros == LowerSeries::one(f5));
}

TEST_CASE("mu_twist_series spec examples") {
    auto f2 = FieldSpec::prime_field(2);
    CHECK(mu_twist_series(LowerSeries::one(f2), ls(f2, {1, 1})) == ls(f2, {1, 1}));
    CHECK(mu_twist_series(ls(f2, {1, 1}), ls(f2, {1, 1})) == ls(f2, {1, 0, 1}));
    auto f5 = FieldSpec::prime_field(5);
    CHECK(mu_twist_series(ls(f5, {1, 2}), ls(f5, {1, 3})) == ls(f5, {1, 0, 1}));
}

TEST_CASE("drinfeld polynomial spec examples") {
    auto f2 = FieldSpec::prime_field(2);
    SUBCASE("lambda1 = 1+u^-1, lambda2 = 1 gives P = u") {
        auto P = drinfeld_polynomial(ls(f2, {1, 1}), LowerSeries::one(f2));
        REQUIRE(P.has_value());
        CHECK(*P == upoly(f2, {0, 1}));
    }
    SUBCASE("equal inputs give P = 1") {
        auto f3 = FieldSpec::prime_field(3);
        auto P = drinfeld_polynomial(ls(f3, {1, 2, 1}), ls(f3, {1, 2, 1}));
        REQUIRE(P.has_value());
        CHECK(P->degree() == 0);
    }
    SUBCASE("twist example over F_4") {
        auto f4 = FieldSpec::extension(2, 2);
        FieldScalar w = FieldScalar::generator(f4);
        FieldScalar one = FieldScalar::one(f4);
        RationalSeries lam1(LowerSeries::from_coeffs(f4, {one, w + one}),
                            LowerSeries::from_coeffs(f4, {one, w}));
        auto P = drinfeld_polynomial(lam1, LowerSeries::one(f4));
        REQUIRE(P.has_value());
        CHECK(*P == Poly::linear(w)); // u + w
    }
    SUBCASE("no Artin-Schreier matching gives nullopt") {
        auto f4 = FieldSpec::extension(2, 2);
        FieldScalar w = FieldScalar::generator(f4);
        auto P = drinfeld_polynomial(
            LowerSeries::from_coeffs(f4, {FieldScalar::one(f4), w}),
            LowerSeries::one(f4));
        CHECK_FALSE(P.has_value());
    }
    SUBCASE("unsplittable ratio reports the required extension") {
        // 1 + u^-1 + u^-2 over F_2: u^2+u+1 is irreducible, roots in F_4
        try {
            drinfeld_polynomial(ls(f2, {1, 1, 1}), LowerSeries::one(f2));
            FAIL("expected NeedsLargerField");
        } catch (const NeedsLargerField& e) {
            CHECK(e.required_degree == 2);
        }
    }
}

TEST_CASE("identity holds whenever a witness is returned, and for the u^p-u multiple") {
    auto f2 = FieldSpec::prime_field(2);
    LowerSeries l1 = ls(f2, {1, 1});
    LowerSeries l2 = LowerSeries::one(f2);
    auto P = drinfeld_polynomial(l1, l2);
    REQUIRE(P.has_value());
    CHECK(drinfeld_identity_holds(l1, l2, *P));
    // non-uniqueness: P(u) * (u^p - u) is another witness
    Poly Q = *P * (Poly::x(f2).pow(2) - Poly::x(f2));
    CHECK(drinfeld_identity_holds(l1, l2, Q));
    CHECK(Q != *P);
}

TEST_CASE("restricted tuples from F_p roots, both directions of the root lemma") {
    for (uint32_t p : {2u, 3u, 5u}) {
        auto f = FieldSpec::prime_field(p);
        // roots in F_p imply restricted, exhaustively over tuples of length <= 2
        for (uint32_t a = 0; a < p; ++a) {
            CHECK(is_restricted(LowerSeries::from_roots(f, {FieldScalar::from_int(f, a)})));
            for (uint32_t b = 0; b < p; ++b)
                CHECK(is_restricted(LowerSeries::from_roots(
                    f, {FieldScalar::from_int(f, a), FieldScalar::from_int(f, b)})));
        }
    }
    // converse over F_4: restricted polynomial series have Frobenius-fixed roots
    auto f4 = FieldSpec::extension(2, 2);
    for (const auto& a : all_elements(f4))
        for (const auto& b : all_elements(f4)) {
            auto lam = LowerSeries::from_roots(f4, {a, b});
            if (!is_restricted(lam)) continue;
            for (const auto& root : lam.to_monic_poly().roots())
                CHECK(frobenius_fix(root));
        }
}

TEST_CASE("restricted polynomial pairs always admit a Drinfeld polynomial") {
    for (uint32_t p : {2u, 3u}) {
        auto f = FieldSpec::prime_field(p);
        for (const auto& l1 : all_series(f, 2)) {
            if (!is_restricted(l1)) continue;
            for (const auto& l2 : all_series(f, 2)) {
                if (!is_restricted(l2)) continue;
                auto P = drinfeld_polynomial(l1, l2);
                REQUIRE(P.has_value());
                CHECK(drinfeld_identity_holds(l1, l2, *P));
            }
        }
    }
}

TEST_CASE("rational series reduce and compare by cross-multiplication") {
    auto f3 = FieldSpec::prime_field(3);
    // (1+u^-1)(1+2u^-1) / (1+2u^-1) reduces to 1+u^-1
    RationalSeries r(ls(f3, {1, 1}) * ls(f3, {1, 2}), ls(f3, {1, 2}));
    CHECK(r.is_polynomial());
    CHECK(r.num() == ls(f3, {1, 1}));
    CHECK(RationalSeries(ls(f3, {1, 1})) == r);
}
