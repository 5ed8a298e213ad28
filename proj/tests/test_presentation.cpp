#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "y2p/presentation.hpp"

using namespace y2p;

namespace {

NCPoly mono(const FieldSpec& f, std::initializer_list<Gen> gens, int64_t c = 1) {
    return NCPoly::monomial(f, Word(gens), FieldScalar::from_int(f, c));
}

Gen F(uint32_t r) { return make_gen(Fam::F, r); }
Gen D1(uint32_t r) { return make_gen(Fam::D1, r); }
Gen D2(uint32_t r) { return make_gen(Fam::D2, r); }
Gen E(uint32_t r) { return make_gen(Fam::E, r); }

NCPoly random_words(const FieldSpec& f, std::mt19937_64& rng, size_t terms, size_t max_len,
                    uint32_t max_level) {
    NCPoly x(f);
    for (size_t t = 0; t < terms; ++t) {
        Word w(1 + rng() % max_len);
        for (auto& g : w)
            g = make_gen(static_cast<Fam>(rng() % 4), 1 + rng() % max_level);
        x.add_term(w, FieldScalar::from_int(f, 1 + static_cast<int64_t>(rng() % (f.p - 1))));
    }
    return x;
}

} // namespace

TEST_CASE("dprime_expand spec examples") {
    auto f3 = FieldSpec::prime_field(3);
    CHECK(dprime_expand(f3, 1, 0) == NCPoly::scalar(FieldScalar::one(f3)));
    CHECK(dprime_expand(f3, 1, 1) == mono(f3, {D1(1)}, -1));
    CHECK(dprime_expand(f3, 1, 2) == mono(f3, {D1(1), D1(1)}) - mono(f3, {D1(2)}));
    // sum_t d^(t) d'^(r-t) = 0 for r >= 1, after straightening
    for (uint32_t r = 1; r <= 5; ++r) {
        NCPoly acc = dprime_expand(f3, 1, r);
        for (uint32_t t = 1; t <= r; ++t)
            acc = acc + NCPoly::generator(f3, Fam::D1, t) * dprime_expand(f3, 1, r - t);
        CHECK(straighten(acc).is_zero());
    }
}

TEST_CASE("straighten spec examples") {
    auto f3 = FieldSpec::prime_field(3);
    SUBCASE("e(1) f(1) = f(1) e(1) + d1(1) - d2(1)") {
        NCPoly lhs = straighten(mono(f3, {E(1), F(1)}));
        NCPoly rhs = mono(f3, {F(1), E(1)}) + mono(f3, {D1(1)}) - mono(f3, {D2(1)});
        CHECK(lhs == rhs);
    }
    SUBCASE("[d1(1), e(1)] = e(1), the first Drinfeld relation at r=s=1") {
        NCPoly bracket = mono(f3, {D1(1), E(1)}) - mono(f3, {E(1), D1(1)});
        CHECK(straighten(bracket) == mono(f3, {E(1)}));
    }
    SUBCASE("restricted mode kills p-th powers") {
        auto f2 = FieldSpec::prime_field(2);
        StraightenOpts r;
        r.mode = StraightenMode::Restricted;
        CHECK(straighten(mono(f2, {F(1), F(1)}), r).is_zero());
        CHECK_FALSE(straighten(mono(f2, {F(1), F(1)})).is_zero());
    }
}

TEST_CASE("rtt_to_drinfeld spec examples") {
    auto f3 = FieldSpec::prime_field(3);
    CHECK(rtt_to_drinfeld(f3, 1, 1, 2) == mono(f3, {D1(2)}));
    CHECK(rtt_to_drinfeld(f3, 1, 2, 1) == mono(f3, {E(1)}));
    CHECK(rtt_to_drinfeld(f3, 2, 2, 1) == mono(f3, {D2(1)}));
    CHECK(rtt_to_drinfeld(f3, 2, 2, 2) ==
          mono(f3, {D2(2)}) + mono(f3, {F(1), E(1)}));
    CHECK(rtt_to_drinfeld(f3, 2, 1, 2) ==
          mono(f3, {F(1), D1(1)}) + mono(f3, {F(2)}));
}

TEST_CASE("verify_rtt_relation spec examples") {
    auto f3 = FieldSpec::prime_field(3);
    CHECK(verify_rtt_relation(f3, 1, 1, 1, 1, 1, 1));
    CHECK(verify_rtt_relation(f3, 1, 1, 1, 2, 2, 1));
    // a quick exhaustive slice; the full r,s <= 3 sweep runs in acceptance
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k)
                for (int l = 1; l <= 2; ++l)
                    CHECK(verify_rtt_relation(f3, 2, 1, i, j, k, l));
}

TEST_CASE("p-center series coefficients") {
    auto f2 = FieldSpec::prime_field(2);
    CHECK(p_center_b(f2, 1, 1).is_zero()); // 2 d1(1) = 0
    CHECK(p_center_b(f2, 1, 2) == mono(f2, {D1(1), D1(1)}) + mono(f2, {D1(1)}));
    auto f3 = FieldSpec::prime_field(3);
    CHECK(p_center_b(f3, 2, 0) == NCPoly::scalar(FieldScalar::one(f3)));
    // b_i^(N) = 0 for 0 < N < p (all binomial weights divisible by p)
    for (uint32_t n = 1; n < 3; ++n) CHECK(straighten(p_center_b(f3, 1, n)).is_zero());
}

TEST_CASE("nilpotency witnesses") {
    auto f3 = FieldSpec::prime_field(3);
    CHECK(nilpotency_witness(NCPoly::generator(f3, Fam::F, 1)) == 3);
    auto f2 = FieldSpec::prime_field(2);
    NCPoly x = NCPoly::generator(f2, Fam::F, 1) + NCPoly::generator(f2, Fam::F, 2);
    uint32_t n = nilpotency_witness(x);
    CHECK(n <= 4);
    CHECK(nilpotency_witness(NCPoly::zero(f2)) == 1);
    // e-generators are rejected: the lemma is about the f-side
    CHECK_THROWS_AS(nilpotency_witness(NCPoly::generator(f2, Fam::E, 1)), Error);
    CHECK_THROWS_AS(nilpotency_witness(NCPoly::scalar(FieldScalar::one(f2))), Error);
    // an insufficient cap is reported, never silently truncated
    CHECK_THROWS_AS(nilpotency_witness(NCPoly::generator(f3, Fam::F, 1), 2), Error);
}

TEST_CASE("straightening is idempotent, linear and confluent") {
    for (uint32_t p : {2u, 3u, 5u}) {
        auto f = FieldSpec::prime_field(p);
        std::mt19937_64 rng(1000 + p);
        StraightenOpts left, right;
        left.level_bound = right.level_bound = 64;
        right.rightmost = true;
        for (int trial = 0; trial < 60; ++trial) {
            NCPoly x = random_words(f, rng, 2, 5, 4);
            NCPoly nf = straighten(x, left);
            CHECK(straighten(nf, left) == nf);
            CHECK(straighten(x, right) == nf);
            // linearity against a second element
            NCPoly y = random_words(f, rng, 2, 4, 4);
            FieldScalar a = FieldScalar::from_int(f, 1 + rng() % p);
            NCPoly combo = x.scaled(a) + y;
            CHECK(straighten(combo, left) ==
                  straighten(x, left).scaled(a) + straighten(y, left));
            // total level sum never increases
            CHECK(nf.total_degree() <= x.total_degree());
        }
    }
}

TEST_CASE("normal forms are ordered words") {
    auto f5 = FieldSpec::prime_field(5);
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        NCPoly x = random_words(f5, rng, 3, 6, 4);
        NCPoly nf = straighten(x);
        bool sorted = true;
        for (const auto& [w, c] : nf.terms())
            for (size_t i = 0; i + 1 < w.size(); ++i) sorted &= w[i] <= w[i + 1];
        CHECK(sorted);
    }
}

TEST_CASE("level bound is enforced on input") {
    auto f2 = FieldSpec::prime_field(2);
    StraightenOpts o;
    o.level_bound = 2;
    CHECK_THROWS_AS(straighten(mono(f2, {E(3)}), o), Error);
}

TEST_CASE("pbw exponent view round-trips") {
    Word w{F(1), F(1), D1(2), E(1)};
    PBWMonomial m = PBWMonomial::from_word(w);
    CHECK(m.f.at(1) == 2);
    CHECK(m.d1.at(2) == 1);
    CHECK(m.e.at(1) == 1);
    CHECK(m.to_word() == w);
    CHECK_FALSE(m.has_high_d_exponent(2));
    PBWMonomial hi = PBWMonomial::from_word({D1(1), D1(1), D1(1)});
    CHECK(hi.has_high_d_exponent(3));
}
