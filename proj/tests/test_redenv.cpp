#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "y2p/redenv.hpp"

using namespace y2p;

namespace {

FieldScalar fi(const FieldSpec& f, int64_t v) { return FieldScalar::from_int(f, v); }

std::vector<FieldScalar> tup(const FieldSpec& f, std::initializer_list<int64_t> vals) {
    std::vector<FieldScalar> out;
    for (int64_t v : vals) out.push_back(fi(f, v));
    return out;
}

} // namespace

TEST_CASE("chi spec examples") {
    auto f2 = FieldSpec::prime_field(2);
    SUBCASE("n=2: chi is 1 exactly on e_{2,1} and e_{4,3}") {
        ChiForm chi = chi_of(f2, 2);
        CHECK(chi(2, 1).is_one());
        CHECK(chi(4, 3).is_one());
        for (int a = 1; a <= 4; ++a)
            for (int b = 1; b <= 4; ++b)
                if (!(a == 2 && b == 1) && !(a == 4 && b == 3))
                    CHECK(chi(a, b).is_zero());
    }
    SUBCASE("n=1: e vanishes, so chi = 0") {
        ChiForm chi = chi_of(f2, 1);
        for (int a = 1; a <= 2; ++a)
            for (int b = 1; b <= 2; ++b) CHECK(chi(a, b).is_zero());
    }
}

TEST_CASE("u_straighten spec examples") {
    auto f3 = FieldSpec::prime_field(3);
    SUBCASE("e_{1,2} e_{2,1} = e_{2,1} e_{1,2} + e_{1,1} - e_{2,2}, inside gl_2") {
        UChiContext ctx(f3, 1);
        // n=1 boxes: 1 and 1'=2; e_{1,2} is the raising unit
        auto nf = ctx.straighten(UWord{{1, 2}, {2, 1}}, FieldScalar::one(f3));
        REQUIRE(nf.size() == 3);
        CHECK(nf.at(UWord{{2, 1}, {1, 2}}).is_one());
        CHECK(nf.at(UWord{{1, 1}}).is_one());
        CHECK(nf.at(UWord{{2, 2}}) == fi(f3, -1));
    }
    SUBCASE("e_{2,1}^p reduces to the scalar chi^p = 1 at n=2") {
        auto f2 = FieldSpec::prime_field(2);
        UChiContext ctx(f2, 2);
        auto nf = ctx.straighten(UWord{{2, 1}, {2, 1}}, FieldScalar::one(f2));
        REQUIRE(nf.size() == 1);
        CHECK(nf.at(UWord{}).is_one());
    }
    SUBCASE("e_{1,1}^p collapses to e_{1,1}") {
        auto f2 = FieldSpec::prime_field(2);
        UChiContext ctx(f2, 2);
        auto nf = ctx.straighten(UWord{{1, 1}, {1, 1}}, FieldScalar::one(f2));
        REQUIRE(nf.size() == 1);
        CHECK(nf.at(UWord{{1, 1}}).is_one());
    }
    SUBCASE("normal forms are ordered with exponents below p") {
        auto f2 = FieldSpec::prime_field(2);
        UChiContext ctx(f2, 2);
        auto nf = ctx.straighten(UWord{{1, 2}, {2, 1}, {3, 4}, {4, 3}, {2, 1}},
                                 FieldScalar::one(f2));
        for (const auto& [w, c] : nf) {
            for (size_t i = 0; i + 1 < w.size(); ++i) {
                CHECK(ctx.unit_key(w[i].first, w[i].second) <=
                      ctx.unit_key(w[i + 1].first, w[i + 1].second));
                // runs stay shorter than p
                if (w[i] == w[i + 1]) CHECK(f2.p > 2);
            }
        }
    }
}

TEST_CASE("induced module dimensions") {
    auto f2 = FieldSpec::prime_field(2);
    SUBCASE("p=2 n=2 simple seed (1,1),(0,0): 2^4 * 4 = 64") {
        LeviModule seed = LeviModule::simple(f2, tup(f2, {1, 1}), tup(f2, {0, 0}));
        CHECK(seed.dim() == 4);
        InducedModule v = InducedModule::induce(seed);
        CHECK(v.dim() == 64);
    }
    SUBCASE("p=2 n=1: empty m gives dim = seed dim") {
        LeviModule seed = LeviModule::simple(f2, tup(f2, {0}), tup(f2, {0}));
        InducedModule v = InducedModule::induce(seed);
        CHECK(v.dim() == 1);
        CHECK(m_chi_invariants(v).rows() == 1);
        CHECK(simplicity_check(v).verdict == IrrVerdict::Irreducible);
    }
    SUBCASE("p=3 n=2 one-dimensional seed: 3^4 = 81") {
        auto f3 = FieldSpec::prime_field(3);
        LeviModule seed = LeviModule::simple(f3, tup(f3, {1, 1}), tup(f3, {1, 1}));
        CHECK(InducedModule::induce(seed).dim() == 81);
    }
    SUBCASE("budget refusal") {
        auto f3 = FieldSpec::prime_field(3);
        LeviModule seed = LeviModule::simple(f3, tup(f3, {1, 1, 1}), tup(f3, {0, 0, 0}));
        CHECK_THROWS_AS(InducedModule::induce(seed, 10000), BudgetError);
    }
}

TEST_CASE("p-power operator identities") {
    auto f2 = FieldSpec::prime_field(2);
    LeviModule seed = LeviModule::simple(f2, tup(f2, {1, 1}), tup(f2, {0, 0}));
    InducedModule v = InducedModule::induce(seed);
    const Matrix id = Matrix::identity(f2, v.dim());
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            Matrix x = v.unit_op(a, b);
            Matrix xp = x.pow(f2.p);
            Matrix xbracket = a == b ? x : Matrix(f2, v.dim(), v.dim());
            FieldScalar chip = v.context().chi()(a, b).pow(f2.p);
            CHECK(xp - xbracket == id.scaled(chip));
        }
}

TEST_CASE("m_chi invariants recover the seed dimension") {
    auto f2 = FieldSpec::prime_field(2);
    SUBCASE("simple seed of dimension 4") {
        LeviModule seed = LeviModule::simple(f2, tup(f2, {1, 1}), tup(f2, {0, 0}));
        InducedModule v = InducedModule::induce(seed);
        CHECK(m_chi_invariants(v).rows() == 4);
    }
    SUBCASE("one-dimensional seed") {
        LeviModule seed = LeviModule::simple(f2, tup(f2, {1, 1}), tup(f2, {1, 1}));
        InducedModule v = InducedModule::induce(seed);
        CHECK(v.dim() == 16);
        CHECK(m_chi_invariants(v).rows() == 1);
    }
}

TEST_CASE("simplicity checks") {
    auto f2 = FieldSpec::prime_field(2);
    SUBCASE("simple seed under the ordering condition: probabilistic positive") {
        LeviModule seed = LeviModule::simple(f2, tup(f2, {1, 1}), tup(f2, {0, 0}));
        InducedModule v = InducedModule::induce(seed);
        auto r = simplicity_check(v, 7, {300000, 40});
        CHECK(r.verdict == IrrVerdict::IrreducibleProbabilistic);
    }
    SUBCASE("reducible baby Verma seed is detected with a witness") {
        LeviModule seed = LeviModule::baby_verma(f2, tup(f2, {0, 0}), tup(f2, {0, 0}));
        InducedModule v = InducedModule::induce(seed);
        auto r = simplicity_check(v, 7, {300000, 40});
        REQUIRE(r.verdict == IrrVerdict::Reducible);
        REQUIRE(r.witness.has_value());
        CHECK(is_invariant_subspace(v.all_unit_ops(), *r.witness));
        CHECK(r.witness->rows() > 0);
        CHECK(r.witness->rows() < v.dim());
    }
}

TEST_CASE("diagonal units are diagonal and the character factors") {
    auto f2 = FieldSpec::prime_field(2);
    LeviModule seed = LeviModule::simple(f2, tup(f2, {1, 1}), tup(f2, {0, 0}));
    InducedModule v = InducedModule::induce(seed);
    const auto& units = v.context().m_units();
    const size_t boxes = 4;

    // every diagonal unit acts diagonally on the monomial-tensor basis
    std::vector<Matrix> diags;
    for (size_t a = 1; a <= boxes; ++a) {
        Matrix d = v.unit_op(static_cast<int>(a), static_cast<int>(a));
        for (size_t i = 0; i < v.dim(); ++i)
            for (size_t j = 0; j < v.dim(); ++j)
                if (i != j) CHECK(d.get(i, j).is_zero());
        diags.push_back(std::move(d));
    }

    // weights of the induced basis = seed weight + m-monomial weight
    std::vector<std::vector<uint32_t>> got, expect;
    for (size_t i = 0; i < v.dim(); ++i) {
        std::vector<uint32_t> w;
        for (size_t a = 0; a < boxes; ++a) w.push_back(bracket(diags[a].get(i, i)));
        got.push_back(std::move(w));
    }
    const uint32_t p = f2.p;
    for (size_t mi = 0; mi < v.dim() / v.seed_dim(); ++mi) {
        std::vector<int64_t> mweight(boxes, 0);
        size_t rest = mi;
        for (size_t u = units.size(); u-- > 0;) {
            uint32_t e = static_cast<uint32_t>(rest % p);
            rest /= p;
            mweight[units[u].first - 1] += e;
            mweight[units[u].second - 1] -= e;
        }
        for (size_t k = 0; k < v.seed_dim(); ++k) {
            std::vector<uint32_t> w;
            for (size_t a = 1; a <= boxes; ++a) {
                FieldScalar seed_wt = seed.unit_action(static_cast<int>(a),
                                                       static_cast<int>(a))
                                          .get(k, k);
                w.push_back(bracket(seed_wt + fi(f2, mweight[a - 1])));
            }
            expect.push_back(std::move(w));
        }
    }
    std::sort(got.begin(), got.end());
    std::sort(expect.begin(), expect.end());
    CHECK(got == expect);
}
