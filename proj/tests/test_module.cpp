#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "y2p/module.hpp"
#include "y2p/presentation.hpp"

using namespace y2p;

namespace {

FieldScalar fi(const FieldSpec& f, int64_t v) { return FieldScalar::from_int(f, v); }

MatrixModule eval(const FieldSpec& f, int64_t a, int64_t b) {
    return evaluation_module(f, fi(f, a), fi(f, b));
}

bool same_actions(const MatrixModule& a, const MatrixModule& b) {
    return a.dim() == b.dim() && a.actions() == b.actions();
}

// the restricted gl_2 baby Verma Z(a, b) as matrices on w_0..w_{p-1}
MatrixModule gl2_baby_verma(const FieldSpec& f, int64_t a, int64_t b) {
    const size_t dim = f.p;
    Matrix e11(f, dim, dim), e12(f, dim, dim), e21(f, dim, dim), e22(f, dim, dim);
    for (size_t k = 0; k < dim; ++k) {
        FieldScalar kk = fi(f, static_cast<int64_t>(k));
        e11.set(k, k, fi(f, a) - kk);
        e22.set(k, k, fi(f, b) + kk);
        if (k + 1 < dim) e21.set(k + 1, k, FieldScalar::one(f));
        if (k >= 1) e12.set(k - 1, k, kk * (fi(f, a - b) - kk + FieldScalar::one(f)));
    }
    return gl2_module(e11, e12, e21, e22);
}

} // namespace

TEST_CASE("evaluation module spec examples") {
    auto f3 = FieldSpec::prime_field(3);
    MatrixModule m = eval(f3, 2, 0);
    CHECK(m.dim() == 3);
    // e_{1,2} v_1 = 2 v_0 and e_{1,2} v_2 = 2 v_1
    CHECK(m.op(1, 2, 1).get(0, 1) == fi(f3, 2));
    CHECK(m.op(1, 2, 1).get(1, 2) == fi(f3, 2));
    // gl_2 commutators hold as matrices: [e11, e21] = -e21, [e12, e21] = e11 - e22
    Matrix e11 = m.op(1, 1, 1), e12 = m.op(1, 2, 1), e21 = m.op(2, 1, 1), e22 = m.op(2, 2, 1);
    CHECK(e11 * e21 - e21 * e11 == Matrix(f3, 3, 3) - e21);
    CHECK(e12 * e21 - e21 * e12 == e11 - e22);

    MatrixModule one_dim = eval(f3, 1, 1);
    CHECK(one_dim.dim() == 1);
    CHECK(one_dim.op(1, 1, 1).get(0, 0) == fi(f3, 1));
    CHECK(one_dim.op(2, 1, 1).is_zero());

    auto f5 = FieldSpec::prime_field(5);
    CHECK(eval(f5, 3, 1).dim() == 3);
}

TEST_CASE("tensor spec examples") {
    auto f3 = FieldSpec::prime_field(3);
    MatrixModule m = eval(f3, 2, 0);
    SUBCASE("tensoring with the trivial module keeps the action") {
        MatrixModule triv(f3, 1);
        CHECK(same_actions(tensor(m, triv), m));
        CHECK(same_actions(tensor(triv, m), m));
    }
    SUBCASE("level-2 action of a two-factor tensor is sum_k t_ik (x) t_kj") {
        MatrixModule n = eval(f3, 1, 0);
        MatrixModule t = tensor(m, n);
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) {
                Matrix expect(f3, t.dim(), t.dim());
                for (int k = 1; k <= 2; ++k)
                    expect = expect + m.op(i, k, 1).kron(n.op(k, j, 1));
                CHECK(t.op(i, j, 2) == expect);
            }
        CHECK(t.level_support() == 2);
    }
    SUBCASE("dimensions multiply") {
        CHECK(tensor(eval(f3, 1, 0), eval(f3, 2, 0)).dim() == 6);
    }
}

TEST_CASE("twist spec examples") {
    auto f2 = FieldSpec::prime_field(2);
    MatrixModule m = eval(f2, 1, 0);
    SUBCASE("twist by 1 is the identity") {
        CHECK(same_actions(twist(m, LowerSeries::one(f2)), m));
    }
    SUBCASE("twisting the trivial module by 1+u^-1 gives diagonal series 1+u^-1") {
        MatrixModule triv(f2, 1);
        LowerSeries g = LowerSeries::from_coeffs(f2, {fi(f2, 1), fi(f2, 1)});
        MatrixModule tw = twist(triv, g);
        CHECK(tw.op(1, 1, 1).get(0, 0) == fi(f2, 1));
        CHECK(tw.op(2, 2, 1).get(0, 0) == fi(f2, 1));
        CHECK(tw.op(1, 2, 1).is_zero());
        auto hw = highest_weight_vectors(tw);
        REQUIRE(hw.size() == 1);
        CHECK(hw[0].lambda1 == g);
        CHECK(hw[0].lambda2 == g);
    }
    SUBCASE("twist multiplies highest-weight eigenvalue series") {
        auto f3 = FieldSpec::prime_field(3);
        MatrixModule base = eval(f3, 1, 0); // highest weight (1+u^-1, 1)
        LowerSeries lam2 = LowerSeries::from_coeffs(f3, {fi(f3, 1), fi(f3, 2)});
        REQUIRE(is_restricted(lam2));
        MatrixModule tw = twist(base, lam2);
        auto hw = highest_weight_vectors(tw);
        REQUIRE(hw.size() == 1);
        CHECK(hw[0].lambda1 ==
              mu_twist_series(lam2, LowerSeries::from_coeffs(f3, {fi(f3, 1), fi(f3, 1)})));
        CHECK(hw[0].lambda2 == lam2);
    }
    SUBCASE("non-restricted twist is rejected in restricted context") {
        auto f4 = FieldSpec::extension(2, 2);
        MatrixModule triv(f4, 1);
        LowerSeries bad = LowerSeries::from_coeffs(
            f4, {FieldScalar::one(f4), FieldScalar::generator(f4)});
        CHECK_THROWS_AS(twist(triv, bad), Error);
        CHECK_NOTHROW(twist(triv, bad, false));
    }
}

TEST_CASE("twist composes multiplicatively") {
    auto f3 = FieldSpec::prime_field(3);
    MatrixModule m = eval(f3, 2, 1);
    LowerSeries a = LowerSeries::from_coeffs(f3, {fi(f3, 1), fi(f3, 1)});
    LowerSeries b = LowerSeries::from_coeffs(f3, {fi(f3, 1), fi(f3, 2)});
    CHECK(same_actions(twist(twist(m, a), b), twist(m, a * b)));
}

TEST_CASE("highest weight vectors") {
    auto f3 = FieldSpec::prime_field(3);
    SUBCASE("evaluation module has a single line with the expected series") {
        auto hw = highest_weight_vectors(eval(f3, 2, 1));
        REQUIRE(hw.size() == 1);
        CHECK(hw[0].lambda1 == LowerSeries::from_coeffs(f3, {fi(f3, 1), fi(f3, 2)}));
        CHECK(hw[0].lambda2 == LowerSeries::from_coeffs(f3, {fi(f3, 1), fi(f3, 1)}));
    }
    SUBCASE("ordered tensor has exactly one line") {
        MatrixModule t = tensor(eval(f3, 1, 0), eval(f3, 2, 0));
        CHECK(highest_weight_vectors(t).size() == 1);
    }
    SUBCASE("a direct sum of two equal one-dim modules has a 2-dim joint kernel") {
        MatrixModule s = direct_sum(eval(f3, 1, 1), eval(f3, 1, 1));
        CHECK(highest_weight_vectors(s).size() == 2);
    }
    SUBCASE("tensor eigenvalues are coefficientwise products") {
        MatrixModule t = tensor(eval(f3, 1, 0), eval(f3, 2, 0));
        auto hw = highest_weight_vectors(t);
        REQUIRE(hw.size() == 1);
        auto lam1 = elementary_symmetric_series(f3, {fi(f3, 1), fi(f3, 2)});
        auto lam2 = elementary_symmetric_series(f3, {fi(f3, 0), fi(f3, 0)});
        CHECK(hw[0].lambda1 == lam1);
        CHECK(hw[0].lambda2 == lam2);
    }
}

TEST_CASE("spin spec examples") {
    auto f3 = FieldSpec::prime_field(3);
    MatrixModule m = eval(f3, 2, 0);
    SUBCASE("zero vector spins to nothing") {
        CHECK(spin(m, RowVec(3, 0)).empty());
    }
    SUBCASE("highest-weight vector of an irreducible module spins to everything") {
        auto hw = highest_weight_vectors(m);
        REQUIRE(hw.size() == 1);
        CHECK(spin(m, hw[0].vector).size() == m.dim());
        CHECK(is_irreducible(m).verdict == IrrVerdict::Irreducible);
    }
    SUBCASE("a vector in one summand spins inside it") {
        MatrixModule s = direct_sum(m, m);
        RowVec v(6, 0);
        v[0] = 1;
        CHECK(spin(s, v).size() == m.dim());
    }
}

TEST_CASE("irreducibility spec examples") {
    auto f3 = FieldSpec::prime_field(3);
    SUBCASE("ordered two-factor tensor is irreducible of dimension 6") {
        MatrixModule t = tensor(eval(f3, 1, 0), eval(f3, 2, 0));
        CHECK(t.dim() == 6);
        CHECK(is_irreducible(t).verdict == IrrVerdict::Irreducible);
    }
    SUBCASE("one-dimensional modules are irreducible") {
        CHECK(is_irreducible(eval(f3, 1, 1)).verdict == IrrVerdict::Irreducible);
    }
    SUBCASE("a direct sum is reducible with a verified witness") {
        MatrixModule s = direct_sum(eval(f3, 0, 0), eval(f3, 0, 0));
        auto r = is_irreducible(s);
        CHECK(r.verdict == IrrVerdict::Reducible);
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->rows() > 0);
        CHECK(r.witness->rows() < s.dim());
        CHECK(is_invariant_subspace(s.action_list(), *r.witness));
    }
}

TEST_CASE("simple head") {
    auto f3 = FieldSpec::prime_field(3);
    SUBCASE("an irreducible module is its own head") {
        MatrixModule m = eval(f3, 2, 0);
        auto hw = highest_weight_vectors(m);
        MatrixModule head = simple_head(m, hw[0].vector);
        CHECK(same_actions(head, m));
    }
    SUBCASE("gl2 baby Verma Z(0,0) at p=3 has a one-dimensional head") {
        MatrixModule z = gl2_baby_verma(f3, 0, 0);
        CHECK(z.dim() == 3);
        // e_{1,2} w_1 = 0: the submodule spanned by w_1, w_2 is maximal
        CHECK(z.op(1, 2, 1).get(0, 1).is_zero());
        RowVec v(3, 0);
        v[0] = 1;
        MatrixModule head = simple_head(z, v);
        CHECK(head.dim() == 1);
    }
    SUBCASE("non-cyclic vectors are rejected") {
        MatrixModule m = eval(f3, 1, 0);
        MatrixModule s = direct_sum(m, m);
        RowVec v(4, 0);
        v[0] = 1;
        v[2] = 1; // diagonal vector generates a proper graph submodule
        CHECK_THROWS_AS(simple_head(s, v), Error);
    }
}

TEST_CASE("verify_module") {
    auto f3 = FieldSpec::prime_field(3);
    SUBCASE("evaluation modules pass all checks") {
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                ModuleReport r = verify_module(eval(f3, a, b));
                CHECK(r.ok);
            }
    }
    SUBCASE("a two-factor tensor over F_2 passes") {
        auto f2 = FieldSpec::prime_field(2);
        MatrixModule t = tensor(eval(f2, 1, 0), eval(f2, 0, 1));
        CHECK(verify_module(t).ok);
    }
    SUBCASE("a corrupted action matrix fails with a witness") {
        MatrixModule m = eval(f3, 2, 0);
        Matrix bad = m.op(1, 1, 1);
        bad.set_int(0, 1, 1);
        m.set_op(1, 1, 1, bad);
        ModuleReport r = verify_module(m);
        CHECK_FALSE(r.ok);
        REQUIRE(!r.failures.empty());
        CHECK(r.failures[0].find("(i,j,k,l,r,s)=") != std::string::npos);
    }
}

TEST_CASE("every constructed module has a nonzero joint kernel of t_{1,2}") {
    auto f3 = FieldSpec::prime_field(3);
    for (int a1 = 0; a1 < 3; ++a1)
        for (int b1 = 0; b1 < 3; ++b1) {
            CHECK_NOTHROW(highest_weight_vectors(eval(f3, a1, b1)));
            CHECK_NOTHROW(highest_weight_vectors(tensor(eval(f3, a1, b1), eval(f3, 1, 0))));
        }
}

namespace {

// evaluate a commutative polynomial in the d-generators on module operators
Matrix eval_d_poly(const NCPoly& x, const DrinfeldOperators& ops, const FieldSpec& f,
                   size_t dim) {
    Matrix acc(f, dim, dim);
    for (const auto& [w, c] : x.terms()) {
        Matrix term = Matrix::identity(f, dim);
        for (Gen g : w) {
            const auto& series = gen_fam(g) == Fam::D1 ? ops.d1 : ops.d2;
            term = term * series[gen_level(g)];
        }
        acc = acc + term.scaled(c);
    }
    return acc;
}

} // namespace

TEST_CASE("Gauss-decomposed d-operators match the t-diagonal on highest weight vectors") {
    // on a vector killed by every t_{1,2}^(r), the d_i eigenvalue series equal
    // the t_{i,i} ones, which ties the two presentations of the baby Verma
    auto f3 = FieldSpec::prime_field(3);
    MatrixModule t = tensor(eval(f3, 1, 0), eval(f3, 2, 0));
    auto hw = highest_weight_vectors(t);
    REQUIRE(hw.size() == 1);
    DrinfeldOperators ops = drinfeld_operators(t, t.level_support());
    for (uint32_t r = 1; r <= t.level_support(); ++r) {
        RowVec d1v = ops.d1[r].apply(hw[0].vector);
        RowVec d2v = ops.d2[r].apply(hw[0].vector);
        RowVec e1 = hw[0].vector, e2 = hw[0].vector;
        rowops::scale(f3, e1.data(), hw[0].lambda1.coeff(r), t.dim());
        rowops::scale(f3, e2.data(), hw[0].lambda2.coeff(r), t.dim());
        CHECK(d1v == e1);
        CHECK(d2v == e2);
        // e-operators annihilate the highest weight line
        RowVec ev = ops.e[r].apply(hw[0].vector);
        CHECK(rowops::is_zero(ev.data(), ev.size()));
    }
}

TEST_CASE("p-center series coefficients act as zero on restricted modules") {
    // b_i(u) = d_i(u) d_i(u-1) ... d_i(u-p+1) collapses to 1 on Y2^[p]-modules
    for (uint32_t p : {2u, 3u}) {
        FieldSpec f = FieldSpec::prime_field(p);
        std::vector<MatrixModule> modules;
        modules.push_back(eval(f, 1, 0));
        modules.push_back(tensor(eval(f, 1, 0), eval(f, p - 1, 0)));
        for (const auto& mod : modules) {
            const uint32_t bound = p * (mod.level_support() + 1);
            DrinfeldOperators ops = drinfeld_operators(mod, bound);
            for (int i = 1; i <= 2; ++i)
                for (uint32_t n = 1; n <= bound; ++n) {
                    Matrix b = eval_d_poly(p_center_b(f, i, n), ops, f, mod.dim());
                    CHECK(b.is_zero());
                }
        }
    }
}

TEST_CASE("module JSON round trip") {
    auto f3 = FieldSpec::prime_field(3);
    MatrixModule m = tensor(eval(f3, 1, 0), eval(f3, 2, 0));
    std::string text = module_to_json(m);
    MatrixModule back = module_from_json(text);
    CHECK(same_actions(back, m));
    CHECK(back.spec() == m.spec());
    // extension-field scalars serialize as coefficient arrays
    auto f4 = FieldSpec::extension(2, 2);
    MatrixModule triv(f4, 1);
    MatrixModule tw = twist(
        triv, LowerSeries::from_coeffs(f4, {FieldScalar::one(f4), FieldScalar::one(f4)}));
    CHECK(same_actions(module_from_json(module_to_json(tw)), tw));
    // unsupported schema versions are rejected
    CHECK_THROWS_AS(
        module_from_json(R"({"schema":2,"field":{"p":3,"m":1},"dim":1,"actions":[]})"),
        Error);
}
