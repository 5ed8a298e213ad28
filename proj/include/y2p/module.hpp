#pragma once

#include <map>
#include <string>
#include <tuple>

#include "y2p/series.hpp"
#include "y2p/spin.hpp"

namespace y2p {

// Finite-dimensional Y2-module given by the matrices of the RTT generators.
// t_{i,j}^(0) = delta_{ij} I is implicit; only r >= 1 with nonzero action is
// stored.
class MatrixModule {
public:
    using Key = std::tuple<int, int, uint32_t>; // (i, j, r)

    MatrixModule(const FieldSpec& f, size_t dim) : spec_(f), dim_(dim) {}

    const FieldSpec& spec() const { return spec_; }
    size_t dim() const { return dim_; }
    uint32_t level_support() const { return support_; }

    Matrix op(int i, int j, uint32_t r) const;
    void set_op(int i, int j, uint32_t r, Matrix m);
    const std::map<Key, Matrix>& actions() const { return actions_; }

    // every stored generator matrix, for spinning
    std::vector<Matrix> action_list() const;

private:
    FieldSpec spec_;
    size_t dim_;
    uint32_t support_ = 0;
    std::map<Key, Matrix> actions_;
};

// L(alpha, beta) pulled back along t_{i,j}(u) -> delta_{ij} + e_{i,j} u^{-1}:
// dim [alpha-beta]+1, t^(1) acts by the gl_2 matrix units, t^(r>=2) = 0.
MatrixModule evaluation_module(const FieldSpec& f, const FieldScalar& alpha,
                               const FieldScalar& beta);

// Any gl_2 representation pulled back the same way (e.g. a gl_2 baby Verma).
MatrixModule gl2_module(const Matrix& e11, const Matrix& e12, const Matrix& e21,
                        const Matrix& e22);

// Comultiplication action on the tensor product.
MatrixModule tensor(const MatrixModule& a, const MatrixModule& b);
MatrixModule tensor_evaluations(const FieldSpec& f,
                                const std::vector<std::pair<FieldScalar, FieldScalar>>& params);

MatrixModule direct_sum(const MatrixModule& a, const MatrixModule& b);

// Twist along t_{i,j}(u) -> f(u) t_{i,j}(u); in restricted context f must be
// restricted or the result leaves the category (contract violation).
MatrixModule twist(const MatrixModule& m, const LowerSeries& f,
                   bool require_restricted = true);

struct HighestWeightData {
    RowVec vector;
    LowerSeries lambda1, lambda2;
};

// Basis of the joint kernel of the t_{1,2}^(r), split into joint
// (t_11, t_22)-eigenvectors where possible, with their eigenvalue series.
std::vector<HighestWeightData> highest_weight_vectors(const MatrixModule& m);

std::vector<RowVec> spin(const MatrixModule& m, const RowVec& v);

IrrResult is_irreducible(const MatrixModule& m, uint64_t seed = 1,
                         const SpinBudget& budget = {});

// Quotient by the sum of all submodules avoiding the cyclic vector v.
// Exhaustive over projective points within budget; beyond it, a randomized
// superset whose quotient is then verified irreducible.
MatrixModule simple_head(const MatrixModule& m, const RowVec& v, uint64_t seed = 1,
                         const SpinBudget& budget = {});

// Quotient by an invariant subspace (rows), in a complement basis.
MatrixModule quotient_module(const MatrixModule& m, const Matrix& sub);

// Drinfeld generator operators recovered by module-level Gauss decomposition:
// d1 = t11-series, e = d1^{-1} t12, f = t21 d1^{-1}.
struct DrinfeldOperators {
    std::vector<Matrix> d1, d1_inv, d2, e, f; // index = level; e[0] = f[0] = 0
};
DrinfeldOperators drinfeld_operators(const MatrixModule& m, uint32_t level_bound);

struct ModuleReport {
    bool ok = true;
    std::vector<std::string> failures;
    void fail(std::string what) {
        ok = false;
        failures.push_back(std::move(what));
    }
};

// (1) RTT relations as matrix identities through the level bound,
// (2) s_{i,j}^(N') = delta_{ij} delta_{N'0} I for the p-fold shifted product,
// (3) (e^(r))^p = (f^(r))^p = 0 for the Gauss-decomposed operators.
// level_bound 0 means p * (level_support + 1).
ModuleReport verify_module(const MatrixModule& m, uint32_t level_bound = 0);

std::string module_to_json(const MatrixModule& m);
MatrixModule module_from_json(const std::string& text);

} // namespace y2p
