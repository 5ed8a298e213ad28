#pragma once

#include <map>

#include "y2p/walgebra.hpp"

namespace y2p {

// The p-character chi = (e, .) dual to the rectangular nilpotent: value 1 on
// e_{i+1,i} and e_{(i+1)',i'}, zero elsewhere; vanishes off degree -1.
struct ChiForm {
    FieldSpec field;
    Pyramid pyr;
    FieldScalar operator()(int a, int b) const;
};

ChiForm chi_of(const FieldSpec& f, uint32_t n);

// A word in the matrix units of gl_{2n}.
using UWord = std::vector<std::pair<int, int>>;

// PBW normal forms in U_chi(gl_{2n}): fixed unit order (m-block, Levi block,
// nilradical block), exponents reduced by x^p = x^{[p]} + chi(x)^p.
class UChiContext {
public:
    UChiContext(const FieldSpec& f, uint32_t n);

    const FieldSpec& spec() const { return field_; }
    const Pyramid& pyramid() const { return pyr_; }
    const ChiForm& chi() const { return chi_; }
    // total order on units; m-units sort by descending column drop
    uint64_t unit_key(int a, int b) const;
    const std::vector<std::pair<int, int>>& m_units() const { return m_units_; }

    std::map<UWord, FieldScalar> straighten(const UWord& word,
                                            const FieldScalar& coeff) const;

private:
    FieldSpec field_;
    Pyramid pyr_;
    ChiForm chi_;
    std::vector<std::pair<int, int>> m_units_;
};

// U_chi(gl_{2n}) (x)_{U_0(p)} seed: basis indexed by p-restricted exponent
// vectors over the m-units times the seed basis; dimension
// p^(2n^2-2n) * dim(seed).
class InducedModule {
public:
    static InducedModule induce(const LeviModule& seed, uint64_t dim_budget = 10000);

    const FieldSpec& spec() const { return ctx_.spec(); }
    uint32_t n() const { return ctx_.pyramid().n; }
    size_t dim() const { return dim_; }
    size_t seed_dim() const { return seed_dim_; }
    const UChiContext& context() const { return ctx_; }

    const Matrix& unit_op(int a, int b) const;
    std::vector<Matrix> all_unit_ops() const;

private:
    InducedModule(UChiContext ctx, size_t dim, size_t seed_dim)
        : ctx_(std::move(ctx)), dim_(dim), seed_dim_(seed_dim) {}
    UChiContext ctx_;
    size_t dim_, seed_dim_;
    std::map<std::pair<int, int>, Matrix> ops_;
};

// Joint kernel of (x - chi(x)) over the m-unit basis; rows span V^{m_chi}.
Matrix m_chi_invariants(const InducedModule& v);

// Spin-based simplicity test over the full unit action; beyond the
// exhaustive budget the positive answer is probabilistic.
IrrResult simplicity_check(const InducedModule& v, uint64_t seed = 1,
                           const SpinBudget& budget = {300000, 200});

} // namespace y2p
