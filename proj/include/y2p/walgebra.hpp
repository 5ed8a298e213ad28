#pragma once

#include "y2p/module.hpp"
#include "y2p/series.hpp"

namespace y2p {

// The two-row pyramid of the (n,n) partition.  Boxes are numbered 1..2n
// along rows; box i' = i+n sits under box i.
struct Pyramid {
    uint32_t n = 1;
    static Pyramid build(uint32_t n);
    int row(int i) const { return i <= static_cast<int>(n) ? 1 : 2; }
    int col(int i) const { return i <= static_cast<int>(n) ? i : i - static_cast<int>(n); }
    int boxes() const { return static_cast<int>(2 * n); }
};

// degree of e_{a,b} in the cocharacter grading
inline int grading_degree(const Pyramid& pyr, int a, int b) {
    return pyr.col(b) - pyr.col(a);
}

// eta(e_{j,j}) = 2(col(j) - n); eta vanishes off the diagonal
inline int64_t eta_shift(const Pyramid& pyr, int j) {
    return 2 * (static_cast<int64_t>(pyr.col(j)) - pyr.n);
}

// the 2 x n rectangular nilpotent, Jordan type (n,n)
Matrix rectangular_nilpotent(const FieldSpec& f, uint32_t n);

// element of U(p): signed sum of ordered monomials in the shifted units
// e~_{a,b} = e_{a,b} + eta(e_{a,b}); every factor satisfies col(a) <= col(b)
struct UPMonomial {
    std::vector<std::pair<int, int>> factors;
};

struct UPElement {
    FieldSpec field;
    Pyramid pyr;
    std::vector<std::pair<UPMonomial, FieldScalar>> terms;
};

// The combinatorial expansion of d_i^(r) as an element of U(p): a signed sum
// over index chains constrained by the pyramid.
UPElement dir_element(const FieldSpec& f, int i, uint32_t r, const Pyramid& pyr);

// Module over the Levi h = gl_2^n, inflated to U(p) with the nilradical
// acting trivially.  Block c carries highest weight
// (alpha_c + 2(n-c), beta_c + 2(n-c)), the -eta shift.
class LeviModule {
public:
    static LeviModule baby_verma(const FieldSpec& f, const std::vector<FieldScalar>& alpha,
                                 const std::vector<FieldScalar>& beta);
    static LeviModule simple(const FieldSpec& f, const std::vector<FieldScalar>& alpha,
                             const std::vector<FieldScalar>& beta);

    const FieldSpec& spec() const { return spec_; }
    const Pyramid& pyramid() const { return pyr_; }
    uint32_t blocks() const { return pyr_.n; }
    size_t block_dim(uint32_t c) const { return dims_[c - 1]; } // c in 1..n
    size_t dim() const;

    // z-bar, the top pure tensor
    RowVec distinguished() const;

    // plain matrix unit e_{a,b} of the Levi (col(a) == col(b)) on the whole
    // tensor space; weights already carry the -eta shift
    Matrix unit_action(int a, int b) const;
    RowVec apply_unit(int a, int b, const RowVec& v) const;

private:
    LeviModule(const FieldSpec& f, Pyramid pyr, std::vector<size_t> dims,
               std::vector<FieldScalar> aw, std::vector<FieldScalar> bw)
        : spec_(f), pyr_(pyr), dims_(std::move(dims)), aw_(std::move(aw)),
          bw_(std::move(bw)) {}
    FieldSpec spec_;
    Pyramid pyr_;
    std::vector<size_t> dims_;       // per-block dimension
    std::vector<FieldScalar> aw_, bw_; // per-block shifted highest weights
};

// x acting on the inflated module: nilradical factors kill a monomial,
// Levi factors act blockwise, eta shifts act as scalars.
Matrix act_up(const UPElement& x, const LeviModule& m);
RowVec act_up_vector(const UPElement& x, const LeviModule& m, const RowVec& v);

struct ErLemmaReport {
    bool ok = true;
    std::vector<std::string> failures;
};

// d_i^(r) z-bar = e_r(tuple_i) z-bar on the baby Verma, with e_r = 0 past n.
ErLemmaReport verify_er_lemma(const FieldSpec& f, uint32_t n,
                              const std::vector<FieldScalar>& alpha,
                              const std::vector<FieldScalar>& beta, uint32_t r_max);

struct CrossCheckReport {
    bool ok = true;
    uint64_t dim_w = 0, dim_yangian = 0;
    LowerSeries lambda_alpha, lambda_beta; // d-eigenvalue series, W side
    std::vector<std::string> failures;
};

// Dimensions and d-eigenvalue series of the Yangian-side tensor module
// against the Levi-side simple, independently computed.  Requires the
// minimality ordering on (alpha, beta).
CrossCheckReport cross_check_theorem(const FieldSpec& f,
                                     const std::vector<FieldScalar>& alpha,
                                     const std::vector<FieldScalar>& beta);

} // namespace y2p
