#pragma once

#include <optional>

#include "y2p/series.hpp"

namespace y2p {

// A pair of restricted series, the parameterizing datum for the simple
// modules of the truncated restricted Yangian.
struct RestrictedTuple {
    LowerSeries lambda1, lambda2;
    static RestrictedTuple checked(LowerSeries l1, LowerSeries l2);
};

// Root pairs ordered so that [alpha_i - beta_i] is minimal among all
// [alpha_j - beta_l] with i <= j, l.
struct PairedRoots {
    std::vector<std::pair<FieldScalar, FieldScalar>> pairs;
};

// Greedy selection of the minimal remaining difference; ties break on the
// smaller [alpha], then the smaller [beta].  Entries must lie in F_p and the
// multisets must have equal size.
PairedRoots renumerate(std::vector<FieldScalar> alphas, std::vector<FieldScalar> betas);

// prod_i ([alpha_i - beta_i] + 1) over the greedy pairing.
uint64_t predicted_dimension(const std::vector<FieldScalar>& alphas,
                             const std::vector<FieldScalar>& betas);

// Series variant: factors both components.  Zero roots collapse in series
// form, so unequal factored degrees are a hard error; pass explicit
// multisets when zero-padding is intended.
uint64_t predicted_dimension(const RestrictedTuple& t);

// All coefficient vectors (c_1..c_n) in F_p^n per component that give a
// restricted series, paired both ways; lexicographic in the base-p integer
// c_1 + c_2 p + ...  Throws BudgetError when p^n exceeds the scan budget.
std::vector<RestrictedTuple> enumerate_simples(uint32_t p, uint32_t n,
                                               uint64_t budget = 1u << 20);
// The per-component restricted series, same order.
std::vector<LowerSeries> enumerate_restricted_series(uint32_t p, uint32_t n,
                                                     uint64_t budget = 1u << 20);

struct FiniteDimResult {
    bool finite_dimensional;
    std::optional<Poly> drinfeld; // witness P(u) when finite
};

// Finite-dimensionality criterion via the Drinfeld polynomial of the ratio.
FiniteDimResult is_finite_dimensional(const RationalSeries& lambda1,
                                      const RationalSeries& lambda2);

} // namespace y2p
