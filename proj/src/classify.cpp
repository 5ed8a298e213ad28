#include "y2p/classify.hpp"

#include <algorithm>

namespace y2p {

RestrictedTuple RestrictedTuple::checked(LowerSeries l1, LowerSeries l2) {
    if (!is_restricted(l1) || !is_restricted(l2))
        throw Error("tuple is not restricted");
    return {std::move(l1), std::move(l2)};
}

PairedRoots renumerate(std::vector<FieldScalar> alphas, std::vector<FieldScalar> betas) {
    if (alphas.size() != betas.size())
        throw Error("renumerate: root multisets must have equal size");
    for (const auto& x : alphas)
        if (!frobenius_fix(x)) throw Error("renumerate: alpha root outside F_p");
    for (const auto& x : betas)
        if (!frobenius_fix(x)) throw Error("renumerate: beta root outside F_p");

    PairedRoots out;
    while (!alphas.empty()) {
        size_t best_a = 0, best_b = 0;
        uint32_t best_diff = 0, best_av = 0, best_bv = 0;
        bool first = true;
        for (size_t a = 0; a < alphas.size(); ++a)
            for (size_t b = 0; b < betas.size(); ++b) {
                uint32_t diff = bracket(alphas[a] - betas[b]);
                uint32_t av = bracket(alphas[a]), bv = bracket(betas[b]);
                if (first || std::tuple(diff, av, bv) < std::tuple(best_diff, best_av, best_bv)) {
                    first = false;
                    best_a = a;
                    best_b = b;
                    best_diff = diff;
                    best_av = av;
                    best_bv = bv;
                }
            }
        out.pairs.emplace_back(alphas[best_a], betas[best_b]);
        alphas.erase(alphas.begin() + static_cast<std::ptrdiff_t>(best_a));
        betas.erase(betas.begin() + static_cast<std::ptrdiff_t>(best_b));
    }
    return out;
}

uint64_t predicted_dimension(const std::vector<FieldScalar>& alphas,
                             const std::vector<FieldScalar>& betas) {
    PairedRoots pr = renumerate(alphas, betas);
    uint64_t dim = 1;
    for (const auto& [a, b] : pr.pairs) dim *= bracket(a - b) + 1;
    return dim;
}

uint64_t predicted_dimension(const RestrictedTuple& t) {
    Poly n1 = t.lambda1.to_monic_poly(), n2 = t.lambda2.to_monic_poly();
    if (!n1.splits() || !n2.splits())
        throw Error("predicted_dimension: component does not split over the field");
    if (n1.degree() != n2.degree())
        throw Error("predicted_dimension: factored degrees differ (" +
                    std::to_string(n1.degree()) + " vs " + std::to_string(n2.degree()) +
                    "); supply explicit root multisets to zero-pad");
    std::vector<FieldScalar> alphas, betas;
    for (const auto& r : n1.roots()) alphas.push_back(-r);
    for (const auto& r : n2.roots()) betas.push_back(-r);
    return predicted_dimension(alphas, betas);
}

std::vector<LowerSeries> enumerate_restricted_series(uint32_t p, uint32_t n,
                                                     uint64_t budget) {
    FieldSpec f = FieldSpec::prime_field(p);
    uint64_t total = 1;
    for (uint32_t i = 0; i < n; ++i) {
        total *= p;
        if (total > budget)
            throw BudgetError("enumerate: p^n = " + std::to_string(total) +
                              "+ exceeds the scan budget");
    }
    std::vector<LowerSeries> out;
    std::vector<uint32_t> c(n, 0);
    for (uint64_t v = 0; v < total; ++v) {
        std::vector<FieldScalar> coeffs{FieldScalar::one(f)};
        for (uint32_t i = 0; i < n; ++i) coeffs.push_back(FieldScalar::from_int(f, c[i]));
        LowerSeries s = LowerSeries::from_coeffs(f, std::move(coeffs));
        if (is_restricted(s)) out.push_back(std::move(s));
        for (uint32_t i = 0; i < n; ++i) {
            if (++c[i] < p) break;
            c[i] = 0;
        }
    }
    return out;
}

std::vector<RestrictedTuple> enumerate_simples(uint32_t p, uint32_t n, uint64_t budget) {
    auto series = enumerate_restricted_series(p, n, budget);
    std::vector<RestrictedTuple> out;
    out.reserve(series.size() * series.size());
    for (const auto& l1 : series)
        for (const auto& l2 : series) out.push_back({l1, l2});
    return out;
}

FiniteDimResult is_finite_dimensional(const RationalSeries& lambda1,
                                      const RationalSeries& lambda2) {
    auto p = drinfeld_polynomial(lambda1, lambda2);
    if (!p) return {false, std::nullopt};
    return {true, std::move(p)};
}

} // namespace y2p
