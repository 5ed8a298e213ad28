#pragma once

#include <optional>
#include <string>
#include <vector>

#include "y2p/poly.hpp"

namespace y2p {

// Polynomial 1 + c_1 u^{-1} + ... + c_k u^{-k} in the lowering variable.
// These carry every eigenvalue series in the project: highest weights,
// twists, Drinfeld data.
class LowerSeries {
public:
    explicit LowerSeries(const FieldSpec& f);
    // coeffs[0] must equal 1; trailing zeros are trimmed
    static LowerSeries from_coeffs(const FieldSpec& f, std::vector<FieldScalar> coeffs);
    static LowerSeries one(const FieldSpec& f);
    // prod_i (1 + roots[i] u^{-1})
    static LowerSeries from_roots(const FieldSpec& f, const std::vector<FieldScalar>& roots);

    const FieldSpec& spec() const { return spec_; }
    size_t degree() const { return c_.size() - 1; }
    FieldScalar coeff(size_t i) const;
    bool is_one() const { return c_.size() == 1; }

    LowerSeries operator*(const LowerSeries& o) const;
    bool operator==(const LowerSeries& o) const { return spec_ == o.spec_ && c_ == o.c_; }
    bool operator!=(const LowerSeries& o) const { return !(*this == o); }
    bool operator<(const LowerSeries& o) const; // canonical order for listings

    // N(u) = u^k * lambda(u), monic of degree k
    Poly to_monic_poly() const;
    static LowerSeries from_monic_poly(const Poly& n);

    std::string str() const;

private:
    FieldSpec spec_;
    std::vector<FieldScalar> c_;
};

// Reduced ratio of LowerSeries; equality by cross-multiplication.
class RationalSeries {
public:
    RationalSeries(LowerSeries num, LowerSeries den); // reduces
    /*implicit*/ RationalSeries(LowerSeries num);

    const LowerSeries& num() const { return num_; }
    const LowerSeries& den() const { return den_; }
    const FieldSpec& spec() const { return num_.spec(); }
    bool is_polynomial() const { return den_.is_one(); }

    RationalSeries operator*(const RationalSeries& o) const;
    RationalSeries operator/(const RationalSeries& o) const;
    bool operator==(const RationalSeries& o) const;
    bool operator!=(const RationalSeries& o) const { return !(*this == o); }

    std::string str() const;

private:
    LowerSeries num_, den_;
};

// f(u) f(u-1) ... f(u-p+1) = 1, the restrictedness condition; for a
// polynomial this is equivalent to all roots of u^k f(u) lying in F_p.
bool is_restricted(const LowerSeries& lambda);

// Both sides of the restrictedness identity as exact polynomials in u:
// (prod_{i<p} N(u-i), (u^p - u)^k).
std::pair<Poly, Poly> product_shifts(const LowerSeries& lambda);

// Coefficient of u^{-r} is the r-th elementary symmetric polynomial of the tuple.
LowerSeries elementary_symmetric_series(const FieldSpec& f,
                                        const std::vector<FieldScalar>& tuple);

// Pointwise product f * lambda (the d-eigenvalue transformation of the twist).
LowerSeries mu_twist_series(const LowerSeries& f, const LowerSeries& lambda);

// Monic P(u) with lambda1/lambda2 = P(u+1)/P(u), when the reduced ratio
// factors with a perfect Artin-Schreier matching; nullopt otherwise.
// Throws NeedsLargerField when the ratio does not even factor into linear
// terms over the ambient field.
std::optional<Poly> drinfeld_polynomial(const RationalSeries& lambda1,
                                        const RationalSeries& lambda2);

// Exact cross-multiplied check of lambda1/lambda2 == P(u+1)/P(u).
bool drinfeld_identity_holds(const RationalSeries& lambda1, const RationalSeries& lambda2,
                             const Poly& P);

} // namespace y2p
