#include "y2p/series.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace y2p {

LowerSeries::LowerSeries(const FieldSpec& f) : spec_(f), c_{FieldScalar::one(f)} {}

LowerSeries LowerSeries::from_coeffs(const FieldSpec& f, std::vector<FieldScalar> coeffs) {
    if (coeffs.empty() || !coeffs[0].is_one())
        throw Error("lower series must have constant coefficient 1");
    for (const auto& c : coeffs)
        if (c.spec() != f) throw Error("series coefficient field mismatch");
    while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();
    LowerSeries s(f);
    s.c_ = std::move(coeffs);
    return s;
}

LowerSeries LowerSeries::one(const FieldSpec& f) { return LowerSeries(f); }

LowerSeries LowerSeries::from_roots(const FieldSpec& f, const std::vector<FieldScalar>& roots) {
    LowerSeries s(f);
    for (const auto& r : roots) {
        std::vector<FieldScalar> lin{FieldScalar::one(f), r};
        s = s * from_coeffs(f, std::move(lin));
    }
    return s;
}

FieldScalar LowerSeries::coeff(size_t i) const {
    return i < c_.size() ? c_[i] : FieldScalar::zero(spec_);
}

LowerSeries LowerSeries::operator*(const LowerSeries& o) const {
    if (spec_ != o.spec_) throw Error("series field mismatch");
    std::vector<FieldScalar> r(c_.size() + o.c_.size() - 1, FieldScalar::zero(spec_));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = r[i + j] + c_[i] * o.c_[j];
    return from_coeffs(spec_, std::move(r));
}

bool LowerSeries::operator<(const LowerSeries& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    }
    return false;
}

Poly LowerSeries::to_monic_poly() const {
    std::vector<FieldScalar> rc(c_.rbegin(), c_.rend());
    return Poly::from_coeffs(spec_, std::move(rc));
}

LowerSeries LowerSeries::from_monic_poly(const Poly& n) {
    if (n.is_zero() || !n.coeffs().back().is_one())
        throw Error("from_monic_poly requires a monic polynomial");
    if (n.degree() > 0 && n.coeff(0).is_zero())
        throw Error("from_monic_poly: polynomial divisible by u has no series form");
    std::vector<FieldScalar> c(n.coeffs().rbegin(), n.coeffs().rend());
    return from_coeffs(n.spec(), std::move(c));
}

std::string LowerSeries::str() const {
    std::string s = "1";
    for (size_t i = 1; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        std::string cs = c_[i].str();
        bool paren = cs.find('+') != std::string::npos;
        s += " + ";
        if (!c_[i].is_one()) s += (paren ? "(" + cs + ")" : cs) + "*";
        s += "u^-" + std::to_string(i);
    }
    return s;
}

RationalSeries::RationalSeries(LowerSeries num, LowerSeries den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.spec() != den_.spec()) throw Error("rational series field mismatch");
    Poly g = Poly::gcd(num_.to_monic_poly(), den_.to_monic_poly());
    if (g.degree() > 0) {
        num_ = LowerSeries::from_monic_poly(num_.to_monic_poly().divmod(g).first);
        den_ = LowerSeries::from_monic_poly(den_.to_monic_poly().divmod(g).first);
    }
}

RationalSeries::RationalSeries(LowerSeries num)
    : num_(std::move(num)), den_(LowerSeries::one(num_.spec())) {}

RationalSeries RationalSeries::operator*(const RationalSeries& o) const {
    return RationalSeries(num_ * o.num_, den_ * o.den_);
}

RationalSeries RationalSeries::operator/(const RationalSeries& o) const {
    return RationalSeries(num_ * o.den_, den_ * o.num_);
}

bool RationalSeries::operator==(const RationalSeries& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

std::string RationalSeries::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::pair<Poly, Poly> product_shifts(const LowerSeries& lambda) {
    const FieldSpec& f = lambda.spec();
    const Poly n = lambda.to_monic_poly();
    Poly lhs = Poly::constant(FieldScalar::one(f));
    for (uint32_t i = 0; i < f.p; ++i)
        lhs = lhs * n.shifted(FieldScalar::from_int(f, -static_cast<int64_t>(i)));
    const Poly xp_minus_x = Poly::x(f).pow(f.p) - Poly::x(f);
    return {lhs, xp_minus_x.pow(lambda.degree())};
}

bool is_restricted(const LowerSeries& lambda) {
    auto [lhs, rhs] = product_shifts(lambda);
    return lhs == rhs;
}

LowerSeries elementary_symmetric_series(const FieldSpec& f,
                                        const std::vector<FieldScalar>& tuple) {
    return LowerSeries::from_roots(f, tuple);
}

LowerSeries mu_twist_series(const LowerSeries& f, const LowerSeries& lambda) {
    return f * lambda;
}

namespace {

// numerator and denominator of lambda1/lambda2 as polynomials in u (not reduced)
std::pair<Poly, Poly> ratio_polys(const RationalSeries& l1, const RationalSeries& l2) {
    const FieldSpec& f = l1.spec();
    const Poly u = Poly::x(f);
    Poly num = l1.num().to_monic_poly() * l2.den().to_monic_poly() *
               u.pow(l1.den().degree() + l2.num().degree());
    Poly den = l1.den().to_monic_poly() * l2.num().to_monic_poly() *
               u.pow(l1.num().degree() + l2.den().degree());
    return {num, den};
}

} // namespace

bool drinfeld_identity_holds(const RationalSeries& l1, const RationalSeries& l2,
                             const Poly& P) {
    auto [num, den] = ratio_polys(l1, l2);
    return num * P == den * P.shifted(FieldScalar::one(P.spec()));
}

std::optional<Poly> drinfeld_polynomial(const RationalSeries& lambda1,
                                        const RationalSeries& lambda2) {
    if (lambda1.spec() != lambda2.spec()) throw Error("field mismatch");
    const FieldSpec f = lambda1.spec();
    const RationalSeries ratio = lambda1 / lambda2;

    const Poly nn = ratio.num().to_monic_poly();
    const Poly nd = ratio.den().to_monic_poly();
    const size_t kn = ratio.num().degree();
    const size_t kd = ratio.den().degree();

    if (!nn.splits() || !nd.splits()) {
        uint32_t need = std::lcm(nn.splitting_degree_over_prime(),
                                 nd.splitting_degree_over_prime());
        throw NeedsLargerField(
            "ratio does not factor into linear terms over " + f.str() +
                "; splitting needs extension degree " + std::to_string(need) + " over F_p",
            need);
    }

    // alpha-multiset from the numerator, beta-multiset from the denominator;
    // the implicit powers of u contribute zero roots on the short side
    std::vector<FieldScalar> alphas, betas;
    for (const auto& r : nn.roots()) alphas.push_back(-r);
    for (const auto& r : nd.roots()) betas.push_back(-r);
    for (size_t i = 0; i + std::min(kn, kd) < kd; ++i)
        alphas.push_back(FieldScalar::zero(f));
    for (size_t i = 0; i + std::min(kn, kd) < kn; ++i)
        betas.push_back(FieldScalar::zero(f));

    // match inside Artin-Schreier classes: alpha pairs with beta
    // iff alpha - beta lies in F_p, iff alpha^p - alpha == beta^p - beta
    auto as_value = [&](const FieldScalar& x) { return x.pow(f.p) - x; };
    std::map<FieldScalar, std::pair<std::vector<FieldScalar>, std::vector<FieldScalar>>>
        classes;
    for (const auto& a : alphas) classes[as_value(a)].first.push_back(a);
    for (const auto& b : betas) classes[as_value(b)].second.push_back(b);

    Poly P = Poly::constant(FieldScalar::one(f));
    for (auto& [key, ab] : classes) {
        auto& [as, bs] = ab;
        if (as.size() != bs.size()) return std::nullopt; // no perfect matching
        std::sort(as.begin(), as.end());
        std::sort(bs.begin(), bs.end());
        for (size_t i = 0; i < as.size(); ++i) {
            uint32_t diff = bracket(as[i] - bs[i]);
            for (uint32_t j = 0; j < diff; ++j)
                P = P * Poly::linear(bs[i] + FieldScalar::from_int(f, j));
        }
    }

    if (!drinfeld_identity_holds(lambda1, lambda2, P))
        throw Error("internal: constructed Drinfeld polynomial failed verification");
    return P;
}

} // namespace y2p
