#include "y2p/poly.hpp"

#include <algorithm>
#include <numeric>

namespace y2p {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::from_coeffs(const FieldSpec& f, std::vector<FieldScalar> c) {
    Poly p(f);
    for (const auto& x : c)
        if (x.spec() != f) throw Error("coefficient field mismatch");
    p.c_ = std::move(c);
    p.trim();
    return p;
}

Poly Poly::constant(const FieldScalar& c) {
    return from_coeffs(c.spec(), {c});
}

Poly Poly::x(const FieldSpec& f) {
    return from_coeffs(f, {FieldScalar::zero(f), FieldScalar::one(f)});
}

Poly Poly::linear(const FieldScalar& a) {
    return from_coeffs(a.spec(), {a, FieldScalar::one(a.spec())});
}

FieldScalar Poly::coeff(size_t i) const {
    return i < c_.size() ? c_[i] : FieldScalar::zero(spec_);
}

Poly Poly::operator+(const Poly& o) const {
    if (spec_ != o.spec_) throw Error("poly field mismatch");
    Poly r(spec_);
    r.c_.reserve(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < std::max(c_.size(), o.c_.size()); ++i)
        r.c_.push_back(coeff(i) + o.coeff(i));
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    if (spec_ != o.spec_) throw Error("poly field mismatch");
    Poly r(spec_);
    for (size_t i = 0; i < std::max(c_.size(), o.c_.size()); ++i)
        r.c_.push_back(coeff(i) - o.coeff(i));
    r.trim();
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (spec_ != o.spec_) throw Error("poly field mismatch");
    if (is_zero() || o.is_zero()) return Poly(spec_);
    Poly r(spec_);
    r.c_.assign(c_.size() + o.c_.size() - 1, FieldScalar::zero(spec_));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

Poly Poly::scaled(const FieldScalar& c) const {
    Poly r(spec_);
    for (const auto& x : c_) r.c_.push_back(x * c);
    r.trim();
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) throw Error("monic of zero polynomial");
    return scaled(c_.back().inverse());
}

Poly Poly::pow(uint64_t e) const {
    Poly r = constant(FieldScalar::one(spec_));
    Poly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw Error("division by zero polynomial");
    Poly q(spec_), r = *this;
    const FieldScalar lead_inv = d.c_.back().inverse();
    if (r.degree() >= d.degree())
        q.c_.assign(r.degree() - d.degree() + 1, FieldScalar::zero(spec_));
    while (r.degree() >= d.degree()) {
        FieldScalar c = r.c_.back() * lead_inv;
        int shift = r.degree() - d.degree();
        q.c_[shift] = c;
        for (int i = 0; i <= d.degree(); ++i)
            r.c_[i + shift] = r.c_[i + shift] - c * d.c_[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

Poly Poly::shifted(const FieldScalar& a) const {
    // Horner in (u + a)
    Poly r(spec_);
    Poly lin = linear(a);
    for (int i = degree(); i >= 0; --i)
        r = r * lin + constant(c_[i]);
    return r;
}

FieldScalar Poly::eval(const FieldScalar& x) const {
    FieldScalar r = FieldScalar::zero(spec_);
    for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
    return r;
}

std::vector<FieldScalar> Poly::roots() const {
    if (is_zero()) throw Error("roots of the zero polynomial");
    std::vector<FieldScalar> out;
    Poly f = *this;
    for (const auto& x : all_elements(spec_)) {
        while (f.degree() >= 1 && f.eval(x).is_zero()) {
            out.push_back(x);
            f = f.divmod(linear(-x)).first;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool Poly::splits() const {
    return static_cast<int>(roots().size()) == degree();
}

uint32_t Poly::splitting_degree_over_prime() const {
    if (degree() <= 0) return spec_.m;
    // squarefree part
    Poly f = monic();
    Poly der(spec_);
    {
        std::vector<FieldScalar> dc;
        for (int i = 1; i <= f.degree(); ++i)
            dc.push_back(f.coeff(i) * FieldScalar::from_int(spec_, i));
        der = from_coeffs(spec_, std::move(dc));
    }
    if (!der.is_zero()) f = f.divmod(gcd(f, der)).first;
    // distinct-degree scan: repeatedly strip factors whose roots live in F_{q^d}
    const uint64_t q = spec_.order();
    Poly xq = x(spec_);
    uint64_t l = 1;
    for (int d = 1; f.degree() > 0 && d <= degree(); ++d) {
        // xq = x^(q^d) mod f
        Poly acc = x(spec_);
        for (int i = 0; i < d; ++i) {
            Poly t = constant(FieldScalar::one(spec_));
            Poly b = acc;
            uint64_t e = q;
            while (e) {
                if (e & 1) t = (t * b).divmod(f).second;
                b = (b * b).divmod(f).second;
                e >>= 1;
            }
            acc = t;
        }
        Poly g = gcd(f, acc - x(spec_));
        if (g.degree() > 0) {
            l = std::lcm<uint64_t>(l, d);
            f = f.divmod(g).first;
        }
    }
    return static_cast<uint32_t>(spec_.m * l);
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        std::string cs = c_[i].str();
        bool needs_paren = cs.find('+') != std::string::npos;
        if (i == 0) {
            s += needs_paren ? "(" + cs + ")" : cs;
        } else {
            if (!c_[i].is_one()) s += (needs_paren ? "(" + cs + ")" : cs) + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

} // namespace y2p
