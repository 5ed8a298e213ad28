#include "y2p/field.hpp"

#include <algorithm>

#include "y2p/kernels.hpp"

namespace y2p {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Small helpers on coefficient vectors over F_p (ascending degree).

using Poly = std::vector<uint32_t>;

uint32_t addm(uint32_t a, uint32_t b, uint32_t p) {
    uint32_t t = a + b;
    return t >= p ? t - p : t;
}
uint32_t subm(uint32_t a, uint32_t b, uint32_t p) {
    uint32_t t = a + p - b;
    return t >= p ? t - p : t;
}
uint32_t mulm(uint32_t a, uint32_t b, uint32_t p) {
    return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p);
}
uint32_t powm(uint32_t a, uint64_t e, uint32_t p) {
    uint32_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}
uint32_t invm(uint32_t a, uint32_t p) {
    if (a == 0) throw Error("division by zero in F_p");
    return powm(a, p - 2, p);
}

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = addm(r[i + j], mulm(a[i], b[j], p), p);
    }
    trim(r);
    return r;
}

// remainder of a modulo monic f
Poly poly_rem(Poly a, const Poly& f, uint32_t p) {
    int df = degree(f);
    while (degree(a) >= df) {
        uint32_t c = a.back();
        int shift = degree(a) - df;
        if (c != 0)
            for (int i = 0; i <= df; ++i)
                a[i + shift] = subm(a[i + shift], mulm(c, f[i], p), p);
        a.pop_back();
        trim(a);
    }
    return a;
}

Poly poly_powmod(Poly base, uint64_t e, const Poly& f, uint32_t p) {
    Poly r{1};
    base = poly_rem(std::move(base), f, p);
    while (e) {
        if (e & 1) r = poly_rem(poly_mul(r, base, p), f, p);
        base = poly_rem(poly_mul(base, base, p), f, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        // make b monic before using it as a divisor next round
        a = std::move(b);
        b = std::move(r);
        if (!a.empty() && a.back() != 1) {
            uint32_t inv = invm(a.back(), p);
            for (auto& c : a) c = mulm(c, inv, p);
        }
    }
    return a;
}

bool poly_irreducible(const Poly& f, uint32_t p) {
    const int m = degree(f);
    if (m <= 0) return false;
    if (m == 1) return true;
    // x^(p^m) == x mod f, and gcd(x^(p^(m/q)) - x, f) = 1 for prime q | m
    uint64_t pm = 1;
    for (int i = 0; i < m; ++i) pm *= p;
    Poly x{0, 1};
    Poly xp = poly_powmod(x, pm, f, p);
    Poly diff = xp;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = subm(diff[1], 1, p);
    trim(diff);
    if (!diff.empty()) return false;
    for (uint32_t q = 2; q <= static_cast<uint32_t>(m); ++q) {
        if (m % q != 0 || !is_prime(q)) continue;
        uint64_t pk = 1;
        for (uint32_t i = 0; i < static_cast<uint32_t>(m) / q; ++i) pk *= p;
        Poly y = poly_powmod(x, pk, f, p);
        if (y.size() < 2) y.resize(2, 0);
        y[1] = subm(y[1], 1, p);
        trim(y);
        Poly g = poly_gcd(f, y, p);
        if (degree(g) != 0) return false;
    }
    return true;
}

Poly find_modulus(uint32_t p, uint32_t m) {
    // scan constant-through-(m-1) coefficients as base-p digits, c_0 least
    // significant, and take the first irreducible
    uint64_t total = 1;
    for (uint32_t i = 0; i < m; ++i) total *= p;
    for (uint64_t v = 0; v < total; ++v) {
        Poly f(m + 1, 0);
        uint64_t t = v;
        for (uint32_t i = 0; i < m; ++i) {
            f[i] = static_cast<uint32_t>(t % p);
            t /= p;
        }
        f[m] = 1;
        if (poly_irreducible(f, p)) return f;
    }
    throw Error("no irreducible polynomial found"); // unreachable for m >= 1
}

void check_spec(const FieldSpec& f) {
    if (!is_prime(f.p))
        throw Error("field characteristic must be prime, got " + std::to_string(f.p));
    if (f.p > kern::max_modulus)
        throw Error("characteristic too large (max " + std::to_string(kern::max_modulus) + ")");
    if (f.m < 1) throw Error("extension degree must be >= 1");
    if (f.m >= 2 && f.order() > (1u << 20))
        throw Error("extension field too large for exact desk-scale arithmetic");
}

} // namespace

FieldSpec FieldSpec::prime_field(uint32_t p) {
    FieldSpec f;
    f.p = p;
    f.m = 1;
    check_spec(f);
    f.modulus = {0, 1};
    return f;
}

FieldSpec FieldSpec::extension(uint32_t p, uint32_t m) {
    FieldSpec f;
    f.p = p;
    f.m = m;
    check_spec(f);
    f.modulus = find_modulus(p, m);
    return f;
}

uint64_t FieldSpec::order() const {
    uint64_t r = 1;
    for (uint32_t i = 0; i < m; ++i) r *= p;
    return r;
}

std::string FieldSpec::str() const {
    std::string s = "F" + std::to_string(p);
    if (m > 1) s += "^" + std::to_string(m);
    return s;
}

FieldScalar FieldScalar::zero(const FieldSpec& f) {
    return FieldScalar(f, std::vector<uint32_t>(f.m, 0));
}

FieldScalar FieldScalar::one(const FieldSpec& f) {
    std::vector<uint32_t> c(f.m, 0);
    c[0] = 1 % f.p;
    return FieldScalar(f, std::move(c));
}

FieldScalar FieldScalar::from_int(const FieldSpec& f, int64_t v) {
    int64_t r = v % static_cast<int64_t>(f.p);
    if (r < 0) r += f.p;
    std::vector<uint32_t> c(f.m, 0);
    c[0] = static_cast<uint32_t>(r);
    return FieldScalar(f, std::move(c));
}

FieldScalar FieldScalar::from_coeffs(const FieldSpec& f, std::vector<uint32_t> coeffs) {
    if (coeffs.size() != f.m) throw Error("coefficient vector has wrong length");
    for (auto& x : coeffs) x %= f.p;
    return FieldScalar(f, std::move(coeffs));
}

FieldScalar FieldScalar::generator(const FieldSpec& f) {
    if (f.m < 2) throw Error("prime field has no extension generator");
    std::vector<uint32_t> c(f.m, 0);
    c[1] = 1;
    return FieldScalar(f, std::move(c));
}

bool FieldScalar::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](uint32_t x) { return x == 0; });
}

bool FieldScalar::is_one() const { return *this == one(spec_); }

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
    if (spec_ != o.spec_) throw Error("field mismatch");
    auto c = c_;
    for (uint32_t i = 0; i < spec_.m; ++i) c[i] = addm(c[i], o.c_[i], spec_.p);
    return FieldScalar(spec_, std::move(c));
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const {
    if (spec_ != o.spec_) throw Error("field mismatch");
    auto c = c_;
    for (uint32_t i = 0; i < spec_.m; ++i) c[i] = subm(c[i], o.c_[i], spec_.p);
    return FieldScalar(spec_, std::move(c));
}

FieldScalar FieldScalar::operator-() const {
    auto c = c_;
    for (auto& x : c) x = x == 0 ? 0 : spec_.p - x;
    return FieldScalar(spec_, std::move(c));
}

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
    if (spec_ != o.spec_) throw Error("field mismatch");
    if (spec_.m == 1)
        return FieldScalar(spec_, {mulm(c_[0], o.c_[0], spec_.p)});
    Poly prod = poly_mul(c_, o.c_, spec_.p);
    Poly r = poly_rem(std::move(prod), spec_.modulus, spec_.p);
    r.resize(spec_.m, 0);
    return FieldScalar(spec_, std::move(r));
}

FieldScalar FieldScalar::inverse() const {
    if (is_zero()) throw Error("division by zero");
    if (spec_.m == 1)
        return FieldScalar(spec_, {invm(c_[0], spec_.p)});
    // extended Euclid in F_p[x]: s*this + t*modulus = gcd = const
    Poly r0 = spec_.modulus, r1 = c_;
    trim(r1);
    Poly s0{}, s1{1};
    const uint32_t p = spec_.p;
    while (degree(r1) > 0) {
        // divide r0 by r1
        Poly q;
        Poly rem = r0;
        int d1 = degree(r1);
        uint32_t lead_inv = invm(r1.back(), p);
        q.assign(std::max(degree(rem) - d1 + 1, 0), 0);
        while (degree(rem) >= d1) {
            uint32_t c = mulm(rem.back(), lead_inv, p);
            int shift = degree(rem) - d1;
            q[shift] = c;
            for (int i = 0; i <= d1; ++i)
                rem[i + shift] = subm(rem[i + shift], mulm(c, r1[i], p), p);
            trim(rem);
        }
        Poly s2_part = poly_mul(q, s1, p);
        Poly s2 = s0;
        s2.resize(std::max(s2.size(), s2_part.size()), 0);
        for (size_t i = 0; i < s2_part.size(); ++i) s2[i] = subm(s2[i], s2_part[i], p);
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw Error("element not invertible"); // cannot happen: modulus irreducible
    uint32_t scale = invm(r1[0], p);
    for (auto& x : s1) x = mulm(x, scale, p);
    s1.resize(spec_.m, 0);
    return FieldScalar(spec_, std::move(s1));
}

FieldScalar FieldScalar::operator/(const FieldScalar& o) const { return *this * o.inverse(); }

FieldScalar FieldScalar::pow(uint64_t e) const {
    FieldScalar r = one(spec_);
    FieldScalar b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool FieldScalar::operator==(const FieldScalar& o) const {
    return spec_ == o.spec_ && c_ == o.c_;
}

bool FieldScalar::operator<(const FieldScalar& o) const {
    return std::lexicographical_compare(c_.rbegin(), c_.rend(), o.c_.rbegin(), o.c_.rend());
}

std::string FieldScalar::str() const {
    std::string s;
    for (int i = static_cast<int>(spec_.m) - 1; i >= 0; --i) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(c_[i]);
        } else {
            if (c_[i] != 1) s += std::to_string(c_[i]) + "*";
            s += i == 1 ? "w" : "w^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

bool frobenius_fix(const FieldScalar& x) { return x.pow(x.spec().p) == x; }

uint32_t bracket(const FieldScalar& x) {
    if (!frobenius_fix(x))
        throw Error("bracket: element " + x.str() + " is not in the prime subfield");
    return x.coeffs()[0];
}

std::vector<FieldScalar> all_elements(const FieldSpec& f) {
    std::vector<FieldScalar> out;
    out.reserve(f.order());
    std::vector<uint32_t> c(f.m, 0);
    while (true) {
        out.push_back(FieldScalar::from_coeffs(f, c));
        uint32_t i = 0;
        for (; i < f.m; ++i) {
            if (++c[i] < f.p) break;
            c[i] = 0;
        }
        if (i == f.m) break;
    }
    return out;
}

} // namespace y2p
