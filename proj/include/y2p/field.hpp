#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "y2p/errors.hpp"

namespace y2p {

bool is_prime(uint32_t n);

// Description of F_{p^m}.  For m >= 2 the field is F_p[x]/(modulus) where
// modulus is the monic irreducible of degree m whose non-leading coefficients,
// read as base-p digits (c_0 least significant), form the smallest integer.
// That choice is deterministic, so scalars serialize identically across runs.
struct FieldSpec {
    uint32_t p = 2;
    uint32_t m = 1;
    std::vector<uint32_t> modulus; // size m+1, modulus[m] == 1

    static FieldSpec prime_field(uint32_t p);
    static FieldSpec extension(uint32_t p, uint32_t m);

    uint64_t order() const; // p^m
    bool operator==(const FieldSpec& o) const { return p == o.p && m == o.m; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }
    std::string str() const; // "F3" or "F2^2"
};

// Immutable element of F_{p^m}, stored as m residues (coefficients of
// 1, x, ..., x^{m-1} modulo the defining polynomial).
class FieldScalar {
public:
    FieldScalar() : FieldScalar(zero(FieldSpec::prime_field(2))) {}
    static FieldScalar zero(const FieldSpec& f);
    static FieldScalar one(const FieldSpec& f);
    static FieldScalar from_int(const FieldSpec& f, int64_t v);
    static FieldScalar from_coeffs(const FieldSpec& f, std::vector<uint32_t> coeffs);
    static FieldScalar generator(const FieldSpec& f); // class of x, m >= 2

    const FieldSpec& spec() const { return spec_; }
    const std::vector<uint32_t>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;

    FieldScalar operator+(const FieldScalar& o) const;
    FieldScalar operator-(const FieldScalar& o) const;
    FieldScalar operator*(const FieldScalar& o) const;
    FieldScalar operator/(const FieldScalar& o) const;
    FieldScalar operator-() const;
    FieldScalar inverse() const;
    FieldScalar pow(uint64_t e) const;

    bool operator==(const FieldScalar& o) const;
    bool operator!=(const FieldScalar& o) const { return !(*this == o); }
    // canonical order for use as map keys (by coefficient vector, high to low)
    bool operator<(const FieldScalar& o) const;

    std::string str() const; // "0", "2", "w", "w+1", ...

private:
    FieldScalar(FieldSpec f, std::vector<uint32_t> c)
        : spec_(std::move(f)), c_(std::move(c)) {}
    FieldSpec spec_;
    std::vector<uint32_t> c_;
};

// x^p == x, i.e. x lies in the prime subfield F_p.
bool frobenius_fix(const FieldScalar& x);

// Minimal nonnegative integer congruent to x, for x in the prime subfield.
// Throws Error otherwise.
uint32_t bracket(const FieldScalar& x);

// All p^m elements, in base-p counter order (deterministic).
std::vector<FieldScalar> all_elements(const FieldSpec& f);

} // namespace y2p
