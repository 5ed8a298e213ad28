#pragma once

#include <string>
#include <utility>
#include <vector>

#include "y2p/field.hpp"

namespace y2p {

// Dense polynomial over F_{p^m}, coefficients ascending in the variable.
class Poly {
public:
    explicit Poly(const FieldSpec& f) : spec_(f) {}
    static Poly from_coeffs(const FieldSpec& f, std::vector<FieldScalar> c);
    static Poly constant(const FieldScalar& c);
    static Poly x(const FieldSpec& f);
    // (u + a)
    static Poly linear(const FieldScalar& a);

    const FieldSpec& spec() const { return spec_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    FieldScalar coeff(size_t i) const;
    const std::vector<FieldScalar>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const FieldScalar& c) const;
    Poly monic() const;
    Poly pow(uint64_t e) const;
    bool operator==(const Poly& o) const { return spec_ == o.spec_ && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::pair<Poly, Poly> divmod(const Poly& d) const;
    static Poly gcd(Poly a, Poly b); // monic

    // composition u -> u + a
    Poly shifted(const FieldScalar& a) const;
    FieldScalar eval(const FieldScalar& x) const;

    // Roots in the ambient field with multiplicity (exhaustive scan, then
    // repeated division), sorted canonically.
    std::vector<FieldScalar> roots() const;
    bool splits() const;

    // Degree over F_p of the splitting field (lcm of irreducible factor
    // degrees over F_{p^m}, times m).
    uint32_t splitting_degree_over_prime() const;

    std::string str(const std::string& var = "u") const;

private:
    void trim();
    FieldSpec spec_;
    std::vector<FieldScalar> c_;
};

} // namespace y2p
