#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "y2p/field.hpp"

namespace y2p {

// Drinfeld generator families in normal-form order: every PBW monomial reads
// f^{I1} d1^{I2} d2^{I3} e^{I4} with levels ascending inside each block.
enum class Fam : uint32_t { F = 0, D1 = 1, D2 = 2, E = 3 };

// A generator packs (family, level) so that the numeric order on the codes
// is exactly the normal-form order.
using Gen = uint32_t;

constexpr Gen make_gen(Fam f, uint32_t level) {
    return (static_cast<uint32_t>(f) << 24) | level;
}
constexpr Fam gen_fam(Gen g) { return static_cast<Fam>(g >> 24); }
constexpr uint32_t gen_level(Gen g) { return g & 0xFFFFFF; }

std::string gen_str(Gen g);

// A word is a product of generators; the empty word is the identity.
using Word = std::vector<Gen>;

// Noncommutative polynomial: finitely many words with nonzero coefficients.
class NCPoly {
public:
    explicit NCPoly(const FieldSpec& f) : spec_(f) {}
    static NCPoly zero(const FieldSpec& f) { return NCPoly(f); }
    static NCPoly scalar(const FieldScalar& c);
    static NCPoly monomial(const FieldSpec& f, Word w, const FieldScalar& c);
    static NCPoly generator(const FieldSpec& f, Fam fam, uint32_t level);

    const FieldSpec& spec() const { return spec_; }
    const std::map<Word, FieldScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& w, const FieldScalar& c);
    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly operator*(const NCPoly& o) const; // word concatenation, bilinear
    NCPoly scaled(const FieldScalar& c) const;
    bool operator==(const NCPoly& o) const {
        return spec_ == o.spec_ && terms_ == o.terms_;
    }
    bool operator!=(const NCPoly& o) const { return !(*this == o); }

    // largest sum of levels over the words (0 for scalars)
    uint32_t total_degree() const;

    std::string str() const;

private:
    FieldSpec spec_;
    std::map<Word, FieldScalar> terms_;
};

// Exponent view of a normal word, block by block.
struct PBWMonomial {
    std::map<uint32_t, uint32_t> f, d1, d2, e; // level -> exponent
    static PBWMonomial from_word(const Word& w);
    Word to_word() const;
    // any d-exponent >= p (left intact by restricted straightening)
    bool has_high_d_exponent(uint32_t p) const;
};

enum class StraightenMode { Plain, Restricted };

struct StraightenOpts {
    StraightenMode mode = StraightenMode::Plain;
    uint32_t level_bound = 8; // validated against input generators
    bool rightmost = false;   // rewrite the rightmost out-of-order pair instead
};

// Rewrites x to its PBW normal form.  Linear, idempotent, and independent of
// the rewrite order; in restricted mode words containing p equal adjacent
// e- or f-generators are dropped ((e^(r))^p = (f^(r))^p = 0 in Y2^[p]).
NCPoly straighten(const NCPoly& x, const StraightenOpts& opts = {});

// d_i'^(r) eliminated into a (commutative) polynomial in d_i^(s), s <= r,
// by the recursion d_i'^(r) = -sum_{t=1..r} d_i^(t) d_i'^(r-t).
NCPoly dprime_expand(const FieldSpec& f, int i, uint32_t r);

// Coefficient of u^{-r} in the Gauss product for t_{i,j}(u):
// t11 = d1, t12 = d1 e, t21 = f d1, t22 = f d1 e + d2.
NCPoly rtt_to_drinfeld(const FieldSpec& f, int i, int j, uint32_t r);

// Checks [t_{i,j}^(r), t_{k,l}^(s)] against the RTT right-hand side after
// conversion to Drinfeld generators and straightening.
bool verify_rtt_relation(const FieldSpec& f, uint32_t r, uint32_t s, int i, int j, int k,
                         int l, const StraightenOpts& opts = {});

// Coefficient b_i^(N) of b_i(u) = d_i(u) d_i(u-1) ... d_i(u-p+1), exact:
// the binomial expansion of (u-j)^{-r} is truncated at u^{-N}.
NCPoly p_center_b(const FieldSpec& f, int i, uint32_t n);

// Smallest n with x^n = 0 in restricted mode, for x in the augmentation
// ideal of the f-subalgebra.  cap = 0 derives the bound W*(p-1)+1 from the
// level window of x.
uint32_t nilpotency_witness(const NCPoly& x, uint32_t cap = 0);

} // namespace y2p
