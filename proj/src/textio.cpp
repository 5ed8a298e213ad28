#include "y2p/textio.hpp"

#include <cctype>

namespace y2p {

namespace {

struct Cursor {
    const std::string& s;
    size_t at = 0;

    void skip_ws() {
        while (at < s.size() && std::isspace(static_cast<unsigned char>(s[at]))) ++at;
    }
    bool eof() {
        skip_ws();
        return at >= s.size();
    }
    char peek() {
        skip_ws();
        return at < s.size() ? s[at] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (at < s.size() && s[at] == c) {
            ++at;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "' " + what, at);
    }
    uint64_t integer() {
        skip_ws();
        if (at >= s.size() || !std::isdigit(static_cast<unsigned char>(s[at])))
            throw ParseError("expected an integer", at);
        uint64_t v = 0;
        while (at < s.size() && std::isdigit(static_cast<unsigned char>(s[at]))) {
            v = v * 10 + static_cast<uint64_t>(s[at] - '0');
            if (v > (1ull << 40)) throw ParseError("integer too large", at);
            ++at;
        }
        return v;
    }
};

// atom := int ['*'? watom] | watom ; watom := 'w' ['^' int]
FieldScalar parse_coeff_atom(Cursor& c, const FieldSpec& f) {
    FieldScalar val = FieldScalar::one(f);
    bool have_int = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        val = FieldScalar::from_int(f, static_cast<int64_t>(c.integer()));
        have_int = true;
        c.accept('*');
    }
    if (c.peek() == 'w') {
        ++c.at;
        uint64_t e = 1;
        if (c.accept('^')) e = c.integer();
        if (f.m < 2) throw ParseError("'w' needs an extension field", c.at);
        val = val * FieldScalar::generator(f).pow(e);
    } else if (!have_int) {
        throw ParseError("expected a coefficient", c.at);
    }
    return val;
}

FieldScalar parse_coeff_sum(Cursor& c, const FieldSpec& f) {
    FieldScalar acc = parse_coeff_atom(c, f);
    while (true) {
        if (c.accept('+')) acc = acc + parse_coeff_atom(c, f);
        else if (c.accept('-')) acc = acc - parse_coeff_atom(c, f);
        else return acc;
    }
}

// term := coef ['*'] ['u' '^' '-' int] | 'u' '^' '-' int
std::pair<FieldScalar, uint64_t> parse_series_term(Cursor& c, const FieldSpec& f) {
    FieldScalar coeff = FieldScalar::one(f);
    bool have_coeff = false;
    if (c.peek() == '(') {
        c.expect('(', "before coefficient");
        coeff = parse_coeff_sum(c, f);
        c.expect(')', "after coefficient");
        have_coeff = true;
        c.accept('*');
    } else if (std::isdigit(static_cast<unsigned char>(c.peek())) || c.peek() == 'w') {
        coeff = parse_coeff_atom(c, f);
        have_coeff = true;
        c.accept('*');
    }
    uint64_t power = 0;
    if (c.peek() == 'u') {
        ++c.at;
        c.expect('^', "after u");
        c.expect('-', "in the exponent (series are in u^-1)");
        power = c.integer();
        if (power == 0) throw ParseError("u^-0 is not a valid series term", c.at);
    } else if (!have_coeff) {
        throw ParseError("expected a series term", c.at);
    }
    return {coeff, power};
}

LowerSeries parse_sum(Cursor& c, const FieldSpec& f) {
    std::vector<FieldScalar> coeffs{FieldScalar::zero(f)};
    bool negative = c.accept('-');
    while (true) {
        auto [coeff, power] = parse_series_term(c, f);
        if (negative) coeff = -coeff;
        if (coeffs.size() <= power) coeffs.resize(power + 1, FieldScalar::zero(f));
        coeffs[power] = coeffs[power] + coeff;
        if (c.accept('+')) negative = false;
        else if (c.accept('-')) negative = true;
        else break;
    }
    if (!coeffs[0].is_one())
        throw ParseError("series must have constant term 1", c.at);
    return LowerSeries::from_coeffs(f, std::move(coeffs));
}

} // namespace

std::optional<FieldSpec> parse_field_suffix(const std::string& text, size_t& cut) {
    size_t at = text.rfind('@');
    cut = text.size();
    if (at == std::string::npos) return std::nullopt;
    cut = at;
    Cursor c{text, at + 1};
    if (!c.accept('F')) throw ParseError("expected F after @", c.at);
    uint32_t p = static_cast<uint32_t>(c.integer());
    uint32_t m = 1;
    if (c.accept('^')) m = static_cast<uint32_t>(c.integer());
    if (!c.eof()) throw ParseError("trailing input after field annotation", c.at);
    return m == 1 ? FieldSpec::prime_field(p) : FieldSpec::extension(p, m);
}

RationalSeries parse_rational_series(const std::string& text, const FieldSpec& field) {
    size_t cut = text.size();
    auto annotated = parse_field_suffix(text, cut);
    FieldSpec f = field;
    if (annotated) {
        if (*annotated != field)
            throw ParseError("field annotation disagrees with the requested field", cut);
        f = *annotated;
    }
    std::string body = text.substr(0, cut);
    Cursor c{body, 0};
    c.skip_ws();
    size_t save = c.at;
    if (c.peek() == '(') {
        c.expect('(', "");
        // matching close followed by '/' makes this a ratio
        int depth = 1;
        size_t i = c.at;
        for (; i < body.size() && depth > 0; ++i) {
            if (body[i] == '(') ++depth;
            if (body[i] == ')') --depth;
        }
        size_t after = i;
        while (after < body.size() && std::isspace(static_cast<unsigned char>(body[after])))
            ++after;
        if (depth == 0 && after < body.size() && body[after] == '/') {
            Cursor num{body, c.at};
            LowerSeries n = parse_sum(num, f);
            num.expect(')', "after numerator");
            num.expect('/', "between numerator and denominator");
            num.expect('(', "before denominator");
            LowerSeries d = parse_sum(num, f);
            num.expect(')', "after denominator");
            if (!num.eof()) throw ParseError("trailing input after series", num.at);
            return RationalSeries(std::move(n), std::move(d));
        }
        c.at = save;
    }
    LowerSeries s = parse_sum(c, f);
    if (!c.eof()) throw ParseError("trailing input after series", c.at);
    return RationalSeries(std::move(s));
}

LowerSeries parse_lower_series(const std::string& text, const FieldSpec& field) {
    RationalSeries r = parse_rational_series(text, field);
    if (!r.is_polynomial())
        throw ParseError("expected a polynomial series, got a ratio", 0);
    return r.num();
}

NCPoly parse_nc_element(const std::string& text, const FieldSpec& field) {
    Cursor c{text, 0};
    NCPoly out(field);
    bool negative = false;
    if (c.accept('-')) negative = true;
    while (true) {
        FieldScalar sign = FieldScalar::from_int(field, negative ? -1 : 1);
        NCPoly term = NCPoly::scalar(sign);
        bool bare_scalar = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            term = term.scaled(
                FieldScalar::from_int(field, static_cast<int64_t>(c.integer())));
            if (!c.accept('*')) bare_scalar = true;
        }
        if (!bare_scalar) {
            while (true) {
                char g = c.peek();
                if (g == 'e' || g == 'f') {
                    ++c.at;
                    c.expect('(', "after generator name");
                    uint32_t r = static_cast<uint32_t>(c.integer());
                    c.expect(')', "after level");
                    if (r == 0) throw ParseError("e/f levels start at 1", c.at);
                    term = term * NCPoly::generator(field, g == 'e' ? Fam::E : Fam::F, r);
                } else if (g == 'd') {
                    ++c.at;
                    char which = c.peek();
                    if (which != '1' && which != '2')
                        throw ParseError("expected d1 or d2", c.at);
                    ++c.at;
                    bool primed = c.peek() == '\'';
                    if (primed) ++c.at;
                    c.expect('(', "after generator name");
                    uint32_t r = static_cast<uint32_t>(c.integer());
                    c.expect(')', "after level");
                    if (primed) {
                        term = term * dprime_expand(field, which == '1' ? 1 : 2, r);
                    } else {
                        if (r == 0) throw ParseError("d levels start at 1", c.at);
                        term = term *
                               NCPoly::generator(field, which == '1' ? Fam::D1 : Fam::D2, r);
                    }
                } else if (g == 't') {
                    ++c.at;
                    c.expect('(', "after t");
                    int i = static_cast<int>(c.integer());
                    c.expect(',', "between t indices");
                    int j = static_cast<int>(c.integer());
                    c.expect(';', "before the t level");
                    uint32_t r = static_cast<uint32_t>(c.integer());
                    c.expect(')', "after t level");
                    if (i < 1 || i > 2 || j < 1 || j > 2)
                        throw ParseError("t indices must be 1 or 2", c.at);
                    term = term * rtt_to_drinfeld(field, i, j, r);
                } else {
                    throw ParseError("expected a generator (e, f, d1, d2, t)", c.at);
                }
                if (!c.accept('*')) break;
            }
        }
        out = out + term;
        if (c.accept('+')) negative = false;
        else if (c.accept('-')) negative = true;
        else break;
    }
    if (!c.eof()) throw ParseError("trailing input after element", c.at);
    return out;
}

std::vector<FieldScalar> parse_tuple(const std::string& text, const FieldSpec& field) {
    std::vector<FieldScalar> out;
    Cursor c{text, 0};
    if (c.eof()) return out;
    while (true) {
        bool neg = c.accept('-');
        int64_t v = static_cast<int64_t>(c.integer());
        out.push_back(FieldScalar::from_int(field, neg ? -v : v));
        if (!c.accept(',')) break;
    }
    if (!c.eof()) throw ParseError("trailing input after tuple", c.at);
    return out;
}

} // namespace y2p
