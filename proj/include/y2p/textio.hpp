#pragma once

#include <optional>
#include <string>

#include "y2p/presentation.hpp"
#include "y2p/series.hpp"

namespace y2p {

// Series syntax: "1 + 2u^-1 + u^-2", rational "( ... )/( ... )", optional
// field suffix "@F3" or "@F2^2".  Coefficients are integers, w, w^k, or
// parenthesized sums like (w+1).
RationalSeries parse_rational_series(const std::string& text, const FieldSpec& field);
LowerSeries parse_lower_series(const std::string& text, const FieldSpec& field);

// Field annotation "...@F{p}^{m}", when present, must agree with or refine
// the supplied default.
std::optional<FieldSpec> parse_field_suffix(const std::string& text, size_t& cut);

// Element syntax: "e(1)*f(1) - d1(2)", "t(1,2;3)" for t_{1,2}^(3); primed
// d1'(r), d2'(r) are eliminated while parsing.
NCPoly parse_nc_element(const std::string& text, const FieldSpec& field);

// comma-separated residues "1,2,0" as prime-subfield scalars
std::vector<FieldScalar> parse_tuple(const std::string& text, const FieldSpec& field);

} // namespace y2p
