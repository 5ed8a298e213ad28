#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace y2p {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Computation refused because it would exceed a configured budget.
struct BudgetError : Error {
    using Error::Error;
};

// A polynomial failed to split over the ambient field; carries the extension
// degree over F_p that would suffice.
struct NeedsLargerField : Error {
    uint32_t required_degree;
    NeedsLargerField(const std::string& msg, uint32_t degree)
        : Error(msg), required_degree(degree) {}
};

// Text input rejected; position is a 0-based byte offset into the input.
struct ParseError : Error {
    size_t position;
    ParseError(const std::string& msg, size_t pos) : Error(msg), position(pos) {}
};

} // namespace y2p
