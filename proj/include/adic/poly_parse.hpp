#ifndef ADIC_POLY_PARSE_HPP
#define ADIC_POLY_PARSE_HPP

#include <string>
#include <string_view>

#include "adic/polynomial.hpp"

namespace adic {

struct PolyParseError : AlgebraError {
    PolyParseError(std::size_t offset, const std::string& msg)
        : AlgebraError(msg), offset(offset) {}
    std::size_t offset;  // byte offset into the parsed text
};

/// Parse a polynomial expression: +, -, *, ^, parentheses, integer or
/// rational coefficients, declared variable names. Throws PolyParseError.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

} // namespace adic

#endif
