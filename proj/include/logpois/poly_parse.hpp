#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "logpois/bipoly.hpp"

namespace logpois {

struct SyntaxError : std::runtime_error {
    std::size_t offset;
    SyntaxError(const std::string& message, std::size_t at)
        : std::runtime_error(message + " at offset " + std::to_string(at)), offset(at) {}
};

struct UnknownVariable : SyntaxError {
    UnknownVariable(char symbol, std::size_t at)
        : SyntaxError(std::string("unknown variable '") + symbol + "'", at) {}
};

/* Grammar: integer or integer/integer coefficients, variables x and y,
 * operators + - * ^ and parentheses; whitespace insignificant.
 * Exponents are nonnegative integers. Rendering a BiPoly via to_string()
 * and re-parsing yields an equal polynomial. */
BiPoly parse_poly(const std::string& text);

}  // namespace logpois
