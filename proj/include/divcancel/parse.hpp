#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "divcancel/field_element.hpp"

namespace divcancel {

/// Syntax or semantic error in an element expression; position is a
/// 0-based byte offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses an expression such as "(t^2-1)^2", "-2*t^5 + 2*t" or "7/2".
///
/// Grammar: integers, the variable t (Q(t) only), binary + - * /, unary
/// minus, parentheses and ^ with a non-negative integer literal exponent.
/// Juxtaposition is rejected ("2t" must be written "2*t").
FieldElement parse_element(std::string_view text, FieldKind kind);

}  // namespace divcancel
