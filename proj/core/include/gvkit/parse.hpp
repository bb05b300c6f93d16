#pragma once

#include <string>
#include <string_view>

#include "gvkit/bipoly.hpp"

namespace gvkit {

// Parses expressions over x and y built from rational literals (a or a/b),
// + - *, unary minus, ^ with a natural exponent, and parentheses.
// Throws ParseError carrying the byte offset of the first bad token.
BiPoly parse_poly(std::string_view text);

// Canonical text, terms in decreasing graded-lex order. parse_poly inverts it.
std::string render(const BiPoly& p);

}  // namespace gvkit
