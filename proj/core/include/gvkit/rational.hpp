#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gvkit {

using Rat = mpq_class;

// Accepts "a" or "a/b" with an optional leading sign.
Rat parse_rational(std::string_view text);

std::string to_string(const Rat& r);

}  // namespace gvkit
