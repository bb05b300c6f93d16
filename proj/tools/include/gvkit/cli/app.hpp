#pragma once

#include <iosfwd>

namespace gvkit::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitSemantic = 3;
inline constexpr int kExitInvariant = 4;

// Runs the command line; documents without a path are read from `in`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gvkit::cli
