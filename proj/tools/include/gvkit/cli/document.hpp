#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "gvkit/classify.hpp"
#include "gvkit/potential.hpp"
#include "gvkit/resolution.hpp"

namespace gvkit::cli {

using Json = nlohmann::ordered_json;

enum class Format { kTable, kJson, kCsv };
enum class Kind { kFlag, kPotential, kQSpec };

struct Options {
  Format format = Format::kTable;
  unsigned trunc = 64;
  HMode::Kind mode = HMode::Kind::kExact;
  std::uint64_t seed = 0;
  unsigned max_degree = 4096;
  unsigned samples = 50;

  HMode hmode() const;
};

// {"kind": ..., "payload": ..., "options": {...}}. Options stay raw until
// merged with the command line.
struct JobDocument {
  Kind kind = Kind::kFlag;
  Json payload;
  Json options = Json::object();
};

// ParseError for malformed JSON, DomainError for a malformed envelope.
JobDocument parse_document(std::string_view text);
Json envelope(Kind kind, Json payload);
std::string kind_name(Kind kind);

// Applies the recognised keys of `options` on top of `base`.
Options apply_options(const Json& options, Options base);
Format parse_format(std::string_view text);
HMode::Kind parse_mode(std::string_view text);

// A natural number or "inf".
ExtCount count_from_json(const Json& j, const std::string& where);
// Integer, "inf" or ">=D".
Json count_to_json(ExtCount c);
// Integer when integral and small, otherwise the string "a/b".
Json rational_to_json(const Rat& r);
Rat rational_from_json(const Json& j, const std::string& where);

// A list of entries, or {"entries": list}. Each entry is an expression
// string or {"factors": [expression, ...]}.
Flag flag_from_json(const Json& payload);
Json flag_to_json(const Flag& flag);

// {"n": n, "coeffs": [{"i": i, "j": j, "k": k}, ...]}.
Potential potential_from_json(const Json& payload);
Json potential_to_json(const Potential& pot);

// {"n": n, "s": s, "t": t, "q": [q_s, ..., q_t]}.
QSpec qspec_from_json(const Json& payload);
Json qspec_to_json(const QSpec& q);

}  // namespace gvkit::cli
