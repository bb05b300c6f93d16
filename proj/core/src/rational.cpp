#include "gvkit/rational.hpp"

#include <cctype>

#include "gvkit/errors.hpp"

namespace gvkit {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num)) throw ParseError("bad rational '" + std::string(text) + "'", 0);
  if (!all_digits(den)) throw ParseError("bad rational '" + std::string(text) + "'", num.size() + 1);
  mpz_class n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", num.size() + 1);
  Rat r(n, d);
  r.canonicalize();
  return negative ? Rat(-r) : r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace gvkit
