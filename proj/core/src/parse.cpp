#include "gvkit/parse.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "gvkit/errors.hpp"

namespace gvkit {

namespace {

constexpr unsigned long kMaxExponent = 1u << 16;

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  BiPoly parse() {
    skip_ws();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    BiPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BiPoly expr() {
    BiPoly acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  BiPoly term() {
    BiPoly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  BiPoly factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    BiPoly base = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      std::string digits = read_digits();
      if (digits.empty()) fail("expected a natural exponent after '^'");
      if (digits.size() > 6 || std::stoul(digits) > kMaxExponent) {
        throw ParseError("exponent too large", start);
      }
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  BiPoly primary() {
    skip_ws();
    if (pos_ == s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == 'x' || c == 'y') {
      ++pos_;
      return c == 'x' ? BiPoly::x() : BiPoly::y();
    }
    if (c == '(') {
      ++pos_;
      BiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(read_digits());
      mpz_class den = 1;
      std::size_t save = pos_;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip_ws();
        std::size_t den_pos = pos_;
        std::string d = read_digits();
        if (d.empty()) fail("expected a denominator after '/'");
        den = mpz_class(d);
        if (den == 0) throw ParseError("zero denominator", den_pos);
      } else {
        pos_ = save;
      }
      Rat r(num, den);
      r.canonicalize();
      return BiPoly::constant(r);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const Exponent& e) {
  std::string out;
  auto var = [&](char v, unsigned k) {
    if (k == 0) return;
    if (!out.empty()) out += '*';
    out += v;
    if (k > 1) out += "^" + std::to_string(k);
  };
  var('x', e.a);
  var('y', e.b);
  return out;
}

}  // namespace

BiPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

std::string render(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Exponent, Rat>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& u, const auto& v) { return graded_lex_less(v.first, u.first); });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const bool negative = c < 0;
    const Rat mag = abs(c);
    std::string body;
    std::string mono = monomial_text(e);
    if (mono.empty()) {
      body = mag.get_str();
    } else if (mag == 1) {
      body = mono;
    } else {
      body = mag.get_str() + "*" + mono;
    }
    if (first) {
      out = negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace gvkit
