#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>

#include "gvkit/ext_count.hpp"
#include "gvkit/rational.hpp"
#include "gvkit/unipoly.hpp"

namespace gvkit {

// Exponent pair of x^a y^b.
struct Exponent {
  unsigned a = 0;
  unsigned b = 0;
  unsigned degree() const { return a + b; }
  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

// Graded lex with x > y: compare total degree, then the x exponent.
bool graded_lex_less(const Exponent& u, const Exponent& v);

// Sparse polynomial in Q[x, y]. Zero coefficients are never stored.
class BiPoly {
 public:
  using Terms = std::map<Exponent, Rat>;

  BiPoly() = default;
  static BiPoly constant(const Rat& c);
  static BiPoly monomial(const Rat& c, unsigned a, unsigned b);
  static BiPoly x() { return monomial(1, 1, 0); }
  static BiPoly y() { return monomial(1, 0, 1); }
  static BiPoly from_x(const UniPoly& p);
  // Zero coefficients are dropped.
  static BiPoly from_terms(Terms terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(unsigned a, unsigned b) const;
  Rat constant_term() const { return coeff(0, 0); }
  // Degrees of the zero polynomial are 0.
  unsigned total_degree() const;
  unsigned degree_x() const;
  unsigned degree_y() const;
  // Leading exponent under graded lex. Throws DomainError on zero.
  Exponent leading_exponent() const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Rat& s);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Rat& s) { return a *= s; }
  friend BiPoly operator*(const Rat& s, BiPoly a) { return a *= s; }
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  BiPoly pow(unsigned e) const;
  // Multiplies by x^a y^b.
  BiPoly shifted(unsigned a, unsigned b) const;
  // Drops every term of total degree >= trunc.
  BiPoly truncated(unsigned trunc) const;
  // p(x, 0) as a polynomial in x.
  UniPoly at_y_zero() const;
  // p / y. Throws DomainError unless y divides p.
  BiPoly divided_by_y() const;

 private:
  void add_term(const Exponent& e, const Rat& c);
  Terms terms_;
};

// Product with all terms of total degree >= trunc discarded.
BiPoly mul_truncated(const BiPoly& a, const BiPoly& b, unsigned trunc);

BiPoly product(std::span<const BiPoly> factors);

// Smallest total degree of a term. Infinite for zero.
ExtCount order(const BiPoly& p);

// Homogeneous degree-1 part.
BiPoly linear_part(const BiPoly& p);

// Integer-primitive multiple with positive graded-lex leading coefficient.
BiPoly normalize_primitive(const BiPoly& p);

// Greatest common divisor in Q[x, y], normalized as above.
// gcd(0, q) = normalize_primitive(q).
BiPoly poly_gcd(const BiPoly& p, const BiPoly& q);

// p / d when d divides p exactly, otherwise nullopt. Throws on d = 0.
std::optional<BiPoly> exact_divide(const BiPoly& p, const BiPoly& d);

}  // namespace gvkit
