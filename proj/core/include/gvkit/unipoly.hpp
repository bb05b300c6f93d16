#pragma once

#include <span>
#include <utility>
#include <vector>

#include "gvkit/ext_count.hpp"
#include "gvkit/rational.hpp"

namespace gvkit {

// Dense univariate polynomial over Q in the variable x.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);

  static UniPoly constant(const Rat& c);
  static UniPoly monomial(const Rat& c, unsigned degree);

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& coeff(unsigned k) const;
  const Rat& leading() const;
  std::span<const Rat> coeffs() const { return c_; }

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rat& s);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rat& s) { return a *= s; }
  friend UniPoly operator*(const Rat& s, UniPoly a) { return a *= s; }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  // Drops every term of degree >= cap.
  UniPoly truncated(unsigned cap) const;
  UniPoly pow(unsigned e) const;

 private:
  void trim();
  std::vector<Rat> c_;
};

// Product with all terms of degree >= cap discarded.
UniPoly mul_truncated(const UniPoly& a, const UniPoly& b, unsigned cap);

// Order at x = 0. Infinite for the zero polynomial.
ExtCount order(const UniPoly& p);

// Quotient and remainder. Throws DomainError on a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

// Monic gcd. gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

}  // namespace gvkit
