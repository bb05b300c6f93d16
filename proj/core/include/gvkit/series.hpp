#pragma once

#include "gvkit/bipoly.hpp"

namespace gvkit {

// Element of Q[[x, y]] known modulo terms of total degree >= trunc.
class TruncSeries2 {
 public:
  TruncSeries2(const BiPoly& p, unsigned trunc);

  const BiPoly& poly() const { return poly_; }
  unsigned trunc() const { return trunc_; }

  TruncSeries2 operator-() const;
  // Operands must share the truncation degree; DomainError otherwise.
  friend TruncSeries2 operator+(const TruncSeries2& a, const TruncSeries2& b);
  friend TruncSeries2 operator-(const TruncSeries2& a, const TruncSeries2& b);
  friend TruncSeries2 operator*(const TruncSeries2& a, const TruncSeries2& b);
  friend TruncSeries2 operator*(const Rat& s, const TruncSeries2& a);
  friend bool operator==(const TruncSeries2&, const TruncSeries2&) = default;

  TruncSeries2 pow(unsigned e) const;

 private:
  BiPoly poly_;
  unsigned trunc_;
};

}  // namespace gvkit
