#include "gvkit/series.hpp"

#include "gvkit/errors.hpp"

namespace gvkit {

namespace {

unsigned common_trunc(const TruncSeries2& a, const TruncSeries2& b) {
  if (a.trunc() != b.trunc()) {
    throw DomainError("truncated series with different truncation degrees (" +
                      std::to_string(a.trunc()) + " vs " + std::to_string(b.trunc()) + ")");
  }
  return a.trunc();
}

}  // namespace

TruncSeries2::TruncSeries2(const BiPoly& p, unsigned trunc) : poly_(p.truncated(trunc)), trunc_(trunc) {}

TruncSeries2 TruncSeries2::operator-() const { return TruncSeries2(-poly_, trunc_); }

TruncSeries2 operator+(const TruncSeries2& a, const TruncSeries2& b) {
  return TruncSeries2(a.poly_ + b.poly_, common_trunc(a, b));
}

TruncSeries2 operator-(const TruncSeries2& a, const TruncSeries2& b) {
  return TruncSeries2(a.poly_ - b.poly_, common_trunc(a, b));
}

TruncSeries2 operator*(const TruncSeries2& a, const TruncSeries2& b) {
  unsigned t = common_trunc(a, b);
  return TruncSeries2(mul_truncated(a.poly_, b.poly_, t), t);
}

TruncSeries2 operator*(const Rat& s, const TruncSeries2& a) { return TruncSeries2(a.poly_ * s, a.trunc_); }

TruncSeries2 TruncSeries2::pow(unsigned e) const {
  TruncSeries2 result(BiPoly::constant(1), trunc_);
  TruncSeries2 base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

}  // namespace gvkit
