#include "gvkit/ext_count.hpp"

#include <ostream>

#include "gvkit/errors.hpp"

namespace gvkit {

std::partial_ordering operator<=>(ExtCount a, ExtCount b) {
  using K = ExtCount::Kind;
  if (a.kind_ == K::kFinite && b.kind_ == K::kFinite) return a.value_ <=> b.value_;
  if (a.kind_ == K::kInfinite && b.kind_ == K::kInfinite) return std::partial_ordering::equivalent;
  if (a.kind_ == K::kFinite && b.kind_ == K::kInfinite) return std::partial_ordering::less;
  if (a.kind_ == K::kInfinite && b.kind_ == K::kFinite) return std::partial_ordering::greater;
  if (a.kind_ == K::kAtLeast && b.kind_ == K::kFinite && a.value_ > b.value_) {
    return std::partial_ordering::greater;
  }
  if (a.kind_ == K::kFinite && b.kind_ == K::kAtLeast && b.value_ > a.value_) {
    return std::partial_ordering::less;
  }
  return std::partial_ordering::unordered;
}

ExtCount operator+(ExtCount a, ExtCount b) {
  if (a.is_infinite() || b.is_infinite()) return ExtCount::infinite();
  if (a.is_at_least() || b.is_at_least()) return ExtCount::at_least(a.value_ + b.value_);
  return ExtCount::finite(a.value_ + b.value_);
}

ExtCount ExtCount::scaled(std::uint64_t k) const {
  if (k == 0) throw DomainError("ExtCount::scaled needs a positive factor");
  return ExtCount(kind_, value_ * k);
}

ExtCount exact_min(ExtCount a, ExtCount b) {
  if (a.is_at_least() || b.is_at_least()) throw DomainError("exact_min on a lower bound");
  return (a <= b) ? a : b;
}

std::string to_string(ExtCount c) {
  switch (c.kind()) {
    case ExtCount::Kind::kFinite:
      return std::to_string(c.value());
    case ExtCount::Kind::kInfinite:
      return "inf";
    case ExtCount::Kind::kAtLeast:
      return ">=" + std::to_string(c.value());
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, ExtCount c) { return os << to_string(c); }

}  // namespace gvkit
