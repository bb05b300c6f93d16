#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace gvkit {

// A dimension that is a natural number, infinite, or (when it comes out of a
// truncated computation) only known to be at least some value.
class ExtCount {
 public:
  enum class Kind : std::uint8_t { kFinite, kInfinite, kAtLeast };

  constexpr ExtCount() = default;

  static constexpr ExtCount finite(std::uint64_t n) { return ExtCount(Kind::kFinite, n); }
  static constexpr ExtCount infinite() { return ExtCount(Kind::kInfinite, 0); }
  static constexpr ExtCount at_least(std::uint64_t n) { return ExtCount(Kind::kAtLeast, n); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::kFinite; }
  constexpr bool is_infinite() const { return kind_ == Kind::kInfinite; }
  constexpr bool is_at_least() const { return kind_ == Kind::kAtLeast; }
  // Finite value, or the lower bound for AtLeast. Zero for Infinite.
  constexpr std::uint64_t value() const { return value_; }

  friend constexpr bool operator==(ExtCount, ExtCount) = default;

  // Finite < Infinite. AtLeast(a) is above Finite(b) when a > b and is
  // unordered against anything it might equal.
  friend std::partial_ordering operator<=>(ExtCount a, ExtCount b);

  // Infinite absorbs. A sum with an AtLeast term is an AtLeast.
  friend ExtCount operator+(ExtCount a, ExtCount b);
  ExtCount& operator+=(ExtCount b) { return *this = *this + b; }

  // Multiplication by a positive natural.
  ExtCount scaled(std::uint64_t k) const;

 private:
  constexpr ExtCount(Kind k, std::uint64_t v) : kind_(k), value_(v) {}

  Kind kind_ = Kind::kFinite;
  std::uint64_t value_ = 0;
};

// Minimum of two exact values. Throws DomainError on AtLeast inputs.
ExtCount exact_min(ExtCount a, ExtCount b);

// "3", "inf" or ">=5".
std::string to_string(ExtCount c);
std::ostream& operator<<(std::ostream& os, ExtCount c);

}  // namespace gvkit
