#pragma once

#include <cstddef>
#include <vector>

#include "gvkit/errors.hpp"

namespace gvkit {

// Values indexed by pairs 1 <= i <= j <= m, stored row by row.
template <class T>
class PairTable {
 public:
  PairTable() = default;
  explicit PairTable(unsigned m, const T& fill = T{}) : m_(m), v_(static_cast<std::size_t>(m) * (m + 1) / 2, fill) {}

  unsigned m() const { return m_; }
  T& at(unsigned i, unsigned j) { return v_[index(i, j)]; }
  const T& at(unsigned i, unsigned j) const { return v_[index(i, j)]; }

  friend bool operator==(const PairTable&, const PairTable&) = default;

 private:
  std::size_t index(unsigned i, unsigned j) const {
    if (i < 1 || i > j || j > m_) throw DomainError("table index out of range");
    // rows i = 1..m hold j = i..m
    std::size_t before = static_cast<std::size_t>(i - 1) * m_ - static_cast<std::size_t>(i - 1) * (i - 2) / 2;
    return before + (j - i);
  }

  unsigned m_ = 0;
  std::vector<T> v_;
};

}  // namespace gvkit
