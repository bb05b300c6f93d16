#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gvkit/ext_count.hpp"
#include "gvkit/rational.hpp"
#include "gvkit/series.hpp"
#include "gvkit/unipoly.hpp"

namespace gvkit {

// Monomialised Type A potential on the quiver Q_n: coefficients k_{ij} for
// rows i = 1..2n-1 and exponents j >= 2. Zero coefficients are not stored.
class Potential {
 public:
  using Coeffs = std::map<std::pair<unsigned, unsigned>, Rat>;

  explicit Potential(unsigned n, Coeffs coeffs = {});

  unsigned n() const { return n_; }
  unsigned rows() const { return 2 * n_ - 1; }
  const Coeffs& coeffs() const { return coeffs_; }
  Rat k(unsigned i, unsigned j) const;
  // (j, k_ij) for the nonzero entries of row i, by increasing j.
  std::vector<std::pair<unsigned, Rat>> row(unsigned i) const;
  // Copy with k_ij replaced; a zero value removes the entry.
  Potential with(unsigned i, unsigned j, const Rat& value) const;

  friend bool operator==(const Potential&, const Potential&) = default;

 private:
  unsigned n_;
  Coeffs coeffs_;
};

// Entries are Finite(j >= 2) or Infinite.
using PTuple = std::vector<ExtCount>;

// p_i = least j with k_ij != 0, Infinite for an empty row.
PTuple support_tuple(const Potential& pot);

// 2 when j - i is odd, min(p_i, p_{i+2}, ..., p_j) otherwise. Indices 1-based.
ExtCount d_ij_p(const PTuple& p, unsigned i, unsigned j);

struct HMode {
  enum class Kind { kExact, kCapped };
  Kind kind = Kind::kExact;
  unsigned max_degree = 4096;  // guard in exact mode
  unsigned cap = 64;           // capped mode keeps degrees < cap

  static HMode exact(unsigned max_degree = 4096) { return {Kind::kExact, max_degree, 64}; }
  static HMode capped(unsigned cap) { return {Kind::kCapped, 4096, cap}; }
};

// h_{b,b} = 0, h_{b,b+1} = x and
// h_{b,t+1} = -h_{b,t-1} - sum_j j k_tj h_{b,t}^{j-1}.
class HSequence {
 public:
  HSequence(unsigned base, std::vector<UniPoly> entries, HMode mode)
      : base_(base), entries_(std::move(entries)), mode_(mode) {}
  unsigned base() const { return base_; }
  unsigned upto() const { return base_ + static_cast<unsigned>(entries_.size()) - 1; }
  const HMode& mode() const { return mode_; }
  // h_{base, t} for base <= t <= upto.
  const UniPoly& at(unsigned t) const;

 private:
  unsigned base_;
  std::vector<UniPoly> entries_;
  HMode mode_;
};

// base in 0..2n-1, base < upto <= 2n. DegreeLimitError when an exact entry
// exceeds mode.max_degree.
HSequence h_sequence(const Potential& pot, unsigned base, unsigned upto, const HMode& mode = HMode::exact());

// Order of h_{2s-2, 2t}, 1 <= s <= t <= n. In capped mode a vanishing
// truncation yields AtLeast(cap - 1).
ExtCount n_st(const Potential& pot, unsigned s, unsigned t, const HMode& mode = HMode::exact());

// Solutions g_0..g_{2n} of g_{t-1} + sum_j j k_tj g_t^{j-1} + g_{t+1} = 0
// for t = 1..2n-1, with g_seed = y and g_{seed+1} = x, modulo degree trunc.
struct RealizedSystem {
  unsigned seed;
  std::vector<TruncSeries2> g;
  // (g_0, g_2, ..., g_{2n}).
  std::vector<TruncSeries2> flag() const;
};

// trunc >= 3, seed in 0..2n-1.
RealizedSystem realize_flag(const Potential& pot, unsigned trunc, unsigned seed = 0);

// mult_series(g_{2s-2}, g_{2t}) over a realised system.
ExtCount series_n_st(const RealizedSystem& sys, unsigned s, unsigned t);

}  // namespace gvkit
