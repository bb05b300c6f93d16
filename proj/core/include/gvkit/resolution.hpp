#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gvkit/bipoly.hpp"
#include "gvkit/ext_count.hpp"
#include "gvkit/pair_table.hpp"

namespace gvkit {

using FactorList = std::vector<BiPoly>;

// The grouping (g_0, ..., g_m) of the prime factors of a cA_m equation.
// Each entry is nonzero and vanishes at the origin. An entry may carry its
// factorisation; the product must then equal the entry exactly.
class Flag {
 public:
  explicit Flag(std::vector<BiPoly> gs);
  Flag(std::vector<BiPoly> gs, std::vector<std::optional<FactorList>> factors);

  unsigned m() const { return static_cast<unsigned>(gs_.size()) - 1; }
  const BiPoly& g(unsigned j) const { return gs_.at(j); }
  const std::vector<BiPoly>& entries() const { return gs_; }
  const std::vector<std::optional<FactorList>>& supplied_factors() const { return factors_; }

  // The supplied factor list, or {g_j} when g_j has order one (hence is
  // prime), otherwise nullopt.
  std::optional<FactorList> factors(unsigned j) const;

  friend bool operator==(const Flag&, const Flag&) = default;

 private:
  std::vector<BiPoly> gs_;
  std::vector<std::optional<FactorList>> factors_;
};

using NTable = PairTable<ExtCount>;
using GvTable = PairTable<std::int64_t>;

// mult(g_{i-1}, g_j) for 1 <= i <= j <= m.
ExtCount n_ij(const Flag& flag, unsigned i, unsigned j);
NTable n_table(const Flag& flag);

// n_ij when beta is the 0/1 block on i..j, otherwise Finite(0).
ExtCount n_beta(const Flag& flag, std::span<const std::int64_t> beta);
ExtCount n_beta(const NTable& table, std::span<const std::int64_t> beta);

// mult(g_0 ... g_{s-1}, g_t ... g_m).
ExtCount toda_dim(const Flag& flag, unsigned s, unsigned t);

// Sum over i <= j of (j - i + 1)^2 n_ij.
ExtCount total_dim(const NTable& table);
ExtCount total_dim(const Flag& flag);

// Every entry is a single factor of order one. Throws DomainError when an
// entry of higher order comes without a factor list.
bool is_crepant_resolution(const Flag& flag);

// Infinite <-> -1. Lower bounds have no GV counterpart.
GvTable to_gv(const NTable& table);
NTable from_gv(const GvTable& table);
// GV table of a crepant resolution. DomainError otherwise.
GvTable gv_table(const Flag& flag);

// Exchanges g_{i-1} and g_i, 1 <= i <= m.
Flag flop(const Flag& flag, unsigned i);

// Keeps the curves in `kept` (strictly increasing, within 1..m); the entries
// of the result are the products g_{J(k-1)} ... g_{J(k)-1}.
Flag contract(const Flag& flag, std::span<const unsigned> kept);

Flag reflect(const Flag& flag);

}  // namespace gvkit
