#include "gvkit/resolution.hpp"

#include <algorithm>
#include <string>

#include "gvkit/errors.hpp"
#include "gvkit/localmult.hpp"

namespace gvkit {

namespace {

void check_curve_range(const Flag& flag, unsigned i, unsigned j) {
  if (i < 1 || i > j || j > flag.m()) {
    throw DomainError("curve indices (" + std::to_string(i) + ", " + std::to_string(j) +
                      ") out of range for m = " + std::to_string(flag.m()));
  }
}

BiPoly product_range(const Flag& flag, unsigned lo, unsigned hi) {
  BiPoly r = BiPoly::constant(1);
  for (unsigned k = lo; k <= hi; ++k) r = r * flag.g(k);
  return r;
}

// (i, j) when beta is a contiguous block of ones, otherwise nullopt.
std::optional<std::pair<unsigned, unsigned>> block_of(std::span<const std::int64_t> beta) {
  unsigned first = 0, last = 0;
  for (unsigned k = 0; k < beta.size(); ++k) {
    if (beta[k] == 0) continue;
    if (beta[k] != 1) return std::nullopt;
    if (first == 0) first = k + 1;
    else if (last != k) return std::nullopt;
    last = k + 1;
  }
  if (first == 0) return std::nullopt;
  return std::pair{first, last};
}

}  // namespace

Flag::Flag(std::vector<BiPoly> gs) : Flag(std::move(gs), {}) {}

Flag::Flag(std::vector<BiPoly> gs, std::vector<std::optional<FactorList>> factors)
    : gs_(std::move(gs)), factors_(std::move(factors)) {
  if (gs_.size() < 2) throw DomainError("a flag needs at least two entries");
  if (factors_.empty()) factors_.resize(gs_.size());
  if (factors_.size() != gs_.size()) throw DomainError("factor lists do not match the flag entries");
  for (unsigned j = 0; j < gs_.size(); ++j) {
    if (gs_[j].is_zero()) throw DomainError("flag entry g_" + std::to_string(j) + " is zero");
    if (gs_[j].constant_term() != 0) {
      throw DomainError("flag entry g_" + std::to_string(j) + " does not vanish at the origin");
    }
    if (factors_[j]) {
      if (factors_[j]->empty()) throw DomainError("empty factor list for g_" + std::to_string(j));
      if (product(*factors_[j]) != gs_[j]) {
        throw DomainError("factors of g_" + std::to_string(j) + " do not multiply to g_" + std::to_string(j));
      }
    }
  }
}

std::optional<FactorList> Flag::factors(unsigned j) const {
  if (factors_.at(j)) return factors_[j];
  if (order(gs_[j]) == ExtCount::finite(1)) return FactorList{gs_[j]};
  return std::nullopt;
}

ExtCount n_ij(const Flag& flag, unsigned i, unsigned j) {
  check_curve_range(flag, i, j);
  return mult(flag.g(i - 1), flag.g(j));
}

NTable n_table(const Flag& flag) {
  NTable t(flag.m());
  for (unsigned i = 1; i <= flag.m(); ++i) {
    for (unsigned j = i; j <= flag.m(); ++j) t.at(i, j) = n_ij(flag, i, j);
  }
  return t;
}

ExtCount n_beta(const Flag& flag, std::span<const std::int64_t> beta) {
  if (beta.size() != flag.m()) throw DomainError("curve class length does not match m");
  auto blk = block_of(beta);
  return blk ? n_ij(flag, blk->first, blk->second) : ExtCount::finite(0);
}

ExtCount n_beta(const NTable& table, std::span<const std::int64_t> beta) {
  if (beta.size() != table.m()) throw DomainError("curve class length does not match m");
  auto blk = block_of(beta);
  return blk ? table.at(blk->first, blk->second) : ExtCount::finite(0);
}

ExtCount toda_dim(const Flag& flag, unsigned s, unsigned t) {
  check_curve_range(flag, s, t);
  return mult(product_range(flag, 0, s - 1), product_range(flag, t, flag.m()));
}

ExtCount total_dim(const NTable& table) {
  ExtCount sum = ExtCount::finite(0);
  for (unsigned i = 1; i <= table.m(); ++i) {
    for (unsigned j = i; j <= table.m(); ++j) {
      const std::uint64_t w = j - i + 1;
      sum += table.at(i, j).scaled(w * w);
    }
  }
  return sum;
}

ExtCount total_dim(const Flag& flag) { return total_dim(n_table(flag)); }

bool is_crepant_resolution(const Flag& flag) {
  bool smooth = true;
  for (unsigned j = 0; j <= flag.m(); ++j) {
    auto f = flag.factors(j);
    if (!f) throw DomainError("g_" + std::to_string(j) + " has order > 1 and no factor list");
    if (f->size() != 1 || order(f->front()) != ExtCount::finite(1)) smooth = false;
  }
  return smooth;
}

GvTable to_gv(const NTable& table) {
  GvTable gv(table.m());
  for (unsigned i = 1; i <= table.m(); ++i) {
    for (unsigned j = i; j <= table.m(); ++j) {
      const ExtCount v = table.at(i, j);
      if (v.is_at_least()) throw DomainError("a lower bound has no GV value");
      gv.at(i, j) = v.is_infinite() ? -1 : static_cast<std::int64_t>(v.value());
    }
  }
  return gv;
}

NTable from_gv(const GvTable& table) {
  NTable n(table.m());
  for (unsigned i = 1; i <= table.m(); ++i) {
    for (unsigned j = i; j <= table.m(); ++j) {
      const std::int64_t v = table.at(i, j);
      if (v < -1) throw DomainError("GV value below -1");
      n.at(i, j) = v == -1 ? ExtCount::infinite() : ExtCount::finite(static_cast<std::uint64_t>(v));
    }
  }
  return n;
}

GvTable gv_table(const Flag& flag) {
  if (!is_crepant_resolution(flag)) throw DomainError("GV invariants need a crepant resolution");
  return to_gv(n_table(flag));
}

Flag flop(const Flag& flag, unsigned i) {
  if (i < 1 || i > flag.m()) throw DomainError("flop index out of range");
  auto gs = flag.entries();
  auto fs = flag.supplied_factors();
  std::swap(gs[i - 1], gs[i]);
  std::swap(fs[i - 1], fs[i]);
  return Flag(std::move(gs), std::move(fs));
}

Flag contract(const Flag& flag, std::span<const unsigned> kept) {
  if (kept.empty()) throw DomainError("contract needs at least one kept curve");
  for (std::size_t k = 0; k < kept.size(); ++k) {
    if (kept[k] < 1 || kept[k] > flag.m()) throw DomainError("kept curve index out of range");
    if (k > 0 && kept[k] <= kept[k - 1]) throw DomainError("kept curves must be strictly increasing");
  }
  std::vector<unsigned> cut{0};
  cut.insert(cut.end(), kept.begin(), kept.end());
  cut.push_back(flag.m() + 1);
  std::vector<BiPoly> gs;
  std::vector<std::optional<FactorList>> fs;
  for (std::size_t k = 0; k + 1 < cut.size(); ++k) {
    gs.push_back(product_range(flag, cut[k], cut[k + 1] - 1));
    if (cut[k + 1] - cut[k] == 1) {
      fs.push_back(flag.supplied_factors()[cut[k]]);
      continue;
    }
    FactorList merged;
    bool known = true;
    for (unsigned j = cut[k]; j < cut[k + 1]; ++j) {
      auto f = flag.factors(j);
      if (!f) {
        known = false;
        break;
      }
      merged.insert(merged.end(), f->begin(), f->end());
    }
    fs.push_back(known ? std::optional<FactorList>(std::move(merged)) : std::nullopt);
  }
  return Flag(std::move(gs), std::move(fs));
}

Flag reflect(const Flag& flag) {
  auto gs = flag.entries();
  auto fs = flag.supplied_factors();
  std::reverse(gs.begin(), gs.end());
  std::reverse(fs.begin(), fs.end());
  return Flag(std::move(gs), std::move(fs));
}

}  // namespace gvkit
