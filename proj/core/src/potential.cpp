#include "gvkit/potential.hpp"

#include <string>

#include "gvkit/errors.hpp"
#include "gvkit/localmult.hpp"

namespace gvkit {

Potential::Potential(unsigned n, Coeffs coeffs) : n_(n), coeffs_(std::move(coeffs)) {
  if (n_ < 1) throw DomainError("potential needs n >= 1");
  std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0; });
  for (const auto& [key, c] : coeffs_) {
    const auto [i, j] = key;
    if (i < 1 || i > rows()) {
      throw DomainError("coefficient row " + std::to_string(i) + " outside 1.." + std::to_string(rows()));
    }
    if (j < 2) throw DomainError("coefficient exponent " + std::to_string(j) + " below 2");
  }
}

Rat Potential::k(unsigned i, unsigned j) const {
  auto it = coeffs_.find({i, j});
  return it == coeffs_.end() ? Rat(0) : it->second;
}

std::vector<std::pair<unsigned, Rat>> Potential::row(unsigned i) const {
  std::vector<std::pair<unsigned, Rat>> out;
  for (auto it = coeffs_.lower_bound({i, 0}); it != coeffs_.end() && it->first.first == i; ++it) {
    out.emplace_back(it->first.second, it->second);
  }
  return out;
}

Potential Potential::with(unsigned i, unsigned j, const Rat& value) const {
  Coeffs c = coeffs_;
  c[{i, j}] = value;
  return Potential(n_, std::move(c));
}

PTuple support_tuple(const Potential& pot) {
  PTuple p(pot.rows(), ExtCount::infinite());
  for (const auto& [key, c] : pot.coeffs()) {
    auto& slot = p[key.first - 1];
    if (slot.is_infinite() || key.second < slot.value()) slot = ExtCount::finite(key.second);
  }
  return p;
}

ExtCount d_ij_p(const PTuple& p, unsigned i, unsigned j) {
  if (i < 1 || i > j || j > p.size()) throw DomainError("d_ij index out of range");
  if ((j - i) % 2 == 1) return ExtCount::finite(2);
  ExtCount d = ExtCount::infinite();
  for (unsigned k = i; k <= j; k += 2) d = exact_min(d, p[k - 1]);
  return d;
}

const UniPoly& HSequence::at(unsigned t) const {
  if (t < base_ || t > upto()) throw DomainError("h index out of range");
  return entries_[t - base_];
}

HSequence h_sequence(const Potential& pot, unsigned base, unsigned upto, const HMode& mode) {
  if (base > pot.rows() || upto > 2 * pot.n() || upto <= base) {
    throw DomainError("h_sequence range invalid");
  }
  const bool capped = mode.kind == HMode::Kind::kCapped;
  if (capped && mode.cap < 2) throw DomainError("capped mode needs cap >= 2");
  auto mul = [&](const UniPoly& a, const UniPoly& b) {
    return capped ? mul_truncated(a, b, mode.cap) : a * b;
  };
  std::vector<UniPoly> h;
  h.push_back(UniPoly{});
  h.push_back(UniPoly::monomial(1, 1));
  for (unsigned t = base + 1; t < upto; ++t) {
    const UniPoly& cur = h[t - base];
    UniPoly next = -h[t - 1 - base];
    UniPoly power = UniPoly::constant(1);
    unsigned have = 0;
    for (const auto& [j, k] : pot.row(t)) {
      while (have < j - 1) {
        power = mul(power, cur);
        ++have;
      }
      next -= power * Rat(k * j);
    }
    if (!capped && next.degree() > static_cast<int>(mode.max_degree)) {
      throw DegreeLimitError("h-polynomial degree " + std::to_string(next.degree()) + " exceeds the limit " +
                             std::to_string(mode.max_degree));
    }
    h.push_back(std::move(next));
  }
  return HSequence(base, std::move(h), mode);
}

ExtCount n_st(const Potential& pot, unsigned s, unsigned t, const HMode& mode) {
  if (s < 1 || s > t || t > pot.n()) throw DomainError("n_st indices out of range");
  HSequence h = h_sequence(pot, 2 * s - 2, 2 * t, mode);
  const UniPoly& last = h.at(2 * t);
  if (!last.is_zero()) return order(last);
  if (mode.kind == HMode::Kind::kCapped) return ExtCount::at_least(mode.cap - 1);
  return ExtCount::infinite();
}

std::vector<TruncSeries2> RealizedSystem::flag() const {
  std::vector<TruncSeries2> out;
  for (std::size_t i = 0; i < g.size(); i += 2) out.push_back(g[i]);
  return out;
}

namespace {

TruncSeries2 row_term(const Potential& pot, unsigned t, const TruncSeries2& gt) {
  TruncSeries2 acc(BiPoly{}, gt.trunc());
  TruncSeries2 power(BiPoly::constant(1), gt.trunc());
  unsigned have = 0;
  for (const auto& [j, k] : pot.row(t)) {
    while (have < j - 1) {
      power = power * gt;
      ++have;
    }
    acc = acc + Rat(k * j) * power;
  }
  return acc;
}

}  // namespace

RealizedSystem realize_flag(const Potential& pot, unsigned trunc, unsigned seed) {
  if (trunc < 3) throw DomainError("realize_flag needs truncation degree >= 3");
  if (seed > pot.rows()) throw DomainError("realize_flag seed out of range");
  const unsigned top = 2 * pot.n();
  std::vector<TruncSeries2> g(top + 1, TruncSeries2(BiPoly{}, trunc));
  g[seed] = TruncSeries2(BiPoly::y(), trunc);
  g[seed + 1] = TruncSeries2(BiPoly::x(), trunc);
  for (unsigned t = seed + 1; t < top; ++t) g[t + 1] = -g[t - 1] - row_term(pot, t, g[t]);
  for (unsigned t = seed; t >= 1; --t) g[t - 1] = -g[t + 1] - row_term(pot, t, g[t]);
  return RealizedSystem{seed, std::move(g)};
}

ExtCount series_n_st(const RealizedSystem& sys, unsigned s, unsigned t) {
  const unsigned n = static_cast<unsigned>(sys.g.size() - 1) / 2;
  if (s < 1 || s > t || t > n) throw DomainError("series_n_st indices out of range");
  return mult_series(sys.g[2 * s - 2], sys.g[2 * t]);
}

}  // namespace gvkit
