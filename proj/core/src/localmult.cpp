#include "gvkit/localmult.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "gvkit/errors.hpp"

namespace gvkit {

namespace {

std::uint64_t finite_order(const UniPoly& f) { return order(f).value(); }

// Fulton reduction for p, q without common factor through the origin.
std::uint64_t fulton(BiPoly p, BiPoly q) {
  std::uint64_t acc = 0;
  while (true) {
    if (p.constant_term() != 0 || q.constant_term() != 0) return acc;
    UniPoly f = p.at_y_zero();
    UniPoly g = q.at_y_zero();
    if (f.is_zero() && g.is_zero()) throw InvariantViolation("common factor y survived gcd removal");
    if (f.is_zero()) {
      // mult(y * p1, q) = ord_x q(x, 0) + mult(p1, q)
      acc += finite_order(g);
      p = p.divided_by_y();
      continue;
    }
    if (g.is_zero()) {
      acc += finite_order(f);
      q = q.divided_by_y();
      continue;
    }
    if (f.degree() > g.degree()) {
      std::swap(p, q);
      std::swap(f, g);
    }
    const Rat c = g.leading() / f.leading();
    q -= p.shifted(static_cast<unsigned>(g.degree() - f.degree()), 0) * c;
  }
}

unsigned column(unsigned a, unsigned b) {
  unsigned e = a + b;
  return e * (e + 1) / 2 + b;
}

using SparseRow = std::vector<std::pair<unsigned, Rat>>;

// row -= f * pivot, both sorted by column.
SparseRow axpy(const SparseRow& row, const Rat& f, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  Rat t;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      t = -f * pivot[j].second;
      out.emplace_back(pivot[j].first, t);
      ++j;
    } else {
      t = row[i].second - f * pivot[j].second;
      if (t != 0) out.emplace_back(row[i].first, t);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

ExtCount mult(const BiPoly& p, const BiPoly& q) {
  if (p.constant_term() != 0 || q.constant_term() != 0) return ExtCount::finite(0);
  if (p.is_zero() || q.is_zero()) return ExtCount::infinite();
  BiPoly r = poly_gcd(p, q);
  if (r.total_degree() == 0) return ExtCount::finite(fulton(p, q));
  if (r.constant_term() == 0) return ExtCount::infinite();
  auto pr = exact_divide(p, r);
  auto qr = exact_divide(q, r);
  if (!pr || !qr) throw InvariantViolation("gcd does not divide its arguments");
  return ExtCount::finite(fulton(*pr, *qr));
}

std::vector<std::uint64_t> jet_colengths(const BiPoly& p, const BiPoly& q, unsigned k_max) {
  const unsigned ncols = k_max * (k_max + 1) / 2;
  std::vector<std::optional<SparseRow>> pivots(ncols);
  for (const BiPoly* g : {&p, &q}) {
    if (g->is_zero()) continue;
    const unsigned ord = static_cast<unsigned>(order(*g).value());
    if (ord >= k_max) continue;
    for (unsigned s = 0; s + ord < k_max; ++s) {
      for (unsigned b = 0; b <= s; ++b) {
        const unsigned a = s - b;
        SparseRow row;
        for (const auto& [e, c] : g->terms()) {
          if (e.degree() + s < k_max) row.emplace_back(column(e.a + a, e.b + b), c);
        }
        std::sort(row.begin(), row.end(), [](const auto& u, const auto& v) { return u.first < v.first; });
        while (!row.empty()) {
          const unsigned lead = row.front().first;
          if (!pivots[lead]) {
            const Rat inv = 1 / row.front().second;
            for (auto& [col, c] : row) c *= inv;
            pivots[lead] = std::move(row);
            break;
          }
          const Rat f = row.front().second;
          row = axpy(row, f, *pivots[lead]);
        }
      }
    }
  }
  std::vector<std::uint64_t> d(k_max + 1, 0);
  std::uint64_t rank = 0;
  unsigned col = 0;
  for (unsigned k = 1; k <= k_max; ++k) {
    const unsigned end = k * (k + 1) / 2;
    for (; col < end; ++col) rank += pivots[col].has_value();
    d[k] = end - rank;
  }
  return d;
}

ExtCount mult_jet_oracle(const BiPoly& p, const BiPoly& q, unsigned k_max) {
  if (k_max < 2) throw DomainError("jet oracle needs k_max >= 2");
  unsigned k = std::min(k_max, 4u);
  while (true) {
    auto d = jet_colengths(p, q, k);
    for (unsigned j = 1; j < k; ++j) {
      if (d[j] == d[j + 1]) return ExtCount::finite(d[j]);
    }
    if (k == k_max) return ExtCount::at_least(d[k]);
    k = std::min(k_max, k + k / 2);
  }
}

ExtCount mult_series(const TruncSeries2& p, const TruncSeries2& q) {
  if (p.trunc() != q.trunc()) throw DomainError("mult_series: truncation degrees differ");
  if (p.trunc() < 2) throw DomainError("mult_series: truncation degree must be at least 2");
  return mult_jet_oracle(p.poly(), q.poly(), p.trunc());
}

}  // namespace gvkit
