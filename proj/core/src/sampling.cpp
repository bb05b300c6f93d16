#include "gvkit/sampling.hpp"

#include "gvkit/errors.hpp"

namespace gvkit {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw DomainError("empty sampling range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return lo + static_cast<std::int64_t>(v % span);
}

bool Rng::chance(unsigned num, unsigned den) { return uniform(0, den - 1) < num; }

unsigned Rng::geometric(unsigned cap) {
  unsigned k = 0;
  while (k < cap && chance(1, 2)) ++k;
  return k;
}

Rat random_coefficient(Rng& rng) {
  std::int64_t num = rng.uniform(1, 9);
  if (rng.chance(1, 2)) num = -num;
  Rat r(static_cast<long>(num), static_cast<unsigned long>(rng.uniform(1, 3)));
  r.canonicalize();
  return r;
}

Potential random_potential(unsigned n, Rng& rng, const PotentialSampler& cfg) {
  Potential::Coeffs c;
  for (unsigned i = 1; i <= 2 * n - 1; ++i) {
    if (rng.chance(cfg.empty_row_num, cfg.empty_row_den)) continue;
    const auto p = static_cast<unsigned>(rng.uniform(2, cfg.max_first_exponent));
    c[{i, p}] = random_coefficient(rng);
    const unsigned extras = rng.geometric(cfg.max_extras);
    for (unsigned e = 0; e < extras; ++e) {
      const auto j = static_cast<unsigned>(rng.uniform(p + 1, p + cfg.extra_span));
      c[{i, j}] = random_coefficient(rng);
    }
  }
  return Potential(n, std::move(c));
}

BiPoly random_bipoly(Rng& rng, unsigned max_degree, bool allow_unit) {
  while (true) {
    BiPoly p;
    const auto deg = static_cast<unsigned>(rng.uniform(1, max_degree));
    for (unsigned e = 1; e <= deg; ++e) {
      for (unsigned b = 0; b <= e; ++b) {
        if (!rng.chance(2, 5)) continue;
        const auto c = rng.uniform(-3, 3);
        if (c != 0) p += BiPoly::monomial(Rat(static_cast<long>(c)), e - b, b);
      }
    }
    if (allow_unit && rng.chance(1, 10)) p += BiPoly::constant(Rat(static_cast<long>(rng.uniform(1, 3))));
    if (!p.is_zero() && !(p.total_degree() == 0)) return p;
  }
}

}  // namespace gvkit
