#pragma once

#include <cstdint>
#include <random>

#include "gvkit/bipoly.hpp"
#include "gvkit/potential.hpp"

namespace gvkit {

// Seeded generator whose draws do not depend on the standard library's
// distribution implementations, so sample streams are reproducible anywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  // Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  // True with probability num / den.
  bool chance(unsigned num, unsigned den);
  // Number of successes before the first failure at rate 1/2, capped.
  unsigned geometric(unsigned cap);

 private:
  std::mt19937_64 eng_;
};

// Numerator in [-9, 9] \ {0}, denominator in {1, 2, 3}.
Rat random_coefficient(Rng& rng);

struct PotentialSampler {
  unsigned empty_row_num = 1;  // a row is empty with probability num/den
  unsigned empty_row_den = 4;
  unsigned max_first_exponent = 4;
  unsigned extra_span = 2;  // extras sit in (p, p + extra_span]
  unsigned max_extras = 2;
};

Potential random_potential(unsigned n, Rng& rng, const PotentialSampler& cfg = {});

// Random polynomial with integer coefficients in [-3, 3] and total degree in
// [1, max_degree]; vanishes at the origin unless `allow_unit`.
BiPoly random_bipoly(Rng& rng, unsigned max_degree, bool allow_unit = false);

}  // namespace gvkit
