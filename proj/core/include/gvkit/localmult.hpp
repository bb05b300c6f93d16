#pragma once

#include <cstdint>
#include <vector>

#include "gvkit/bipoly.hpp"
#include "gvkit/ext_count.hpp"
#include "gvkit/series.hpp"

namespace gvkit {

// dim_C C[[x,y]]/(p,q). Exact: Finite or Infinite.
ExtCount mult(const BiPoly& p, const BiPoly& q);

// d_K = dim C[[x,y]]/((p,q) + m^K) for K = 0..k_max, computed by one exact
// echelon pass over the monomials of degree < k_max ordered by degree.
std::vector<std::uint64_t> jet_colengths(const BiPoly& p, const BiPoly& q, unsigned k_max);

// Jet-truncation colength. Returns Finite(d_K) at the first K < k_max with
// d_K = d_{K+1}, which forces m^K inside (p,q); otherwise AtLeast(d_{k_max}).
ExtCount mult_jet_oracle(const BiPoly& p, const BiPoly& q, unsigned k_max);

// Multiplicity of two series known modulo degree D, by the jet oracle at D.
ExtCount mult_series(const TruncSeries2& p, const TruncSeries2& q);

}  // namespace gvkit
