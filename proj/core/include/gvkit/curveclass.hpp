#pragma once

#include <cstdint>
#include <vector>

namespace gvkit {

using CurveClass = std::vector<std::int64_t>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;
// Flop indices r_1, ..., r_k; r_1 acts first.
using FlopWord = std::vector<unsigned>;

// The flop matrix F_i on Z^n. For n = 1 this is [-1].
IntMatrix f_matrix(unsigned n, unsigned i);

// |F beta|, componentwise.
CurveClass abs_apply(const IntMatrix& f, const CurveClass& beta);

// |F_{r_k}| o ... o |F_{r_1}| applied to beta.
CurveClass word_apply(const FlopWord& word, const CurveClass& beta);

// The 0/1 class supported on positions i..j.
CurveClass v_class(unsigned n, unsigned i, unsigned j);

// A word sending v_ij to v_11.
FlopWord reduction_word(unsigned n, unsigned i, unsigned j);

}  // namespace gvkit
