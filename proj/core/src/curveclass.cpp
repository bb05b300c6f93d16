#include "gvkit/curveclass.hpp"

#include <cstdlib>
#include <string>

#include "gvkit/errors.hpp"

namespace gvkit {

IntMatrix f_matrix(unsigned n, unsigned i) {
  if (n < 1 || i < 1 || i > n) throw DomainError("flop matrix index out of range");
  IntMatrix f(n, std::vector<std::int64_t>(n, 0));
  for (unsigned k = 0; k < n; ++k) f[k][k] = 1;
  const unsigned r = i - 1;
  f[r][r] = -1;
  if (r > 0) f[r][r - 1] = 1;
  if (r + 1 < n) f[r][r + 1] = 1;
  return f;
}

CurveClass abs_apply(const IntMatrix& f, const CurveClass& beta) {
  if (f.size() != beta.size()) throw DomainError("matrix and class sizes differ");
  CurveClass out(beta.size(), 0);
  for (std::size_t r = 0; r < f.size(); ++r) {
    if (f[r].size() != beta.size()) throw DomainError("matrix is not square");
    std::int64_t acc = 0;
    for (std::size_t c = 0; c < beta.size(); ++c) acc += f[r][c] * beta[c];
    out[r] = std::llabs(acc);
  }
  return out;
}

CurveClass word_apply(const FlopWord& word, const CurveClass& beta) {
  const unsigned n = static_cast<unsigned>(beta.size());
  CurveClass cur = beta;
  for (unsigned r : word) cur = abs_apply(f_matrix(n, r), cur);
  return cur;
}

CurveClass v_class(unsigned n, unsigned i, unsigned j) {
  if (i < 1 || i > j || j > n) throw DomainError("v_class indices out of range");
  CurveClass v(n, 0);
  for (unsigned k = i; k <= j; ++k) v[k - 1] = 1;
  return v;
}

FlopWord reduction_word(unsigned n, unsigned i, unsigned j) {
  if (i < 1 || i > j || j > n) throw DomainError("reduction_word indices out of range");
  FlopWord w;
  for (unsigned k = i - 1; k >= 1; --k) w.push_back(k);
  for (unsigned k = j; k >= 2; --k) w.push_back(k);
  return w;
}

}  // namespace gvkit
