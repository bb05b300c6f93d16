#pragma once

#include <compare>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gvkit/potential.hpp"
#include "gvkit/rational.hpp"

namespace gvkit {

// The symbol eps_{index,degree}; it evaluates to degree * k_{index,degree}.
struct Symbol {
  unsigned index = 0;
  unsigned degree = 0;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

// Sparse polynomial over Q in the eps symbols.
class MPoly {
 public:
  // Sorted by symbol, positive exponents.
  using Monomial = std::vector<std::pair<Symbol, unsigned>>;
  using Terms = std::map<Monomial, Rat>;

  MPoly() = default;
  static MPoly constant(const Rat& c);
  static MPoly symbol(unsigned index, unsigned degree);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::set<Symbol> symbols() const;
  // Highest power of s occurring.
  unsigned degree_in(const Symbol& s) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const Rat& s, const MPoly& a);
  friend bool operator==(const MPoly&, const MPoly&) = default;

 private:
  void add_term(const Monomial& m, const Rat& c);
  Terms terms_;
};

// Replaces the symbols in `values`; the others stay symbolic.
MPoly substitute(const MPoly& p, const std::map<Symbol, Rat>& values);
// Sets every symbol satisfying `pred` to zero.
MPoly substitute_zero(const MPoly& p, const std::function<bool(const Symbol&)>& pred);
// eps_{i,d} -> d k_{i,d}. Symbols of missing rows evaluate to 0.
Rat eval_at(const MPoly& p, const Potential& pot);
Rat symbol_value(const Symbol& s, const Potential& pot);

// "e[1,2]*e[2,2] - e[1,2]".
std::string render(const MPoly& p);

class AMatrix {
 public:
  AMatrix(unsigned rows, unsigned cols);
  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }
  MPoly& at(unsigned r, unsigned c) { return e_.at(static_cast<std::size_t>(r) * cols_ + c); }
  const MPoly& at(unsigned r, unsigned c) const { return e_.at(static_cast<std::size_t>(r) * cols_ + c); }
  friend bool operator==(const AMatrix&, const AMatrix&) = default;

 private:
  unsigned rows_, cols_;
  std::vector<MPoly> e_;
};

using RatMatrix = std::vector<std::vector<Rat>>;

// Overlaps the bottom-right entry of a with the top-left entry of b.
// DomainError when those entries differ.
AMatrix glue(const AMatrix& a, const AMatrix& b);

// (i, j, d) with i <= j, d >= 2, and d = 2 whenever j - i is odd.
bool admissible(unsigned i, unsigned j, unsigned d);

// A_ij^d on Q_n; requires admissible (i, j, d) and j <= 2n - 1.
AMatrix build_A(unsigned n, unsigned i, unsigned j, unsigned d);

// Division-free determinant by Laplace expansion along rows, memoised on
// the set of used columns.
MPoly det_sym(const AMatrix& a);

RatMatrix eval_at(const AMatrix& a, const Potential& pot);
// Gaussian elimination over Q.
Rat det(RatMatrix m);

}  // namespace gvkit
