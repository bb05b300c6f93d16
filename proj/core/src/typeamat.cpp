#include "gvkit/typeamat.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

#include "gvkit/errors.hpp"

namespace gvkit {

MPoly MPoly::constant(const Rat& c) {
  MPoly p;
  p.add_term({}, c);
  return p;
}

MPoly MPoly::symbol(unsigned index, unsigned degree) {
  MPoly p;
  p.add_term({{Symbol{index, degree}, 1}}, 1);
  return p;
}

void MPoly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

std::set<Symbol> MPoly::symbols() const {
  std::set<Symbol> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& [s, e] : m) out.insert(s);
  }
  return out;
}

unsigned MPoly::degree_in(const Symbol& s) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) {
    for (const auto& [t, e] : m) {
      if (t == s) d = std::max(d, e);
    }
  }
  return d;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

namespace {

MPoly::Monomial mono_mul(const MPoly::Monomial& a, const MPoly::Monomial& b) {
  MPoly::Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  }
  return r;
}

MPoly operator*(const Rat& s, const MPoly& a) {
  MPoly r;
  for (const auto& [m, c] : a.terms_) r.add_term(m, s * c);
  return r;
}

MPoly substitute(const MPoly& p, const std::map<Symbol, Rat>& values) {
  MPoly out;
  for (const auto& [m, c] : p.terms()) {
    Rat coeff = c;
    MPoly::Monomial rest;
    for (const auto& [s, e] : m) {
      auto it = values.find(s);
      if (it == values.end()) {
        rest.emplace_back(s, e);
        continue;
      }
      Rat v;
      mpz_pow_ui(v.get_num_mpz_t(), it->second.get_num_mpz_t(), e);
      mpz_pow_ui(v.get_den_mpz_t(), it->second.get_den_mpz_t(), e);
      coeff *= v;
    }
    MPoly term = MPoly::constant(coeff);
    for (const auto& [s, e] : rest) {
      for (unsigned k = 0; k < e; ++k) term = term * MPoly::symbol(s.index, s.degree);
    }
    out += term;
  }
  return out;
}

MPoly substitute_zero(const MPoly& p, const std::function<bool(const Symbol&)>& pred) {
  std::map<Symbol, Rat> zeros;
  for (const Symbol& s : p.symbols()) {
    if (pred(s)) zeros.emplace(s, 0);
  }
  return substitute(p, zeros);
}

Rat symbol_value(const Symbol& s, const Potential& pot) {
  if (s.index < 1 || s.index > pot.rows()) return 0;
  return pot.k(s.index, s.degree) * s.degree;
}

Rat eval_at(const MPoly& p, const Potential& pot) {
  std::map<Symbol, Rat> values;
  for (const Symbol& s : p.symbols()) values.emplace(s, symbol_value(s, pot));
  MPoly c = substitute(p, values);
  return c.is_zero() ? Rat(0) : c.terms().begin()->second;
}

std::string render(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (const auto& [s, e] : m) {
      if (!mono.empty()) mono += '*';
      mono += "e[" + std::to_string(s.index) + "," + std::to_string(s.degree) + "]";
      if (e > 1) mono += "^" + std::to_string(e);
    }
    const Rat mag = abs(c);
    std::string body = mono.empty() ? mag.get_str() : (mag == 1 ? mono : mag.get_str() + "*" + mono);
    if (first) {
      out = c < 0 ? "-" + body : body;
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

AMatrix::AMatrix(unsigned rows, unsigned cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {
  if (rows == 0 || cols == 0) throw DomainError("empty matrix");
}

AMatrix glue(const AMatrix& a, const AMatrix& b) {
  const unsigned p = a.rows(), q = a.cols(), s = b.rows(), t = b.cols();
  if (a.at(p - 1, q - 1) != b.at(0, 0)) throw DomainError("glue: corner entries differ");
  AMatrix g(p + s - 1, q + t - 1);
  for (unsigned r = 0; r < p; ++r) {
    for (unsigned c = 0; c < q; ++c) g.at(r, c) = a.at(r, c);
  }
  for (unsigned r = 0; r < s; ++r) {
    for (unsigned c = 0; c < t; ++c) g.at(p - 1 + r, q - 1 + c) = b.at(r, c);
  }
  return g;
}

bool admissible(unsigned i, unsigned j, unsigned d) {
  if (i < 1 || i > j || d < 2) return false;
  return (j - i) % 2 == 0 || d == 2;
}

namespace {

AMatrix block2(unsigned i) {
  AMatrix m(2, 2);
  m.at(0, 0) = MPoly::symbol(i, 2);
  m.at(0, 1) = MPoly::constant(1);
  m.at(1, 0) = MPoly::constant(1);
  m.at(1, 1) = MPoly::symbol(i + 1, 2);
  return m;
}

// The (d+1) x (d+1) band block A_{i,i+2}^d, d > 2.
AMatrix band_block(unsigned i, unsigned d) {
  AMatrix m(d + 1, d + 1);
  const MPoly one = MPoly::constant(1);
  m.at(0, 0) = MPoly::symbol(i, d);
  m.at(0, d - 1) = one;
  for (unsigned r = 1; r + 1 < d; ++r) {
    m.at(r, r - 1) = one;
    m.at(r, r) = one;
  }
  m.at(d - 1, d - 2) = one;
  m.at(d - 1, d) = one;
  m.at(d, d - 1) = one;
  m.at(d, d) = MPoly::symbol(i + 2, d);
  return m;
}

}  // namespace

AMatrix build_A(unsigned n, unsigned i, unsigned j, unsigned d) {
  if (!admissible(i, j, d) || j > 2 * n - 1) {
    throw DomainError("inadmissible triple (" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                      std::to_string(d) + ") for n = " + std::to_string(n));
  }
  if (i == j) {
    AMatrix m(1, 1);
    m.at(0, 0) = MPoly::symbol(i, d);
    return m;
  }
  if (d == 2) {
    AMatrix m = block2(i);
    for (unsigned t = i + 1; t < j; ++t) m = glue(m, block2(t));
    return m;
  }
  AMatrix m = band_block(i, d);
  for (unsigned t = i + 2; t < j; t += 2) m = glue(m, band_block(t, d));
  return m;
}

namespace {

class LaplaceDet {
 public:
  explicit LaplaceDet(const AMatrix& a) : a_(a) {}

  MPoly run() { return minor(0); }

 private:
  MPoly minor(std::uint64_t used) {
    const unsigned r = static_cast<unsigned>(std::popcount(used));
    if (r == a_.rows()) return MPoly::constant(1);
    if (auto it = memo_.find(used); it != memo_.end()) return it->second;
    MPoly acc;
    unsigned free_before = 0;
    for (unsigned c = 0; c < a_.cols(); ++c) {
      if (used & (std::uint64_t{1} << c)) continue;
      const MPoly& e = a_.at(r, c);
      if (!e.is_zero()) {
        MPoly sub = minor(used | (std::uint64_t{1} << c));
        if (!sub.is_zero()) {
          MPoly term = e * sub;
          if (free_before % 2 == 0) acc += term;
          else acc -= term;
        }
      }
      ++free_before;
    }
    memo_.emplace(used, acc);
    return acc;
  }

  const AMatrix& a_;
  std::unordered_map<std::uint64_t, MPoly> memo_;
};

}  // namespace

MPoly det_sym(const AMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("determinant of a non-square matrix");
  if (a.rows() > 64) throw DomainError("determinant size above 64 is not supported");
  return LaplaceDet(a).run();
}

RatMatrix eval_at(const AMatrix& a, const Potential& pot) {
  RatMatrix m(a.rows(), std::vector<Rat>(a.cols()));
  for (unsigned r = 0; r < a.rows(); ++r) {
    for (unsigned c = 0; c < a.cols(); ++c) m[r][c] = eval_at(a.at(r, c), pot);
  }
  return m;
}

Rat det(RatMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw DomainError("determinant of a non-square matrix");
  }
  Rat result = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      result = -result;
    }
    result *= m[k][k];
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m[r][k] == 0) continue;
      const Rat f = m[r][k] / m[k][k];
      for (std::size_t c = k; c < n; ++c) m[r][c] -= f * m[k][c];
    }
  }
  return result;
}

}  // namespace gvkit
