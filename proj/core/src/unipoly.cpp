#include "gvkit/unipoly.hpp"

#include <algorithm>

#include "gvkit/errors.hpp"

namespace gvkit {

namespace {
const Rat kZero(0);
}

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rat& c) { return UniPoly(std::vector<Rat>{c}); }

UniPoly UniPoly::monomial(const Rat& c, unsigned degree) {
  std::vector<Rat> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& UniPoly::coeff(unsigned k) const { return k < c_.size() ? c_[k] : kZero; }

const Rat& UniPoly::leading() const {
  if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
  return c_.back();
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rat& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return mul_truncated(a, b, static_cast<unsigned>(a.c_.size() + b.c_.size()));
}

UniPoly mul_truncated(const UniPoly& a, const UniPoly& b, unsigned cap) {
  auto ac = a.coeffs();
  auto bc = b.coeffs();
  if (ac.empty() || bc.empty() || cap == 0) return {};
  std::size_t n = std::min<std::size_t>(ac.size() + bc.size() - 1, cap);
  std::vector<Rat> out(n);
  Rat t;
  for (std::size_t i = 0; i < ac.size() && i < n; ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size() && i + j < n; ++j) {
      if (bc[j] == 0) continue;
      mpq_mul(t.get_mpq_t(), ac[i].get_mpq_t(), bc[j].get_mpq_t());
      out[i + j] += t;
    }
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::truncated(unsigned cap) const {
  if (c_.size() <= cap) return *this;
  return UniPoly(std::vector<Rat>(c_.begin(), c_.begin() + cap));
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly result = constant(1);
  UniPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

ExtCount order(const UniPoly& p) {
  auto c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) return ExtCount::finite(i);
  }
  return ExtCount::infinite();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly{}, a};
  std::vector<Rat> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<Rat> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  auto bc = b.coeffs();
  const Rat inv_lead = 1 / b.leading();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Rat q = rem[k + bc.size() - 1] * inv_lead;
    quot[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[k + j] -= q * bc[j];
  }
  rem.resize(bc.size() - 1);
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly u = a, v = b;
  while (!v.is_zero()) {
    UniPoly r = divmod(u, v).second;
    u = std::move(v);
    v = std::move(r);
  }
  if (u.is_zero()) return u;
  return u * Rat(1 / u.leading());
}

}  // namespace gvkit
