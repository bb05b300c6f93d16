#include "gvkit/bipoly.hpp"

#include <algorithm>
#include <vector>

#include "gvkit/errors.hpp"

namespace gvkit {

bool graded_lex_less(const Exponent& u, const Exponent& v) {
  if (u.degree() != v.degree()) return u.degree() < v.degree();
  return u.a < v.a;
}

BiPoly BiPoly::constant(const Rat& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const Rat& c, unsigned a, unsigned b) {
  BiPoly p;
  p.add_term({a, b}, c);
  return p;
}

BiPoly BiPoly::from_terms(Terms terms) {
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
  BiPoly p;
  p.terms_ = std::move(terms);
  return p;
}

BiPoly BiPoly::from_x(const UniPoly& p) {
  Terms t;
  auto c = p.coeffs();
  for (unsigned i = 0; i < c.size(); ++i) t.emplace(Exponent{i, 0}, c[i]);
  return from_terms(std::move(t));
}

void BiPoly::add_term(const Exponent& e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rat BiPoly::coeff(unsigned a, unsigned b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? Rat(0) : it->second;
}

unsigned BiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.degree());
  return d;
}

unsigned BiPoly::degree_x() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.a);
  return d;
}

unsigned BiPoly::degree_y() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.b);
  return d;
}

Exponent BiPoly::leading_exponent() const {
  if (terms_.empty()) throw DomainError("leading term of zero polynomial");
  Exponent best = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    if (graded_lex_less(best, e)) best = e;
  }
  return best;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const Rat& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  unsigned cap = a.total_degree() + b.total_degree() + 1;
  return mul_truncated(a, b, cap);
}

BiPoly mul_truncated(const BiPoly& a, const BiPoly& b, unsigned trunc) {
  BiPoly::Terms out;
  Rat t;
  for (const auto& [ea, ca] : a.terms()) {
    if (ea.degree() >= trunc) continue;
    for (const auto& [eb, cb] : b.terms()) {
      if (ea.degree() + eb.degree() >= trunc) continue;
      mpq_mul(t.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      out[Exponent{ea.a + eb.a, ea.b + eb.b}] += t;
    }
  }
  return BiPoly::from_terms(std::move(out));
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly result = constant(1);
  BiPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

BiPoly BiPoly::shifted(unsigned a, unsigned b) const {
  BiPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), Exponent{e.a + a, e.b + b}, c);
  return r;
}

BiPoly BiPoly::truncated(unsigned trunc) const {
  BiPoly r;
  for (const auto& [e, c] : terms_) {
    if (e.degree() < trunc) r.terms_.emplace_hint(r.terms_.end(), e, c);
  }
  return r;
}

UniPoly BiPoly::at_y_zero() const {
  std::vector<Rat> c;
  for (const auto& [e, v] : terms_) {
    if (e.b != 0) continue;
    if (c.size() <= e.a) c.resize(e.a + 1);
    c[e.a] = v;
  }
  return UniPoly(std::move(c));
}

BiPoly BiPoly::divided_by_y() const {
  BiPoly r;
  for (const auto& [e, c] : terms_) {
    if (e.b == 0) throw DomainError("polynomial is not divisible by y");
    r.terms_.emplace(Exponent{e.a, e.b - 1}, c);
  }
  return r;
}

BiPoly product(std::span<const BiPoly> factors) {
  BiPoly r = BiPoly::constant(1);
  for (const auto& f : factors) r = r * f;
  return r;
}

ExtCount order(const BiPoly& p) {
  if (p.is_zero()) return ExtCount::infinite();
  unsigned best = ~0u;
  for (const auto& [e, c] : p.terms()) best = std::min(best, e.degree());
  return ExtCount::finite(best);
}

BiPoly linear_part(const BiPoly& p) {
  return BiPoly::monomial(p.coeff(1, 0), 1, 0) + BiPoly::monomial(p.coeff(0, 1), 0, 1);
}

BiPoly normalize_primitive(const BiPoly& p) {
  if (p.is_zero()) return p;
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& [e, c] : p.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (p.coeff(p.leading_exponent().a, p.leading_exponent().b) < 0) scale = -scale;
  return p * scale;
}

std::optional<BiPoly> exact_divide(const BiPoly& p, const BiPoly& d) {
  if (d.is_zero()) throw DomainError("division by the zero polynomial");
  const Exponent ld = d.leading_exponent();
  const Rat inv = 1 / d.coeff(ld.a, ld.b);
  BiPoly rem = p, quot;
  while (!rem.is_zero()) {
    Exponent lr = rem.leading_exponent();
    if (lr.a < ld.a || lr.b < ld.b) return std::nullopt;
    BiPoly t = BiPoly::monomial(rem.coeff(lr.a, lr.b) * inv, lr.a - ld.a, lr.b - ld.b);
    rem -= t * d;
    quot += t;
  }
  return quot;
}

// ---- gcd via the subresultant remainder sequence in (Q[x])[y] ----

namespace {

using YPoly = std::vector<UniPoly>;  // index is the power of y

void trim(YPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

YPoly to_ypoly(const BiPoly& p) {
  YPoly out(p.is_zero() ? 0 : p.degree_y() + 1);
  std::vector<std::vector<Rat>> dense(out.size());
  for (const auto& [e, c] : p.terms()) {
    auto& row = dense[e.b];
    if (row.size() <= e.a) row.resize(e.a + 1);
    row[e.a] = c;
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = UniPoly(std::move(dense[i]));
  return out;
}

BiPoly from_ypoly(const YPoly& p) {
  BiPoly::Terms t;
  for (unsigned b = 0; b < p.size(); ++b) {
    auto c = p[b].coeffs();
    for (unsigned a = 0; a < c.size(); ++a) t.emplace(Exponent{a, b}, c[a]);
  }
  return BiPoly::from_terms(std::move(t));
}

int ydeg(const YPoly& p) { return static_cast<int>(p.size()) - 1; }

UniPoly content(const YPoly& p) {
  UniPoly g;
  for (const auto& c : p) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InvariantViolation("inexact division in subresultant sequence");
  return q;
}

YPoly div_all(YPoly p, const UniPoly& d) {
  for (auto& c : p) c = exact_div(c, d);
  return p;
}

// lc(B)^(deg A - deg B + 1) * A mod B.
YPoly prem(YPoly a, const YPoly& b) {
  const int db = ydeg(b);
  int e = ydeg(a) - db + 1;
  const UniPoly& lb = b.back();
  while (ydeg(a) >= db && !a.empty()) {
    UniPoly la = a.back();
    int shift = ydeg(a) - db;
    for (auto& c : a) c = c * lb;
    for (int k = 0; k <= db; ++k) a[k + shift] -= la * b[k];
    trim(a);
    --e;
  }
  if (e > 0) {
    UniPoly f = lb.pow(static_cast<unsigned>(e));
    for (auto& c : a) c = c * f;
  }
  return a;
}

}  // namespace

BiPoly poly_gcd(const BiPoly& p, const BiPoly& q) {
  if (p.is_zero()) return normalize_primitive(q);
  if (q.is_zero()) return normalize_primitive(p);
  YPoly a = to_ypoly(p), b = to_ypoly(q);
  UniPoly ca = content(a), cb = content(b);
  UniPoly cont = gcd(ca, cb);
  a = div_all(std::move(a), ca);
  b = div_all(std::move(b), cb);
  if (ydeg(a) < ydeg(b)) std::swap(a, b);

  UniPoly g = UniPoly::constant(1), h = UniPoly::constant(1);
  while (ydeg(b) > 0) {
    const unsigned delta = static_cast<unsigned>(ydeg(a) - ydeg(b));
    YPoly r = prem(a, b);
    if (r.empty()) break;
    if (ydeg(r) == 0) {
      b = YPoly{UniPoly::constant(1)};
      break;
    }
    a = std::move(b);
    b = div_all(std::move(r), g * h.pow(delta));
    g = a.back();
    if (delta == 0) continue;
    h = exact_div(g.pow(delta), h.pow(delta - 1));
  }
  YPoly pp = (ydeg(b) > 0) ? div_all(b, content(b)) : YPoly{UniPoly::constant(1)};
  return normalize_primitive(from_ypoly(pp) * BiPoly::from_x(cont));
}

}  // namespace gvkit
