// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any
// failure. Every check is exact.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "gvkit/classify.hpp"
#include "gvkit/curveclass.hpp"
#include "gvkit/errors.hpp"
#include "gvkit/localmult.hpp"
#include "gvkit/parse.hpp"
#include "gvkit/potential.hpp"
#include "gvkit/resolution.hpp"
#include "gvkit/sampling.hpp"
#include "gvkit/typeamat.hpp"

using namespace gvkit;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  std::string first_failure;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) first_failure = what;
    ok = ok && cond;
  }
};

ExtCount F(std::uint64_t v) { return ExtCount::finite(v); }
const ExtCount kInf = ExtCount::infinite();

BiPoly P(const char* s) { return parse_poly(s); }

BiPoly random_product(Rng& rng, unsigned max_factors, std::vector<BiPoly>* factors = nullptr) {
  const auto k = static_cast<unsigned>(rng.uniform(1, max_factors));
  BiPoly prod = BiPoly::constant(1);
  for (unsigned i = 0; i < k; ++i) {
    BiPoly f = random_bipoly(rng, 3);
    if (factors) factors->push_back(f);
    prod = prod * f;
  }
  return prod;
}

// Entries are products of one or two random polynomials; occasionally an
// entry shares a factor with an earlier one so infinite values occur.
Flag random_flag(Rng& rng, unsigned m) {
  std::vector<BiPoly> gs, pool;
  for (unsigned j = 0; j <= m; ++j) {
    std::vector<BiPoly> fs;
    BiPoly g = random_product(rng, 2, &fs);
    if (!pool.empty() && rng.chance(1, 8)) g = g * pool[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(pool.size()) - 1))];
    pool.insert(pool.end(), fs.begin(), fs.end());
    gs.push_back(std::move(g));
  }
  return Flag(std::move(gs));
}

// ---------------------------------------------------------------- 1
void gv_examples(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  for (unsigned n = 1; n <= 6; ++n) {
    const Flag f({P("x"), P("y"), P("x") + P("y").pow(n)});
    const NTable t = n_table(f);
    const GvTable g = gv_table(f);
    const std::string tag = "n=" + std::to_string(n);
    o.require(t.at(1, 1) == F(1) && t.at(2, 2) == F(1) && t.at(1, 2) == F(n), tag + " N");
    o.require(g.at(1, 1) == 1 && g.at(2, 2) == 1 && g.at(1, 2) == static_cast<std::int64_t>(n), tag + " GV");
    o.require(total_dim(f) == F(2 + 4 * n), tag + " total");
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(secs < 1.0, "took longer than 1 s");
  o.detail << "n=1..6";
}

// ---------------------------------------------------------------- 2
void fulton_vs_oracle(Outcome& o) {
  Rng rng(2002);
  unsigned finite = 0, infinite = 0, skipped = 0, tries = 0;
  while (finite + infinite < 500 && ++tries < 20000) {
    std::vector<BiPoly> pf;
    const BiPoly p = random_product(rng, 3, &pf);
    BiPoly q = random_product(rng, rng.chance(1, 5) ? 2 : 3);
    if (rng.chance(1, 5)) q = q * pf[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(pf.size()) - 1))];
    const ExtCount m = mult(p, q);
    if (m.is_finite() && m.value() > 12) {
      ++skipped;
      continue;
    }
    const ExtCount oracle = mult_jet_oracle(p, q, 14);
    if (m.is_finite()) {
      ++finite;
      o.require(oracle == m, "mismatch on " + render(p) + " , " + render(q));
    } else {
      ++infinite;
      o.require(oracle.is_at_least(), "oracle certified an infinite pair " + render(p) + " , " + render(q));
    }
  }
  o.require(finite + infinite == 500, "could not draw 500 pairs");
  o.require(infinite > 0, "no infinite pairs drawn");
  o.detail << finite << " finite, " << infinite << " infinite, " << skipped << " above 12 skipped";
}

// ---------------------------------------------------------------- 3
void additivity(Outcome& o) {
  Rng rng(3003);
  unsigned inf = 0;
  for (int k = 0; k < 200; ++k) {
    std::vector<BiPoly> ps, qs;
    const BiPoly p = random_product(rng, 3, &ps);
    BiPoly q = random_product(rng, 3, &qs);
    if (rng.chance(1, 6)) {
      qs.push_back(ps.front());
      q = q * ps.front();
    }
    ExtCount sum = F(0);
    for (const auto& a : ps) {
      for (const auto& b : qs) sum += mult(a, b);
    }
    const ExtCount whole = mult(p, q);
    if (whole.is_infinite()) ++inf;
    o.require(whole == sum, "additivity failed on " + render(p) + " , " + render(q));
  }
  o.detail << "200 tuples, " << inf << " infinite";
}

// ---------------------------------------------------------------- 4
void toda_consistency(Outcome& o) {
  Rng rng(4004);
  for (int k = 0; k < 100; ++k) {
    const Flag f = random_flag(rng, static_cast<unsigned>(rng.uniform(1, 4)));
    const NTable n = n_table(f);
    const unsigned m = f.m();
    ExtCount all = F(0);
    for (unsigned s = 1; s <= m; ++s) {
      for (unsigned t = 1; t <= m; ++t) {
        const unsigned lo = std::min(s, t), hi = std::max(s, t);
        ExtCount sum = F(0);
        for (unsigned i = 1; i <= lo; ++i) {
          for (unsigned j = hi; j <= m; ++j) sum += n.at(i, j);
        }
        const ExtCount direct = toda_dim(f, lo, hi);
        o.require(direct == sum, "toda(" + std::to_string(s) + "," + std::to_string(t) + ") sample " + std::to_string(k));
        all += direct;
      }
    }
    o.require(total_dim(f) == all, "total sample " + std::to_string(k));
  }
  o.detail << "100 flags, m<=4";
}

// ---------------------------------------------------------------- 5
void flop_covariance(Outcome& o) {
  Rng rng(5005);
  unsigned checks = 0;
  for (int k = 0; k < 100; ++k) {
    const Flag f = random_flag(rng, static_cast<unsigned>(rng.uniform(1, 4)));
    const unsigned m = f.m();
    for (unsigned i = 1; i <= m; ++i) {
      const Flag g = flop(f, i);
      const IntMatrix fi = f_matrix(m, i);
      for (unsigned a = 1; a <= m; ++a) {
        for (unsigned b = a; b <= m; ++b) {
          const CurveClass beta = v_class(m, a, b);
          o.require(n_beta(f, beta) == n_beta(g, abs_apply(fi, beta)), "covariance sample " + std::to_string(k));
          ++checks;
        }
      }
    }
  }
  // Distinct values so the permutation is visible: N = (N11, N22, N12) = (1, 3, 2).
  const Flag f({P("x"), P("y"), P("y^2 - x^3")});
  const NTable t = n_table(f), a = n_table(flop(f, 1)), b = n_table(flop(f, 2));
  o.require(t.at(1, 1) == F(1) && t.at(2, 2) == F(3) && t.at(1, 2) == F(2), "table base");
  o.require(a.at(1, 1) == t.at(1, 1) && a.at(2, 2) == t.at(1, 2) && a.at(1, 2) == t.at(2, 2), "table flop 1");
  o.require(b.at(1, 1) == t.at(1, 2) && b.at(2, 2) == t.at(2, 2) && b.at(1, 2) == t.at(1, 1), "table flop 2");
  o.detail << checks << " class checks, m=2 table reproduced";
}

// ---------------------------------------------------------------- 6
void contraction_sums(Outcome& o) {
  Rng rng(6006);
  for (int k = 0; k < 100; ++k) {
    const Flag f = random_flag(rng, static_cast<unsigned>(rng.uniform(1, 4)));
    const unsigned m = f.m();
    std::vector<unsigned> kept;
    while (kept.empty()) {
      for (unsigned i = 1; i <= m; ++i) {
        if (rng.chance(1, 2)) kept.push_back(i);
      }
    }
    const NTable n = n_table(f), c = n_table(contract(f, kept));
    std::vector<unsigned> cut{0};
    cut.insert(cut.end(), kept.begin(), kept.end());
    cut.push_back(m + 1);
    for (unsigned a = 1; a <= c.m(); ++a) {
      for (unsigned b = a; b <= c.m(); ++b) {
        ExtCount sum = F(0);
        for (unsigned i = cut[a - 1] + 1; i <= cut[a]; ++i) {
          for (unsigned j = cut[b]; j < cut[b + 1]; ++j) sum += n.at(i, j);
        }
        o.require(c.at(a, b) == sum, "contraction sample " + std::to_string(k));
      }
    }
  }
  o.detail << "100 flags, m<=4";
}

// ---------------------------------------------------------------- 7
using DetKey = std::tuple<unsigned, unsigned, unsigned>;

const MPoly& cached_det(std::map<DetKey, MPoly>& cache, unsigned i, unsigned j, unsigned d) {
  auto it = cache.find({i, j, d});
  if (it == cache.end()) it = cache.emplace(DetKey{i, j, d}, det_sym(build_A(5, i, j, d))).first;
  return it->second;
}

MPoly E(unsigned i, unsigned d) { return MPoly::symbol(i, d); }
MPoly C(long c) { return MPoly::constant(Rat(c)); }
long sgn(unsigned k) { return k % 2 == 0 ? 1 : -1; }

// eps_{t,d} -> d * kappa_{t,d}, writing kappa_{t,d} with the same symbol.
MPoly scale_symbols(const MPoly& p) {
  MPoly out;
  for (const auto& [mono, c] : p.terms()) {
    Rat coef = c;
    MPoly term = MPoly::constant(1);
    for (const auto& [s, e] : mono) {
      for (unsigned k = 0; k < e; ++k) {
        coef *= s.degree;
        term = term * MPoly::symbol(s.index, s.degree);
      }
    }
    out += coef * term;
  }
  return out;
}

bool in_span_zero(const MPoly& p, unsigned from, unsigned to, unsigned degree) {
  return substitute_zero(p, [&](const Symbol& s) {
           return s.degree == degree && s.index >= from && s.index <= to && (s.index - from) % 2 == 0;
         }).is_zero();
}

// Every monomial is divisible by eps_a eps_b, a != b in {i, i+2, ..., j}.
bool in_E(const MPoly& p, unsigned i, unsigned j) {
  for (const auto& [mono, c] : p.terms()) {
    unsigned hits = 0;
    for (const auto& [s, e] : mono) {
      if (s.degree == 2 && s.index >= i && s.index <= j && (s.index - i) % 2 == 0) ++hits;
    }
    if (hits < 2) return false;
  }
  return true;
}

void determinant_identities(Outcome& o) {
  std::map<DetKey, MPoly> cache;
  auto D = [&](unsigned i, unsigned j, unsigned d) -> MPoly {
    if (j + 1 == i) return C(1);
    if (j + 2 == i) return C(0);
    return cached_det(cache, i, j, d);
  };
  unsigned identities = 0;
  for (unsigned j = 1; j <= 9; ++j) {
    for (unsigned i = 1; i <= j; ++i) {
      const unsigned gap = j - i;
      if (gap >= 2) {
        o.require(D(i, j, 2) == E(j, 2) * D(i, j - 1, 2) - D(i, j - 2, 2), "last-row recurrence, d = 2");
        o.require(D(i, j, 2) == E(i, 2) * D(i + 1, j, 2) - D(i + 2, j, 2), "first-row recurrence, d = 2");
        identities += 2;
      }
      if (gap % 2 == 1) {
        const MPoly rest = D(i, j, 2) - C(sgn((gap + 1) / 2));
        o.require(in_span_zero(rest, i, j - 1, 2) && in_span_zero(rest, i + 1, j, 2), "odd-gap leading constant");
        ++identities;
        continue;
      }
      MPoly lead2;
      for (unsigned t = i; t <= j; t += 2) lead2 += E(t, 2);
      o.require(in_E(D(i, j, 2) - Rat(sgn(gap / 2)) * lead2, i, j), "even-gap leading form, d = 2");
      ++identities;
      for (unsigned d = 3; d <= 5; ++d) {
        if (gap >= 2) {
          o.require(D(i, j, d) == -D(i, j - 2, d) + Rat(sgn(gap * (d - 1) / 2)) * E(j, d), "last-row recurrence, d > 2");
          o.require(D(i, j, d) == Rat(sgn(d - 1)) * D(i + 2, j, d) + Rat(sgn(gap / 2)) * E(i, d), "first-row recurrence, d > 2");
          identities += 2;
        }
        MPoly lead;
        for (unsigned t = i; t <= j; t += 2) lead += Rat(sgn((t - i) * d / 2)) * E(t, d);
        o.require(D(i, j, d) == Rat(sgn(gap / 2)) * lead, "even-gap closed form, d > 2");
        ++identities;
      }
    }
  }

  // Odd gaps: killing alternate degree-2 symbols leaves a sign.
  for (unsigned j = 2; j <= 9; ++j) {
    for (unsigned i = j - 1; i >= 1; i -= 2) {
      const MPoly c = C(sgn((j - i + 1) / 2));
      o.require(substitute_zero(D(i, j, 2), [&](const Symbol& s) { return s.degree == 2 && s.index >= i && s.index < j && (s.index - i) % 2 == 0; }) == c, "alternate symbols from i vanish");
      o.require(substitute_zero(D(i, j, 2), [&](const Symbol& s) { return s.degree == 2 && s.index > i && s.index <= j && (s.index - i) % 2 == 1; }) == c, "alternate symbols from i + 1 vanish");
      identities += 2;
      if (i < 3) break;
    }
  }

  // Substitutions dictated by p-tuples over {2, 3, 4, inf}.
  const ExtCount values[4] = {F(2), F(3), F(4), kInf};
  unsigned tuples = 0, subs = 0;
  for (unsigned n = 1; n <= 3; ++n) {
    const unsigned rows = 2 * n - 1;
    unsigned total = 1;
    for (unsigned r = 0; r < rows; ++r) total *= 4;
    for (unsigned code = 0; code < total; ++code) {
      PTuple p;
      for (unsigned r = 0, c = code; r < rows; ++r, c /= 4) p.push_back(values[c % 4]);
      ++tuples;
      auto vanish = [&](const Symbol& s) {
        const ExtCount pt = p[s.index - 1];
        return pt.is_infinite() || pt.value() > s.degree;
      };
      for (unsigned j = 1; j <= rows; ++j) {
        for (unsigned i = 1; i <= j; ++i) {
          const ExtCount dij = d_ij_p(p, i, j);
          for (unsigned d = 2; d <= 5; ++d) {
            if (!admissible(i, j, d)) continue;
            const MPoly sub = substitute_zero(D(i, j, d), vanish);
            ++subs;
            if (F(d) < dij) o.require(sub.is_zero(), "vanishing below d_ij");
            if (dij == F(d)) o.require(!sub.is_zero(), "nonvanishing at d_ij");
          }
          if ((j - i) % 2 == 1 && (d_ij_p(p, i, j - 1) > F(2) || d_ij_p(p, i + 1, j) > F(2))) {
            o.require(substitute_zero(D(i, j, 2), vanish) == C(sgn((j - i + 1) / 2)), "odd-gap constant under p-tuple");
          }
        }
      }
    }
  }

  const MPoly ex2 = scale_symbols(D(1, 3, 2));
  const MPoly want2 = Rat(8) * E(1, 2) * E(2, 2) * E(3, 2) - Rat(2) * E(1, 2) - Rat(2) * E(3, 2);
  o.require(ex2 == want2, "A_13^2 after evaluation: " + render(ex2));
  const MPoly ex3 = scale_symbols(D(1, 3, 3));
  o.require(ex3 == Rat(3) * E(3, 3) - Rat(3) * E(1, 3), "A_13^3 after evaluation: " + render(ex3));
  o.detail << identities << " identities, " << tuples << " p-tuples, " << subs << " substitutions";
}

// ---------------------------------------------------------------- 8
void h_leading_terms(Outcome& o) {
  Rng rng(8008);
  std::map<DetKey, MPoly> cache;
  unsigned checked = 0, degenerate = 0, vanished = 0;
  for (int k = 0; k < 300; ++k) {
    const auto n = static_cast<unsigned>(rng.uniform(1, 3));
    Potential pot = random_potential(n, rng);
    // Every fifth sample copies row 1 onto row 3 up to sign, a det = 0 locus.
    if (n >= 2 && k % 5 == 0) {
      for (const auto& [j, c] : pot.row(1)) pot = pot.with(3, j, j % 2 == 1 ? c : -c);
    }
    const PTuple p = support_tuple(pot);
    for (unsigned s = 1; s <= 2 * n - 1; ++s) {
      const HSequence h = h_sequence(pot, s - 1, 2 * n);
      for (unsigned t = s; t <= 2 * n - 1; ++t) {
        const UniPoly& poly = h.at(t + 1);
        const ExtCount d = d_ij_p(p, s, t);
        ++checked;
        const std::string tag = "sample " + std::to_string(k) + " (s,t)=(" + std::to_string(s) + "," + std::to_string(t) + ")";
        if (d.is_infinite()) {
          o.require(poly.is_zero(), tag + " not zero for d = inf");
          ++vanished;
          continue;
        }
        const auto dv = static_cast<unsigned>(d.value());
        for (unsigned e = 0; e + 1 < dv; ++e) o.require(poly.coeff(e) == 0, tag + " low coefficient");
        const Rat det = eval_at(cached_det(cache, s, t, dv), pot) * sgn(t - s + 1);
        o.require(poly.coeff(dv - 1) == det, tag + " leading coefficient");
        o.require((order(poly) == F(dv - 1)) == (det != 0), tag + " order");
        if (det == 0) ++degenerate;
      }
    }
  }
  o.detail << checked << " pairs, " << degenerate << " with det = 0, " << vanished << " with d = inf";
}

// ---------------------------------------------------------------- 9, 10
struct PotentialPool {
  std::vector<Potential> pots;
  std::vector<NTable> tables;
};

NTable exact_table(const Potential& pot) {
  NTable n(pot.n());
  for (unsigned s = 1; s <= pot.n(); ++s) {
    for (unsigned t = s; t <= pot.n(); ++t) n.at(s, t) = n_st(pot, s, t);
  }
  return n;
}

// 100 potentials with n <= 3 and every finite invariant at most 12. One in
// four is a draw steered onto det A^d = 0.
PotentialPool make_pool() {
  Rng rng(9009);
  PotentialPool pool;
  unsigned k = 0;
  while (pool.pots.size() < 100) {
    const auto n = static_cast<unsigned>(rng.uniform(1, 3));
    Potential pot(n);
    if (k++ % 4 == 3) {
      QSpec q{n, 1, n, {}};
      for (unsigned i = 1; i <= n; ++i) q.q.push_back(F(static_cast<std::uint64_t>(rng.uniform(1, 3))));
      pot = sample_ma_p(q, rng, true);
    } else {
      pot = random_potential(n, rng);
    }
    NTable t = exact_table(pot);
    bool small = true;
    for (unsigned s = 1; s <= n; ++s) {
      for (unsigned u = s; u <= n; ++u) small = small && (!t.at(s, u).is_finite() || t.at(s, u).value() <= 12);
    }
    if (!small) continue;
    pool.pots.push_back(std::move(pot));
    pool.tables.push_back(std::move(t));
  }
  return pool;
}

void potential_geometry(Outcome& o, const PotentialPool& pool) {
  unsigned pairs = 0, infinite = 0;
  for (std::size_t k = 0; k < pool.pots.size(); ++k) {
    const Potential& pot = pool.pots[k];
    const unsigned n = pot.n();
    const RealizedSystem a = realize_flag(pot, 32, 0);
    const RealizedSystem b = realize_flag(pot, 32, std::min(2u, 2 * n - 1));
    for (unsigned s = 1; s <= n; ++s) {
      for (unsigned t = s; t <= n; ++t) {
        const ExtCount exact = pool.tables[k].at(s, t), sa = series_n_st(a, s, t), sb = series_n_st(b, s, t);
        ++pairs;
        const std::string tag = "sample " + std::to_string(k) + " (" + std::to_string(s) + "," + std::to_string(t) + ")";
        if (exact.is_finite()) {
          o.require(sa == exact, tag + " series " + to_string(sa) + " vs " + to_string(exact));
        } else {
          ++infinite;
          o.require(sa.is_at_least(), tag + " series certified an infinite value");
        }
        o.require(sa == sb, tag + " reseeded table differs");
      }
    }
  }
  o.detail << pool.pots.size() << " potentials, " << pairs << " pairs, " << infinite << " infinite, D=32, reseed s=2";
}

void filtration_prediction(Outcome& o, const PotentialPool& pool) {
  unsigned generic = 0, degenerate = 0, unbounded = 0, diag = 0;
  for (std::size_t k = 0; k < pool.pots.size(); ++k) {
    const Potential& pot = pool.pots[k];
    for (unsigned s = 1; s <= pot.n(); ++s) {
      o.require(strata_ss(pot, s) == pool.tables[k].at(s, s), "strata_ss sample " + std::to_string(k));
      ++diag;
      for (unsigned t = s; t <= pot.n(); ++t) {
        const Prediction p = predict_nst(pot, s, t);
        const ExtCount c = pool.tables[k].at(s, t);
        const std::string tag = "sample " + std::to_string(k);
        switch (p.stratum) {
          case Prediction::Stratum::kGeneric:
            ++generic;
            o.require(c == F(p.d.value() - 1), tag + " generic");
            break;
          case Prediction::Stratum::kDegenerate:
            ++degenerate;
            o.require(c >= p.d, tag + " degenerate");
            break;
          case Prediction::Stratum::kUnbounded:
            ++unbounded;
            o.require(c.is_infinite(), tag + " unbounded");
            break;
        }
      }
    }
  }
  o.require(degenerate > 0, "no det = 0 samples");
  o.detail << generic << " generic, " << degenerate << " det = 0, " << unbounded << " unbounded, " << diag << " diagonal";
}

// ---------------------------------------------------------------- 11
void obstruction(Outcome& o) {
  const ExtCount values[4] = {F(1), F(2), F(3), kInf};
  unsigned forced = 0, unforced = 0;
  for (unsigned a = 0; a < 4; ++a) {
    for (unsigned b = 0; b < 4; ++b) {
      const QSpec q{2, 1, 2, {values[a], values[b]}};
      const std::string tag = "q=(" + to_string(values[a]) + "," + to_string(values[b]) + ")";
      const ObstructionReport r = check_obstruction(q, 50, 1100 + 4 * a + b);
      o.require(r.samples == 50, tag + " sample count");
      o.require(r.lower_bound_held && r.min_observed >= q.q_min(), tag + " (a)");
      try {
        const Potential w = witness_min(q, 11);
        o.require(n_st(w, 1, 2) == q.q_min(), tag + " (b) value");
      } catch (const InvariantViolation&) {
        o.require(false, tag + " (b)");
      }
      if (!q.q_min().is_finite()) {
        o.require(r.max_observed == kInf, tag + " infinite minimum");
        continue;
      }
      if (q.q_min_count() == 1) {
        ++forced;
        o.require(r.min_observed == q.q_min() && r.max_observed == q.q_min(), tag + " (c)");
      } else {
        ++unforced;
        o.require(r.witness_above.has_value() && n_st(*r.witness_above, 1, 2) > q.q_min(), tag + " (d)");
      }
    }
  }
  o.detail << "16 tuples, " << forced << " unique minima, " << unforced << " repeated";
}

// ---------------------------------------------------------------- 12
void ca2(Outcome& o) {
  Rng rng(1212);
  for (int k = 0; k < 500; ++k) {
    const Potential pot = random_potential(2, rng);
    const CA2Verdict v = classify_cA2(n_st(pot, 1, 1), n_st(pot, 2, 2), n_st(pot, 1, 2));
    o.require(v.valid, "random potential " + std::to_string(k) + ": " + v.reason);
  }
  const ExtCount values[5] = {F(1), F(2), F(3), F(4), kInf};
  unsigned form1 = 0, form2 = 0;
  for (ExtCount p : values) {
    for (ExtCount q : values) {
      if (p == q) continue;
      const Potential w = witness_min(QSpec{2, 1, 2, {p, q}}, 12);
      const ExtCount t[3] = {n_st(w, 1, 1), n_st(w, 2, 2), n_st(w, 1, 2)};
      o.require(t[0] == p && t[1] == q && t[2] == exact_min(p, q), "form1 (" + to_string(p) + "," + to_string(q) + ")");
      o.require(classify_cA2(t[0], t[1], t[2]).form == CA2Verdict::Form::kForm1, "form1 classification");
      ++form1;
    }
  }
  for (std::uint64_t p = 1; p <= 4; ++p) {
    for (std::uint64_t r = p; r <= 4; ++r) {
      const Potential w = witness_form2(p, F(r));
      const ExtCount t[3] = {n_st(w, 1, 1), n_st(w, 2, 2), n_st(w, 1, 2)};
      o.require(t[0] == F(p) && t[1] == F(p) && t[2] == F(r), "form2 (" + std::to_string(p) + "," + std::to_string(r) + ")");
      o.require(classify_cA2(t[0], t[1], t[2]).form == CA2Verdict::Form::kForm2, "form2 classification");
      ++form2;
    }
  }
  o.require(!classify_cA2(F(2), F(3), F(3)).valid, "(2,3,3) accepted");
  o.detail << "500 random valid, " << form1 << " form-1 and " << form2 << " form-2 witnesses";
}

// ---------------------------------------------------------------- 13
void chain_example(Outcome& o) {
  Rng rng(1313);
  for (int k = 0; k < 50; ++k) {
    std::uint64_t q[3];
    do {
      for (auto& v : q) v = static_cast<std::uint64_t>(rng.uniform(1, 4));
    } while (!(q[0] < q[1] && q[1] < q[2]));
    const Potential pot = sample_ma_p(QSpec{3, 1, 3, {F(q[0]), F(q[1]), F(q[2])}}, rng, k % 3 == 0);
    const NTable t = exact_table(pot);
    const std::string tag = "sample " + std::to_string(k);
    o.require(t.at(1, 1) == F(q[0]) && t.at(2, 2) == F(q[1]) && t.at(3, 3) == F(q[2]), tag + " diagonal");
    o.require(t.at(1, 2) == t.at(1, 1), tag + " N12");
    o.require(t.at(2, 3) == t.at(2, 2), tag + " N23");
    o.require(t.at(1, 3) == t.at(1, 1), tag + " N13");
  }
  o.detail << "50 potentials on Q_3";
}

}  // namespace

int main() {
  unsigned failed = 0;
  auto run = [&](int id, const char* name, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.ok) ++failed;
    std::printf("%s [%2d] %s: %s (%.2fs)%s%s\n", o.ok ? "PASS" : "FAIL", id, name, o.detail.str().c_str(), secs,
                o.ok ? "" : " first failure: ", o.first_failure.c_str());
    std::fflush(stdout);
  };
  run(1, "worked GV example", gv_examples);
  run(2, "Fulton vs jet oracle", fulton_vs_oracle);
  run(3, "additivity", additivity);
  run(4, "Toda dimension formula", toda_consistency);
  run(5, "flop covariance", flop_covariance);
  run(6, "contraction sums", contraction_sums);
  run(7, "determinant identities", determinant_identities);
  run(8, "h-order and leading coefficient law", h_leading_terms);
  const PotentialPool pool = make_pool();
  run(9, "potential vs realised flag", [&](Outcome& o) { potential_geometry(o, pool); });
  run(10, "filtration prediction", [&](Outcome& o) { filtration_prediction(o, pool); });
  run(11, "obstruction theorem", obstruction);
  run(12, "cA2 classification", ca2);
  run(13, "chain example on Q_3", chain_example);
  std::printf("%u of 13 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
