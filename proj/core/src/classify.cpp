#include "gvkit/classify.hpp"

#include <algorithm>

#include "gvkit/errors.hpp"

namespace gvkit {

Prediction predict_nst(const Potential& pot, unsigned s, unsigned t) {
  if (s < 1 || s > t || t > pot.n()) throw DomainError("predict_nst indices out of range");
  const PTuple p = support_tuple(pot);
  const unsigned i = 2 * s - 1, j = 2 * t - 1;
  const ExtCount d = d_ij_p(p, i, j);
  if (d.is_infinite()) return {Prediction::Stratum::kUnbounded, ExtCount::infinite(), d, Rat(0)};
  const auto dv = static_cast<unsigned>(d.value());
  Rat value = det(eval_at(build_A(pot.n(), i, j, dv), pot));
  if (value != 0) return {Prediction::Stratum::kGeneric, ExtCount::finite(dv - 1), d, value};
  return {Prediction::Stratum::kDegenerate, ExtCount::at_least(dv), d, value};
}

ExtCount strata_ss(const Potential& pot, unsigned s) {
  if (s < 1 || s > pot.n()) throw DomainError("strata_ss index out of range");
  auto row = pot.row(2 * s - 1);
  if (row.empty()) return ExtCount::infinite();
  return ExtCount::finite(row.front().first - 1);
}

void QSpec::validate() const {
  if (n < 1 || s < 1 || s > t || t > n) throw DomainError("qspec needs 1 <= s <= t <= n");
  if (q.size() != t - s + 1) throw DomainError("qspec needs one threshold per curve s..t");
  for (ExtCount v : q) {
    if (v.is_at_least()) throw DomainError("qspec thresholds must be exact");
    if (v.is_finite() && v.value() < 1) throw DomainError("qspec thresholds must be at least 1");
  }
}

ExtCount QSpec::q_min() const {
  ExtCount m = ExtCount::infinite();
  for (ExtCount v : q) m = exact_min(m, v);
  return m;
}

unsigned QSpec::q_min_count() const {
  const ExtCount m = q_min();
  return static_cast<unsigned>(std::count(q.begin(), q.end(), m));
}

PTuple QSpec::ptuple() const {
  PTuple p(2 * n - 1, ExtCount::finite(2));
  for (unsigned i = s; i <= t; ++i) {
    const ExtCount v = q[i - s];
    p[2 * i - 2] = v.is_infinite() ? v : ExtCount::finite(v.value() + 1);
  }
  return p;
}

namespace {

bool is_forced_row(const QSpec& q, unsigned row) { return row % 2 == 1 && row >= 2 * q.s - 1 && row <= 2 * q.t - 1; }

// Tries to zero det A^d by solving for one symbol it is linear in. Free rows
// are tried first; a forced row may only move its leading coefficient.
std::optional<Potential> steer_to_degenerate(const QSpec& q, const Potential& pot, const PTuple& p, unsigned d) {
  const MPoly full = det_sym(build_A(q.n, 2 * q.s - 1, 2 * q.t - 1, d));
  std::vector<Symbol> candidates;
  for (const Symbol& sym : full.symbols()) {
    if (!is_forced_row(q, sym.index)) candidates.push_back(sym);
  }
  for (const Symbol& sym : full.symbols()) {
    if (is_forced_row(q, sym.index) && p[sym.index - 1] == ExtCount::finite(sym.degree)) candidates.push_back(sym);
  }
  for (const Symbol& sym : candidates) {
    std::map<Symbol, Rat> values;
    for (const Symbol& other : full.symbols()) {
      if (other != sym) values.emplace(other, symbol_value(other, pot));
    }
    const MPoly rest = substitute(full, values);
    if (rest.degree_in(sym) != 1) continue;
    Rat alpha = 0, beta = 0;
    for (const auto& [mono, c] : rest.terms()) {
      if (mono.empty()) beta = c;
      else alpha = c;
    }
    if (alpha == 0) continue;
    const Rat k = -beta / alpha / sym.degree;
    if (k == 0 && is_forced_row(q, sym.index)) continue;
    return pot.with(sym.index, sym.degree, k);
  }
  return std::nullopt;
}

std::string key_of(ExtCount v) { return to_string(v); }

}  // namespace

Potential sample_ma_p(const QSpec& q, Rng& rng, bool degenerate) {
  q.validate();
  const PTuple p = q.ptuple();
  Potential::Coeffs c;
  for (unsigned row = 1; row <= 2 * q.n - 1; ++row) {
    unsigned start;
    if (is_forced_row(q, row)) {
      if (p[row - 1].is_infinite()) continue;
      start = static_cast<unsigned>(p[row - 1].value());
    } else {
      if (rng.chance(1, 3)) continue;
      start = static_cast<unsigned>(rng.uniform(2, 4));
    }
    c[{row, start}] = random_coefficient(rng);
    const unsigned extras = rng.geometric(2);
    for (unsigned e = 0; e < extras; ++e) {
      c[{row, static_cast<unsigned>(rng.uniform(start + 1, start + 3))}] = random_coefficient(rng);
    }
  }
  Potential pot(q.n, std::move(c));
  const ExtCount d = d_ij_p(p, 2 * q.s - 1, 2 * q.t - 1);
  if (degenerate && d.is_finite()) {
    if (auto steered = steer_to_degenerate(q, pot, p, static_cast<unsigned>(d.value()))) return *steered;
  }
  return pot;
}

bool ObstructionReport::consistent() const {
  if (!lower_bound_held) return false;
  if (verdict == Verdict::kForced) return max_observed == spec.q_min();
  return true;
}

ObstructionReport check_obstruction(const QSpec& q, unsigned samples, std::uint64_t seed) {
  q.validate();
  ObstructionReport rep;
  rep.spec = q;
  rep.seed = seed;
  rep.samples = samples;
  const ExtCount qmin = q.q_min();
  rep.verdict = (qmin.is_infinite() || q.q_min_count() == 1) ? ObstructionReport::Verdict::kForced
                                                             : ObstructionReport::Verdict::kUnforced;
  Rng rng(seed);
  bool first = true;
  for (unsigned k = 0; k < samples; ++k) {
    const bool degenerate = rng.chance(1, 3);
    Potential pot = sample_ma_p(q, rng, degenerate);
    const ExtCount v = n_st(pot, q.s, q.t);
    rep.histogram[key_of(v)]++;
    if (first) {
      rep.min_observed = rep.max_observed = v;
      first = false;
    } else {
      rep.min_observed = exact_min(rep.min_observed, v);
      if (rep.max_observed < v) rep.max_observed = v;
    }
    if (v < qmin) rep.lower_bound_held = false;
    if (v == qmin && !rep.witness_equal) rep.witness_equal = pot;
    if (v > qmin && !rep.witness_above) rep.witness_above = pot;
  }
  return rep;
}

Potential witness_min(const QSpec& q, std::uint64_t seed, unsigned retries) {
  q.validate();
  Rng rng(seed);
  const ExtCount qmin = q.q_min();
  for (unsigned attempt = 0; attempt < retries; ++attempt) {
    Potential::Coeffs c;
    for (unsigned i = q.s; i <= q.t; ++i) {
      const ExtCount v = q.q[i - q.s];
      if (v.is_finite()) c[{2 * i - 1, static_cast<unsigned>(v.value()) + 1}] = random_coefficient(rng);
    }
    Potential pot(q.n, std::move(c));
    if (n_st(pot, q.s, q.t) == qmin) return pot;
  }
  throw InvariantViolation("witness_min: retry budget exhausted");
}

CA2Verdict classify_cA2(ExtCount n11, ExtCount n22, ExtCount n12) {
  for (ExtCount v : {n11, n22, n12}) {
    if (v.is_at_least()) return {false, CA2Verdict::Form::kNone, "lower bounds cannot be classified"};
  }
  if (n11 != n22) {
    const ExtCount m = exact_min(n11, n22);
    if (n12 == m) return {true, CA2Verdict::Form::kForm1, ""};
    return {false, CA2Verdict::Form::kNone,
            "N11 != N22 forces N12 = min(N11, N22) = " + to_string(m) + ", got " + to_string(n12)};
  }
  if (n12 >= n11) return {true, CA2Verdict::Form::kForm2, ""};
  return {false, CA2Verdict::Form::kNone,
          "N11 = N22 = " + to_string(n11) + " forces N12 >= " + to_string(n11) + ", got " + to_string(n12)};
}

Potential witness_form2(std::uint64_t p, ExtCount r) {
  if (p < 1) throw DomainError("witness_form2 needs p >= 1");
  if (r.is_at_least() || (r.is_finite() && r.value() < p)) throw DomainError("witness_form2 needs r >= p");
  // With row 2 empty, h_{0,4} = sum_j j (k_1j - (-1)^(j-1) k_3j) x^(j-1).
  const auto lead = static_cast<unsigned>(p) + 1;
  Potential::Coeffs c;
  c[{1, lead}] = 1;
  // Cancel the x^p term unless r == p.
  const bool keep = r.is_finite() && r.value() == p;
  c[{3, lead}] = ((p % 2 == 0) != keep) ? 1 : -1;
  if (r.is_finite() && r.value() > p) c[{3, static_cast<unsigned>(r.value()) + 1}] = 1;
  return Potential(2, std::move(c));
}

TransportedSpec as_classes(const QSpec& q) {
  q.validate();
  TransportedSpec out;
  for (unsigned i = q.s; i <= q.t; ++i) out.constraints.push_back({v_class(q.n, i, i), q.q[i - q.s]});
  out.target = v_class(q.n, q.s, q.t);
  return out;
}

TransportedSpec transport_q(const TransportedSpec& spec, const FlopWord& word) {
  TransportedSpec out;
  for (const auto& c : spec.constraints) out.constraints.push_back({word_apply(word, c.beta), c.q});
  out.target = word_apply(word, spec.target);
  return out;
}

TransportedSpec transport_q(const QSpec& q, const FlopWord& word) { return transport_q(as_classes(q), word); }

}  // namespace gvkit
