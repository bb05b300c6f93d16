#include "gvkit/cli/commands.hpp"

#include <functional>

#include "gvkit/errors.hpp"
#include "gvkit/localmult.hpp"
#include "gvkit/parse.hpp"

namespace gvkit::cli {

namespace {

constexpr unsigned kShownDegree = 6;

Json cells_json(unsigned m, bool square, const std::function<Json(unsigned, unsigned)>& value) {
  Json cells = Json::array();
  for (unsigned i = 1; i <= m; ++i) {
    for (unsigned j = square ? 1 : i; j <= m; ++j) cells.push_back(Json{{"i", i}, {"j", j}, {"value", value(i, j)}});
  }
  return Json{{"m", m}, {"cells", std::move(cells)}};
}

Json table_json(const NTable& t) {
  return cells_json(t.m(), false, [&](unsigned i, unsigned j) { return count_to_json(t.at(i, j)); });
}

Json table_json(const GvTable& t) {
  return cells_json(t.m(), false, [&](unsigned i, unsigned j) { return Json(t.at(i, j)); });
}

// dim e_s L e_t = sum of n_ij over i <= min(s, t), j >= max(s, t).
ExtCount toda_from_table(const NTable& n, unsigned s, unsigned t) {
  const unsigned lo = std::min(s, t), hi = std::max(s, t);
  ExtCount sum = ExtCount::finite(0);
  for (unsigned i = 1; i <= lo; ++i) {
    for (unsigned j = hi; j <= n.m(); ++j) sum += n.at(i, j);
  }
  return sum;
}

void add_toda(Json& out, const NTable& n) {
  out["toda"] = cells_json(n.m(), true, [&](unsigned s, unsigned t) { return count_to_json(toda_from_table(n, s, t)); });
  ExtCount sum = ExtCount::finite(0);
  for (unsigned s = 1; s <= n.m(); ++s) {
    for (unsigned t = 1; t <= n.m(); ++t) sum += toda_from_table(n, s, t);
  }
  const ExtCount total = total_dim(n);
  if (sum != total) throw InvariantViolation("Toda table sums to " + to_string(sum) + " but the total is " + to_string(total));
  out["total_dim"] = count_to_json(total);
}

bool has_bounds(const NTable& n) {
  for (unsigned i = 1; i <= n.m(); ++i) {
    for (unsigned j = i; j <= n.m(); ++j) {
      if (n.at(i, j).is_at_least()) return true;
    }
  }
  return false;
}

// Could an exact value `truth` have produced `seen`?
bool compatible(ExtCount truth, ExtCount seen) {
  if (seen.is_at_least()) return truth.is_infinite() || truth.is_at_least() || truth.value() >= seen.value();
  if (truth.is_at_least()) return seen.is_infinite() || seen.value() >= truth.value();
  return truth == seen;
}

Flag require_flag(const JobDocument& doc) {
  if (doc.kind != Kind::kFlag) throw DomainError("this command needs a flag document");
  return flag_from_json(doc.payload);
}

Potential require_potential(const JobDocument& doc) {
  if (doc.kind != Kind::kPotential) throw DomainError("this command needs a potential document");
  return potential_from_json(doc.payload);
}

Json mode_json(const Options& opts) {
  Json m = Json::object();
  m["mode"] = opts.mode == HMode::Kind::kExact ? "exact" : "capped";
  if (opts.mode == HMode::Kind::kExact) m["max_degree"] = opts.max_degree;
  else m["trunc"] = opts.trunc;
  return m;
}

NTable potential_table(const Potential& pot, const HMode& mode) {
  NTable n(pot.n());
  for (unsigned s = 1; s <= pot.n(); ++s) {
    for (unsigned t = s; t <= pot.n(); ++t) n.at(s, t) = n_st(pot, s, t, mode);
  }
  return n;
}

std::string stratum_name(Prediction::Stratum s) {
  switch (s) {
    case Prediction::Stratum::kGeneric: return "generic";
    case Prediction::Stratum::kDegenerate: return "degenerate";
    case Prediction::Stratum::kUnbounded: return "unbounded";
  }
  return "";
}

// Per-pair predictions checked against `computed`.
Json prediction_rows(const Potential& pot, const NTable& computed, NTable& predicted) {
  Json rows = Json::array();
  for (unsigned s = 1; s <= pot.n(); ++s) {
    for (unsigned t = s; t <= pot.n(); ++t) {
      const Prediction p = predict_nst(pot, s, t);
      predicted.at(s, t) = p.value;
      const ExtCount c = computed.at(s, t);
      if (!compatible(p.value, c)) {
        throw InvariantViolation("N_" + std::to_string(s) + std::to_string(t) + " computed " + to_string(c) +
                                 " against the predicted " + to_string(p.value));
      }
      rows.push_back(Json{{"s", s},
                          {"t", t},
                          {"d", count_to_json(p.d)},
                          {"det", rational_to_json(p.det)},
                          {"stratum", stratum_name(p.stratum)},
                          {"predicted", count_to_json(p.value)},
                          {"computed", count_to_json(c)}});
    }
  }
  return rows;
}

Json flag_invariants(const Flag& flag) {
  Json out = Json::object();
  out["flag"] = flag_to_json(flag);
  out["m"] = flag.m();
  const NTable n = n_table(flag);
  out["N"] = table_json(n);
  try {
    if (is_crepant_resolution(flag)) {
      out["crepant_resolution"] = true;
      out["GV"] = table_json(to_gv(n));
    } else {
      out["crepant_resolution"] = false;
      out["GV"] = nullptr;
      out["GV_note"] = "GV invariants need a crepant resolution";
    }
  } catch (const DomainError& e) {
    out["crepant_resolution"] = nullptr;
    out["GV"] = nullptr;
    out["GV_note"] = e.what();
  }
  for (unsigned s = 1; s <= flag.m(); ++s) {
    for (unsigned t = s; t <= flag.m(); ++t) {
      const ExtCount direct = toda_dim(flag, s, t), summed = toda_from_table(n, s, t);
      if (direct != summed) {
        throw InvariantViolation("dim e_" + std::to_string(s) + " L e_" + std::to_string(t) + " is " +
                                 to_string(direct) + " directly but " + to_string(summed) + " from N");
      }
    }
  }
  add_toda(out, n);
  return out;
}

Json potential_invariants(const Potential& pot, const Options& opts) {
  Json out = Json::object();
  out["potential"] = potential_to_json(pot);
  out["computation"] = mode_json(opts);
  Json p = Json::array();
  const PTuple tuple = support_tuple(pot);
  for (ExtCount v : tuple) p.push_back(count_to_json(v));
  out["support"] = std::move(p);
  out["d"] = cells_json(pot.n(), false,
                        [&](unsigned s, unsigned t) { return count_to_json(d_ij_p(tuple, 2 * s - 1, 2 * t - 1)); });
  const NTable n = potential_table(pot, opts.hmode());
  out["N"] = table_json(n);
  NTable predicted(pot.n());
  Json rows = prediction_rows(pot, n, predicted);
  out["predicted"] = table_json(predicted);
  out["pairs"] = std::move(rows);
  out["GV"] = has_bounds(n) ? Json(nullptr) : table_json(to_gv(n));
  add_toda(out, n);
  return out;
}

// n_beta over every contiguous class must match after transport by |F_i|.
bool flop_covariant(const NTable& before, const NTable& after, unsigned curve) {
  const unsigned m = before.m();
  const IntMatrix f = f_matrix(m, curve);
  for (unsigned i = 1; i <= m; ++i) {
    for (unsigned j = i; j <= m; ++j) {
      const CurveClass beta = v_class(m, i, j);
      if (n_beta(before, beta) != n_beta(after, abs_apply(f, beta))) return false;
    }
  }
  return true;
}

std::string series_text(const TruncSeries2& s) {
  const unsigned shown = std::min(s.trunc(), kShownDegree);
  const BiPoly p = s.poly().truncated(shown);
  return (p.is_zero() ? std::string("0") : render(p)) + " + O(" + std::to_string(shown) + ")";
}

Json witness_json(const Potential& pot) { return envelope(Kind::kPotential, potential_to_json(pot)); }

Json optional_witness(const std::optional<Potential>& pot) { return pot ? witness_json(*pot) : Json(nullptr); }

std::string form_name(CA2Verdict::Form f) {
  switch (f) {
    case CA2Verdict::Form::kNone: return "none";
    case CA2Verdict::Form::kForm1: return "form1";
    case CA2Verdict::Form::kForm2: return "form2";
  }
  return "";
}

Json ca2_result(ExtCount n11, ExtCount n22, ExtCount n12, const Options& opts) {
  Json out = Json::object();
  out["triple"] = Json::array({count_to_json(n11), count_to_json(n22), count_to_json(n12)});
  const CA2Verdict v = classify_cA2(n11, n22, n12);
  out["valid"] = v.valid;
  out["form"] = form_name(v.form);
  if (!v.valid) {
    out["reason"] = v.reason;
    out["witness"] = nullptr;
    return out;
  }
  Potential w(2);
  if (v.form == CA2Verdict::Form::kForm1) {
    w = witness_min(QSpec{2, 1, 2, {n11, n22}}, opts.seed);
  } else if (n11.is_finite()) {
    w = witness_form2(n11.value(), n12);
  }
  const ExtCount got[3] = {n_st(w, 1, 1), n_st(w, 2, 2), n_st(w, 1, 2)};
  if (got[0] != n11 || got[1] != n22 || got[2] != n12) {
    throw InvariantViolation("cA2 witness computes (" + to_string(got[0]) + ", " + to_string(got[1]) + ", " +
                             to_string(got[2]) + ")");
  }
  out["witness"] = witness_json(w);
  return out;
}

}  // namespace

Json cmd_invariants(const JobDocument& doc, const Options& opts) {
  Json out = Json::object();
  out["command"] = "invariants";
  Json body = doc.kind == Kind::kFlag        ? flag_invariants(flag_from_json(doc.payload))
              : doc.kind == Kind::kPotential ? potential_invariants(potential_from_json(doc.payload), opts)
                                             : throw DomainError("invariants needs a flag or potential document");
  out.update(body);
  return out;
}

Json cmd_flop(const JobDocument& doc, const Options&, unsigned curve) {
  const Flag before = require_flag(doc);
  const Flag after = flop(before, curve);
  const NTable nb = n_table(before), na = n_table(after);
  if (!flop_covariant(nb, na, curve)) throw InvariantViolation("flop " + std::to_string(curve) + " broke covariance");
  Json out = Json::object();
  out["command"] = "flop";
  out["curve"] = curve;
  out["before"] = flag_to_json(before);
  out["after"] = flag_to_json(after);
  out["N_before"] = table_json(nb);
  out["N_after"] = table_json(na);
  out["covariant"] = true;
  return out;
}

Json cmd_contract(const JobDocument& doc, const Options&, const std::vector<unsigned>& kept) {
  const Flag before = require_flag(doc);
  const Flag after = contract(before, kept);
  const NTable nb = n_table(before), na = n_table(after);
  // The entries of the contracted flag are blocks g_{cut[k]} .. g_{cut[k+1]-1}.
  std::vector<unsigned> cut{0};
  cut.insert(cut.end(), kept.begin(), kept.end());
  cut.push_back(before.m() + 1);
  for (unsigned a = 1; a <= after.m(); ++a) {
    for (unsigned b = a; b <= after.m(); ++b) {
      ExtCount sum = ExtCount::finite(0);
      for (unsigned u = cut[a - 1]; u < cut[a]; ++u) {
        for (unsigned v = cut[b]; v < cut[b + 1]; ++v) sum += nb.at(u + 1, v);
      }
      if (sum != na.at(a, b)) {
        throw InvariantViolation("contracted N_" + std::to_string(a) + std::to_string(b) + " is " +
                                 to_string(na.at(a, b)) + " but the block sum is " + to_string(sum));
      }
    }
  }
  Json kept_json = Json::array();
  for (unsigned k : kept) kept_json.push_back(k);
  Json out = Json::object();
  out["command"] = "contract";
  out["kept"] = std::move(kept_json);
  out["before"] = flag_to_json(before);
  out["after"] = flag_to_json(after);
  out["N_before"] = table_json(nb);
  out["N_after"] = table_json(na);
  out["block_sums_match"] = true;
  return out;
}

Json cmd_reflect(const JobDocument& doc, const Options&) {
  const Flag before = require_flag(doc);
  const Flag after = reflect(before);
  const NTable nb = n_table(before), na = n_table(after);
  const unsigned m = before.m();
  for (unsigned i = 1; i <= m; ++i) {
    for (unsigned j = i; j <= m; ++j) {
      if (na.at(i, j) != nb.at(m + 1 - j, m + 1 - i)) throw InvariantViolation("reflection did not transpose N");
    }
  }
  Json out = Json::object();
  out["command"] = "reflect";
  out["before"] = flag_to_json(before);
  out["after"] = flag_to_json(after);
  out["N_before"] = table_json(nb);
  out["N_after"] = table_json(na);
  out["transposed"] = true;
  return out;
}

Json cmd_potential(const JobDocument& doc, const Options& opts) {
  const Potential pot = require_potential(doc);
  if (opts.seed >= 2ull * pot.n()) throw DomainError("the realisation seed must lie in 0.." + std::to_string(2 * pot.n() - 1));
  const auto seed = static_cast<unsigned>(opts.seed);
  const RealizedSystem sys = realize_flag(pot, opts.trunc, seed);
  const NTable exact = potential_table(pot, opts.hmode());
  NTable series(pot.n());
  for (unsigned s = 1; s <= pot.n(); ++s) {
    for (unsigned t = s; t <= pot.n(); ++t) {
      series.at(s, t) = series_n_st(sys, s, t);
      if (!compatible(exact.at(s, t), series.at(s, t)) && !compatible(series.at(s, t), exact.at(s, t))) {
        throw InvariantViolation("N_" + std::to_string(s) + std::to_string(t) + " is " + to_string(exact.at(s, t)) +
                                 " from h but " + to_string(series.at(s, t)) + " from the realised flag");
      }
    }
  }
  Json flag = Json::array();
  for (unsigned k = 0; k <= pot.n(); ++k) flag.push_back(Json{{"index", 2 * k}, {"series", series_text(sys.g[2 * k])}});
  Json out = Json::object();
  out["command"] = "potential";
  out["potential"] = potential_to_json(pot);
  out["computation"] = mode_json(opts);
  out["realisation"] = Json{{"trunc", opts.trunc}, {"seed", seed}};
  out["flag"] = std::move(flag);
  out["N"] = table_json(exact);
  out["N_series"] = table_json(series);
  out["agree"] = true;
  return out;
}

Json cmd_predict(const JobDocument& doc, const Options& opts) {
  const Potential pot = require_potential(doc);
  const NTable n = potential_table(pot, opts.hmode());
  NTable predicted(pot.n());
  Json rows = prediction_rows(pot, n, predicted);
  Json out = Json::object();
  out["command"] = "predict";
  out["potential"] = potential_to_json(pot);
  out["computation"] = mode_json(opts);
  out["predicted"] = table_json(predicted);
  out["N"] = table_json(n);
  out["pairs"] = std::move(rows);
  return out;
}

Json cmd_check_q(const JobDocument& doc, const Options& opts) {
  if (doc.kind != Kind::kQSpec) throw DomainError("check-q needs a qspec document");
  const QSpec q = qspec_from_json(doc.payload);
  const ObstructionReport r = check_obstruction(q, opts.samples, opts.seed);
  if (!r.lower_bound_held) throw InvariantViolation("a sample fell below q_min");
  if (r.verdict == ObstructionReport::Verdict::kForced && r.max_observed != q.q_min()) {
    throw InvariantViolation("a forced spec produced " + to_string(r.max_observed));
  }
  const Potential w = witness_min(q, opts.seed);
  Json hist = Json::object();
  for (const auto& [k, v] : r.histogram) hist[k] = v;
  Json out = Json::object();
  out["command"] = "check-q";
  out["spec"] = qspec_to_json(q);
  out["q_min"] = count_to_json(q.q_min());
  out["q_min_count"] = q.q_min_count();
  out["verdict"] = r.verdict == ObstructionReport::Verdict::kForced ? "forced" : "unforced";
  out["seed"] = r.seed;
  out["samples"] = r.samples;
  out["min_observed"] = count_to_json(r.min_observed);
  out["max_observed"] = count_to_json(r.max_observed);
  out["lower_bound_held"] = r.lower_bound_held;
  out["consistent"] = r.consistent();
  out["histogram"] = std::move(hist);
  out["witness_min"] = witness_json(w);
  out["witness_equal"] = optional_witness(r.witness_equal);
  out["witness_above"] = optional_witness(r.witness_above);
  return out;
}

Json cmd_check_ca2(ExtCount n11, ExtCount n22, ExtCount n12, const Options& opts) {
  for (ExtCount v : {n11, n22, n12}) {
    if (v.is_finite() && v.value() < 1) throw DomainError("cA2 invariants are at least 1");
  }
  Json out = Json::object();
  out["command"] = "check-ca2";
  out.update(ca2_result(n11, n22, n12, opts));
  return out;
}

Json cmd_check_ca2(const JobDocument& doc, const Options& opts) {
  const Potential pot = require_potential(doc);
  if (pot.n() != 2) throw DomainError("check-ca2 needs a potential on Q_2");
  const HMode mode = opts.hmode();
  const ExtCount n11 = n_st(pot, 1, 1, mode), n22 = n_st(pot, 2, 2, mode), n12 = n_st(pot, 1, 2, mode);
  Json out = Json::object();
  out["command"] = "check-ca2";
  out["potential"] = potential_to_json(pot);
  out["computation"] = mode_json(opts);
  if (n11.is_at_least() || n22.is_at_least() || n12.is_at_least()) {
    out["triple"] = Json::array({count_to_json(n11), count_to_json(n22), count_to_json(n12)});
    out["valid"] = nullptr;
    out["reason"] = "truncation left a lower bound; rerun in exact mode";
    return out;
  }
  Json body = ca2_result(n11, n22, n12, opts);
  if (!body["valid"].get<bool>()) throw InvariantViolation("a potential on Q_2 gave an invalid triple");
  out.update(body);
  return out;
}

Json cmd_selftest(const Options& opts) {
  Json checks = Json::array();
  unsigned failed = 0;
  auto check = [&](const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
      ok = body();
    } catch (const std::exception& e) {
      note = e.what();
    }
    if (!ok) ++failed;
    Json row{{"check", name}, {"status", ok ? "PASS" : "FAIL"}};
    if (!note.empty()) row["error"] = note;
    checks.push_back(std::move(row));
  };
  const auto P = [](const char* s) { return parse_poly(s); };
  const auto F = [](std::uint64_t v) { return ExtCount::finite(v); };

  check("flag (x, y, x + y^n): N = GV = (1, 1, n), total 2 + 4n", [&] {
    for (unsigned n = 1; n <= 6; ++n) {
      const Flag f({P("x"), P("y"), P("x") + P("y").pow(n)});
      const NTable t = n_table(f);
      const GvTable g = gv_table(f);
      if (t.at(1, 1) != F(1) || t.at(2, 2) != F(1) || t.at(1, 2) != F(n)) return false;
      if (g.at(1, 1) != 1 || g.at(2, 2) != 1 || g.at(1, 2) != static_cast<std::int64_t>(n)) return false;
      if (total_dim(f) != F(2 + 4 * n)) return false;
    }
    return true;
  });
  check("flag (x, x, y): N11 infinite, GV11 = -1", [&] {
    const Flag f({P("x"), P("x"), P("y")});
    return n_ij(f, 1, 1).is_infinite() && gv_table(f).at(1, 1) == -1;
  });
  check("flops of a two-curve flag permute N", [&] {
    const Flag f({P("x"), P("y"), P("x + y^3")});
    const NTable t = n_table(f), a = n_table(flop(f, 1)), b = n_table(flop(f, 2));
    return a.at(1, 1) == t.at(1, 1) && a.at(2, 2) == t.at(1, 2) && a.at(1, 2) == t.at(2, 2) &&
           b.at(1, 1) == t.at(1, 2) && b.at(2, 2) == t.at(2, 2) && b.at(1, 2) == t.at(1, 1);
  });
  check("contracting to curve 1 adds N11 and N12", [&] {
    const Flag f({P("x"), P("y"), P("x + y^3")});
    const std::vector<unsigned> kept{1};
    return n_ij(contract(f, kept), 1, 1) == n_ij(f, 1, 1) + n_ij(f, 1, 2);
  });
  check("mult agrees with the jet oracle on y^2 - x^3 against y^3 - x^2", [&] {
    const BiPoly a = P("y^2 - x^3"), b = P("y^3 - x^2");
    return mult(a, b) == F(4) && mult_jet_oracle(a, b, 12) == F(4);
  });
  check("determinant of A_13 in degrees 2 and 3", [&] {
    const MPoly e12 = MPoly::symbol(1, 2), e22 = MPoly::symbol(2, 2), e32 = MPoly::symbol(3, 2);
    const MPoly e13 = MPoly::symbol(1, 3), e33 = MPoly::symbol(3, 3);
    return det_sym(build_A(2, 1, 3, 2)) == e12 * e22 * e32 - e12 - e32 && det_sym(build_A(2, 1, 3, 3)) == e33 - e13;
  });
  check("potential k13 = 1, k33 = 2 has N = (2, 2, 2)", [&] {
    const Potential pot(2, {{{1, 3}, 1}, {{3, 3}, 2}});
    return n_st(pot, 1, 1) == F(2) && n_st(pot, 2, 2) == F(2) && n_st(pot, 1, 2) == F(2) &&
           predict_nst(pot, 1, 2).value == F(2) && strata_ss(pot, 1) == F(2);
  });
  check("the realised flag reproduces N", [&] {
    const Potential pot(2, {{{1, 2}, 1}, {{2, 3}, 1}, {{3, 4}, -1}});
    const RealizedSystem sys = realize_flag(pot, 32, 0);
    for (unsigned s = 1; s <= 2; ++s) {
      for (unsigned t = s; t <= 2; ++t) {
        if (series_n_st(sys, s, t) != n_st(pot, s, t)) return false;
      }
    }
    return true;
  });
  check("q = (1, 3) forces N12 = 1", [&] {
    const ObstructionReport r = check_obstruction(QSpec{2, 1, 2, {F(1), F(3)}}, 20, opts.seed);
    return r.verdict == ObstructionReport::Verdict::kForced && r.min_observed == F(1) && r.max_observed == F(1);
  });
  check("q = (2, 2) has witnesses at and above 2", [&] {
    const ObstructionReport r = check_obstruction(QSpec{2, 1, 2, {F(2), F(2)}}, 50, opts.seed);
    return r.lower_bound_held && r.witness_equal && r.witness_above;
  });
  check("cA2 triple (2, 3, 3) is rejected", [&] { return !classify_cA2(F(2), F(3), F(3)).valid; });

  Json out = Json::object();
  out["command"] = "selftest";
  out["checks"] = std::move(checks);
  out["passed"] = out["checks"].size() - failed;
  out["failed"] = failed;
  return out;
}

}  // namespace gvkit::cli
