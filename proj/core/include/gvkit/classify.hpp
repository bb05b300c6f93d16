#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gvkit/curveclass.hpp"
#include "gvkit/ext_count.hpp"
#include "gvkit/potential.hpp"
#include "gvkit/sampling.hpp"
#include "gvkit/typeamat.hpp"

namespace gvkit {

struct Prediction {
  enum class Stratum {
    kGeneric,     // det A^d != 0: N_st = d - 1
    kDegenerate,  // det A^d == 0: only N_st >= d is known
    kUnbounded,   // d infinite: N_st infinite
  };
  Stratum stratum;
  // Finite(d - 1), AtLeast(d) or Infinite.
  ExtCount value;
  ExtCount d;
  Rat det;
};

// 1 <= s <= t <= n.
Prediction predict_nst(const Potential& pot, unsigned s, unsigned t);

// (least j with k_{2s-1,j} != 0) - 1, or Infinite.
ExtCount strata_ss(const Potential& pot, unsigned s);

// Thresholds q_s..q_t on the curves s..t of Q_n.
struct QSpec {
  unsigned n = 1;
  unsigned s = 1;
  unsigned t = 1;
  std::vector<ExtCount> q;

  void validate() const;
  ExtCount q_min() const;
  // Number of i with q_i = q_min.
  unsigned q_min_count() const;
  // p_{2i-1} = q_i + 1 for s <= i <= t, every other entry 2.
  PTuple ptuple() const;
};

// A draw from MA_p: forced rows start exactly at q_i + 1, other rows are
// free. With `degenerate` the draw is steered onto det A^d = 0 when the
// determinant has a solvable symbol, otherwise it stays generic.
Potential sample_ma_p(const QSpec& q, Rng& rng, bool degenerate);

struct ObstructionReport {
  enum class Verdict {
    kForced,    // N_st = q_min on all of MA_p
    kUnforced,  // N_st >= q_min, strictly larger on a nonempty locus
  };
  QSpec spec;
  std::uint64_t seed = 0;
  unsigned samples = 0;
  ExtCount min_observed;
  ExtCount max_observed;
  bool lower_bound_held = true;
  std::optional<Potential> witness_equal;  // a draw with N_st = q_min
  std::optional<Potential> witness_above;  // a draw with N_st > q_min
  std::map<std::string, unsigned> histogram;
  Verdict verdict = Verdict::kForced;
  // Observations agree with the verdict.
  bool consistent() const;
};

ObstructionReport check_obstruction(const QSpec& q, unsigned samples, std::uint64_t seed);

// A potential in MA_p with N_st = q_min. InvariantViolation when the retry
// budget runs out.
Potential witness_min(const QSpec& q, std::uint64_t seed, unsigned retries = 64);

struct CA2Verdict {
  enum class Form { kNone, kForm1, kForm2 };
  bool valid = false;
  Form form = Form::kNone;
  std::string reason;
};

CA2Verdict classify_cA2(ExtCount n11, ExtCount n22, ExtCount n12);

// A potential on Q_2 with N11 = N22 = p and N12 = r, 1 <= p <= r.
Potential witness_form2(std::uint64_t p, ExtCount r);

struct ClassConstraint {
  CurveClass beta;
  ExtCount q;
};

struct TransportedSpec {
  std::vector<ClassConstraint> constraints;
  CurveClass target;
};

// Constraints (v_ii, q_i) and target v_st.
TransportedSpec as_classes(const QSpec& q);
TransportedSpec transport_q(const TransportedSpec& spec, const FlopWord& word);
TransportedSpec transport_q(const QSpec& q, const FlopWord& word);

}  // namespace gvkit
