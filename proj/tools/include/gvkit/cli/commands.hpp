#pragma once

#include <vector>

#include "gvkit/cli/document.hpp"

namespace gvkit::cli {

// Each command returns a structured result. Failed internal cross-checks
// throw InvariantViolation.
Json cmd_invariants(const JobDocument& doc, const Options& opts);
Json cmd_flop(const JobDocument& doc, const Options& opts, unsigned curve);
Json cmd_contract(const JobDocument& doc, const Options& opts, const std::vector<unsigned>& kept);
Json cmd_reflect(const JobDocument& doc, const Options& opts);
Json cmd_potential(const JobDocument& doc, const Options& opts);
Json cmd_predict(const JobDocument& doc, const Options& opts);
Json cmd_check_q(const JobDocument& doc, const Options& opts);
// A triple (N11, N22, N12), or a potential on Q_2.
Json cmd_check_ca2(ExtCount n11, ExtCount n22, ExtCount n12, const Options& opts);
Json cmd_check_ca2(const JobDocument& doc, const Options& opts);
// Worked examples end to end. "failed" counts the mismatches.
Json cmd_selftest(const Options& opts);

}  // namespace gvkit::cli
