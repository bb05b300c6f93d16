#include "gvkit/cli/app.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gvkit/cli/commands.hpp"
#include "gvkit/cli/output.hpp"
#include "gvkit/errors.hpp"

namespace gvkit::cli {

namespace {

std::string read_all(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<ExtCount> parse_triple(const std::string& text) {
  std::vector<ExtCount> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string item = text.substr(start, comma - start);
    if (item == "inf") {
      out.push_back(ExtCount::infinite());
    } else {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 18) {
        throw ParseError("triple entries are naturals or inf", start);
      }
      out.push_back(ExtCount::finite(std::stoull(item)));
    }
    start = comma + 1;
  }
  if (out.size() != 3) throw ParseError("a triple has three entries", text.size());
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalised GV invariants, contraction algebra dimensions and Type A potentials.", "gvkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format, mode;
  unsigned trunc = 0, max_degree = 0, samples = 0, curve = 0;
  std::uint64_t seed = 0;
  std::vector<unsigned> kept;
  std::string input, triple;

  auto* o_format = app.add_option("--format", format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
  auto* o_trunc = app.add_option("--trunc", trunc, "truncation degree for capped and series computations (default 64)");
  auto* o_mode = app.add_option("--mode", mode, "exact or capped")->check(CLI::IsMember({"exact", "capped"}));
  auto* o_seed = app.add_option("--seed", seed, "sampling seed; realisation seed for `potential`");
  auto* o_maxdeg = app.add_option("--max-degree", max_degree, "degree guard for exact mode (default 4096)");

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "job document path; standard input when absent or -");
    return sub;
  };
  auto* c_inv = with_input(app.add_subcommand("invariants", "N, GV and Toda tables of a flag or potential"));
  auto* c_flop = with_input(app.add_subcommand("flop", "flop one curve and check covariance"));
  c_flop->add_option("--curve", curve, "curve index 1..m")->required();
  auto* c_contract = with_input(app.add_subcommand("contract", "contract all curves outside a kept set"));
  c_contract->add_option("--keep", kept, "kept curve indices, increasing")->required()->delimiter(',');
  auto* c_reflect = with_input(app.add_subcommand("reflect", "reverse the flag"));
  auto* c_pot = with_input(app.add_subcommand("potential", "realise the flag of a potential and compare"));
  auto* c_pred = with_input(app.add_subcommand("predict", "stratum predictions against computed N"));
  auto* c_q = with_input(app.add_subcommand("check-q", "sample the obstruction locus of a qspec"));
  auto* o_samples = c_q->add_option("--samples", samples, "number of draws (default 50)");
  auto* c_ca2 = with_input(app.add_subcommand("check-ca2", "classify a cA2 triple or a potential on Q_2"));
  c_ca2->add_option("--triple", triple, "N11,N22,N12 with naturals or inf");
  auto* c_self = app.add_subcommand("selftest", "run the worked examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParse;
  }

  try {
    Options opts;
    std::optional<JobDocument> doc;
    const bool needs_doc = !c_self->parsed() && !(c_ca2->parsed() && !triple.empty());
    if (needs_doc) {
      doc = parse_document(read_all(input, in));
      opts = apply_options(doc->options, opts);
    }
    Json flags = Json::object();
    if (o_format->count()) flags["format"] = format;
    if (o_mode->count()) flags["mode"] = mode;
    if (o_trunc->count()) flags["trunc"] = trunc;
    if (o_seed->count()) flags["seed"] = seed;
    if (o_maxdeg->count()) flags["max_degree"] = max_degree;
    if (o_samples->count()) flags["samples"] = samples;
    opts = apply_options(flags, opts);

    Json result;
    if (c_inv->parsed()) result = cmd_invariants(*doc, opts);
    else if (c_flop->parsed()) result = cmd_flop(*doc, opts, curve);
    else if (c_contract->parsed()) result = cmd_contract(*doc, opts, kept);
    else if (c_reflect->parsed()) result = cmd_reflect(*doc, opts);
    else if (c_pot->parsed()) result = cmd_potential(*doc, opts);
    else if (c_pred->parsed()) result = cmd_predict(*doc, opts);
    else if (c_q->parsed()) result = cmd_check_q(*doc, opts);
    else if (c_ca2->parsed() && doc) result = cmd_check_ca2(*doc, opts);
    else if (c_ca2->parsed()) {
      const auto t = parse_triple(triple);
      result = cmd_check_ca2(t[0], t[1], t[2], opts);
    } else {
      result = cmd_selftest(opts);
    }
    out << format_result(result, opts.format);
    if (c_self->parsed() && result["failed"].get<unsigned>() > 0) return kExitInvariant;
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitSemantic;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
}

}  // namespace gvkit::cli
