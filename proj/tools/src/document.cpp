#include "gvkit/cli/document.hpp"

#include <limits>

#include "gvkit/errors.hpp"
#include "gvkit/parse.hpp"

namespace gvkit::cli {

namespace {

void require_keys(const Json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) throw DomainError(where + " must be an object");
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw DomainError(where + ": unknown key \"" + key + "\"");
  }
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw DomainError(where + ": missing \"" + key + "\"");
  return *it;
}

std::uint64_t natural(const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(j.get<std::int64_t>());
  throw DomainError(where + " must be a natural number");
}

unsigned small_natural(const Json& j, const std::string& where) {
  const std::uint64_t v = natural(j, where);
  if (v > std::numeric_limits<unsigned>::max()) throw DomainError(where + " is too large");
  return static_cast<unsigned>(v);
}

// Re-raises a polynomial parse error with the location inside the document.
BiPoly poly_at(const Json& j, const std::string& where) {
  if (!j.is_string()) throw DomainError(where + " must be an expression string");
  const auto& text = j.get_ref<const std::string&>();
  try {
    return parse_poly(text);
  } catch (const ParseError& e) {
    std::string msg = e.what();
    if (auto cut = msg.rfind(" (at byte"); cut != std::string::npos) msg.resize(cut);
    throw ParseError(where + " \"" + text + "\": " + msg, e.offset());
  }
}

}  // namespace

HMode Options::hmode() const { return mode == HMode::Kind::kExact ? HMode::exact(max_degree) : HMode::capped(trunc); }

std::string kind_name(Kind kind) {
  switch (kind) {
    case Kind::kFlag: return "flag";
    case Kind::kPotential: return "potential";
    case Kind::kQSpec: return "qspec";
  }
  return "";
}

JobDocument parse_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed document: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
  require_keys(doc, {"kind", "payload", "options"}, "document");
  const Json& kind = field(doc, "kind", "document");
  JobDocument out;
  if (kind == "flag") {
    out.kind = Kind::kFlag;
  } else if (kind == "potential") {
    out.kind = Kind::kPotential;
  } else if (kind == "qspec") {
    out.kind = Kind::kQSpec;
  } else {
    throw DomainError("document kind must be flag, potential or qspec");
  }
  out.payload = field(doc, "payload", "document");
  if (auto it = doc.find("options"); it != doc.end()) {
    if (!it->is_object()) throw DomainError("document options must be an object");
    out.options = *it;
  }
  return out;
}

Json envelope(Kind kind, Json payload) {
  Json doc = Json::object();
  doc["kind"] = kind_name(kind);
  doc["payload"] = std::move(payload);
  doc["options"] = Json::object();
  return doc;
}

Format parse_format(std::string_view text) {
  if (text == "table") return Format::kTable;
  if (text == "json") return Format::kJson;
  if (text == "csv") return Format::kCsv;
  throw DomainError("format must be table, json or csv");
}

HMode::Kind parse_mode(std::string_view text) {
  if (text == "exact") return HMode::Kind::kExact;
  if (text == "capped") return HMode::Kind::kCapped;
  throw DomainError("mode must be exact or capped");
}

Options apply_options(const Json& options, Options base) {
  require_keys(options, {"format", "trunc", "mode", "seed", "max_degree", "samples"}, "options");
  for (const auto& [key, value] : options.items()) {
    const std::string where = "options." + key;
    if (key == "format" || key == "mode") {
      if (!value.is_string()) throw DomainError(where + " must be a string");
      if (key == "format") base.format = parse_format(value.get<std::string>());
      else base.mode = parse_mode(value.get<std::string>());
    } else if (key == "seed") {
      base.seed = natural(value, where);
    } else if (key == "trunc") {
      base.trunc = small_natural(value, where);
    } else if (key == "max_degree") {
      base.max_degree = small_natural(value, where);
    } else {
      base.samples = small_natural(value, where);
    }
  }
  if (base.trunc < 3) throw DomainError("trunc must be at least 3");
  if (base.samples < 1) throw DomainError("samples must be positive");
  return base;
}

ExtCount count_from_json(const Json& j, const std::string& where) {
  if (j.is_string() && j.get_ref<const std::string&>() == "inf") return ExtCount::infinite();
  if (j.is_string()) throw DomainError(where + " must be a natural number or \"inf\"");
  return ExtCount::finite(natural(j, where));
}

Json count_to_json(ExtCount c) {
  if (c.is_finite()) return c.value();
  return to_string(c);
}

Json rational_to_json(const Rat& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return to_string(r);
}

Rat rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get_ref<const std::string&>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what(), e.offset());
    }
  }
  throw DomainError(where + " must be an integer or a string \"a/b\"");
}

Flag flag_from_json(const Json& payload) {
  const Json* list = &payload;
  if (payload.is_object()) {
    require_keys(payload, {"entries"}, "flag payload");
    list = &field(payload, "entries", "flag payload");
  }
  if (!list->is_array() || list->size() < 2) throw DomainError("a flag needs a list of at least two entries");
  std::vector<BiPoly> gs;
  std::vector<std::optional<FactorList>> fs;
  for (std::size_t k = 0; k < list->size(); ++k) {
    const std::string where = "entry " + std::to_string(k);
    const Json& e = (*list)[k];
    if (e.is_string()) {
      gs.push_back(poly_at(e, where));
      fs.emplace_back();
      continue;
    }
    require_keys(e, {"factors"}, where);
    const Json& factors = field(e, "factors", where);
    if (!factors.is_array() || factors.empty()) throw DomainError(where + ": factors must be a nonempty list");
    FactorList list_k;
    BiPoly prod = BiPoly::constant(1);
    for (std::size_t f = 0; f < factors.size(); ++f) {
      list_k.push_back(poly_at(factors[f], where + " factor " + std::to_string(f)));
      prod = prod * list_k.back();
    }
    gs.push_back(std::move(prod));
    fs.emplace_back(std::move(list_k));
  }
  return Flag(std::move(gs), std::move(fs));
}

Json flag_to_json(const Flag& flag) {
  Json list = Json::array();
  for (unsigned j = 0; j <= flag.m(); ++j) {
    const auto& f = flag.supplied_factors()[j];
    if (!f) {
      list.push_back(render(flag.g(j)));
      continue;
    }
    Json factors = Json::array();
    for (const auto& p : *f) factors.push_back(render(p));
    list.push_back(Json{{"factors", std::move(factors)}});
  }
  return list;
}

Potential potential_from_json(const Json& payload) {
  require_keys(payload, {"n", "coeffs"}, "potential payload");
  const unsigned n = small_natural(field(payload, "n", "potential payload"), "n");
  Potential::Coeffs coeffs;
  if (auto it = payload.find("coeffs"); it != payload.end()) {
    if (!it->is_array()) throw DomainError("coeffs must be a list");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const std::string where = "coeffs[" + std::to_string(k) + "]";
      const Json& c = (*it)[k];
      require_keys(c, {"i", "j", "k"}, where);
      const unsigned i = small_natural(field(c, "i", where), where + ".i");
      const unsigned j = small_natural(field(c, "j", where), where + ".j");
      if (coeffs.count({i, j})) throw DomainError(where + ": duplicate coefficient");
      coeffs[{i, j}] = rational_from_json(field(c, "k", where), where + ".k");
    }
  }
  return Potential(n, std::move(coeffs));
}

Json potential_to_json(const Potential& pot) {
  Json coeffs = Json::array();
  for (const auto& [ij, k] : pot.coeffs()) coeffs.push_back(Json{{"i", ij.first}, {"j", ij.second}, {"k", rational_to_json(k)}});
  return Json{{"n", pot.n()}, {"coeffs", std::move(coeffs)}};
}

QSpec qspec_from_json(const Json& payload) {
  require_keys(payload, {"n", "s", "t", "q"}, "qspec payload");
  QSpec q;
  q.n = small_natural(field(payload, "n", "qspec payload"), "n");
  q.s = small_natural(field(payload, "s", "qspec payload"), "s");
  q.t = small_natural(field(payload, "t", "qspec payload"), "t");
  const Json& list = field(payload, "q", "qspec payload");
  if (!list.is_array()) throw DomainError("q must be a list");
  for (std::size_t k = 0; k < list.size(); ++k) q.q.push_back(count_from_json(list[k], "q[" + std::to_string(k) + "]"));
  q.validate();
  return q;
}

Json qspec_to_json(const QSpec& q) {
  Json list = Json::array();
  for (ExtCount c : q.q) list.push_back(count_to_json(c));
  return Json{{"n", q.n}, {"s", q.s}, {"t", q.t}, {"q", std::move(list)}};
}

}  // namespace gvkit::cli
