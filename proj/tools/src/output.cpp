#include "gvkit/cli/output.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

#include "gvkit/errors.hpp"

namespace gvkit::cli {

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Right-aligned cells, or left-aligned without trailing blanks.
void pad_row(std::ostream& os, const std::vector<std::string>& row, const std::vector<std::size_t>& width, bool left) {
  std::string line = "  ";
  for (std::size_t c = 0; c < row.size(); ++c) {
    const std::string fill(width[c] - row[c].size(), ' ');
    line += left ? row[c] + fill : fill + row[c];
    if (c + 1 < row.size()) line += "  ";
  }
  while (line.back() == ' ') line.pop_back();
  os << line << '\n';
}

void print_grid(std::ostream& os, std::vector<std::vector<std::string>> rows, bool left = false) {
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  for (const auto& r : rows) pad_row(os, r, width, left);
}

void print_table(std::ostream& os, const Json& t) {
  const auto m = t["m"].get<unsigned>();
  std::map<std::pair<unsigned, unsigned>, std::string> cell;
  for (const auto& c : t["cells"]) cell[{c["i"].get<unsigned>(), c["j"].get<unsigned>()}] = scalar_text(c["value"]);
  std::vector<std::vector<std::string>> rows;
  rows.emplace_back(1, "");
  for (unsigned j = 1; j <= m; ++j) rows[0].push_back(std::to_string(j));
  for (unsigned i = 1; i <= m; ++i) {
    std::vector<std::string> r{std::to_string(i)};
    for (unsigned j = 1; j <= m; ++j) {
      auto it = cell.find({i, j});
      r.push_back(it == cell.end() ? "" : it->second);
    }
    rows.push_back(std::move(r));
  }
  print_grid(os, std::move(rows));
}

bool is_record_list(const Json& v) {
  if (!v.is_array() || v.empty()) return false;
  return std::all_of(v.begin(), v.end(), [&](const Json& e) {
    if (!e.is_object() || e.size() == 0) return false;
    return std::none_of(e.begin(), e.end(), [](const Json& x) { return x.is_structured(); });
  });
}

void print_records(std::ostream& os, const Json& list) {
  std::vector<std::string> header;
  for (const auto& e : list) {
    for (const auto& [k, _] : e.items()) {
      if (std::find(header.begin(), header.end(), k) == header.end()) header.push_back(k);
    }
  }
  std::vector<std::vector<std::string>> rows{header};
  for (const auto& e : list) {
    std::vector<std::string> r;
    for (const auto& k : header) r.push_back(e.contains(k) ? scalar_text(e[k]) : "");
    rows.push_back(std::move(r));
  }
  print_grid(os, std::move(rows), true);
}

std::string as_table(const Json& result) {
  std::ostringstream os;
  for (const auto& [key, v] : result.items()) {
    if (is_table(v)) {
      os << key << ":\n";
      print_table(os, v);
    } else if (is_record_list(v)) {
      os << key << ":\n";
      print_records(os, v);
    } else if (v.is_structured()) {
      os << key << ": " << v.dump() << '\n';
    } else {
      os << key << ": " << scalar_text(v) << '\n';
    }
  }
  return os.str();
}

std::string as_csv(const Json& result) {
  std::ostringstream os;
  os << "table,i,j,value\n";
  bool any = false;
  for (const auto& [key, v] : result.items()) {
    if (!is_table(v)) continue;
    any = true;
    for (const auto& c : v["cells"]) os << key << ',' << c["i"] << ',' << c["j"] << ',' << scalar_text(c["value"]) << '\n';
  }
  if (!any) throw DomainError("csv output needs a command that produces tables");
  return os.str();
}

}  // namespace

bool is_table(const Json& v) { return v.is_object() && v.size() == 2 && v.contains("m") && v.contains("cells"); }

std::string format_result(const Json& result, Format format) {
  switch (format) {
    case Format::kJson: return result.dump(2) + "\n";
    case Format::kCsv: return as_csv(result);
    case Format::kTable: break;
  }
  return as_table(result);
}

}  // namespace gvkit::cli
