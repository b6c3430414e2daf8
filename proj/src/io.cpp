#include "hhc/io.hpp"

#include <fstream>
#include <sstream>

#include "hhc/error.hpp"

namespace hhc {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::InvalidInput, where + ": " + what);
}

std::size_t as_index(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) fail(where, "expected a nonnegative integer");
  return v.get<std::size_t>();
}

const json& member(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

std::string torsion_csv(const CohomologyGroup& g) {
  std::string s;
  for (std::size_t i = 0; i < g.torsion.size(); ++i) s += (i ? ";" : "") + g.torsion[i].get_str();
  return s;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    std::size_t line = 1, col = 1;
    const std::size_t stop = e.byte == 0 ? 0 : std::min(e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
    throw Error(ErrorCode::InvalidInput, origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
  }
}

json load_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

FiniteGroup parse_group(const json& spec, const std::string& where) {
  if (spec.is_string()) {
    const std::string s = spec.get<std::string>();
    if (s.rfind("cyclic:", 0) != 0) fail(where, "expected \"cyclic:N\", got \"" + s + "\"");
    const std::string digits = s.substr(7);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 9) {
      fail(where, "bad order in \"" + s + "\"");
    }
    const std::size_t n = std::stoul(digits);
    if (n == 0) fail(where, "cyclic group of order 0");
    return FiniteGroup::cyclic(n);
  }
  if (!spec.is_object()) fail(where, "group spec must be an object or \"cyclic:N\"");
  if (spec.contains("cyclic")) {
    const std::size_t n = as_index(spec["cyclic"], where + ".cyclic");
    if (n == 0) fail(where, "cyclic group of order 0");
    return FiniteGroup::cyclic(n);
  }
  if (spec.contains("product")) {
    const json& parts = spec["product"];
    if (!parts.is_array() || parts.empty()) fail(where + ".product", "expected a nonempty array of groups");
    FiniteGroup g = parse_group(parts[0], where + ".product[0]");
    for (std::size_t i = 1; i < parts.size(); ++i) {
      g = FiniteGroup::direct_product(g, parse_group(parts[i], where + ".product[" + std::to_string(i) + "]"));
    }
    return g;
  }
  if (spec.contains("table")) {
    const json& t = spec["table"];
    if (!t.is_array()) fail(where + ".table", "expected an array of rows");
    std::vector<std::vector<std::size_t>> table;
    for (std::size_t r = 0; r < t.size(); ++r) {
      const std::string rw = where + ".table[" + std::to_string(r) + "]";
      if (!t[r].is_array()) fail(rw, "expected an array");
      std::vector<std::size_t> row;
      for (std::size_t c = 0; c < t[r].size(); ++c) row.push_back(as_index(t[r][c], rw + "[" + std::to_string(c) + "]"));
      table.push_back(std::move(row));
    }
    std::optional<std::size_t> id;
    if (spec.contains("identity")) id = as_index(spec["identity"], where + ".identity");
    try {
      return FiniteGroup::from_table(std::move(table), id);
    } catch (const Error& e) {
      fail(where, e.detail());
    }
  }
  fail(where, "expected one of \"cyclic\", \"table\", \"product\"");
}

FinitePoset parse_poset(const json& spec, const std::string& where) {
  if (!spec.is_object()) fail(where, "poset spec must be an object");
  const std::size_t size = as_index(member(spec, "size", where), where + ".size");
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  if (spec.contains("relations")) {
    const json& r = spec["relations"];
    if (!r.is_array()) fail(where + ".relations", "expected an array of pairs");
    for (std::size_t k = 0; k < r.size(); ++k) {
      const std::string rw = where + ".relations[" + std::to_string(k) + "]";
      if (!r[k].is_array() || r[k].size() != 2) fail(rw, "expected a pair [i, j]");
      rel.emplace_back(as_index(r[k][0], rw + "[0]"), as_index(r[k][1], rw + "[1]"));
    }
  }
  try {
    return FinitePoset::from_relations(size, rel);
  } catch (const Error& e) {
    fail(where, e.detail());
  }
}

AmalgamCategory parse_amalgam(const json& spec, const std::string& where) {
  if (!spec.is_object()) fail(where, "amalgam spec must be an object");
  FinitePoset p = parse_poset(member(spec, "poset", where), where + ".poset");
  const json& gs = member(spec, "groups", where);
  if (!gs.is_array()) fail(where + ".groups", "expected an array of group specs");
  if (gs.size() != p.size()) {
    fail(where + ".groups", std::to_string(gs.size()) + " groups for " + std::to_string(p.size()) + " objects");
  }
  std::vector<FiniteGroup> groups;
  for (std::size_t i = 0; i < gs.size(); ++i) groups.push_back(parse_group(gs[i], where + ".groups[" + std::to_string(i) + "]"));
  return AmalgamCategory(std::move(p), std::move(groups));
}

InputSpec parse_input(const json& doc, const std::string& where) {
  InputSpec s;
  if (doc.is_object() && doc.contains("amalgam")) {
    s.amalgam = parse_amalgam(doc["amalgam"], where + ": amalgam");
  } else if (doc.is_object() && doc.contains("poset") && doc.contains("groups")) {
    s.amalgam = parse_amalgam(doc, where);
  } else if (doc.is_object() && doc.contains("poset")) {
    s.poset = parse_poset(doc["poset"], where + ": poset");
  } else if (doc.is_object() && doc.contains("size")) {
    s.poset = parse_poset(doc, where);
  } else if (doc.is_object() && doc.contains("group")) {
    s.group = parse_group(doc["group"], where + ": group");
  } else {
    s.group = parse_group(doc, where);
  }
  return s;
}

AlgebraPtr make_algebra(const InputSpec& spec, const Ring& ring) {
  if (spec.group) return group_ring(*spec.group, ring);
  if (spec.poset) return poset_algebra(*spec.poset, ring);
  if (spec.amalgam) return amalgam_algebra(*spec.amalgam, ring);
  throw Error(ErrorCode::InvalidInput, "empty input");
}

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "text") return OutputFormat::Text;
  throw Error(ErrorCode::InvalidInput, "unknown format '" + name + "' (use json, csv or text)");
}

std::string format_table(const std::vector<CohomologyGroup>& groups, const Ring& ring, OutputFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::Json: {
      json out = json::array();
      for (std::size_t n = 0; n < groups.size(); ++n) {
        json g = to_json(groups[n]);
        g["degree"] = n;
        out.push_back(g);
      }
      os << json{{"ring", ring.name()}, {"cohomology", out}}.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv:
      os << "degree,free_rank,torsion\n";
      for (std::size_t n = 0; n < groups.size(); ++n) {
        os << n << "," << groups[n].free_rank << "," << torsion_csv(groups[n]) << "\n";
      }
      break;
    case OutputFormat::Text:
      for (std::size_t n = 0; n < groups.size(); ++n) os << "H^" << n << " = " << render(groups[n], ring) << "\n";
      break;
  }
  return os.str();
}

std::string format_report(const Report& report, OutputFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::Json:
      os << report.to_json().dump(2) << "\n";
      break;
    case OutputFormat::Csv:
      if (!report.per_degree.empty()) {
        os << "degree,lhs_free_rank,lhs_torsion,rhs_free_rank,rhs_torsion,match\n";
        for (const auto& d : report.per_degree) {
          os << d.degree << "," << d.lhs.free_rank << "," << torsion_csv(d.lhs) << "," << d.rhs.free_rank << ","
             << torsion_csv(d.rhs) << "," << (d.match ? "true" : "false") << "\n";
        }
      }
      if (!report.checks.empty()) {
        os << "check,pass,trials,detail\n";
        for (const auto& c : report.checks) {
          os << c.name << "," << (c.pass ? "true" : "false") << "," << c.trials << "," << csv_quote(c.detail) << "\n";
        }
      }
      break;
    case OutputFormat::Text:
      os << report.check << " over " << report.ring.name() << "\n";
      for (const auto& d : report.per_degree) {
        os << "  H^" << d.degree << ": " << render(d.lhs, report.ring) << "  vs  " << render(d.rhs, report.ring)
           << (d.match ? "  ok" : "  MISMATCH") << "\n";
      }
      for (const auto& c : report.checks) {
        os << "  " << (c.pass ? "ok   " : "FAIL ") << c.name << " (" << c.trials << " trials)";
        if (!c.detail.empty()) os << ": " << c.detail;
        os << "\n";
      }
      os << (report.pass ? "PASS" : "FAIL") << "\n";
      break;
  }
  return os.str();
}

}  // namespace hhc
