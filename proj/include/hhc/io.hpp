#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hhc/algebra.hpp"
#include "hhc/cohomology.hpp"
#include "hhc/engine.hpp"

namespace hhc {

/// Parses a JSON file; syntax errors become InvalidInput "FILE:line:col: message".
nlohmann::json load_json(const std::string& path);
/// Same for in-memory text; `origin` stands in for the file name.
nlohmann::json parse_json(const std::string& text, const std::string& origin);

/// {"cyclic": n} | {"table": [[...]], "identity": i} | {"product": [g, h]} | "cyclic:N".
FiniteGroup parse_group(const nlohmann::json& spec, const std::string& where = "group");
/// {"size": N, "relations": [[i, j], ...]}
FinitePoset parse_poset(const nlohmann::json& spec, const std::string& where = "poset");
/// {"poset": ..., "groups": [groupspec, ...]}
AmalgamCategory parse_amalgam(const nlohmann::json& spec, const std::string& where = "amalgam");

/// Contents of an --input document. Exactly one of the members is set.
struct InputSpec {
  std::optional<FiniteGroup> group;
  std::optional<FinitePoset> poset;
  std::optional<AmalgamCategory> amalgam;
};

/// Accepts {"group": ...}, {"poset": ...}, {"amalgam": ...}, or a bare group/poset/amalgam spec.
InputSpec parse_input(const nlohmann::json& doc, const std::string& where);

AlgebraPtr make_algebra(const InputSpec& spec, const Ring& ring);

enum class OutputFormat { Json, Csv, Text };
OutputFormat parse_format(const std::string& name);

/// Cohomology table H^0..H^{N-1}.
std::string format_table(const std::vector<CohomologyGroup>& groups, const Ring& ring, OutputFormat fmt);
std::string format_report(const Report& report, OutputFormat fmt);

}  // namespace hhc
