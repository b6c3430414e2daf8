#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hhc/engine.hpp"
#include "hhc/error.hpp"
#include "hhc/io.hpp"
#include "hhc/simplicial.hpp"

namespace {

using namespace hhc;

struct Common {
  std::string input;
  std::string group;
  std::string ring = "Z";
  std::optional<std::size_t> max_degree;
  std::string format = "text";
  std::string output;
  std::size_t max_entries = ResourceGuard{}.max_matrix_entries;
};

void add_common(CLI::App* sub, Common& c, bool with_degree = true) {
  sub->add_option("--input", c.input, "JSON file with a group, poset or amalgam spec");
  sub->add_option("--group", c.group, "group shorthand, e.g. cyclic:3");
  sub->add_option("--ring", c.ring, "Z, Q or Z/m")->capture_default_str();
  if (with_degree) sub->add_option("--max-degree", c.max_degree, "build C^0..C^N, report H^0..H^{N-1}");
  sub->add_option("--format", c.format, "json, csv or text")->capture_default_str();
  sub->add_option("--output", c.output, "write here instead of stdout");
  sub->add_option("--max-entries", c.max_entries, "largest coboundary matrix allowed")->capture_default_str();
}

InputSpec read_input(const Common& c) {
  if (!c.input.empty() && !c.group.empty()) throw Error(ErrorCode::InvalidInput, "give --input or --group, not both");
  if (!c.input.empty()) return parse_input(load_json(c.input), c.input);
  if (!c.group.empty()) {
    InputSpec s;
    s.group = parse_group(nlohmann::json(c.group), "--group");
    return s;
  }
  throw Error(ErrorCode::InvalidInput, "one of --input or --group is required");
}

const FiniteGroup& need_group(const InputSpec& s) {
  if (!s.group) throw Error(ErrorCode::InvalidInput, "this command needs a group");
  return *s.group;
}

AmalgamCategory need_amalgam(const InputSpec& s) {
  if (s.amalgam) return *s.amalgam;
  if (s.poset) return AmalgamCategory(*s.poset, std::vector<FiniteGroup>(s.poset->size(), FiniteGroup::trivial()));
  throw Error(ErrorCode::InvalidInput, "this command needs a poset or amalgam");
}

std::size_t degree_or_default(const Common& c, std::size_t dim) {
  return c.max_degree ? *c.max_degree : default_max_degree(dim);
}

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidInput, c.output + ": cannot write");
  out << text;
}

ComplexVariant parse_variant(const std::string& v) {
  if (v == "full") return ComplexVariant::Full;
  if (v == "ap") return ComplexVariant::AP;
  if (v == "np") return ComplexVariant::NP;
  if (v == "relative") return ComplexVariant::RelativeE;
  throw Error(ErrorCode::InvalidInput, "unknown variant '" + v + "' (use full, ap, np or relative)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild and simplicial cohomology of based algebras"};
  app.require_subcommand(1);

  Common c;
  std::string variant = "full", model = "bar";
  std::size_t trials = 100, cup_index = 3, identity_degree = 3;
  std::uint64_t seed = 42;

  auto* hoch = app.add_subcommand("hochschild", "cohomology of a Hochschild cochain complex");
  add_common(hoch, c);
  hoch->add_option("--variant", variant, "full, ap, np or relative")->capture_default_str();

  auto* simp = app.add_subcommand("simplicial", "cohomology of a simplicial model");
  add_common(simp, c);
  simp->add_option("--model", model, "bar, cyclic, cyclic-unit or nerve")->capture_default_str();

  auto* split = app.add_subcommand("split", "check H(Full) = H(AP) + H(NP) for a group ring");
  add_common(split, c);

  auto* amalgam = app.add_subcommand("amalgam", "check the decomposition of HH of an amalgam algebra");
  add_common(amalgam, c);

  auto* check = app.add_subcommand("check", "randomized cochain identities");
  add_common(check, c, false);
  check->add_option("--trials", trials)->capture_default_str();
  check->add_option("--seed", seed)->capture_default_str();
  check->add_option("--max-degree", identity_degree, "largest p, q")->capture_default_str();
  check->add_option("--max-cup-index", cup_index)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Ring ring = Ring::parse(c.ring);
    const OutputFormat fmt = parse_format(c.format);
    const ResourceGuard guard{c.max_entries};
    const InputSpec spec = read_input(c);

    if (hoch->parsed()) {
      auto alg = make_algebra(spec, ring);
      const std::size_t n = degree_or_default(c, alg->dim());
      emit(c, format_table(hochschild_cohomology(alg, parse_variant(variant), n, guard), ring, fmt));
      return 0;
    }
    if (simp->parsed()) {
      std::shared_ptr<const SimplicialSlice> slice;
      if (model == "nerve") {
        auto cat = need_amalgam(spec);
        slice = SimplicialSlice::nerve(cat, degree_or_default(c, cat.morphism_count()));
      } else {
        const FiniteGroup& g = need_group(spec);
        const std::size_t n = degree_or_default(c, g.order());
        if (model == "bar") {
          slice = SimplicialSlice::bar(g, n);
        } else if (model == "cyclic") {
          slice = SimplicialSlice::cyclic_bar(g, n);
        } else if (model == "cyclic-unit") {
          slice = SimplicialSlice::cyclic_bar_unit(g, n);
        } else {
          throw Error(ErrorCode::InvalidInput, "unknown model '" + model + "' (use bar, cyclic, cyclic-unit or nerve)");
        }
      }
      emit(c, format_table(simplicial_cohomology(*slice, ring, *slice->max_degree(), guard), ring, fmt));
      return 0;
    }
    Report report;
    if (split->parsed()) {
      const FiniteGroup& g = need_group(spec);
      report = verify_splitting(g, ring, degree_or_default(c, g.order()), guard);
    } else if (amalgam->parsed()) {
      auto cat = need_amalgam(spec);
      report = verify_amalgam_theorem(cat, ring, degree_or_default(c, cat.morphism_count()), guard);
    } else {
      report = verify_einfty_identities(make_algebra(spec, ring), trials, seed, IdentityCaps{identity_degree, cup_index});
    }
    emit(c, format_report(report, fmt));
    return report.pass ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
