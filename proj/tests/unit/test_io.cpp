#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "hhc/error.hpp"
#include "hhc/io.hpp"

using namespace hhc;
using nlohmann::json;

namespace {

std::string error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("syntax errors carry line and column") {
  const std::string text = "{\n  \"group\": {\"cyclic\": 2},\n  \"oops\" 3\n}\n";
  auto msg = error_of([&] { parse_json(text, "in.json"); });
  CHECK(msg.find("in.json:3:10: syntax error") != std::string::npos);
  auto first = error_of([&] { parse_json("[1,", "x"); });
  CHECK(first.find("x:1:") != std::string::npos);
  CHECK(error_of([] { load_json("/nonexistent/file.json"); }).find("cannot open") != std::string::npos);
}

TEST_CASE("group specs") {
  CHECK(parse_group("cyclic:5").order() == 5);
  CHECK(parse_group(json{{"cyclic", 3}}).order() == 3);
  CHECK(parse_group(json::parse(R"({"product":[{"cyclic":2},"cyclic:3"]})")).order() == 6);
  auto z3 = parse_group(json::parse(R"({"table":[[0,1,2],[1,2,0],[2,0,1]],"identity":0})"));
  CHECK(z3.order() == 3);
  CHECK(z3.table() == FiniteGroup::cyclic(3).table());

  CHECK(error_of([] { parse_group("cyclic:0"); }).find("order 0") != std::string::npos);
  CHECK(error_of([] { parse_group("dihedral:4"); }).find("cyclic:N") != std::string::npos);
  CHECK(error_of([] { parse_group(json{{"cyclic", -1}}); }).find("group.cyclic") != std::string::npos);
  auto bad = error_of([] { parse_group(json::parse(R"({"table":[[0,1],[0,1]]})")); });
  CHECK(bad.rfind("InvalidInput: group: ", 0) == 0);
  auto nested = error_of([] { parse_group(json::parse(R"({"product":[{"cyclic":2},{"cyclic":"x"}]})")); });
  CHECK(nested.find("group.product[1].cyclic") != std::string::npos);
}

TEST_CASE("poset and amalgam specs") {
  auto p = parse_poset(json::parse(R"({"size":3,"relations":[[0,1],[1,2]]})"));
  CHECK(p.size() == 3);
  CHECK(p.leq(0, 2));
  CHECK(error_of([] { parse_poset(json::parse(R"({"relations":[]})")); }).find("missing \"size\"") !=
        std::string::npos);
  CHECK(error_of([] { parse_poset(json::parse(R"({"size":2,"relations":[[0,1],[1,0]]})")); }).rfind(
            "InvalidInput: poset: ", 0) == 0);
  CHECK(error_of([] { parse_poset(json::parse(R"({"size":2,"relations":[[0]]})")); }).find("relations[0]") !=
        std::string::npos);

  auto a = parse_amalgam(json::parse(R"({"poset":{"size":2,"relations":[[0,1]]},"groups":[{"cyclic":2},"cyclic:1"]})"));
  CHECK(a.objects() == 2);
  CHECK(a.morphism_count() == 2 + 1 + 1);
  CHECK(error_of([] { parse_amalgam(json::parse(R"({"poset":{"size":2},"groups":[]})")); }).find("0 groups for 2") !=
        std::string::npos);
}

TEST_CASE("input documents") {
  CHECK(parse_input(json::parse(R"({"group":"cyclic:2"})"), "f").group);
  CHECK(parse_input(json::parse(R"("cyclic:2")"), "f").group);
  CHECK(parse_input(json::parse(R"({"poset":{"size":2}})"), "f").poset);
  CHECK(parse_input(json::parse(R"({"size":2})"), "f").poset);
  CHECK(parse_input(json::parse(R"({"poset":{"size":1},"groups":["cyclic:2"]})"), "f").amalgam);
  CHECK(parse_input(json::parse(R"({"amalgam":{"poset":{"size":1},"groups":["cyclic:2"]}})"), "f").amalgam);
  auto msg = error_of([] { parse_input(json::parse(R"({"group":{"cyclic":0}})"), "f.json"); });
  CHECK(msg.find("f.json: group") != std::string::npos);

  auto spec = parse_input(json::parse(R"({"size":2,"relations":[[0,1]]})"), "f");
  CHECK(make_algebra(spec, Ring::integers())->dim() == 3);
  CHECK(make_algebra(parse_input(json("cyclic:4"), "f"), Ring::modulo(2))->dim() == 4);
  CHECK_THROWS_AS(make_algebra(InputSpec{}, Ring::integers()), Error);
}

TEST_CASE("table formats") {
  std::vector<CohomologyGroup> g(3);
  g[0].free_rank = 1;
  g[2].torsion = {mpz_class(2), mpz_class(6)};
  CHECK(format_table(g, Ring::integers(), OutputFormat::Text) == "H^0 = Z\nH^1 = 0\nH^2 = Z/2 ⊕ Z/6\n");
  CHECK(format_table(g, Ring::integers(), OutputFormat::Csv) == "degree,free_rank,torsion\n0,1,\n1,0,\n2,0,2;6\n");
  auto j = json::parse(format_table(g, Ring::integers(), OutputFormat::Json));
  CHECK(j["ring"] == "Z");
  CHECK(j["cohomology"][2]["degree"] == 2);
  CHECK(j["cohomology"][2]["torsion"] == json::array({2, 6}));
  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK_THROWS_AS(parse_format("xml"), Error);
}

TEST_CASE("report formats") {
  Report r;
  r.check = "demo";
  r.ring = Ring::modulo(2);
  CohomologyGroup one;
  one.free_rank = 1;
  r.per_degree.push_back({0, one, one, true});
  r.checks.push_back({"thing", false, 4, "bad, \"quoted\""});
  r.pass = false;
  auto text = format_report(r, OutputFormat::Text);
  CHECK(text == "demo over Z/2\n  H^0: Z/2  vs  Z/2  ok\n  FAIL thing (4 trials): bad, \"quoted\"\nFAIL\n");
  auto csv = format_report(r, OutputFormat::Csv);
  CHECK(csv.find("0,1,,1,,true\n") != std::string::npos);
  CHECK(csv.find("thing,false,4,\"bad, \"\"quoted\"\"\"\n") != std::string::npos);
  auto j = json::parse(format_report(r, OutputFormat::Json));
  CHECK(j["pass"] == false);
  CHECK(j["checks"][0]["name"] == "thing");
}
