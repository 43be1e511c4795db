/*
   Copyright 2026 The aggfuzz Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <fstream>

#include <doctest.h>

#include "aggfuzz/acri.hpp"
#include "aggfuzz/problem.hpp"

using namespace aggfuzz;
using nlohmann::json;

namespace {

const char* kDataDir = AGGFUZZ_DATA_DIR;

json minimal_problem() {
  return json::parse(R"({
    "universes": {"U": ["x1", "x2"], "V": ["y1"]},
    "fuzzy_sets": {
      "D": {"universe": "U", "membership": {"x1": 1.0}},
      "B": {"universe": "V", "membership": {"y1": 0.5}},
      "Dp": {"universe": "U", "membership": {"x2": 0.5}}
    },
    "connectives": {"aggregation": "product", "implication": "goguen"},
    "task": {"kind": "infer", "method": "acri",
             "inputs": {"d_prime": "Dp", "d": "D", "b": "B"}}
  })");
}

}  // namespace

TEST_CASE("the shipped worked instance parses with a normal antecedent") {
  const ProblemFile p = parse_problem(std::string(kDataDir) + "/example_6_2.json");
  REQUIRE(p.universes.count("U") == 1);
  REQUIRE(p.universes.at("U").size() == 5);
  const DiscreteFuzzySet& d = p.require_set("D");
  CHECK(is_normal(d));
  CHECK(d.at("x2") == 0.2);
  CHECK(d.at("x4") == 0.0);
  CHECK(p.connectives.implication == "goguen");
  CHECK(p.task.kind == "infer");
  CHECK(p.task.method == "aqip-fmp");
}

TEST_CASE("running the shipped instances reproduces the frozen conclusions") {
  RunOptions opts;
  const RunOutcome first = run_task(parse_problem(std::string(kDataDir) + "/example_6_2.json"),
                                    opts);
  CHECK(first.exit_code == 0);
  CHECK(first.artifact.at("result").at("membership").at("y5").get<double>() == 0.5);
  CHECK(first.artifact.at("result").at("membership").at("y4").get<double>() == 0.5);
  CHECK(first.artifact.at("result").at("membership").count("y1") == 0);  // zeros are omitted

  const RunOutcome second = run_task(parse_problem(std::string(kDataDir) + "/example_6_5.json"),
                                     opts);
  CHECK(second.artifact.at("result").at("membership").count("y1") == 0);  // exact zero
}

TEST_CASE("membership outside the unit interval names the set and the label") {
  json j = minimal_problem();
  j["fuzzy_sets"]["D"]["membership"]["x2"] = 1.2;
  try {
    parse_problem_json(j, "inline");
    FAIL("expected a range error");
  } catch (const RangeError& e) {
    const std::string message = e.what();
    CHECK(message.find("fuzzy_sets.D") != std::string::npos);
    CHECK(message.find("x2") != std::string::npos);
  }
}

TEST_CASE("unknown names and dangling references are reported as such") {
  json bad_imp = minimal_problem();
  bad_imp["connectives"]["implication"] = "zadeh";
  CHECK_THROWS_AS(parse_problem_json(bad_imp, "inline"), UnresolvedReference);

  json bad_universe = minimal_problem();
  bad_universe["fuzzy_sets"]["D"]["universe"] = "W";
  CHECK_THROWS_AS(parse_problem_json(bad_universe, "inline"), UnresolvedReference);

  json bad_label = minimal_problem();
  bad_label["fuzzy_sets"]["D"]["membership"]["x9"] = 0.5;
  CHECK_THROWS_AS(parse_problem_json(bad_label, "inline"), UnresolvedReference);

  json bad_input = minimal_problem();
  bad_input["task"]["inputs"]["d"] = "missing";
  CHECK_THROWS_AS(parse_problem_json(bad_input, "inline"), UnresolvedReference);

  CHECK_THROWS_AS(parse_problem("/nonexistent/problem.json"), ParseError);
  json not_object = json::array();
  CHECK_THROWS_AS(parse_problem_json(not_object, "inline"), ParseError);
}

TEST_CASE("duplicate-free universes are enforced at parse time") {
  json dup = minimal_problem();
  dup["universes"]["U"] = {"x1", "x1"};
  CHECK_THROWS_AS(parse_problem_json(dup, "inline"), Error);
}

TEST_CASE("emitted sets re-parse to equal values and re-emit byte-identically") {
  const FiniteUniverse u = make_universe("U", "x", 3);
  DiscreteFuzzySet d(u);
  d.set("x1", 0.1 + 0.2);  // classic non-representable sum
  d.set("x2", 1.0 / 3.0);

  const json emitted = set_to_json(d);
  const std::string dumped = emitted.dump();

  json problem{{"universes", {{"U", {"x1", "x2", "x3"}}}},
               {"fuzzy_sets", {{"D", emitted}}}};
  const ProblemFile parsed = parse_problem_json(problem, "roundtrip");
  const json re_emitted = set_to_json(parsed.require_set("D"));
  CHECK(re_emitted.dump() == dumped);
  CHECK(parsed.require_set("D").at("x1") == quantize_sig12(0.1 + 0.2));
}

TEST_CASE("quantization keeps twelve significant digits") {
  CHECK(quantize_sig12(0.1 + 0.2) == 0.3);
  CHECK(quantize_sig12(0.5) == 0.5);
  CHECK(quantize_sig12(1.0) == 1.0);
  CHECK(quantize_sig12(7.0 / 27.0) == doctest::Approx(7.0 / 27.0).epsilon(1e-11));
}

TEST_CASE("inference through a problem file matches the library call") {
  const ProblemFile p = parse_problem_json(minimal_problem(), "inline");
  RunOptions opts;
  const RunOutcome out = run_task(p, opts);
  const DiscreteFuzzySet direct =
      acri_fmp(p.require_set("Dp"), p.require_set("D"), p.require_set("B"),
               builtin_aggregation("product"), builtin_implication("goguen"));
  CHECK(out.artifact.at("result").at("membership").value("y1", 0.0) ==
        quantize_sig12(direct.at("y1")));
}

TEST_CASE("rule-base tasks run both multi-rule schemes") {
  const ProblemFile p = parse_problem(std::string(kDataDir) + "/rulebase_demo.json");
  RunOptions opts;
  const RunOutcome via_fita = run_task(p, opts);
  CHECK(via_fita.exit_code == 0);

  RunOptions fati_opts;
  fati_opts.method_override = "fati";
  const RunOutcome via_fati = run_task(p, fati_opts);
  CHECK(via_fati.exit_code == 0);

  const RuleBase rb = p.resolve_rule_base("demo");
  CHECK(rb.arity() == 1);
  CHECK(rb.rules.size() == 3);
}

TEST_CASE("scheme overrides reach the similarity method") {
  json j = minimal_problem();
  j["task"]["method"] = "asbr";
  j["task"]["scheme"] = 2;
  const ProblemFile p = parse_problem_json(j, "inline");
  RunOptions opts;
  CHECK(run_task(p, opts).exit_code == 0);
  opts.scheme_override = 9;
  CHECK_THROWS_AS(run_task(p, opts), BadScheme);
}

TEST_CASE("validation expectations drive the exit code") {
  RunOptions opts;
  opts.trials = 40;
  opts.expectations = {{"gmp1", "pass"}, {"gmp4", "pass"}};
  CHECK(run_validate_method("acri", opts).exit_code == 0);

  RunOptions wrong;
  wrong.trials = 40;
  wrong.expectations = {{"gmp3", "fail"}};
  const RunOutcome outcome = run_validate_method("acri", wrong);
  CHECK(outcome.exit_code == 1);
  CHECK(outcome.text.find("expectation failed") != std::string::npos);

  RunOptions unmatched;
  unmatched.trials = 10;
  unmatched.expectations = {{"gmp9", "pass"}};
  CHECK(run_validate_method("acri", unmatched).exit_code == 1);

  CHECK_THROWS_AS(run_validate_method("nope", RunOptions{}), UnresolvedReference);
}

TEST_CASE("report artifacts include counterexample payloads") {
  RunOptions opts;
  opts.trials = 40;
  opts.format = "json";
  const RunOutcome outcome = run_report(opts);
  CHECK(outcome.exit_code == 0);
  bool found_counterexample = false;
  for (const auto& row : outcome.artifact.at("rows")) {
    for (const auto& [name, cell] : row.at("cells").items()) {
      if (cell.contains("counterexample")) {
        found_counterexample = true;
        CHECK(cell.at("counterexample").contains("sets"));
        CHECK(cell.at("counterexample").at("sets").contains("D"));
      }
    }
  }
  CHECK(found_counterexample);
}

TEST_CASE("the residuate entry point rejects unknown names") {
  CHECK_THROWS_AS(run_residuate("nope", RunOptions{}), UnresolvedReference);
  RunOptions opts;
  const RunOutcome outcome = run_residuate("product", opts);
  CHECK(outcome.exit_code == 0);
  CHECK(outcome.artifact.at("result").get<std::string>() == "goguen");
  CHECK(outcome.artifact.at("certified").get<bool>());

  const RunOutcome induced = run_residuate("goguen", opts);
  CHECK(induced.artifact.at("result").get<std::string>() == "product");
}

TEST_CASE("derived implication families resolve from problem files and drive inference") {
  json j = minimal_problem();
  j["connectives"]["implication"] = {{"family", "r_implication"}, {"tnorm", "min"}};
  const ProblemFile p = parse_problem_json(j, "inline");
  RunOptions opts;
  const RunOutcome from_family = run_task(p, opts);

  json named = minimal_problem();
  named["connectives"]["implication"] = "godel";
  const RunOutcome from_name = run_task(parse_problem_json(named, "inline"), opts);
  CHECK(from_family.artifact.at("result") == from_name.artifact.at("result"));

  json bad = minimal_problem();
  bad["connectives"]["implication"] = {{"family", "probabilistic"}, {"copula", "max"}};
  CHECK_THROWS_AS(parse_problem_json(bad, "inline"), Error);
}

TEST_CASE("running a task leaves the problem file untouched") {
  const std::string path = std::string(kDataDir) + "/example_6_2.json";
  std::ifstream before_stream(path);
  const std::string before((std::istreambuf_iterator<char>(before_stream)),
                           std::istreambuf_iterator<char>());
  run_task(parse_problem(path), RunOptions{});
  std::ifstream after_stream(path);
  const std::string after((std::istreambuf_iterator<char>(after_stream)),
                          std::istreambuf_iterator<char>());
  CHECK(before == after);
}

TEST_CASE("the similarity override reaches the conclusion") {
  json j = minimal_problem();
  j["task"]["method"] = "asbr";
  const ProblemFile p = parse_problem_json(j, "inline");
  RunOptions opts;
  opts.similarity_override = "jaccard";
  CHECK(run_task(p, opts).exit_code == 0);
  opts.similarity_override = "nope";
  CHECK_THROWS_AS(run_task(p, opts), UnknownName);
}

TEST_CASE("a named arrow lets the rule translation differ from the composition") {
  const ProblemFile p = parse_problem(std::string(kDataDir) + "/rulebase_demo.json");
  // Reuse the shipped base but translate rules with the min conjunction
  // while composing with the file's product.
  ProblemFile with_named = p;
  with_named.task.arrow = "min";
  RunOptions opts;
  const RunOutcome conjunctive = run_task(with_named, opts);
  CHECK(conjunctive.exit_code == 0);

  ProblemFile with_bad = p;
  with_bad.task.arrow = "nope";
  CHECK_THROWS_AS(run_task(with_bad, opts), UnresolvedReference);
}
