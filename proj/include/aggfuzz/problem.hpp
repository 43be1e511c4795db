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

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "aggfuzz/acri.hpp"
#include "aggfuzz/fuzzy_set.hpp"
#include "aggfuzz/validity.hpp"

namespace aggfuzz {

// One task per problem file. kind selects the engine entry point; the other
// fields are interpreted per kind.
struct Task {
  std::string kind;                           // infer | residuate | classify | validate | report
  std::string method;                         // infer: acri, acri-fmt, fita, fati, asbr,
                                              //        aqip-fmp, aqip-fmt, qip-tnorm
  int scheme = 1;                             // asbr only
  std::map<std::string, std::string> inputs;  // role -> fuzzy set name
  std::string rule_base;                      // fita/fati
  std::string arrow = "implication";          // fita/fati: implication | aggregation
  std::string combiner = "min";               // fita/fati: aggregation name
  std::string residuate_from;                 // residuate: connective name
  std::string classify_target = "aggregation";
};

struct NamedRuleBase {
  std::vector<std::pair<std::vector<std::string>, std::string>> rules;  // set names
  std::string and_combiner = "min";
};

struct ProblemFile {
  std::string source;
  std::map<std::string, FiniteUniverse> universes;
  std::map<std::string, DiscreteFuzzySet> fuzzy_sets;
  ConnectiveSelection connectives;   // builtin-name echo
  nlohmann::json connectives_spec;   // raw selection, resolves derived families
  std::map<std::string, NamedRuleBase> rule_bases;
  Task task;

  const DiscreteFuzzySet& require_set(const std::string& name) const;
  RuleBase resolve_rule_base(const std::string& name) const;
};

ProblemFile parse_problem(const std::string& path);
ProblemFile parse_problem_json(const nlohmann::json& j, const std::string& source);

struct RunOptions {
  std::string method_override;
  std::optional<int> scheme_override;
  std::string similarity_override;
  double tol_eps = 1e-9;
  int grid_n = 101;
  int trials = 500;
  std::uint64_t seed = 1;
  std::string format = "text";  // text | json | table
  // verdict assertions, e.g. {"gmp1","pass"} or {"acri.gmp3","fail"}
  std::vector<std::pair<std::string, std::string>> expectations;
};

struct RunOutcome {
  int exit_code = 0;           // 0 ok, 1 failed expectation, 2 input error
  nlohmann::json artifact;
  std::string text;
};

RunOutcome run_task(const ProblemFile& problem, const RunOptions& opts);

// Standalone entry points used by the command line when no problem file is
// involved.
RunOutcome run_residuate(const std::string& from, const RunOptions& opts);
RunOutcome run_classify_name(const std::string& kind, const std::string& name,
                             const std::vector<double>& params, const RunOptions& opts);
RunOutcome run_validate_method(const std::string& method, const RunOptions& opts);
RunOutcome run_report(const RunOptions& opts);

// Serialization helpers. Values are quantized to 12 significant digits so
// emitted sets re-parse to equal values and re-emit byte-identically.
double quantize_sig12(double v);
nlohmann::json set_to_json(const DiscreteFuzzySet& d);
nlohmann::json report_to_json(const ValidityReport& report);

}  // namespace aggfuzz
