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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aggfuzz/asbr.hpp"
#include "aggfuzz/fuzzy_set.hpp"

namespace aggfuzz {

enum class Method { acri, asbr1, asbr2, asbr3, asbr4, aqip };
enum class GmpRule { gmp1, gmp2, gmp2_prime, gmp3, gmp4 };

std::string method_name(Method m);
std::string rule_name(GmpRule r);

enum class VerdictKind { pass, fail, not_applicable };

// What the sampler must arrange before a trial runs.
struct Requirements {
  bool d_normal = false;
  bool dprime_normal = false;
  bool dcomplement_normal = false;  // D has a zero point
  bool crisp_d = false;
  // Monotonicity premises sampled as a chain D' <= D'' <= D, so that a
  // similarity measure orders the premises the way the inclusion does.
  bool nested_within_d = false;
};

struct ConnectiveSelection {
  std::string aggregation = "product";
  std::vector<double> aggregation_params;
  std::string implication = "goguen";
  std::string negation = "standard";
  std::string similarity = "jaccard";
};

// One verdict cell: connectives and premise shape under which the rule is
// exercised, following the hypotheses of the result that claims it.
struct RuleCheckSetup {
  ConnectiveSelection connectives;
  Requirements requirements;
  std::string note;  // free-form record of the hypothesis choice
  // Known hard instances are replayed before the random sweep, so expected
  // failures carry a stable counterexample independent of the seed.
  bool canonical_probes = true;
};

struct SamplingPolicy {
  std::size_t universe_min = 3;
  std::size_t universe_max = 5;
  double membership_step = 0.25;
  int trials = 500;
  std::uint64_t seed = 1;
};

struct HypothesisConfig {
  Method method = Method::acri;
  SamplingPolicy sampling;
  std::map<GmpRule, RuleCheckSetup> rules;  // absent rule = not applicable
  std::string annotation;                   // row-level caveat, rendered as a footnote
};

struct Counterexample {
  int trial = -1;
  std::uint64_t seed = 0;
  std::map<std::string, DiscreteFuzzySet> sets;
  std::map<std::string, double> scalars;
  std::string violating_label;
  std::string description;
};

struct RuleVerdict {
  VerdictKind kind = VerdictKind::not_applicable;
  int trials_run = 0;
  std::optional<Counterexample> counterexample;
  std::string note;
  std::string hypothesis;  // connectives and premise shape this cell ran under
};

RuleVerdict check_rule(const HypothesisConfig& cfg, GmpRule rule);

struct MethodRowReport {
  Method method = Method::acri;
  std::map<GmpRule, RuleVerdict> verdicts;
  std::string annotation;
};

struct ValidityReport {
  std::vector<MethodRowReport> rows;

  std::string render_table() const;  // check/cross grid with footnotes
  std::string render_text() const;   // verbose per-cell details
};

// Row configurations reproducing the published verdict matrix: each cell
// runs under the hypotheses of the result that claims it, which for the
// similarity schemes means different aggregations per cell.
std::vector<HypothesisConfig> default_configs(int trials = 500, std::uint64_t seed = 1);

ValidityReport table1_report(const std::vector<HypothesisConfig>& configs);

}  // namespace aggfuzz
