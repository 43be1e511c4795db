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

#include <span>
#include <variant>
#include <vector>

#include "aggfuzz/implications.hpp"
#include "aggfuzz/relation.hpp"

namespace aggfuzz {

// Aggregation-based compositional rule of inference, single rule.
// Modus-ponens direction: B'(y) = max_x A(D'(x), I(D(x), B(y))).
DiscreteFuzzySet acri_fmp(const DiscreteFuzzySet& d_prime, const DiscreteFuzzySet& d,
                          const DiscreteFuzzySet& b, const Aggregation& a, const Implication& imp);

// Modus-tollens direction: D'(x) = max_y A(B'(y), I(D(x), B(y))).
DiscreteFuzzySet acri_fmt(const DiscreteFuzzySet& b_prime, const DiscreteFuzzySet& d,
                          const DiscreteFuzzySet& b, const Aggregation& a, const Implication& imp);

// Multi-input single-output rule: one antecedent set per input universe.
struct MisoRule {
  std::vector<DiscreteFuzzySet> antecedents;
  DiscreteFuzzySet consequent;
};

// Rules share antecedent universes (position by position) and the consequent
// universe. ANDs inside a rule are evaluated by a left fold of and_combiner.
struct RuleBase {
  std::vector<MisoRule> rules;
  Aggregation and_combiner;

  std::size_t arity() const { return rules.empty() ? 0 : rules.front().antecedents.size(); }
};

void validate_rule_base(const RuleBase& rb);

// Rule translation: a t-norm-style conjunction or a fuzzy implication.
using RuleArrow = std::variant<Aggregation, Implication>;

// First infer then aggregate: per-rule conclusions combined pointwise by a
// left fold of the binary combiner. A single rule reduces to acri_fmp on the
// cylinder of its antecedents.
DiscreteFuzzySet fita(std::span<const DiscreteFuzzySet> inputs, const RuleBase& rb,
                      const Aggregation& compose, const RuleArrow& arrow,
                      const Aggregation& combiner);

// First aggregate then infer: rule relations folded into one, then a single
// sup-A composition with the input.
DiscreteFuzzySet fati(std::span<const DiscreteFuzzySet> inputs, const RuleBase& rb,
                      const Aggregation& compose, const RuleArrow& arrow,
                      const Aggregation& combiner);

struct LeqReport {
  bool holds = true;
  double at_x = 0.0, at_y = 0.0;
  double lhs = 0.0, rhs = 0.0;
};

// lhs(x,y) <= rhs(x,y) + tol on all grid pairs; first counterexample
// otherwise.
LeqReport pointwise_leq(const Implication& lhs, const Implication& rhs, const Grid& grid,
                        double tol = 1e-9);

}  // namespace aggfuzz
