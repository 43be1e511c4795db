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

#include "aggfuzz/acri.hpp"

#include <algorithm>

#include "aggfuzz/errors.hpp"

namespace aggfuzz {

DiscreteFuzzySet acri_fmp(const DiscreteFuzzySet& d_prime, const DiscreteFuzzySet& d,
                          const DiscreteFuzzySet& b, const Aggregation& a,
                          const Implication& imp) {
  if (!d_prime.same_universe(d)) {
    throw UniverseMismatch("premise and antecedent live on different universes");
  }
  DiscreteFuzzySet out(b.universe());
  for (std::size_t y = 0; y < b.size(); ++y) {
    double best = 0.0;
    for (std::size_t x = 0; x < d.size(); ++x) {
      best = std::max(best, a(d_prime[x], imp(d[x], b[y])));
    }
    out.set(y, best);
  }
  return out;
}

DiscreteFuzzySet acri_fmt(const DiscreteFuzzySet& b_prime, const DiscreteFuzzySet& d,
                          const DiscreteFuzzySet& b, const Aggregation& a,
                          const Implication& imp) {
  if (!b_prime.same_universe(b)) {
    throw UniverseMismatch("premise and consequent live on different universes");
  }
  DiscreteFuzzySet out(d.universe());
  for (std::size_t x = 0; x < d.size(); ++x) {
    double best = 0.0;
    for (std::size_t y = 0; y < b.size(); ++y) {
      best = std::max(best, a(b_prime[y], imp(d[x], b[y])));
    }
    out.set(x, best);
  }
  return out;
}

void validate_rule_base(const RuleBase& rb) {
  if (rb.rules.empty()) throw Error("rule base has no rules");
  const auto& first = rb.rules.front();
  if (first.antecedents.empty()) throw ArityMismatch("rules need at least one antecedent");
  for (const auto& rule : rb.rules) {
    if (rule.antecedents.size() != first.antecedents.size()) {
      throw ArityMismatch("rules disagree on the number of antecedents");
    }
    for (std::size_t i = 0; i < rule.antecedents.size(); ++i) {
      if (!rule.antecedents[i].same_universe(first.antecedents[i])) {
        throw UniverseMismatch("rule antecedents disagree on input universe " +
                               std::to_string(i + 1));
      }
    }
    if (!rule.consequent.same_universe(first.consequent)) {
      throw UniverseMismatch("rule consequents live on different universes");
    }
  }
}

namespace {

const BinaryFn& arrow_fn(const RuleArrow& arrow) {
  if (const auto* agg = std::get_if<Aggregation>(&arrow)) return agg->fn;
  return std::get<Implication>(arrow).fn;
}

// Odometer over the product of the input universes.
class ProductIndex {
 public:
  explicit ProductIndex(std::vector<std::size_t> sizes)
      : sizes_(std::move(sizes)), index_(sizes_.size(), 0) {}

  const std::vector<std::size_t>& current() const { return index_; }

  bool advance() {
    for (std::size_t i = index_.size(); i-- > 0;) {
      if (++index_[i] < sizes_[i]) return true;
      index_[i] = 0;
    }
    return false;
  }

 private:
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> index_;
};

double fold_membership(const std::vector<DiscreteFuzzySet>& sets,
                       const std::vector<std::size_t>& point, const Aggregation& combiner) {
  double acc = sets[0][point[0]];
  for (std::size_t i = 1; i < sets.size(); ++i) acc = combiner(acc, sets[i][point[i]]);
  return acc;
}

void check_inputs(std::span<const DiscreteFuzzySet> inputs, const RuleBase& rb) {
  validate_rule_base(rb);
  if (inputs.size() != rb.arity()) {
    throw ArityMismatch("got " + std::to_string(inputs.size()) + " inputs for arity " +
                        std::to_string(rb.arity()));
  }
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (!inputs[i].same_universe(rb.rules.front().antecedents[i])) {
      throw UniverseMismatch("input " + std::to_string(i + 1) +
                             " does not match the rule antecedent universe");
    }
  }
}

}  // namespace

DiscreteFuzzySet fita(std::span<const DiscreteFuzzySet> inputs, const RuleBase& rb,
                      const Aggregation& compose, const RuleArrow& arrow,
                      const Aggregation& combiner) {
  check_inputs(inputs, rb);
  const BinaryFn& arr = arrow_fn(arrow);
  const DiscreteFuzzySet& consequent0 = rb.rules.front().consequent;
  const std::vector<DiscreteFuzzySet> input_sets(inputs.begin(), inputs.end());

  std::vector<std::size_t> sizes;
  for (const auto& in : input_sets) sizes.push_back(in.size());

  DiscreteFuzzySet out(consequent0.universe());
  std::vector<double> per_rule(rb.rules.size(), 0.0);
  for (std::size_t y = 0; y < consequent0.size(); ++y) {
    std::fill(per_rule.begin(), per_rule.end(), 0.0);
    for (std::size_t j = 0; j < rb.rules.size(); ++j) {
      const MisoRule& rule = rb.rules[j];
      double best = 0.0;
      ProductIndex it(sizes);
      do {
        const double premise = fold_membership(input_sets, it.current(), rb.and_combiner);
        const double antecedent = fold_membership(rule.antecedents, it.current(), rb.and_combiner);
        best = std::max(best, compose(premise, arr(antecedent, rule.consequent[y])));
      } while (it.advance());
      per_rule[j] = best;
    }
    double acc = per_rule[0];
    for (std::size_t j = 1; j < per_rule.size(); ++j) acc = combiner(acc, per_rule[j]);
    out.set(y, acc);
  }
  return out;
}

DiscreteFuzzySet fati(std::span<const DiscreteFuzzySet> inputs, const RuleBase& rb,
                      const Aggregation& compose, const RuleArrow& arrow,
                      const Aggregation& combiner) {
  check_inputs(inputs, rb);
  const BinaryFn& arr = arrow_fn(arrow);
  const DiscreteFuzzySet& consequent0 = rb.rules.front().consequent;
  const std::vector<DiscreteFuzzySet> input_sets(inputs.begin(), inputs.end());

  std::vector<std::size_t> sizes;
  for (const auto& in : input_sets) sizes.push_back(in.size());

  DiscreteFuzzySet out(consequent0.universe());
  for (std::size_t y = 0; y < consequent0.size(); ++y) {
    double best = 0.0;
    ProductIndex it(sizes);
    do {
      const double premise = fold_membership(input_sets, it.current(), rb.and_combiner);
      double relation = 0.0;
      for (std::size_t j = 0; j < rb.rules.size(); ++j) {
        const MisoRule& rule = rb.rules[j];
        const double antecedent = fold_membership(rule.antecedents, it.current(), rb.and_combiner);
        const double translated = arr(antecedent, rule.consequent[y]);
        relation = (j == 0) ? translated : combiner(relation, translated);
      }
      best = std::max(best, compose(premise, relation));
    } while (it.advance());
    out.set(y, best);
  }
  return out;
}

LeqReport pointwise_leq(const Implication& lhs, const Implication& rhs, const Grid& grid,
                        double tol) {
  for (double x : grid.points) {
    for (double y : grid.points) {
      const double l = lhs(x, y);
      const double r = rhs(x, y);
      if (l > r + tol) {
        LeqReport rep;
        rep.holds = false;
        rep.at_x = x;
        rep.at_y = y;
        rep.lhs = l;
        rep.rhs = r;
        return rep;
      }
    }
  }
  return {};
}

}  // namespace aggfuzz
