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

#include "aggfuzz/validity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "aggfuzz/acri.hpp"
#include "aggfuzz/aqip.hpp"
#include "aggfuzz/errors.hpp"
#include "aggfuzz/sampling.hpp"

namespace aggfuzz {

std::string method_name(Method m) {
  switch (m) {
    case Method::acri: return "acri";
    case Method::asbr1: return "asbr1";
    case Method::asbr2: return "asbr2";
    case Method::asbr3: return "asbr3";
    case Method::asbr4: return "asbr4";
    case Method::aqip: return "aqip";
  }
  return "?";
}

std::string rule_name(GmpRule r) {
  switch (r) {
    case GmpRule::gmp1: return "gmp1";
    case GmpRule::gmp2: return "gmp2";
    case GmpRule::gmp2_prime: return "gmp2'";
    case GmpRule::gmp3: return "gmp3";
    case GmpRule::gmp4: return "gmp4";
  }
  return "?";
}

namespace {

constexpr double kTol = 1e-9;

struct ResolvedSetup {
  Aggregation a;
  Implication imp;
  Negation neg;
  SimilarityMeasure sim;
};

ResolvedSetup resolve(const ConnectiveSelection& c) {
  return ResolvedSetup{
      builtin_aggregation(c.aggregation, c.aggregation_params),
      builtin_implication(c.implication),
      builtin_negation(c.negation),
      builtin_similarity(c.similarity),
  };
}

DiscreteFuzzySet conclude(Method m, const ResolvedSetup& rs, const DiscreteFuzzySet& d_prime,
                          const DiscreteFuzzySet& d, const DiscreteFuzzySet& b) {
  switch (m) {
    case Method::acri:
      return acri_fmp(d_prime, d, b, rs.a, rs.imp);
    case Method::asbr1:
      return asbr_conclude(d_prime, d, b, rs.a, rs.imp, rs.sim,
                           AsbrScheme::implication_of_conjunction);
    case Method::asbr2:
      return asbr_conclude(d_prime, d, b, rs.a, rs.imp, rs.sim,
                           AsbrScheme::implication_of_implication);
    case Method::asbr3:
      return asbr_conclude(d_prime, d, b, rs.a, rs.imp, rs.sim,
                           AsbrScheme::conjunction_of_conjunction);
    case Method::asbr4:
      return asbr_conclude(d_prime, d, b, rs.a, rs.imp, rs.sim,
                           AsbrScheme::conjunction_of_implication);
    case Method::aqip:
      return aqip_fmp(d_prime, d, b, rs.imp).conclusion;
  }
  throw Error("unreachable method");
}

struct TrialSets {
  DiscreteFuzzySet d;
  DiscreteFuzzySet b;
  DiscreteFuzzySet d_prime;
  std::optional<DiscreteFuzzySet> d_second;  // wider premise (gmp2) / farther premise (gmp2')
};

Counterexample make_counterexample(int trial, std::uint64_t seed, const TrialSets& sets,
                                   std::string label, std::string description) {
  Counterexample ce;
  ce.trial = trial;
  ce.seed = seed;
  ce.sets["D"] = sets.d;
  ce.sets["B"] = sets.b;
  ce.sets["D'"] = sets.d_prime;
  if (sets.d_second) ce.sets["D''"] = *sets.d_second;
  ce.violating_label = std::move(label);
  ce.description = std::move(description);
  return ce;
}

// Runs one concrete instance against one rule; empty result means the rule
// held on this instance.
std::optional<Counterexample> run_instance(Method m, GmpRule rule, const ResolvedSetup& rs,
                                           const TrialSets& sets, int trial,
                                           std::uint64_t seed) {
  switch (rule) {
    case GmpRule::gmp1: {
      const DiscreteFuzzySet out = conclude(m, rs, sets.d_prime, sets.d, sets.b);
      for (std::size_t y = 0; y < sets.b.size(); ++y) {
        if (sets.b[y] > out[y] + kTol) {
          std::ostringstream os;
          os << "conclusion " << out[y] << " below consequent " << sets.b[y];
          return make_counterexample(trial, seed, sets, sets.b.universe().labels[y], os.str());
        }
      }
      return std::nullopt;
    }
    case GmpRule::gmp2: {
      const DiscreteFuzzySet narrow = conclude(m, rs, sets.d_prime, sets.d, sets.b);
      const DiscreteFuzzySet wide = conclude(m, rs, *sets.d_second, sets.d, sets.b);
      for (std::size_t y = 0; y < sets.b.size(); ++y) {
        if (narrow[y] > wide[y] + kTol) {
          std::ostringstream os;
          os << "conclusion " << narrow[y] << " from the narrower premise exceeds " << wide[y]
             << " from the wider one";
          return make_counterexample(trial, seed, sets, sets.b.universe().labels[y], os.str());
        }
      }
      return std::nullopt;
    }
    case GmpRule::gmp2_prime: {
      const double s_close = rs.sim(sets.d, sets.d_prime);
      const double s_far = rs.sim(sets.d, *sets.d_second);
      // d_prime is the premise at least as similar to the antecedent.
      const DiscreteFuzzySet from_close = conclude(m, rs, sets.d_prime, sets.d, sets.b);
      const DiscreteFuzzySet from_far = conclude(m, rs, *sets.d_second, sets.d, sets.b);
      std::string why;
      if (!sets.b.subset_of(from_close, kTol)) {
        why = "consequent not contained in the conclusion of the closer premise";
      } else if (!from_close.subset_of(from_far, kTol)) {
        why = "conclusion of the closer premise not contained in the farther one";
      } else if (rs.sim(from_close, sets.b) < rs.sim(from_far, sets.b) - kTol) {
        why = "conclusion similarity order contradicts the premise similarity order";
      }
      if (!why.empty()) {
        Counterexample ce = make_counterexample(trial, seed, sets, "", why);
        ce.scalars["S(D,D')"] = s_close;
        ce.scalars["S(D,D'')"] = s_far;
        return ce;
      }
      return std::nullopt;
    }
    case GmpRule::gmp3: {
      const DiscreteFuzzySet out = conclude(m, rs, sets.d_prime, sets.d, sets.b);
      for (std::size_t y = 0; y < sets.b.size(); ++y) {
        if (out[y] < 1.0 - kTol) {
          std::ostringstream os;
          os << "conclusion " << out[y] << " below 1 although the premise is the complement";
          return make_counterexample(trial, seed, sets, sets.b.universe().labels[y], os.str());
        }
      }
      return std::nullopt;
    }
    case GmpRule::gmp4: {
      const DiscreteFuzzySet out = conclude(m, rs, sets.d_prime, sets.d, sets.b);
      for (std::size_t y = 0; y < sets.b.size(); ++y) {
        if (std::abs(out[y] - sets.b[y]) > kTol) {
          std::ostringstream os;
          os << "conclusion " << out[y] << " differs from consequent " << sets.b[y];
          return make_counterexample(trial, seed, sets, sets.b.universe().labels[y], os.str());
        }
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// Known hard instances replayed before the random sweep.
std::vector<TrialSets> canonical_instances(Method m, GmpRule rule, const ResolvedSetup& rs) {
  std::vector<TrialSets> out;
  const FiniteUniverse u5 = make_universe("U", "x", 5);
  const FiniteUniverse v5 = make_universe("V", "y", 5);
  const DiscreteFuzzySet d_worked(u5, {1.0, 0.2, 0.5, 0.0, 0.0});
  const DiscreteFuzzySet b_worked(v5, {0.0, 0.0, 0.0, 0.5, 1.0});

  if (m == Method::aqip && rule == GmpRule::gmp1) {
    TrialSets t{d_worked, b_worked, DiscreteFuzzySet(u5, {0.0, 0.5, 1.0, 0.2, 0.0}), {}};
    out.push_back(std::move(t));
  }
  if (m == Method::aqip && rule == GmpRule::gmp3) {
    TrialSets t{d_worked, b_worked, complement(d_worked, rs.neg), {}};
    out.push_back(std::move(t));
  }
  if (m == Method::aqip && rule == GmpRule::gmp2) {
    const FiniteUniverse u2 = make_universe("U", "x", 2);
    const FiniteUniverse v2 = make_universe("V", "y", 2);
    TrialSets t{DiscreteFuzzySet(u2, {0.0, 1.0}), DiscreteFuzzySet(v2, {0.0, 0.5}),
                DiscreteFuzzySet(u2, {0.5, 1.0}), DiscreteFuzzySet(u2, {1.0, 1.0})};
    out.push_back(std::move(t));
  }
  if (m == Method::asbr4 && rule == GmpRule::gmp3) {
    const FiniteUniverse u3 = make_universe("U", "x", 3);
    const FiniteUniverse v3 = make_universe("V", "y", 3);
    const DiscreteFuzzySet d(u3, {1.0, 0.0, 0.0});
    TrialSets t{d, DiscreteFuzzySet(v3, {0.5, 1.0, 0.0}), complement(d, rs.neg), {}};
    out.push_back(std::move(t));
  }
  return out;
}

bool requirements_satisfiable(const Requirements& req, const SamplingPolicy& policy) {
  if (policy.universe_min > policy.universe_max || policy.universe_min == 0) return false;
  // A normal set with a normal complement needs two distinct points.
  if ((req.d_normal || req.crisp_d) && req.dcomplement_normal && policy.universe_max < 2) {
    return false;
  }
  return true;
}

std::uint64_t cell_seed(const SamplingPolicy& policy, Method m, GmpRule r) {
  return policy.seed * 1000003ULL + static_cast<std::uint64_t>(m) * 131ULL +
         static_cast<std::uint64_t>(r) * 17ULL + 1ULL;
}

std::string hypothesis_echo(const RuleCheckSetup& setup) {
  std::ostringstream os;
  os << "A=" << setup.connectives.aggregation << ", I=" << setup.connectives.implication
     << ", N=" << setup.connectives.negation << ", S=" << setup.connectives.similarity;
  const Requirements& r = setup.requirements;
  std::vector<std::string> req;
  if (r.d_normal) req.push_back("D normal");
  if (r.dprime_normal) req.push_back("D' normal");
  if (r.dcomplement_normal) req.push_back("D complement normal");
  if (r.crisp_d) req.push_back("crisp D");
  if (r.nested_within_d) req.push_back("premise chain inside D");
  if (!req.empty()) {
    os << "; requires";
    for (std::size_t i = 0; i < req.size(); ++i) os << (i ? ", " : " ") << req[i];
  }
  return os.str();
}

}  // namespace

RuleVerdict check_rule(const HypothesisConfig& cfg, GmpRule rule) {
  RuleVerdict verdict;
  const auto it = cfg.rules.find(rule);
  if (it == cfg.rules.end()) {
    verdict.kind = VerdictKind::not_applicable;
    verdict.note = "no hypothesis configured for this cell";
    return verdict;
  }
  const RuleCheckSetup& setup = it->second;
  if (!requirements_satisfiable(setup.requirements, cfg.sampling)) {
    verdict.kind = VerdictKind::not_applicable;
    verdict.note = "requirements unsatisfiable under the sampling policy";
    return verdict;
  }

  const ResolvedSetup rs = resolve(setup.connectives);
  const Requirements& req = setup.requirements;
  const std::uint64_t seed = cell_seed(cfg.sampling, cfg.method, rule);
  SampleRng rng(seed);
  const std::vector<double> levels = membership_levels(cfg.sampling.membership_step);

  verdict.kind = VerdictKind::pass;
  verdict.note = setup.note;
  verdict.hypothesis = hypothesis_echo(setup);

  if (setup.canonical_probes) {
    for (const TrialSets& probe : canonical_instances(cfg.method, rule, rs)) {
      ++verdict.trials_run;
      if (auto ce = run_instance(cfg.method, rule, rs, probe, -1, seed)) {
        ce->description += " (canonical instance)";
        verdict.kind = VerdictKind::fail;
        verdict.counterexample = std::move(ce);
        return verdict;
      }
    }
  }

  const std::size_t span = cfg.sampling.universe_max - cfg.sampling.universe_min + 1;
  for (int t = 0; t < cfg.sampling.trials; ++t) {
    const std::size_t nu = cfg.sampling.universe_min + rng.index(span);
    const std::size_t nv = cfg.sampling.universe_min + rng.index(span);
    const FiniteUniverse u = make_universe("U", "x", nu);
    const FiniteUniverse v = make_universe("V", "y", nv);

    TrialSets sets;
    sets.d = req.crisp_d ? random_crisp_set(u, rng) : random_set(u, levels, rng);
    if (req.d_normal) force_membership_one(sets.d, rng);
    if (req.dcomplement_normal) force_membership_zero(sets.d, rng);
    sets.b = random_set(v, levels, rng);

    switch (rule) {
      case GmpRule::gmp1: {
        sets.d_prime = random_set(u, levels, rng);
        if (req.dprime_normal) force_membership_one(sets.d_prime, rng);
        break;
      }
      case GmpRule::gmp2: {
        if (req.nested_within_d) {
          DiscreteFuzzySet wide = random_subset_of(sets.d, levels, rng);
          sets.d_prime = random_subset_of(wide, levels, rng);
          sets.d_second = std::move(wide);
        } else {
          DiscreteFuzzySet wide = random_set(u, levels, rng);
          if (req.dprime_normal) force_membership_one(wide, rng);
          sets.d_prime = random_subset_of(wide, levels, rng);
          if (req.dprime_normal) {
            for (std::size_t i = 0; i < wide.size(); ++i) {
              if (wide[i] == 1.0) {
                sets.d_prime.set(i, 1.0);
                break;
              }
            }
          }
          sets.d_second = std::move(wide);
        }
        break;
      }
      case GmpRule::gmp2_prime: {
        DiscreteFuzzySet close = random_set(u, levels, rng);
        DiscreteFuzzySet far = random_set(u, levels, rng);
        if (rs.sim(sets.d, close) < rs.sim(sets.d, far)) std::swap(close, far);
        sets.d_prime = std::move(close);
        sets.d_second = std::move(far);
        break;
      }
      case GmpRule::gmp3: {
        sets.d_prime = complement(sets.d, rs.neg);
        break;
      }
      case GmpRule::gmp4: {
        sets.d_prime = sets.d;
        break;
      }
    }

    ++verdict.trials_run;
    if (auto ce = run_instance(cfg.method, rule, rs, sets, t, seed)) {
      verdict.kind = VerdictKind::fail;
      verdict.counterexample = std::move(ce);
      return verdict;
    }
  }
  return verdict;
}

// ---------------------------------------------------------------------------
// Default configurations

namespace {

RuleCheckSetup setup_with(const std::string& aggregation, const std::string& implication,
                          Requirements req, std::string note) {
  RuleCheckSetup s;
  s.connectives.aggregation = aggregation;
  s.connectives.implication = implication;
  s.requirements = req;
  s.note = std::move(note);
  return s;
}

}  // namespace

std::vector<HypothesisConfig> default_configs(int trials, std::uint64_t seed) {
  std::vector<HypothesisConfig> configs;
  SamplingPolicy policy;
  policy.trials = trials;
  policy.seed = seed;

  {
    HypothesisConfig acri;
    acri.method = Method::acri;
    acri.sampling = policy;
    acri.rules[GmpRule::gmp1] = setup_with(
        "product", "goguen", Requirements{.dprime_normal = true},
        "left-continuous aggregation with left neutral 1; implication is its residual");
    acri.rules[GmpRule::gmp2] = setup_with("product", "goguen", Requirements{}, "");
    acri.rules[GmpRule::gmp3] =
        setup_with("product", "goguen", Requirements{.dcomplement_normal = true}, "");
    acri.rules[GmpRule::gmp4] = setup_with("product", "goguen",
                                           Requirements{.d_normal = true}, "");
    configs.push_back(std::move(acri));
  }

  for (Method m : {Method::asbr1, Method::asbr2}) {
    HypothesisConfig row;
    row.method = m;
    row.sampling = policy;
    row.rules[GmpRule::gmp1] = setup_with(
        "product", "goguen", Requirements{.d_normal = true, .dprime_normal = true},
        "aggregation with left neutral 1; right-continuous implication with left neutrality");
    row.rules[GmpRule::gmp2_prime] =
        setup_with("product", "goguen", Requirements{.d_normal = true}, "");
    row.rules[GmpRule::gmp3] = setup_with(
        "product", "goguen",
        Requirements{.d_normal = true, .dcomplement_normal = true, .crisp_d = true},
        "crisp antecedent so the premise and its complement are fully dissimilar");
    row.rules[GmpRule::gmp4] =
        setup_with("product", "goguen", Requirements{.d_normal = true}, "");
    configs.push_back(std::move(row));
  }

  for (Method m : {Method::asbr3, Method::asbr4}) {
    HypothesisConfig row;
    row.method = m;
    row.sampling = policy;
    row.rules[GmpRule::gmp1] =
        setup_with("max", "goguen", Requirements{.d_normal = true},
                   "aggregation with left neutral 0 on the similarity side");
    row.rules[GmpRule::gmp2] = setup_with(
        "max", "goguen", Requirements{.d_normal = true, .nested_within_d = true},
        "premises sampled as chains inside the antecedent, where the similarity respects "
        "inclusion");
    row.rules[GmpRule::gmp3] = setup_with(
        "max", "goguen",
        Requirements{.d_normal = true, .dcomplement_normal = true, .crisp_d = true},
        m == Method::asbr3 ? "aggregation with neutral element 0"
                           : "no hypothesis makes this cell hold; expected to fail");
    row.rules[GmpRule::gmp4] = setup_with(
        "product", "goguen", Requirements{.d_normal = true},
        "left neutral 1 here; a different aggregation than the conjunction-side cells, no "
        "single choice satisfies both");
    configs.push_back(std::move(row));
  }

  {
    HypothesisConfig aqip;
    aqip.method = Method::aqip;
    aqip.sampling = policy;
    aqip.annotation =
        "gmp1 is often tabulated as satisfied for a normal premise, but the shipped worked "
        "instance violates it (conclusion 0.5 below consequent 1 at y5); the empirical verdict "
        "is reported.";
    aqip.rules[GmpRule::gmp1] = setup_with(
        "product", "goguen", Requirements{.d_normal = true, .dprime_normal = true}, "");
    aqip.rules[GmpRule::gmp2] = setup_with(
        "product", "reichenbach", Requirements{.dprime_normal = true},
        "fails for implications whose induced aggregation is not commutative");
    aqip.rules[GmpRule::gmp3] =
        setup_with("product", "goguen", Requirements{.dcomplement_normal = true}, "");
    aqip.rules[GmpRule::gmp4] =
        setup_with("product", "goguen", Requirements{.d_normal = true},
                   "implication with left neutrality and the identity principle");
    configs.push_back(std::move(aqip));
  }

  return configs;
}

ValidityReport table1_report(const std::vector<HypothesisConfig>& configs) {
  ValidityReport report;
  for (const HypothesisConfig& cfg : configs) {
    MethodRowReport row;
    row.method = cfg.method;
    row.annotation = cfg.annotation;
    for (GmpRule rule : {GmpRule::gmp1, GmpRule::gmp2, GmpRule::gmp2_prime, GmpRule::gmp3,
                         GmpRule::gmp4}) {
      row.verdicts[rule] = check_rule(cfg, rule);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string cell_symbol(const RuleVerdict& v) {
  switch (v.kind) {
    case VerdictKind::pass: return "✓";   // check mark
    case VerdictKind::fail: return "×";   // multiplication sign
    case VerdictKind::not_applicable: return "";
  }
  return "?";
}

std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char b : s) {
    if ((b & 0xC0) != 0x80) ++w;  // count code points, good enough here
  }
  return w;
}

void pad(std::ostringstream& os, const std::string& s, std::size_t width) {
  os << s;
  for (std::size_t i = display_width(s); i < width; ++i) os << ' ';
}

}  // namespace

std::string ValidityReport::render_table() const {
  std::ostringstream os;
  const std::vector<GmpRule> order = {GmpRule::gmp1, GmpRule::gmp2, GmpRule::gmp2_prime,
                                      GmpRule::gmp3, GmpRule::gmp4};
  pad(os, "method", 10);
  for (GmpRule r : order) pad(os, rule_name(r), 7);
  os << '\n';
  std::vector<std::string> footnotes;
  for (const MethodRowReport& row : rows) {
    const bool annotated = !row.annotation.empty();
    pad(os, method_name(row.method) + (annotated ? "*" : ""), 10);
    for (GmpRule r : order) {
      const auto it = row.verdicts.find(r);
      pad(os, it == row.verdicts.end() ? "" : cell_symbol(it->second), 7);
    }
    os << '\n';
    if (annotated) footnotes.push_back("* " + method_name(row.method) + ": " + row.annotation);
  }
  for (const std::string& f : footnotes) os << f << '\n';
  return os.str();
}

std::string ValidityReport::render_text() const {
  std::ostringstream os;
  for (const MethodRowReport& row : rows) {
    os << "== " << method_name(row.method) << " ==\n";
    if (!row.annotation.empty()) os << "note: " << row.annotation << '\n';
    for (const auto& [rule, verdict] : row.verdicts) {
      os << "  " << rule_name(rule) << ": ";
      switch (verdict.kind) {
        case VerdictKind::pass:
          os << "pass (" << verdict.trials_run << " trials)";
          break;
        case VerdictKind::fail:
          os << "fail";
          break;
        case VerdictKind::not_applicable:
          os << "not applicable";
          break;
      }
      if (!verdict.hypothesis.empty()) os << " {" << verdict.hypothesis << "}";
      if (!verdict.note.empty()) os << " [" << verdict.note << "]";
      os << '\n';
      if (verdict.counterexample) {
        const Counterexample& ce = *verdict.counterexample;
        os << "    counterexample (trial " << ce.trial << ", seed " << ce.seed << ")";
        if (!ce.violating_label.empty()) os << " at " << ce.violating_label;
        os << ": " << ce.description << '\n';
        for (const auto& [name, set] : ce.sets) {
          os << "      " << name << " =";
          for (std::size_t i = 0; i < set.size(); ++i) {
            os << ' ' << set.universe().labels[i] << ':' << set[i];
          }
          os << '\n';
        }
        for (const auto& [name, value] : ce.scalars) {
          os << "      " << name << " = " << value << '\n';
        }
      }
    }
  }
  return os.str();
}

}  // namespace aggfuzz
