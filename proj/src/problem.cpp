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

#include "aggfuzz/problem.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "aggfuzz/aqip.hpp"
#include "aggfuzz/asbr.hpp"
#include "aggfuzz/errors.hpp"
#include "aggfuzz/residuation.hpp"

namespace aggfuzz {

using nlohmann::json;

namespace {

// Connective resolution shared by the problem file and the command line.
// Problem files name a builtin directly or pick a derived family, e.g.
//   {"family": "r_implication", "tnorm": "product"}.
Aggregation resolve_aggregation_json(const json& j, const std::string& where) {
  try {
    if (j.is_string()) return builtin_aggregation(j.get<std::string>());
    if (j.is_object()) {
      const std::string name = j.at("name").get<std::string>();
      std::vector<double> params;
      if (j.contains("theta")) params.push_back(j.at("theta").get<double>());
      if (j.contains("params")) params = j.at("params").get<std::vector<double>>();
      return builtin_aggregation(name, params);
    }
  } catch (const UnknownName& e) {
    throw UnresolvedReference(where + ": " + e.what());
  } catch (const json::exception& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected a name or an object");
}

Implication resolve_implication_json(const json& j, const std::string& where) {
  try {
    if (j.is_string()) return builtin_implication(j.get<std::string>());
    if (j.is_object()) {
      const std::string family =
          j.contains("family") ? j.at("family").get<std::string>() : "builtin";
      if (family == "builtin") return builtin_implication(j.at("name").get<std::string>());
      if (family == "r_implication") {
        return r_implication_from_tnorm(
            resolve_aggregation_json(j.at("tnorm"), where + ".tnorm"));
      }
      if (family == "an_implication") {
        return an_implication(
            resolve_aggregation_json(j.at("aggregation"), where + ".aggregation"),
            builtin_negation(j.value("negation", "standard")));
      }
      if (family == "f_implication") {
        return f_implication(builtin_f_generator(j.at("generator").get<std::string>()));
      }
      if (family == "g_implication") {
        return g_implication(builtin_g_generator(j.at("generator").get<std::string>()));
      }
      if (family == "probabilistic") {
        return probabilistic_implication(
            resolve_aggregation_json(j.at("copula"), where + ".copula"));
      }
      if (family == "probabilistic_s") {
        return probabilistic_s_implication(
            resolve_aggregation_json(j.at("copula"), where + ".copula"));
      }
      if (family == "residual") {
        return residual_implication(
            resolve_aggregation_json(j.at("aggregation"), where + ".aggregation"));
      }
      throw UnresolvedReference(where + ": unknown implication family " + family);
    }
  } catch (const UnknownName& e) {
    throw UnresolvedReference(where + ": " + e.what());
  } catch (const json::exception& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected a name or an object");
}

struct ResolvedConnectives {
  Aggregation aggregation = builtin_aggregation("product");
  Implication implication = builtin_implication("goguen");
  Negation negation = standard_negation();
  SimilarityMeasure similarity = jaccard_measure();
};

ResolvedConnectives resolve_connectives(const json& j, const std::string& where) {
  ResolvedConnectives rc;
  if (j.is_null()) return rc;
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  if (j.contains("aggregation")) {
    rc.aggregation = resolve_aggregation_json(j.at("aggregation"), where + ".aggregation");
  }
  if (j.contains("implication")) {
    rc.implication = resolve_implication_json(j.at("implication"), where + ".implication");
  }
  if (j.contains("negation")) {
    try {
      rc.negation = builtin_negation(j.at("negation").is_string()
                                         ? j.at("negation").get<std::string>()
                                         : j.at("negation").at("name").get<std::string>());
    } catch (const UnknownName& e) {
      throw UnresolvedReference(where + ".negation: " + e.what());
    }
  }
  if (j.contains("similarity")) {
    try {
      rc.similarity = builtin_similarity(j.at("similarity").is_string()
                                             ? j.at("similarity").get<std::string>()
                                             : j.at("similarity").at("name").get<std::string>());
    } catch (const UnknownName& e) {
      throw UnresolvedReference(where + ".similarity: " + e.what());
    }
  }
  return rc;
}

}  // namespace

const DiscreteFuzzySet& ProblemFile::require_set(const std::string& name) const {
  const auto it = fuzzy_sets.find(name);
  if (it == fuzzy_sets.end()) {
    throw UnresolvedReference("fuzzy set " + name + " is not defined");
  }
  return it->second;
}

RuleBase ProblemFile::resolve_rule_base(const std::string& name) const {
  const auto it = rule_bases.find(name);
  if (it == rule_bases.end()) {
    throw UnresolvedReference("rule base " + name + " is not defined");
  }
  RuleBase rb;
  rb.and_combiner = builtin_aggregation(it->second.and_combiner);
  for (const auto& [antecedent_names, consequent_name] : it->second.rules) {
    MisoRule rule;
    for (const auto& an : antecedent_names) rule.antecedents.push_back(require_set(an));
    rule.consequent = require_set(consequent_name);
    rb.rules.push_back(std::move(rule));
  }
  validate_rule_base(rb);
  return rb;
}

ProblemFile parse_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return parse_problem_json(j, path);
}

ProblemFile parse_problem_json(const json& j, const std::string& source) {
  ProblemFile p;
  p.source = source;
  if (!j.is_object()) throw ParseError(source + ": problem must be a JSON object");

  const json universes = j.value("universes", json::object());
  try {
    for (const auto& [name, labels] : universes.items()) {
      p.universes.emplace(name,
                          FiniteUniverse(name, labels.get<std::vector<std::string>>()));
    }
  } catch (const json::exception& e) {
    throw ParseError(source + ": universes: " + e.what());
  }

  const json fuzzy_sets = j.value("fuzzy_sets", json::object());
  for (const auto& [name, spec] : fuzzy_sets.items()) {
    const std::string where = source + ": fuzzy_sets." + name;
    if (!spec.is_object() || !spec.contains("universe")) {
      throw ParseError(where + ": needs a universe");
    }
    const std::string uname = spec.at("universe").get<std::string>();
    const auto uit = p.universes.find(uname);
    if (uit == p.universes.end()) {
      throw UnresolvedReference(where + ": universe " + uname + " is not defined");
    }
    DiscreteFuzzySet d(uit->second);
    const json membership = spec.value("membership", json::object());
    for (const auto& [label, value] : membership.items()) {
      if (!value.is_number()) throw ParseError(where + ".membership." + label + ": not a number");
      try {
        d.set(label, value.get<double>());
      } catch (const RangeError& e) {
        throw RangeError(where + ".membership." + label + ": " + e.what());
      } catch (const UniverseMismatch& e) {
        throw UnresolvedReference(where + ".membership." + label + ": " + e.what());
      }
    }
    p.fuzzy_sets.emplace(name, std::move(d));
  }

  // Connectives are validated here so bad names fail at parse time; the raw
  // selection is kept and re-resolved when the task runs, so derived
  // families work end to end.
  p.connectives_spec = j.value("connectives", json());
  resolve_connectives(p.connectives_spec, source + ": connectives");
  if (j.contains("connectives")) {
    const json& c = j.at("connectives");
    auto name_of = [](const json& v) {
      return v.is_string() ? v.get<std::string>() : v.value("name", std::string());
    };
    if (c.contains("aggregation")) {
      p.connectives.aggregation = name_of(c.at("aggregation"));
      if (c.at("aggregation").is_object() && c.at("aggregation").contains("theta")) {
        p.connectives.aggregation_params = {c.at("aggregation").at("theta").get<double>()};
      }
    }
    if (c.contains("implication") && c.at("implication").is_string()) {
      p.connectives.implication = c.at("implication").get<std::string>();
    }
    if (c.contains("negation")) p.connectives.negation = name_of(c.at("negation"));
    if (c.contains("similarity")) p.connectives.similarity = name_of(c.at("similarity"));
  }

  const json rule_bases = j.value("rule_bases", json::object());
  for (const auto& [name, spec] : rule_bases.items()) {
    const std::string where = source + ": rule_bases." + name;
    NamedRuleBase rb;
    rb.and_combiner = spec.value("and_combiner", "min");
    if (!spec.contains("rules") || !spec.at("rules").is_array()) {
      throw ParseError(where + ": needs a rules array");
    }
    for (const auto& rule : spec.at("rules")) {
      try {
        rb.rules.emplace_back(rule.at("antecedents").get<std::vector<std::string>>(),
                              rule.at("consequent").get<std::string>());
      } catch (const json::exception& e) {
        throw ParseError(where + ".rules: " + e.what());
      }
    }
    for (const auto& [antecedents, consequent] : rb.rules) {
      for (const auto& an : antecedents) {
        if (!p.fuzzy_sets.count(an)) {
          throw UnresolvedReference(where + ": antecedent set " + an + " is not defined");
        }
      }
      if (!p.fuzzy_sets.count(consequent)) {
        throw UnresolvedReference(where + ": consequent set " + consequent + " is not defined");
      }
    }
    p.rule_bases.emplace(name, std::move(rb));
  }

  if (j.contains("task")) {
    const json& t = j.at("task");
    const std::string where = source + ": task";
    try {
      p.task.kind = t.at("kind").get<std::string>();
      p.task.method = t.value("method", "");
      p.task.scheme = t.value("scheme", 1);
      p.task.rule_base = t.value("rule_base", "");
      p.task.arrow = t.value("arrow", "implication");
      p.task.combiner = t.value("combiner", "min");
      p.task.residuate_from = t.value("from", "");
      p.task.classify_target = t.value("target", "aggregation");
      if (t.contains("inputs")) {
        if (t.at("inputs").is_object()) {
          for (const auto& [role, set_name] : t.at("inputs").items()) {
            p.task.inputs[role] = set_name.get<std::string>();
          }
        } else {
          throw ParseError(where + ".inputs: expected an object of role -> set name");
        }
      }
    } catch (const json::exception& e) {
      throw ParseError(where + ": " + e.what());
    }
    for (const auto& [role, set_name] : p.task.inputs) {
      if (role.rfind("in", 0) == 0 || role == "d" || role == "b" || role == "d_prime" ||
          role == "b_prime") {
        if (!p.fuzzy_sets.count(set_name)) {
          throw UnresolvedReference(source + ": task.inputs." + role + ": fuzzy set " + set_name +
                                    " is not defined");
        }
      }
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Serialization

double quantize_sig12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

json set_to_json(const DiscreteFuzzySet& d) {
  json membership = json::object();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] != 0.0) membership[d.universe().labels[i]] = quantize_sig12(d[i]);
  }
  return json{{"universe", d.universe().name}, {"membership", membership}};
}

namespace {

std::string set_to_text(const DiscreteFuzzySet& d) {
  std::ostringstream os;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) os << "  ";
    os << d.universe().labels[i] << "=" << quantize_sig12(d[i]);
  }
  return os.str();
}

std::string verdict_to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::pass: return "pass";
    case VerdictKind::fail: return "fail";
    case VerdictKind::not_applicable: return "na";
  }
  return "?";
}

}  // namespace

json report_to_json(const ValidityReport& report) {
  json rows = json::array();
  for (const auto& row : report.rows) {
    json cells = json::object();
    for (const auto& [rule, verdict] : row.verdicts) {
      json cell{{"verdict", verdict_to_string(verdict.kind)},
                {"trials", verdict.trials_run}};
      if (!verdict.hypothesis.empty()) cell["hypothesis"] = verdict.hypothesis;
      if (!verdict.note.empty()) cell["note"] = verdict.note;
      if (verdict.counterexample) {
        const Counterexample& ce = *verdict.counterexample;
        json sets = json::object();
        for (const auto& [name, set] : ce.sets) sets[name] = set_to_json(set);
        json scalars = json::object();
        for (const auto& [name, value] : ce.scalars) scalars[name] = quantize_sig12(value);
        cell["counterexample"] = json{{"trial", ce.trial},
                                      {"seed", ce.seed},
                                      {"sets", sets},
                                      {"scalars", scalars},
                                      {"at", ce.violating_label},
                                      {"description", ce.description}};
      }
      cells[rule_name(rule)] = std::move(cell);
    }
    json jrow{{"method", method_name(row.method)}, {"cells", cells}};
    if (!row.annotation.empty()) jrow["annotation"] = row.annotation;
    rows.push_back(std::move(jrow));
  }
  return json{{"rows", rows}};
}

// ---------------------------------------------------------------------------
// Task running

namespace {

RunOutcome set_outcome(const DiscreteFuzzySet& result, const std::string& label,
                       const std::string& warning, const RunOptions& opts) {
  RunOutcome out;
  out.artifact = json{{"result", set_to_json(result)}, {"kind", "fuzzy_set"}, {"name", label}};
  std::ostringstream os;
  os << label << ": " << set_to_text(result) << '\n';
  if (!warning.empty()) {
    out.artifact["warning"] = warning;
    os << "warning: " << warning << '\n';
  }
  out.text = opts.format == "json" ? out.artifact.dump(2) + "\n" : os.str();
  return out;
}

int check_expectations(const std::vector<std::pair<std::string, std::string>>& expectations,
                       const ValidityReport& report, std::string& message) {
  if (expectations.empty()) return 0;
  std::ostringstream os;
  int failures = 0;
  for (const auto& [key, expected] : expectations) {
    std::string method_part, rule_part = key;
    if (const auto dot = key.find('.'); dot != std::string::npos) {
      method_part = key.substr(0, dot);
      rule_part = key.substr(dot + 1);
    }
    bool matched = false;
    for (const auto& row : report.rows) {
      if (!method_part.empty() && method_name(row.method) != method_part) continue;
      for (const auto& [rule, verdict] : row.verdicts) {
        if (rule_name(rule) != rule_part) continue;
        matched = true;
        const std::string got = verdict_to_string(verdict.kind);
        if (got != expected) {
          ++failures;
          os << "expectation failed: " << method_name(row.method) << "." << rule_name(rule)
             << " is " << got << ", expected " << expected << '\n';
        }
      }
    }
    if (!matched) {
      ++failures;
      os << "expectation " << key << " matched no verdict cell\n";
    }
  }
  message = os.str();
  return failures;
}

RunOutcome report_outcome(const ValidityReport& report, const RunOptions& opts) {
  RunOutcome out;
  out.artifact = report_to_json(report);
  if (opts.format == "json") {
    out.text = out.artifact.dump(2) + "\n";
  } else if (opts.format == "table") {
    out.text = report.render_table();
  } else {
    out.text = report.render_text();
  }
  std::string message;
  if (check_expectations(opts.expectations, report, message) > 0) {
    out.exit_code = 1;
    out.text += message;
  }
  return out;
}

const std::string& require_role(const std::map<std::string, std::string>& inputs,
                                const std::string& role) {
  const auto it = inputs.find(role);
  if (it == inputs.end()) throw UnresolvedReference("task.inputs." + role + " is missing");
  return it->second;
}

RunOutcome run_infer(const ProblemFile& p, const RunOptions& opts) {
  const std::string method = opts.method_override.empty() ? p.task.method : opts.method_override;
  ResolvedConnectives rc = resolve_connectives(p.connectives_spec, p.source + ": connectives");
  if (!opts.similarity_override.empty()) {
    rc.similarity = builtin_similarity(opts.similarity_override);
  }
  const auto& inputs = p.task.inputs;

  if (method == "acri") {
    const auto& dp = p.require_set(require_role(inputs, "d_prime"));
    const auto& d = p.require_set(require_role(inputs, "d"));
    const auto& b = p.require_set(require_role(inputs, "b"));
    return set_outcome(acri_fmp(dp, d, b, rc.aggregation, rc.implication), "B'", "", opts);
  }
  if (method == "acri-fmt") {
    const auto& bp = p.require_set(require_role(inputs, "b_prime"));
    const auto& d = p.require_set(require_role(inputs, "d"));
    const auto& b = p.require_set(require_role(inputs, "b"));
    return set_outcome(acri_fmt(bp, d, b, rc.aggregation, rc.implication), "D'", "", opts);
  }
  if (method == "asbr") {
    const auto& dp = p.require_set(require_role(inputs, "d_prime"));
    const auto& d = p.require_set(require_role(inputs, "d"));
    const auto& b = p.require_set(require_role(inputs, "b"));
    const AsbrScheme scheme =
        asbr_scheme_from_int(opts.scheme_override.value_or(p.task.scheme));
    return set_outcome(
        asbr_conclude(dp, d, b, rc.aggregation, rc.implication, rc.similarity, scheme), "B'", "",
        opts);
  }
  if (method == "aqip-fmp" || method == "aqip-fmt") {
    AqipOptions aopts;
    aopts.tol = Tolerance(opts.tol_eps, 80);
    if (method == "aqip-fmp") {
      const auto& dp = p.require_set(require_role(inputs, "d_prime"));
      const auto& d = p.require_set(require_role(inputs, "d"));
      const auto& b = p.require_set(require_role(inputs, "b"));
      const AqipResult res = aqip_fmp(dp, d, b, rc.implication, aopts);
      return set_outcome(res.conclusion, "B'", res.warning, opts);
    }
    const auto& bp = p.require_set(require_role(inputs, "b_prime"));
    const auto& d = p.require_set(require_role(inputs, "d"));
    const auto& b = p.require_set(require_role(inputs, "b"));
    const AqipResult res = aqip_fmt(bp, d, b, rc.implication, aopts);
    return set_outcome(res.conclusion, "D'", res.warning, opts);
  }
  if (method == "qip-tnorm") {
    const auto& dp = p.require_set(require_role(inputs, "d_prime"));
    const auto& d = p.require_set(require_role(inputs, "d"));
    const auto& b = p.require_set(require_role(inputs, "b"));
    return set_outcome(
        qip_tnorm_solution_fmp(dp, d, b, rc.aggregation, Tolerance(opts.tol_eps, 80)), "B'", "",
        opts);
  }
  if (method == "fita" || method == "fati") {
    const RuleBase rb = p.resolve_rule_base(p.task.rule_base);
    std::vector<DiscreteFuzzySet> in;
    for (std::size_t i = 1; i <= rb.arity(); ++i) {
      in.push_back(p.require_set(require_role(inputs, "in" + std::to_string(i))));
    }
    // The arrow is either one of the file's connectives or a builtin named
    // directly, so the translation can differ from the composition.
    RuleArrow arrow;
    if (p.task.arrow == "implication") {
      arrow = rc.implication;
    } else if (p.task.arrow == "aggregation") {
      arrow = rc.aggregation;
    } else {
      const auto& imps = builtin_implication_names();
      if (std::find(imps.begin(), imps.end(), p.task.arrow) != imps.end()) {
        arrow = builtin_implication(p.task.arrow);
      } else {
        try {
          arrow = builtin_aggregation(p.task.arrow);
        } catch (const UnknownName&) {
          throw UnresolvedReference("task.arrow must be 'implication', 'aggregation' or a "
                                    "builtin connective name, got " +
                                    p.task.arrow);
        }
      }
    }
    const Aggregation combiner = builtin_aggregation(p.task.combiner);
    const DiscreteFuzzySet result =
        method == "fita" ? fita(in, rb, rc.aggregation, arrow, combiner)
                         : fati(in, rb, rc.aggregation, arrow, combiner);
    return set_outcome(result, "B'", "", opts);
  }
  throw UnresolvedReference("unknown inference method: " + method);
}

}  // namespace

RunOutcome run_residuate(const std::string& from, const RunOptions& opts) {
  RunOutcome out;
  const Grid sample = grid_points(11);
  json samples = json::array();
  std::ostringstream os;

  const auto& agg_names = builtin_aggregation_names();
  const bool is_aggregation =
      std::find(agg_names.begin(), agg_names.end(), from) != agg_names.end();
  const auto& imp_names = builtin_implication_names();
  const bool is_implication =
      std::find(imp_names.begin(), imp_names.end(), from) != imp_names.end();
  if (!is_aggregation && !is_implication) {
    throw UnresolvedReference("residuate: " + from +
                              " is neither a builtin aggregation nor a builtin implication");
  }

  ResiduationOptions ropts;
  ropts.tol = Tolerance(opts.tol_eps, 80);
  ropts.certification_grid = opts.grid_n;

  if (is_aggregation) {
    const Aggregation a = builtin_aggregation(from);
    const Implication imp = residual_implication(a, ropts);
    out.artifact = json{{"direction", "aggregation_to_implication"},
                        {"from", from},
                        {"result", imp.name},
                        {"certified", imp.attrs.certified},
                        {"warnings", imp.attrs.warnings}};
    os << "residual implication of " << from << ": " << imp.name
       << (imp.attrs.certified ? " (certified implication)" : " (NOT certified)") << '\n';
    for (const std::string& w : imp.attrs.warnings) os << "warning: " << w << '\n';
    os << "x\\y";
    for (double y : sample.points) os << '\t' << quantize_sig12(y);
    os << '\n';
    for (double x : sample.points) {
      os << quantize_sig12(x);
      for (double y : sample.points) {
        const double v = quantize_sig12(imp(x, y));
        samples.push_back(json::array({quantize_sig12(x), quantize_sig12(y), v}));
        os << '\t' << v;
      }
      os << '\n';
    }
  } else {
    const Implication imp = builtin_implication(from);
    const Aggregation a = induced_aggregation(imp, ropts);
    out.artifact = json{{"direction", "implication_to_aggregation"},
                        {"from", from},
                        {"result", a.name}};
    os << "induced aggregation of " << from << ": " << a.name << '\n';
    os << "x\\y";
    for (double y : sample.points) os << '\t' << quantize_sig12(y);
    os << '\n';
    for (double x : sample.points) {
      os << quantize_sig12(x);
      for (double y : sample.points) {
        const double v = quantize_sig12(a(x, y));
        samples.push_back(json::array({quantize_sig12(x), quantize_sig12(y), v}));
        os << '\t' << v;
      }
      os << '\n';
    }
  }
  out.artifact["samples"] = samples;
  out.text = opts.format == "json" ? out.artifact.dump(2) + "\n" : os.str();
  return out;
}

RunOutcome run_classify_name(const std::string& kind, const std::string& name,
                             const std::vector<double>& params, const RunOptions& opts) {
  RunOutcome out;
  const Grid grid = grid_points(opts.grid_n);
  std::ostringstream os;
  if (kind == "aggregation") {
    const Aggregation a = builtin_aggregation(name, params);
    const AggregationAxiomReport axioms = check_aggregation_axioms(a, grid);
    const ClassifyReport rep = classify(a, grid);
    const ContinuityScan scan = check_left_continuity_second_arg(a, grid);
    json props{{"boundary", axioms.boundary.holds},
               {"monotone_first", axioms.monotone_first.holds},
               {"monotone_second", axioms.monotone_second.holds},
               {"commutative", rep.commutative.holds},
               {"associative", rep.associative.holds},
               {"conjunctive", rep.conjunctive.holds},
               {"disjunctive", rep.disjunctive.holds},
               {"averaging", rep.averaging.holds},
               {"two_increasing", rep.two_increasing.holds},
               {"semicopula", rep.semicopula},
               {"tnorm", rep.tnorm},
               {"tconorm", rep.tconorm},
               {"copula", rep.copula},
               {"left_continuity_contradicted", scan.contradiction()}};
    if (rep.neutral) props["neutral"] = *rep.neutral;
    if (rep.annihilator) props["annihilator"] = *rep.annihilator;
    out.artifact = json{{"kind", "aggregation"}, {"name", a.name}, {"properties", props}};
    os << "classification of aggregation " << a.name << " (grid " << opts.grid_n << ", "
       << "grid verdicts are evidence, not proof)\n";
    for (const auto& [key, value] : props.items()) os << "  " << key << ": " << value << '\n';
  } else if (kind == "implication") {
    const Implication imp = builtin_implication(name);
    const Negation neg = standard_negation();
    const ImplicationPropertyReport rep = check_implication_properties(imp, grid, &neg);
    json props{{"i1", rep.i1.holds},
               {"i2", rep.i2.holds},
               {"i3", rep.i3.holds},
               {"i4", rep.i4.holds},
               {"i5", rep.i5.holds},
               {"lb", rep.lb.holds},
               {"rb", rep.rb.holds},
               {"np", rep.np.holds},
               {"ip", rep.ip.holds},
               {"ep", rep.ep.holds},
               {"op", rep.op.holds},
               {"cp_standard", rep.cp ? rep.cp->holds : false},
               {"strictly_increasing_section", rep.strictly_increasing_section.holds}};
    out.artifact = json{{"kind", "implication"}, {"name", imp.name}, {"properties", props}};
    os << "properties of implication " << imp.name << " (grid " << opts.grid_n << ")\n";
    for (const auto& [key, value] : props.items()) os << "  " << key << ": " << value << '\n';
  } else {
    throw UnresolvedReference("classify target must be aggregation or implication, got " + kind);
  }
  out.text = opts.format == "json" ? out.artifact.dump(2) + "\n" : os.str();
  return out;
}

RunOutcome run_validate_method(const std::string& method, const RunOptions& opts) {
  std::vector<HypothesisConfig> configs = default_configs(opts.trials, opts.seed);
  std::vector<HypothesisConfig> selected;
  for (auto& cfg : configs) {
    if (method_name(cfg.method) == method) selected.push_back(std::move(cfg));
  }
  if (selected.empty()) throw UnresolvedReference("unknown method for validation: " + method);
  return report_outcome(table1_report(selected), opts);
}

RunOutcome run_report(const RunOptions& opts) {
  return report_outcome(table1_report(default_configs(opts.trials, opts.seed)), opts);
}

RunOutcome run_task(const ProblemFile& p, const RunOptions& opts) {
  const std::string kind = p.task.kind;
  if (kind == "infer") return run_infer(p, opts);
  if (kind == "residuate") {
    return run_residuate(p.task.residuate_from.empty() ? p.connectives.aggregation
                                                       : p.task.residuate_from,
                         opts);
  }
  if (kind == "classify") {
    if (p.task.classify_target == "implication") {
      return run_classify_name("implication", p.connectives.implication, {}, opts);
    }
    return run_classify_name("aggregation", p.connectives.aggregation,
                             p.connectives.aggregation_params, opts);
  }
  if (kind == "validate") {
    return run_validate_method(opts.method_override.empty() ? p.task.method
                                                            : opts.method_override,
                               opts);
  }
  if (kind == "report") return run_report(opts);
  throw ParseError("unknown task kind: " + kind);
}

}  // namespace aggfuzz
