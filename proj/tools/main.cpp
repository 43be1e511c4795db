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
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aggfuzz/errors.hpp"
#include "aggfuzz/problem.hpp"

namespace {

using aggfuzz::RunOptions;
using aggfuzz::RunOutcome;

struct CommonFlags {
  double tol = 1e-9;
  int grid = 101;
  int trials = 500;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string out_path;
  std::vector<std::string> expects;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--tol", flags.tol, "search tolerance");
  cmd->add_option("--grid", flags.grid, "grid resolution for property checks");
  cmd->add_option("--trials", flags.trials, "randomized trials per verdict");
  cmd->add_option("--seed", flags.seed, "random seed");
  cmd->add_option("--format", flags.format, "output format: text | json | table")
      ->check(CLI::IsMember({"text", "json", "table"}));
  cmd->add_option("--out", flags.out_path, "write the artifact to a file instead of stdout");
  cmd->add_option("--expect", flags.expects,
                  "assert a verdict, e.g. gmp1=pass or acri.gmp3=pass; exit 1 on mismatch");
}

RunOptions to_options(const CommonFlags& flags) {
  RunOptions opts;
  opts.tol_eps = flags.tol;
  opts.grid_n = flags.grid;
  opts.trials = flags.trials;
  opts.seed = flags.seed;
  opts.format = flags.format;
  for (const std::string& e : flags.expects) {
    const auto eq = e.find('=');
    if (eq == std::string::npos) {
      throw aggfuzz::ParseError("--expect needs key=verdict, got " + e);
    }
    opts.expectations.emplace_back(e.substr(0, eq), e.substr(eq + 1));
  }
  return opts;
}

int emit(const RunOutcome& outcome, const CommonFlags& flags) {
  if (!flags.out_path.empty()) {
    std::ofstream out(flags.out_path);
    if (!out) {
      std::cerr << "error: cannot write " << flags.out_path << '\n';
      return 2;
    }
    out << (flags.format == "text" || flags.format == "table" ? outcome.text
                                                              : outcome.artifact.dump(2) + "\n");
    std::cout << "wrote " << flags.out_path << '\n';
  } else {
    std::cout << outcome.text;
  }
  return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"approximate reasoning over [0,1]: residuated connectives, compositional and "
               "similarity-based inference, and a rule-validity checker"};
  app.require_subcommand(1);

  // infer
  std::string infer_problem, infer_method, infer_similarity;
  int infer_scheme = 0;
  CommonFlags infer_flags;
  CLI::App* infer = app.add_subcommand("infer", "run one inference task from a problem file");
  infer->add_option("problem", infer_problem, "problem file (JSON)")->required();
  infer->add_option("--method", infer_method,
                    "acri | acri-fmt | fita | fati | asbr | aqip-fmp | aqip-fmt | qip-tnorm");
  infer->add_option("--scheme", infer_scheme, "similarity scheme 1..4 (asbr)");
  infer->add_option("--similarity", infer_similarity, "similarity measure (asbr)");
  add_common(infer, infer_flags);

  // residuate
  std::string residuate_from;
  CommonFlags residuate_flags;
  CLI::App* residuate =
      app.add_subcommand("residuate", "residual implication of an aggregation, or the induced "
                                      "aggregation of an implication");
  residuate->add_option("--from", residuate_from, "builtin aggregation or implication name")
      ->required();
  add_common(residuate, residuate_flags);

  // classify
  std::string classify_agg, classify_imp, classify_problem;
  double classify_theta = 0.0;
  CommonFlags classify_flags;
  CLI::App* classify_cmd =
      app.add_subcommand("classify", "check axioms and class tags of a connective");
  classify_cmd->add_option("--aggregation", classify_agg, "builtin aggregation name");
  classify_cmd->add_option("--implication", classify_imp, "builtin implication name");
  classify_cmd->add_option("--theta", classify_theta, "parameter for clayton_copula");
  classify_cmd->add_option("problem", classify_problem, "problem file with a classify task");
  add_common(classify_cmd, classify_flags);

  // validate
  std::string validate_method = "acri", validate_problem;
  CommonFlags validate_flags;
  CLI::App* validate =
      app.add_subcommand("validate", "run the rule checks for one inference method");
  validate->add_option("--method", validate_method, "acri | asbr1..asbr4 | aqip");
  validate->add_option("problem", validate_problem, "problem file with a validate task");
  add_common(validate, validate_flags);

  // report
  CommonFlags report_flags;
  CLI::App* report =
      app.add_subcommand("report", "full verdict matrix over all methods and rules");
  add_common(report, report_flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (infer->parsed()) {
      const aggfuzz::ProblemFile problem = aggfuzz::parse_problem(infer_problem);
      RunOptions opts = to_options(infer_flags);
      opts.method_override = infer_method;
      opts.similarity_override = infer_similarity;
      if (infer_scheme != 0) opts.scheme_override = infer_scheme;
      return emit(aggfuzz::run_task(problem, opts), infer_flags);
    }
    if (residuate->parsed()) {
      return emit(aggfuzz::run_residuate(residuate_from, to_options(residuate_flags)),
                  residuate_flags);
    }
    if (classify_cmd->parsed()) {
      const RunOptions opts = to_options(classify_flags);
      if (!classify_agg.empty()) {
        std::vector<double> params;
        if (classify_theta != 0.0) params.push_back(classify_theta);
        return emit(aggfuzz::run_classify_name("aggregation", classify_agg, params, opts),
                    classify_flags);
      }
      if (!classify_imp.empty()) {
        return emit(aggfuzz::run_classify_name("implication", classify_imp, {}, opts),
                    classify_flags);
      }
      if (!classify_problem.empty()) {
        const aggfuzz::ProblemFile problem = aggfuzz::parse_problem(classify_problem);
        return emit(aggfuzz::run_task(problem, opts), classify_flags);
      }
      std::cerr << "error: classify needs --aggregation, --implication or a problem file\n";
      return 2;
    }
    if (validate->parsed()) {
      RunOptions opts = to_options(validate_flags);
      if (!validate_problem.empty()) {
        const aggfuzz::ProblemFile problem = aggfuzz::parse_problem(validate_problem);
        opts.method_override = validate_method;
        return emit(aggfuzz::run_task(problem, opts), validate_flags);
      }
      return emit(aggfuzz::run_validate_method(validate_method, opts), validate_flags);
    }
    if (report->parsed()) {
      return emit(aggfuzz::run_report(to_options(report_flags)), report_flags);
    }
  } catch (const aggfuzz::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
