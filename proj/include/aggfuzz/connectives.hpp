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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "aggfuzz/unit.hpp"

namespace aggfuzz {

using UnaryFn = std::function<double(double)>;
using BinaryFn = std::function<double(double, double)>;

// ---------------------------------------------------------------------------
// Negations

struct Negation {
  std::string name;
  UnaryFn fn;
  bool declared_strict = false;
  bool declared_strong = false;

  double operator()(double x) const { return fn(x); }
};

Negation standard_negation();
Negation builtin_negation(const std::string& name);

struct PropertyVerdict {
  bool holds = true;
  std::vector<double> witness;  // coordinates of the first counterexample
  std::string detail;
};

struct NegationCheckReport {
  PropertyVerdict boundary;       // N(0)=1, N(1)=0
  PropertyVerdict nonincreasing;  // N2 on the grid
  PropertyVerdict involutive;     // N5, only meaningful when declared strong

  bool ok() const { return boundary.holds && nonincreasing.holds && involutive.holds; }
};

NegationCheckReport check_negation(const Negation& n, const Grid& grid, double tol = 1e-9);

// ---------------------------------------------------------------------------
// Binary aggregation functions

enum class ElementSide { left, right, both };

struct DistinguishedElement {
  double value = 0.0;
  ElementSide side = ElementSide::both;
};

struct AggregationTags {
  bool commutative = false;
  bool associative = false;
  bool conjunctive = false;
  bool disjunctive = false;
  bool averaging = false;
  bool semicopula = false;
  bool tnorm = false;
  bool tconorm = false;
  bool copula = false;
};

struct AggregationAttrs {
  // Continuity cannot be decided numerically, so it travels as a declared
  // attribute; check_left_continuity_second_arg only hunts contradictions.
  bool left_continuous_second_arg = true;
  std::optional<DistinguishedElement> neutral;
  std::optional<DistinguishedElement> annihilator;
  AggregationTags tags;
};

struct Aggregation {
  std::string name;
  BinaryFn fn;
  AggregationAttrs attrs;

  double operator()(double x, double y) const { return fn(x, y); }
};

// Catalogue: min, product, lukasiewicz_tnorm, drastic_tnorm, max,
// probabilistic_sum, lukasiewicz_tconorm, arithmetic_mean, geometric_mean,
// clayton_copula (one parameter, theta > 0). Throws UnknownName otherwise.
Aggregation builtin_aggregation(const std::string& name, const std::vector<double>& params = {});
const std::vector<std::string>& builtin_aggregation_names();

struct AggregationAxiomReport {
  PropertyVerdict boundary;         // A(0,0)=0 and A(1,1)=1
  PropertyVerdict monotone_first;   // nondecreasing in the first variable
  PropertyVerdict monotone_second;  // nondecreasing in the second variable

  bool ok() const { return boundary.holds && monotone_first.holds && monotone_second.holds; }
};

AggregationAxiomReport check_aggregation_axioms(const Aggregation& a, const Grid& grid,
                                                double tol = 1e-9);

// Grid evidence for the class predicates. Grid verdicts are evidence, not
// proof; neutral/annihilator detection demands exact equality at every grid
// point, which the builtins honour by construction.
struct ClassifyReport {
  PropertyVerdict commutative;
  PropertyVerdict associative;
  PropertyVerdict conjunctive;
  PropertyVerdict disjunctive;
  PropertyVerdict averaging;
  PropertyVerdict two_increasing;

  std::optional<double> left_neutral;
  std::optional<double> right_neutral;
  std::optional<double> neutral;
  std::optional<double> left_annihilator;
  std::optional<double> right_annihilator;
  std::optional<double> annihilator;

  bool semicopula = false;       // neutral element 1
  bool dual_semicopula = false;  // neutral element 0
  bool tnorm = false;
  bool tconorm = false;
  bool copula = false;
};

ClassifyReport classify(const Aggregation& a, const Grid& grid, double tol = 1e-9);

// Verdict of the declared left-continuity against an upward-jump scan.
struct ContinuityScan {
  bool declared = true;
  bool jump_found = false;
  double at_x = 0.0;
  double at_z = 0.0;
  double jump = 0.0;

  bool contradiction() const { return declared && jump_found; }
};

ContinuityScan check_left_continuity_second_arg(const Aggregation& a, const Grid& grid,
                                                double jump_tol = 1e-3);

}  // namespace aggfuzz
