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

#include <optional>
#include <string>
#include <vector>

#include "aggfuzz/connectives.hpp"
#include "aggfuzz/unit.hpp"

namespace aggfuzz {

enum class ImplicationFamily {
  builtin,
  residual,        // from a t-norm or a general aggregation
  disjunctor,      // A(N(x), y)
  f_generated,
  g_generated,
  probabilistic,
  probabilistic_s,
  custom,
};

struct ImplicationAttrs {
  bool right_continuous_second_arg = true;
  std::optional<bool> neutrality;      // I(1,y) = y
  std::optional<bool> identity;        // I(x,x) = 1
  std::optional<bool> exchange;        // I(x,I(y,z)) = I(y,I(x,z))
  std::optional<bool> ordering;        // I(x,y) = 1 iff x <= y
  std::optional<bool> contraposition;  // I(x,y) = I(N(y),N(x))

  // A residual built from an aggregation that fails the boundary conditions
  // is still returned, but uncertified: it need not satisfy the implication
  // axioms. Warnings explain which condition broke.
  bool certified = true;
  std::vector<std::string> warnings;
};

struct Implication {
  std::string name;
  BinaryFn fn;
  ImplicationFamily family = ImplicationFamily::custom;
  ImplicationAttrs attrs;

  double operator()(double x, double y) const { return fn(x, y); }
};

// Catalogue: goguen, godel, lukasiewicz, kleene_dienes, reichenbach,
// rescher_gaines. Throws UnknownName otherwise.
Implication builtin_implication(const std::string& name);
const std::vector<std::string>& builtin_implication_names();

// sup{z : T(x,z) <= y} for a classified t-norm. Closed forms replace the
// search for min, product and lukasiewicz_tnorm unless disabled.
Implication r_implication_from_tnorm(const Aggregation& tnorm, const Tolerance& tol = {},
                                     bool allow_closed_form = true);

// A(N(x), y) for an aggregation with annihilator 0. The left boundary
// property is checked downstream, never presumed from the annihilator.
Implication an_implication(const Aggregation& disjunctor, const Negation& n);

// Unary generators for the f- and g-families. Values may be +infinity at the
// endpoint; the conventions live in the implication constructors, never in
// raw floating arithmetic. An absent inverse falls back to interval halving
// against the generator itself.
struct FGenerator {
  std::string name;
  UnaryFn fn;        // strictly decreasing, continuous, fn(1) = 0
  UnaryFn inverse;   // optional closed-form inverse of fn
};

struct GGenerator {
  std::string name;
  UnaryFn fn;        // strictly increasing, continuous, fn(0) = 0
  UnaryFn inverse;
};

FGenerator builtin_f_generator(const std::string& name);  // neg_log, one_minus
GGenerator builtin_g_generator(const std::string& name);  // identity, neg_log_complement

Implication f_implication(const FGenerator& gen, const Tolerance& tol = {});
Implication g_implication(const GGenerator& gen, const Tolerance& tol = {});

// C(x,y)/x with the x=0 branch equal to 1, and C(x,y)-x+1, for a classified
// copula.
Implication probabilistic_implication(const Aggregation& copula);
Implication probabilistic_s_implication(const Aggregation& copula);

struct ImplicationPropertyReport {
  PropertyVerdict i1, i2, i3, i4, i5;
  PropertyVerdict lb, rb;
  PropertyVerdict np, ip, ep, op;
  std::optional<PropertyVerdict> cp;  // present when a negation is supplied
  // Strict increase of the section y -> I(1,y), adjacent grid points, no
  // slack: ties fail.
  PropertyVerdict strictly_increasing_section;
};

ImplicationPropertyReport check_implication_properties(const Implication& imp, const Grid& grid,
                                                       const Negation* n = nullptr,
                                                       double tol = 1e-9);

}  // namespace aggfuzz
