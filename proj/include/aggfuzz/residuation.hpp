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

#include "aggfuzz/connectives.hpp"
#include "aggfuzz/implications.hpp"
#include "aggfuzz/unit.hpp"

namespace aggfuzz {

struct ResiduationOptions {
  Tolerance tol{};
  bool allow_closed_form = true;
  int certification_grid = 101;
};

// I_A(x,y) = sup{z : A(x,z) <= y}, pointwise by monotone search.
//
// The result is certified a fuzzy implication iff A(1,y) > 0 for grid y > 0
// and A(0,y) = 0 for grid y < 1; otherwise it is returned uncertified with a
// warning so callers can still compare against it.
Implication residual_implication(const Aggregation& a, const ResiduationOptions& opts = {});

// A_I(x,y) = inf{z : I(x,z) >= y}. Requires I(1,y) < 1 on grid y < 1 (throws
// ConditionViolated), which makes the result an aggregation with annihilator
// 0. Left-continuity in the second argument is inherited from the declared
// right-continuity of I.
Aggregation induced_aggregation(const Implication& imp, const ResiduationOptions& opts = {});

// As above but without the hypothesis gate; used where a caller evaluates
// the formula anyway and reports the broken hypothesis itself.
Aggregation induced_aggregation_unchecked(const Implication& imp,
                                          const ResiduationOptions& opts = {});

struct AdjunctionReport {
  bool holds = true;
  // First violating triple and the two sides that disagree.
  double x = 0.0, y = 0.0, z = 0.0;
  std::string detail;
};

// A(x,z) <= y  iff  z <= I(x,y), on all grid triples, with eps slack around
// the boundary. premise_slack loosens the z <= I(x,y) premise and should
// match the evaluation error of I: zero for closed forms, the search
// tolerance when I itself comes out of a sup-search (whose supremum may not
// be attained).
AdjunctionReport check_adjunction(const Aggregation& a, const Implication& imp, const Grid& grid,
                                  double slack = 1e-6, double premise_slack = 0.0);
AdjunctionReport check_adjunction(const Aggregation& a, const Implication& imp,
                                  const std::vector<std::array<double, 3>>& triples,
                                  double slack = 1e-6, double premise_slack = 0.0);

struct RoundtripReport {
  double max_gap = 0.0;
  double at_x = 0.0;
  double at_y = 0.0;
};

// Max pointwise gap between I and the residual of its induced aggregation,
// both directions evaluated by search (no closed-form shortcuts).
RoundtripReport roundtrip_check(const Implication& imp, const Grid& grid,
                                const Tolerance& tol = {});

}  // namespace aggfuzz
