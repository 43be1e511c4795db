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

#include "aggfuzz/fuzzy_set.hpp"
#include "aggfuzz/implications.hpp"
#include "aggfuzz/residuation.hpp"

namespace aggfuzz {

// Quintuple-implication objective for the modus-ponens problem at one point:
//   I(I(D(x),B(y)), I(I(D'(x),D(x)), I(D'(x), Bcand(y)))).
double qip_objective_fmp(const DiscreteFuzzySet& d_prime, const DiscreteFuzzySet& d,
                         const DiscreteFuzzySet& b, const DiscreteFuzzySet& b_cand,
                         const Implication& imp, std::size_t xi, std::size_t yi);

// Mirror objective for the modus-tollens problem:
//   I(I(D(x),B(y)), I(I(B(y),B'(y)), I(D(x), Dcand(x)))).
double qip_objective_fmt(const DiscreteFuzzySet& d, const DiscreteFuzzySet& b,
                         const DiscreteFuzzySet& b_prime, const DiscreteFuzzySet& d_cand,
                         const Implication& imp, std::size_t xi, std::size_t yi);

struct AqipOptions {
  bool allow_closed_form = true;
  Tolerance tol{};
  int hypothesis_grid = 101;
};

struct AqipResult {
  DiscreteFuzzySet conclusion;
  // True when I(1,y) < 1 held at every grid y < 1. A broken hypothesis does
  // not stop evaluation; it only voids the optimality guarantee.
  bool hypothesis_satisfied = true;
  std::string warning;
};

// Smallest conclusion attaining the objective's maximum, via the induced
// aggregation A of the implication:
//   B'(y) = max_x A(A(D'(x), A(I(D'(x),D(x)), I(D(x),B(y)))), 1).
// The outer A(.,1) wrapper stays even where it is the identity; for
// non-commutative induced aggregations it is not a no-op.
AqipResult aqip_fmp(const DiscreteFuzzySet& d_prime, const DiscreteFuzzySet& d,
                    const DiscreteFuzzySet& b, const Implication& imp,
                    const AqipOptions& opts = {});

//   D'(x) = max_y A(A(D(x), A(I(D(x),B(y)), I(B(y),B'(y)))), 1).
AqipResult aqip_fmt(const DiscreteFuzzySet& b_prime, const DiscreteFuzzySet& d,
                    const DiscreteFuzzySet& b, const Implication& imp,
                    const AqipOptions& opts = {});

// Left-continuous t-norm closed form of the same solutions, with I the
// residual implication of T:
//   B'(y) = max_x T(D'(x), T(I(D'(x),D(x)), I(D(x),B(y)))).
DiscreteFuzzySet qip_tnorm_solution_fmp(const DiscreteFuzzySet& d_prime,
                                        const DiscreteFuzzySet& d, const DiscreteFuzzySet& b,
                                        const Aggregation& tnorm, const Tolerance& tol = {});
DiscreteFuzzySet qip_tnorm_solution_fmt(const DiscreteFuzzySet& b_prime,
                                        const DiscreteFuzzySet& d, const DiscreteFuzzySet& b,
                                        const Aggregation& tnorm, const Tolerance& tol = {});

struct OptimalityReport {
  bool attains_max = true;
  bool minimal = true;
  double grid_step = 0.0;
  std::string detail;

  bool ok() const { return attains_max && minimal; }
};

// Brute-force check that a candidate conclusion (a) keeps the objective at
// its maximum everywhere and (b) is, per output point, the least value on
// the given grid that does so, within one grid step. Intended for small
// universes.
OptimalityReport verify_qip_optimality(const DiscreteFuzzySet& d_prime, const DiscreteFuzzySet& d,
                                       const DiscreteFuzzySet& b, const DiscreteFuzzySet& b_cand,
                                       const Implication& imp, const Grid& value_grid,
                                       double tol = 1e-9);

}  // namespace aggfuzz
