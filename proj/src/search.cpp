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

#include "aggfuzz/search.hpp"

namespace aggfuzz {

namespace {

// Interior probes used to tell an empty true-set from a non-monotone
// predicate. A down-set that misses the checked endpoint must be empty, so
// any interior hit is a monotonicity violation.
constexpr int kProbeCount = 15;

bool any_interior_true(const UnitPredicate& pred) {
  for (int k = 1; k <= kProbeCount; ++k) {
    if (pred(static_cast<double>(k) / (kProbeCount + 1))) return true;
  }
  return false;
}

}  // namespace

double sup_satisfying(const UnitPredicate& pred, const Tolerance& tol) {
  if (!(tol.eps > 0.0) || tol.max_iter < 1) throw Error("invalid tolerance");
  if (pred(1.0)) return 1.0;
  if (!pred(0.0)) {
    if (any_interior_true(pred)) {
      throw MonotonicityViolation("predicate true above a false point; true-set is not a down-set");
    }
    return 0.0;  // empty true-set
  }
  double lo = 0.0;  // pred true
  double hi = 1.0;  // pred false
  for (int it = 0; it < tol.max_iter && hi - lo > tol.eps; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (pred(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // The true-side endpoint: the result satisfies pred, so downstream
  // inequalities built on the returned value never flip on plateaus.
  return lo;
}

double inf_satisfying(const UnitPredicate& pred, const Tolerance& tol) {
  if (!(tol.eps > 0.0) || tol.max_iter < 1) throw Error("invalid tolerance");
  if (pred(0.0)) return 0.0;
  if (!pred(1.0)) {
    if (any_interior_true(pred)) {
      throw MonotonicityViolation("predicate true below a false point; true-set is not an up-set");
    }
    return 1.0;  // empty true-set
  }
  double lo = 0.0;  // pred false
  double hi = 1.0;  // pred true
  for (int it = 0; it < tol.max_iter && hi - lo > tol.eps; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  // The under-side endpoint: the infimum is never overestimated, so values
  // fed into <=-style comparisons stay conservative on plateaus.
  return lo;
}

}  // namespace aggfuzz
