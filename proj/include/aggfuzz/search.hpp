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

#include "aggfuzz/unit.hpp"

namespace aggfuzz {

using UnitPredicate = std::function<bool(double)>;

// Supremum of {z in [0,1] : pred(z)} for a predicate whose true-set is a
// down-set [0,z*] or [0,z*). Interval halving, O(log 1/eps) evaluations.
//
// Conventions: sup of the empty set is 0; pred(1) true returns exactly 1.
// Throws MonotonicityViolation when a probe sees pred true above a point
// where it was false (the true-set is not a down-set).
double sup_satisfying(const UnitPredicate& pred, const Tolerance& tol = {});

// Infimum of {z in [0,1] : pred(z)} for a predicate whose true-set is an
// up-set [z*,1] or (z*,1]. Mirror of sup_satisfying.
//
// Conventions: inf of the empty set is 1; pred(0) true returns exactly 0.
double inf_satisfying(const UnitPredicate& pred, const Tolerance& tol = {});

}  // namespace aggfuzz
