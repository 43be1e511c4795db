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

#include <string>
#include <vector>

#include "aggfuzz/errors.hpp"

namespace aggfuzz {

// Checked scalar on [0,1]. Construction outside the interval throws
// RangeError; the implicit conversion keeps arithmetic call sites plain.
class UnitValue {
 public:
  constexpr UnitValue() = default;

  explicit UnitValue(double v) : v_(v) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw RangeError("value " + std::to_string(v) + " outside [0,1]");
    }
  }

  constexpr double value() const noexcept { return v_; }
  constexpr operator double() const noexcept { return v_; }

 private:
  double v_ = 0.0;
};

// Stopping rule for the interval-halving searches. 2^-80 is far below the
// default eps, so max_iter never cuts a search short at the defaults.
struct Tolerance {
  double eps = 1e-9;
  int max_iter = 80;

  Tolerance() = default;
  Tolerance(double e, int iters) : eps(e), max_iter(iters) {
    if (!(eps > 0.0)) throw Error("tolerance eps must be positive");
    if (max_iter < 1) throw Error("tolerance max_iter must be at least 1");
  }
};

// Uniform sample points on [0,1], endpoints included exactly.
struct Grid {
  std::vector<double> points;

  std::size_t size() const noexcept { return points.size(); }
  double operator[](std::size_t i) const { return points[i]; }
  double step() const { return points.size() > 1 ? points[1] - points[0] : 1.0; }
};

Grid grid_points(int n);

}  // namespace aggfuzz
