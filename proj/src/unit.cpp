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

#include "aggfuzz/unit.hpp"

namespace aggfuzz {

Grid grid_points(int n) {
  if (n < 2) throw Error("grid needs at least 2 points, got " + std::to_string(n));
  Grid g;
  g.points.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    g.points[static_cast<std::size_t>(k)] = static_cast<double>(k) / static_cast<double>(n - 1);
  }
  g.points.front() = 0.0;
  g.points.back() = 1.0;
  return g;
}

}  // namespace aggfuzz
