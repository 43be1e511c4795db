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

#include "aggfuzz/sampling.hpp"

#include <algorithm>

#include "aggfuzz/errors.hpp"

namespace aggfuzz {

std::vector<double> membership_levels(double step) {
  if (!(step > 0.0 && step <= 1.0)) throw Error("membership step must lie in (0,1]");
  std::vector<double> levels;
  for (double v = 0.0; v < 1.0 - step / 2; v += step) levels.push_back(v);
  levels.push_back(1.0);
  return levels;
}

DiscreteFuzzySet random_set(const FiniteUniverse& u, std::span<const double> levels,
                            SampleRng& rng) {
  DiscreteFuzzySet d{u};
  for (std::size_t i = 0; i < d.size(); ++i) d.set(i, rng.pick(levels));
  return d;
}

DiscreteFuzzySet random_subset_of(const DiscreteFuzzySet& base, std::span<const double> levels,
                                  SampleRng& rng) {
  DiscreteFuzzySet d{base.universe()};
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto end = std::upper_bound(levels.begin(), levels.end(), base[i]);
    const std::size_t choices = static_cast<std::size_t>(end - levels.begin());
    d.set(i, choices == 0 ? 0.0 : levels[rng.index(choices)]);
  }
  return d;
}

DiscreteFuzzySet random_crisp_set(const FiniteUniverse& u, SampleRng& rng) {
  DiscreteFuzzySet d{u};
  for (std::size_t i = 0; i < d.size(); ++i) d.set(i, rng.index(2) == 0 ? 0.0 : 1.0);
  force_membership_one(d, rng);
  if (d.size() > 1) force_membership_zero(d, rng);
  return d;
}

void force_membership_one(DiscreteFuzzySet& d, SampleRng& rng) {
  for (double v : d.values()) {
    if (v == 1.0) return;
  }
  d.set(rng.index(d.size()), 1.0);
}

void force_membership_zero(DiscreteFuzzySet& d, SampleRng& rng) {
  for (double v : d.values()) {
    if (v == 0.0) return;
  }
  // Keep an existing peak if there is one; drop a non-peak point to zero.
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 1.0) candidates.push_back(i);
  }
  if (candidates.empty()) {
    d.set(rng.index(d.size()), 0.0);
  } else {
    d.set(candidates[rng.index(candidates.size())], 0.0);
  }
}

}  // namespace aggfuzz
