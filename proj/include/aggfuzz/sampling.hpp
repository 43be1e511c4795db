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

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "aggfuzz/fuzzy_set.hpp"

namespace aggfuzz {

// Deterministic sampler. Indices come straight off the engine output (the
// tiny modulo bias is irrelevant here, reproducibility across platforms is
// not).
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  std::size_t index(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(eng_() % n); }
  double pick(std::span<const double> values) { return values[index(values.size())]; }

 private:
  std::mt19937_64 eng_;
};

// {0, step, 2*step, ..., 1}; the last point is forced to 1 exactly.
std::vector<double> membership_levels(double step);

DiscreteFuzzySet random_set(const FiniteUniverse& u, std::span<const double> levels,
                            SampleRng& rng);

// Pointwise <= base, one level per label drawn among those below base.
DiscreteFuzzySet random_subset_of(const DiscreteFuzzySet& base, std::span<const double> levels,
                                  SampleRng& rng);

// Crisp set with at least one 1; with room, also at least one 0 so the
// complement stays normal.
DiscreteFuzzySet random_crisp_set(const FiniteUniverse& u, SampleRng& rng);

void force_membership_one(DiscreteFuzzySet& d, SampleRng& rng);
void force_membership_zero(DiscreteFuzzySet& d, SampleRng& rng);

}  // namespace aggfuzz
