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

#include "aggfuzz/implications.hpp"
#include "aggfuzz/relation.hpp"

namespace aggfuzz {

// Similarity-modified conditional relations.
FuzzyRelation modified_relation_r1(double similarity, const FuzzyRelation& r,
                                   const Aggregation& a);
FuzzyRelation modified_relation_r2(double similarity, const FuzzyRelation& r,
                                   const Implication& imp);

// Conclusion schemes; the pair is (modifier op applied to the similarity,
// relation op applied to antecedent/consequent), projected by sup or inf.
enum class AsbrScheme : int {
  implication_of_conjunction = 1,  // B'(y) = sup_x I(s, A(D(x),B(y)))
  implication_of_implication = 2,  // B'(y) = inf_x I(s, I(D(x),B(y)))
  conjunction_of_conjunction = 3,  // B'(y) = sup_x A(s, A(D(x),B(y)))
  conjunction_of_implication = 4,  // B'(y) = inf_x A(s, I(D(x),B(y)))
};

AsbrScheme asbr_scheme_from_int(int scheme);  // throws BadScheme

DiscreteFuzzySet asbr_conclude(const DiscreteFuzzySet& d_prime, const DiscreteFuzzySet& d,
                               const DiscreteFuzzySet& b, const Aggregation& a,
                               const Implication& imp, const SimilarityMeasure& s,
                               AsbrScheme scheme);

// Similarity-monotonicity of schemes 1 and 2: a premise at least as similar
// to the antecedent yields a conclusion at least as similar to the
// consequent. Randomized trials with the antecedent kept normal; also
// asserts the underlying containment chain B <= closer <= farther.
struct Gmp2PrimeConfig {
  Aggregation a;
  Implication imp;
  SimilarityMeasure similarity;
  AsbrScheme scheme = AsbrScheme::implication_of_conjunction;
  FiniteUniverse input_universe;
  FiniteUniverse output_universe;
  double membership_step = 0.25;
};

struct TrialVerdict {
  bool ok = true;
  int failing_trial = -1;
  std::string detail;
};

TrialVerdict check_gmp2_prime(const Gmp2PrimeConfig& cfg, int trials, std::uint64_t seed);

}  // namespace aggfuzz
