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

#include "aggfuzz/asbr.hpp"

#include <algorithm>
#include <sstream>

#include "aggfuzz/errors.hpp"
#include "aggfuzz/sampling.hpp"

namespace aggfuzz {

FuzzyRelation modified_relation_r1(double similarity, const FuzzyRelation& r,
                                   const Aggregation& a) {
  FuzzyRelation out(r.rows(), r.cols());
  for (std::size_t i = 0; i < r.row_count(); ++i) {
    for (std::size_t j = 0; j < r.col_count(); ++j) out.set(i, j, a(similarity, r.at(i, j)));
  }
  return out;
}

FuzzyRelation modified_relation_r2(double similarity, const FuzzyRelation& r,
                                   const Implication& imp) {
  FuzzyRelation out(r.rows(), r.cols());
  for (std::size_t i = 0; i < r.row_count(); ++i) {
    for (std::size_t j = 0; j < r.col_count(); ++j) out.set(i, j, imp(similarity, r.at(i, j)));
  }
  return out;
}

AsbrScheme asbr_scheme_from_int(int scheme) {
  if (scheme < 1 || scheme > 4) {
    throw BadScheme("similarity scheme must be 1..4, got " + std::to_string(scheme));
  }
  return static_cast<AsbrScheme>(scheme);
}

DiscreteFuzzySet asbr_conclude(const DiscreteFuzzySet& d_prime, const DiscreteFuzzySet& d,
                               const DiscreteFuzzySet& b, const Aggregation& a,
                               const Implication& imp, const SimilarityMeasure& s,
                               AsbrScheme scheme) {
  if (!d_prime.same_universe(d)) {
    throw UniverseMismatch("premise and antecedent live on different universes");
  }
  const double sim = s(d, d_prime);
  DiscreteFuzzySet out(b.universe());
  for (std::size_t y = 0; y < b.size(); ++y) {
    double acc = 0.0;
    bool first = true;
    for (std::size_t x = 0; x < d.size(); ++x) {
      double v = 0.0;
      switch (scheme) {
        case AsbrScheme::implication_of_conjunction:
          v = imp(sim, a(d[x], b[y]));
          break;
        case AsbrScheme::implication_of_implication:
          v = imp(sim, imp(d[x], b[y]));
          break;
        case AsbrScheme::conjunction_of_conjunction:
          v = a(sim, a(d[x], b[y]));
          break;
        case AsbrScheme::conjunction_of_implication:
          v = a(sim, imp(d[x], b[y]));
          break;
      }
      const bool sup_projection = scheme == AsbrScheme::implication_of_conjunction ||
                                  scheme == AsbrScheme::conjunction_of_conjunction;
      if (first) {
        acc = v;
        first = false;
      } else {
        acc = sup_projection ? std::max(acc, v) : std::min(acc, v);
      }
    }
    out.set(y, acc);
  }
  return out;
}

TrialVerdict check_gmp2_prime(const Gmp2PrimeConfig& cfg, int trials, std::uint64_t seed) {
  if (cfg.scheme != AsbrScheme::implication_of_conjunction &&
      cfg.scheme != AsbrScheme::implication_of_implication) {
    throw BadScheme("similarity monotonicity applies to schemes 1 and 2");
  }
  SampleRng rng(seed);
  const std::vector<double> levels = membership_levels(cfg.membership_step);
  const double tol = 1e-9;

  for (int t = 0; t < trials; ++t) {
    DiscreteFuzzySet d = random_set(cfg.input_universe, levels, rng);
    force_membership_one(d, rng);
    const DiscreteFuzzySet b = random_set(cfg.output_universe, levels, rng);
    DiscreteFuzzySet closer = random_set(cfg.input_universe, levels, rng);
    DiscreteFuzzySet farther = random_set(cfg.input_universe, levels, rng);
    if (cfg.similarity(d, closer) < cfg.similarity(d, farther)) std::swap(closer, farther);

    const DiscreteFuzzySet from_closer =
        asbr_conclude(closer, d, b, cfg.a, cfg.imp, cfg.similarity, cfg.scheme);
    const DiscreteFuzzySet from_farther =
        asbr_conclude(farther, d, b, cfg.a, cfg.imp, cfg.similarity, cfg.scheme);

    // Containment chain B <= from_closer <= from_farther, then the
    // similarity ordering of the conclusions.
    std::ostringstream why;
    if (!b.subset_of(from_closer, tol)) {
      why << "consequent not contained in the conclusion of the closer premise";
    } else if (!from_closer.subset_of(from_farther, tol)) {
      why << "conclusion of the closer premise not contained in the farther one";
    } else if (cfg.similarity(from_closer, b) < cfg.similarity(from_farther, b) - tol) {
      why << "conclusion similarity order contradicts the premise similarity order";
    }
    if (const std::string d_str = why.str(); !d_str.empty()) {
      TrialVerdict v;
      v.ok = false;
      v.failing_trial = t;
      v.detail = d_str;
      return v;
    }
  }
  return {};
}

}  // namespace aggfuzz
