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
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "aggfuzz/connectives.hpp"
#include "aggfuzz/unit.hpp"

namespace aggfuzz {

struct FiniteUniverse {
  std::string name;
  std::vector<std::string> labels;

  FiniteUniverse() = default;
  FiniteUniverse(std::string universe_name, std::vector<std::string> universe_labels);

  std::size_t size() const noexcept { return labels.size(); }
  // Index of a label, or npos when absent.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t index_of(const std::string& label) const;

  bool operator==(const FiniteUniverse& other) const = default;
};

FiniteUniverse make_universe(std::string name, const std::string& prefix, std::size_t n);

// Membership over a finite universe, stored densely in label order. Sparse
// maps (absent label = 0) appear only at the serialization boundary.
class DiscreteFuzzySet {
 public:
  DiscreteFuzzySet() = default;
  explicit DiscreteFuzzySet(FiniteUniverse universe);
  DiscreteFuzzySet(FiniteUniverse universe, std::vector<double> values);

  static DiscreteFuzzySet from_map(FiniteUniverse universe,
                                   const std::map<std::string, double>& membership);

  const FiniteUniverse& universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return values_.size(); }

  double operator[](std::size_t i) const { return values_[i]; }
  double at(const std::string& label) const;

  void set(std::size_t i, double v);
  void set(const std::string& label, double v);

  std::span<const double> values() const noexcept { return values_; }

  bool same_universe(const DiscreteFuzzySet& other) const { return universe_ == other.universe_; }
  // Pointwise order; this is the set inclusion used by the validity checks.
  bool subset_of(const DiscreteFuzzySet& other, double tol = 0.0) const;
  bool approx_equals(const DiscreteFuzzySet& other, double tol) const;

  double height() const;  // largest membership

 private:
  FiniteUniverse universe_;
  std::vector<double> values_;
};

// Pointwise negation over every universe label; absent points (value 0) map
// to N(0) = 1.
DiscreteFuzzySet complement(const DiscreteFuzzySet& d, const Negation& n);

// True iff some membership equals 1 exactly.
bool is_normal(const DiscreteFuzzySet& d);

// Sum of pointwise minima over sum of pointwise maxima; two empty sets
// compare as identical (similarity 1).
double jaccard_similarity(const DiscreteFuzzySet& d, const DiscreteFuzzySet& e);

struct SimilarityMeasure {
  std::string name;
  std::function<double(const DiscreteFuzzySet&, const DiscreteFuzzySet&)> fn;

  double operator()(const DiscreteFuzzySet& d, const DiscreteFuzzySet& e) const {
    return fn(d, e);
  }
};

SimilarityMeasure jaccard_measure();
SimilarityMeasure builtin_similarity(const std::string& name);

struct SimilarityAxiomReport {
  PropertyVerdict symmetric;          // S(D,E) = S(E,D)
  PropertyVerdict identity_of_equals; // S(D,E) = 1 iff D = E, both directions
  PropertyVerdict disjointness;       // S = 0 implies pointwise min = 0
  PropertyVerdict nested_monotone;    // S(D,F) <= min(S(D,E), S(E,F)) on chains

  bool ok() const {
    return symmetric.holds && identity_of_equals.holds && disjointness.holds &&
           nested_monotone.holds;
  }
};

SimilarityAxiomReport check_similarity_axioms(const SimilarityMeasure& s,
                                              const FiniteUniverse& universe, int trials,
                                              std::uint64_t seed);

// True iff memberships sum to 1 at every label, within tol.
bool ruspini_partition_check(std::span<const DiscreteFuzzySet> sets, double tol = 1e-9);

}  // namespace aggfuzz
