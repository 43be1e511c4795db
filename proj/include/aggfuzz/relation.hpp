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

#include "aggfuzz/connectives.hpp"
#include "aggfuzz/fuzzy_set.hpp"

namespace aggfuzz {

// Fuzzy relation on rows x cols, dense row-major.
class FuzzyRelation {
 public:
  FuzzyRelation() = default;
  FuzzyRelation(FiniteUniverse rows, FiniteUniverse cols);
  FuzzyRelation(FiniteUniverse rows, FiniteUniverse cols, std::vector<double> values);

  const FiniteUniverse& rows() const noexcept { return rows_; }
  const FiniteUniverse& cols() const noexcept { return cols_; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  std::size_t col_count() const noexcept { return cols_.size(); }

  double at(std::size_t i, std::size_t j) const { return values_[i * cols_.size() + j]; }
  void set(std::size_t i, std::size_t j, double v);

  std::span<const double> values() const noexcept { return values_; }

 private:
  FiniteUniverse rows_, cols_;
  std::vector<double> values_;
};

// R(x,y) = arrow(d(x), b(y)).
FuzzyRelation cylinder_relation(const DiscreteFuzzySet& d, const DiscreteFuzzySet& b,
                                const BinaryFn& arrow);

// (S o R)(x,z) = max over the shared middle universe of A(S(x,y), R(y,z)).
// Throws DimensionMismatch when the middle universes differ.
FuzzyRelation sup_a_compose(const FuzzyRelation& s, const FuzzyRelation& r, const Aggregation& a);

}  // namespace aggfuzz
