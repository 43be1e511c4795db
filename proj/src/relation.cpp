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

#include "aggfuzz/relation.hpp"

#include <algorithm>

#include "aggfuzz/errors.hpp"

namespace aggfuzz {

FuzzyRelation::FuzzyRelation(FiniteUniverse rows, FiniteUniverse cols)
    : rows_(std::move(rows)), cols_(std::move(cols)), values_(rows_.size() * cols_.size(), 0.0) {}

FuzzyRelation::FuzzyRelation(FiniteUniverse rows, FiniteUniverse cols, std::vector<double> values)
    : rows_(std::move(rows)), cols_(std::move(cols)), values_(std::move(values)) {
  if (values_.size() != rows_.size() * cols_.size()) {
    throw DimensionMismatch("relation value count does not match " + rows_.name + " x " +
                            cols_.name);
  }
  for (double v : values_) UnitValue check(v);
}

void FuzzyRelation::set(std::size_t i, std::size_t j, double v) {
  if (i >= rows_.size() || j >= cols_.size()) throw DimensionMismatch("relation index out of range");
  values_[i * cols_.size() + j] = UnitValue(v).value();
}

FuzzyRelation cylinder_relation(const DiscreteFuzzySet& d, const DiscreteFuzzySet& b,
                                const BinaryFn& arrow) {
  FuzzyRelation r(d.universe(), b.universe());
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r.set(i, j, arrow(d[i], b[j]));
  }
  return r;
}

FuzzyRelation sup_a_compose(const FuzzyRelation& s, const FuzzyRelation& r,
                            const Aggregation& a) {
  if (s.cols() != r.rows()) {
    throw DimensionMismatch("composition needs matching middle universes, got " + s.cols().name +
                            " and " + r.rows().name);
  }
  FuzzyRelation out(s.rows(), r.cols());
  for (std::size_t i = 0; i < s.row_count(); ++i) {
    for (std::size_t k = 0; k < r.col_count(); ++k) {
      double best = 0.0;
      for (std::size_t j = 0; j < s.col_count(); ++j) {
        best = std::max(best, a(s.at(i, j), r.at(j, k)));
      }
      out.set(i, k, best);
    }
  }
  return out;
}

}  // namespace aggfuzz
