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

#include "aggfuzz/fuzzy_set.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "aggfuzz/errors.hpp"
#include "aggfuzz/sampling.hpp"

namespace aggfuzz {

FiniteUniverse::FiniteUniverse(std::string universe_name, std::vector<std::string> universe_labels)
    : name(std::move(universe_name)), labels(std::move(universe_labels)) {
  if (labels.empty()) throw Error("universe " + name + " has no labels");
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw Error("universe " + name + " repeats label " + l);
    }
  }
}

std::size_t FiniteUniverse::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return i;
  }
  return npos;
}

FiniteUniverse make_universe(std::string name, const std::string& prefix, std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(prefix + std::to_string(i));
  return FiniteUniverse(std::move(name), std::move(labels));
}

DiscreteFuzzySet::DiscreteFuzzySet(FiniteUniverse universe)
    : universe_(std::move(universe)), values_(universe_.size(), 0.0) {}

DiscreteFuzzySet::DiscreteFuzzySet(FiniteUniverse universe, std::vector<double> values)
    : universe_(std::move(universe)), values_(std::move(values)) {
  if (values_.size() != universe_.size()) {
    throw Error("membership vector size " + std::to_string(values_.size()) +
                " does not match universe " + universe_.name);
  }
  for (double v : values_) UnitValue check(v);
}

DiscreteFuzzySet DiscreteFuzzySet::from_map(FiniteUniverse universe,
                                            const std::map<std::string, double>& membership) {
  DiscreteFuzzySet d(std::move(universe));
  for (const auto& [label, v] : membership) d.set(label, v);
  return d;
}

double DiscreteFuzzySet::at(const std::string& label) const {
  const std::size_t i = universe_.index_of(label);
  if (i == FiniteUniverse::npos) {
    throw UniverseMismatch("label " + label + " not in universe " + universe_.name);
  }
  return values_[i];
}

void DiscreteFuzzySet::set(std::size_t i, double v) {
  if (i >= values_.size()) throw Error("membership index out of range");
  values_[i] = UnitValue(v).value();
}

void DiscreteFuzzySet::set(const std::string& label, double v) {
  const std::size_t i = universe_.index_of(label);
  if (i == FiniteUniverse::npos) {
    throw UniverseMismatch("label " + label + " not in universe " + universe_.name);
  }
  set(i, v);
}

bool DiscreteFuzzySet::subset_of(const DiscreteFuzzySet& other, double tol) const {
  if (!same_universe(other)) {
    throw UniverseMismatch("subset comparison across universes " + universe_.name + " and " +
                           other.universe_.name);
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] > other.values_[i] + tol) return false;
  }
  return true;
}

bool DiscreteFuzzySet::approx_equals(const DiscreteFuzzySet& other, double tol) const {
  if (!same_universe(other)) return false;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (std::abs(values_[i] - other.values_[i]) > tol) return false;
  }
  return true;
}

double DiscreteFuzzySet::height() const {
  double h = 0.0;
  for (double v : values_) h = std::max(h, v);
  return h;
}

DiscreteFuzzySet complement(const DiscreteFuzzySet& d, const Negation& n) {
  DiscreteFuzzySet out(d.universe());
  for (std::size_t i = 0; i < d.size(); ++i) out.set(i, n(d[i]));
  return out;
}

bool is_normal(const DiscreteFuzzySet& d) {
  for (double v : d.values()) {
    if (v == 1.0) return true;
  }
  return false;
}

double jaccard_similarity(const DiscreteFuzzySet& d, const DiscreteFuzzySet& e) {
  if (!d.same_universe(e)) {
    throw UniverseMismatch("similarity across universes " + d.universe().name + " and " +
                           e.universe().name);
  }
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    num += std::min(d[i], e[i]);
    den += std::max(d[i], e[i]);
  }
  if (den == 0.0) return 1.0;  // two empty sets are identical
  return num / den;
}

SimilarityMeasure jaccard_measure() {
  SimilarityMeasure s;
  s.name = "jaccard";
  s.fn = [](const DiscreteFuzzySet& d, const DiscreteFuzzySet& e) {
    return jaccard_similarity(d, e);
  };
  return s;
}

SimilarityMeasure builtin_similarity(const std::string& name) {
  if (name == "jaccard") return jaccard_measure();
  throw UnknownName("unknown similarity measure: " + name);
}

namespace {

PropertyVerdict similarity_fail(std::string detail) {
  PropertyVerdict v;
  v.holds = false;
  v.detail = std::move(detail);
  return v;
}

std::string set_to_string(const DiscreteFuzzySet& d) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) os << ", ";
    os << d.universe().labels[i] << ": " << d[i];
  }
  os << "}";
  return os.str();
}

}  // namespace

SimilarityAxiomReport check_similarity_axioms(const SimilarityMeasure& s,
                                              const FiniteUniverse& universe, int trials,
                                              std::uint64_t seed) {
  SimilarityAxiomReport rep;
  SampleRng rng(seed);
  const std::vector<double> levels = membership_levels(0.125);
  const double tol = 1e-12;

  for (int t = 0; t < trials; ++t) {
    const DiscreteFuzzySet d = random_set(universe, levels, rng);
    const DiscreteFuzzySet e = random_set(universe, levels, rng);

    if (rep.symmetric.holds && std::abs(s(d, e) - s(e, d)) > tol) {
      rep.symmetric = similarity_fail("S(D,E) != S(E,D) for D=" + set_to_string(d) +
                                      ", E=" + set_to_string(e));
    }
    if (rep.identity_of_equals.holds) {
      if (s(d, d) != 1.0) {
        rep.identity_of_equals = similarity_fail("S(D,D) != 1 for D=" + set_to_string(d));
      } else if (s(d, e) >= 1.0 - tol && !d.approx_equals(e, 0.0)) {
        rep.identity_of_equals = similarity_fail("S(D,E) = 1 for unequal D=" + set_to_string(d) +
                                                 ", E=" + set_to_string(e));
      }
    }
    if (rep.disjointness.holds && s(d, e) <= tol) {
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (std::min(d[i], e[i]) > 0.0) {
          rep.disjointness = similarity_fail("S = 0 although the sets overlap at " +
                                             universe.labels[i] + ": D=" + set_to_string(d) +
                                             ", E=" + set_to_string(e));
          break;
        }
      }
    }

    // Nested chain inner <= mid <= outer by monotone perturbation.
    const DiscreteFuzzySet outer = random_set(universe, levels, rng);
    const DiscreteFuzzySet mid = random_subset_of(outer, levels, rng);
    const DiscreteFuzzySet inner = random_subset_of(mid, levels, rng);
    if (rep.nested_monotone.holds) {
      const double whole = s(inner, outer);
      if (whole > s(inner, mid) + tol || whole > s(mid, outer) + tol) {
        rep.nested_monotone = similarity_fail(
            "chain similarity not dominated by its links: inner=" + set_to_string(inner) +
            ", mid=" + set_to_string(mid) + ", outer=" + set_to_string(outer));
      }
    }
  }
  return rep;
}

bool ruspini_partition_check(std::span<const DiscreteFuzzySet> sets, double tol) {
  if (sets.empty()) return false;
  for (const auto& s : sets) {
    if (!s.same_universe(sets.front())) {
      throw UniverseMismatch("partition members live on different universes");
    }
  }
  for (std::size_t i = 0; i < sets.front().size(); ++i) {
    double sum = 0.0;
    for (const auto& s : sets) sum += s[i];
    if (std::abs(sum - 1.0) > tol) return false;
  }
  return true;
}

}  // namespace aggfuzz
