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

#include <cmath>
#include <vector>

#include <doctest.h>

#include "aggfuzz/fuzzy_set.hpp"

using namespace aggfuzz;

namespace {

FiniteUniverse u5() { return make_universe("U", "x", 5); }

// The worked five-point instance used across the engine.
DiscreteFuzzySet worked_d() { return DiscreteFuzzySet(u5(), {1.0, 0.2, 0.5, 0.0, 0.0}); }
DiscreteFuzzySet worked_d_prime() { return DiscreteFuzzySet(u5(), {0.0, 0.5, 1.0, 0.2, 0.0}); }

}  // namespace

TEST_CASE("universes validate their labels") {
  CHECK_THROWS_AS(FiniteUniverse("U", {}), Error);
  CHECK_THROWS_AS(FiniteUniverse("U", {"a", "a"}), Error);
  const FiniteUniverse u = u5();
  CHECK(u.index_of("x3") == 2);
  CHECK(u.index_of("zz") == FiniteUniverse::npos);
}

TEST_CASE("membership values are validated on the way in") {
  DiscreteFuzzySet d(u5());
  d.set("x1", 1.0);
  CHECK(d.at("x1") == 1.0);
  CHECK(d.at("x2") == 0.0);  // absent means zero
  CHECK_THROWS_AS(d.set("x1", 1.2), RangeError);
  CHECK_THROWS_AS(d.set("zz", 0.5), UniverseMismatch);
  CHECK_THROWS_AS(DiscreteFuzzySet(u5(), {1.0, 0.2}), Error);

  const DiscreteFuzzySet from_map =
      DiscreteFuzzySet::from_map(u5(), {{"x1", 1.0}, {"x2", 0.2}, {"x3", 0.5}});
  CHECK(from_map.approx_equals(worked_d(), 0.0));
}

TEST_CASE("complement of the worked antecedent") {
  const DiscreteFuzzySet dc = complement(worked_d(), standard_negation());
  const DiscreteFuzzySet expected(u5(), {0.0, 0.8, 0.5, 1.0, 1.0});
  CHECK(dc.approx_equals(expected, 1e-12));
}

TEST_CASE("complement is an involution for the standard negation") {
  const DiscreteFuzzySet d = worked_d_prime();
  CHECK(complement(complement(d, standard_negation()), standard_negation())
            .approx_equals(d, 1e-12));
}

TEST_CASE("complement of the empty set is the universal set") {
  const DiscreteFuzzySet empty(u5());
  const DiscreteFuzzySet full = complement(empty, standard_negation());
  for (double v : full.values()) CHECK(v == 1.0);
}

TEST_CASE("normality means hitting one exactly") {
  CHECK(is_normal(worked_d()));
  DiscreteFuzzySet almost(u5());
  almost.set("x1", 0.9);
  CHECK(is_normal(almost) == false);
  DiscreteFuzzySet full(u5(), {1, 1, 1, 1, 1});
  CHECK(is_normal(full));
}

TEST_CASE("overlap similarity of the worked premise pair") {
  // Sum of minima 0.7, sum of maxima 2.7.
  CHECK(jaccard_similarity(worked_d(), worked_d_prime()) ==
        doctest::Approx(7.0 / 27.0).epsilon(1e-12));
}

TEST_CASE("similarity of a set with itself is exactly one") {
  CHECK(jaccard_similarity(worked_d(), worked_d()) == 1.0);
  const DiscreteFuzzySet empty(u5());
  CHECK(jaccard_similarity(empty, empty) == 1.0);
}

TEST_CASE("disjoint sets have similarity zero") {
  DiscreteFuzzySet left(u5(), {1.0, 0.5, 0.0, 0.0, 0.0});
  DiscreteFuzzySet right(u5(), {0.0, 0.0, 0.0, 0.7, 1.0});
  CHECK(jaccard_similarity(left, right) == 0.0);
}

TEST_CASE("similarity across universes is rejected") {
  const DiscreteFuzzySet d = worked_d();
  const DiscreteFuzzySet other{make_universe("V", "y", 5)};
  CHECK_THROWS_AS(jaccard_similarity(d, other), UniverseMismatch);
  CHECK_THROWS_AS(d.subset_of(other), UniverseMismatch);
}

TEST_CASE("pointwise order gives the inclusion used by the rule checks") {
  const DiscreteFuzzySet d = worked_d();
  DiscreteFuzzySet larger = d;
  larger.set("x4", 0.3);
  CHECK(d.subset_of(larger));
  CHECK(larger.subset_of(d) == false);
  CHECK(d.subset_of(d));
}

TEST_CASE("the axiom suite passes for the overlap measure") {
  const SimilarityAxiomReport rep =
      check_similarity_axioms(jaccard_measure(), u5(), 1000, 20260809);
  CHECK(rep.symmetric.holds);
  CHECK(rep.identity_of_equals.holds);
  CHECK(rep.disjointness.holds);
  CHECK(rep.nested_monotone.holds);
}

TEST_CASE("a sup-distance measure flags overlapping sets as fully dissimilar") {
  SimilarityMeasure broken;
  broken.name = "one_minus_sup_distance";
  broken.fn = [](const DiscreteFuzzySet& d, const DiscreteFuzzySet& e) {
    double worst = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) worst = std::max(worst, std::abs(d[i] - e[i]));
    return 1.0 - worst;
  };
  // Direct counterexample first: similarity 0 despite overlap.
  DiscreteFuzzySet d(u5(), {1.0, 0.5, 0.0, 0.0, 0.0});
  DiscreteFuzzySet e(u5(), {0.0, 0.5, 0.0, 0.0, 0.0});
  CHECK(broken(d, e) == 0.0);
  CHECK(std::min(d[1], e[1]) > 0.0);

  const SimilarityAxiomReport rep = check_similarity_axioms(broken, u5(), 1000, 20260809);
  CHECK(rep.disjointness.holds == false);
  CHECK(rep.disjointness.detail.size() > 0);
}

TEST_CASE("chain domination holds on every nested triple with eighth-step memberships") {
  // All chains inner <= mid <= outer over small universes; level triples
  // (a <= b <= c) are enumerated per label.
  const std::vector<double> levels = {0.0, 0.125, 0.25, 0.375, 0.5, 0.625, 0.75, 0.875, 1.0};
  std::vector<std::array<double, 3>> triples;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    for (std::size_t j = i; j < levels.size(); ++j) {
      for (std::size_t k = j; k < levels.size(); ++k) {
        triples.push_back({levels[i], levels[j], levels[k]});
      }
    }
  }

  for (std::size_t n = 1; n <= 2; ++n) {
    const FiniteUniverse u = make_universe("U", "x", n);
    DiscreteFuzzySet inner(u), mid(u), outer(u);
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      for (std::size_t i = 0; i < n; ++i) {
        inner.set(i, triples[idx[i]][0]);
        mid.set(i, triples[idx[i]][1]);
        outer.set(i, triples[idx[i]][2]);
      }
      const double whole = jaccard_similarity(inner, outer);
      REQUIRE(whole <= jaccard_similarity(inner, mid) + 1e-12);
      REQUIRE(whole <= jaccard_similarity(mid, outer) + 1e-12);
      std::size_t pos = 0;
      while (pos < n && ++idx[pos] == triples.size()) idx[pos++] = 0;
      if (pos == n) break;
    }
  }
}

TEST_CASE("partition-of-unity check") {
  const FiniteUniverse u = make_universe("U", "x", 3);
  DiscreteFuzzySet a(u, {0.3, 1.0, 0.0});
  DiscreteFuzzySet b(u, {0.7, 0.0, 1.0});
  const std::vector<DiscreteFuzzySet> pair = {a, b};
  CHECK(ruspini_partition_check(pair));

  const std::vector<DiscreteFuzzySet> triangular = {DiscreteFuzzySet(u, {1, 0, 0}),
                                                    DiscreteFuzzySet(u, {0, 1, 0}),
                                                    DiscreteFuzzySet(u, {0, 0, 1})};
  CHECK(ruspini_partition_check(triangular));

  DiscreteFuzzySet normal(u, {1.0, 0.5, 0.0});
  const std::vector<DiscreteFuzzySet> twice = {normal, normal};
  CHECK(ruspini_partition_check(twice) == false);

  const std::vector<DiscreteFuzzySet> mixed = {a, DiscreteFuzzySet{make_universe("V", "y", 3)}};
  CHECK_THROWS_AS(ruspini_partition_check(mixed), UniverseMismatch);
}
