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

#include <doctest.h>

#include "aggfuzz/residuation.hpp"

using namespace aggfuzz;

namespace {

ResiduationOptions search_only() {
  ResiduationOptions opts;
  opts.allow_closed_form = false;
  return opts;
}

}  // namespace

TEST_CASE("residuals of the named t-norms match their closed forms") {
  const Implication goguen = residual_implication(builtin_aggregation("product"));
  CHECK(goguen.name == "goguen");
  CHECK(goguen(0.5, 0.2) == doctest::Approx(0.4));
  CHECK(goguen.attrs.certified);

  const Implication godel = residual_implication(builtin_aggregation("min"));
  CHECK(godel(0.6, 0.4) == 0.4);

  const Grid grid = grid_points(41);
  for (const std::string name : {"product", "min", "lukasiewicz_tnorm"}) {
    CAPTURE(name);
    const Implication closed = residual_implication(builtin_aggregation(name));
    const Implication searched = residual_implication(builtin_aggregation(name), search_only());
    CHECK(searched.attrs.certified);
    for (double x : grid.points) {
      for (double y : grid.points) {
        CHECK(std::abs(closed(x, y) - searched(x, y)) <= 1e-6);
      }
    }
  }
}

TEST_CASE("residual of a vacuous antecedent is full") {
  const Implication searched = residual_implication(builtin_aggregation("product"), search_only());
  CHECK(searched(0.0, 0.0) == 1.0);
}

TEST_CASE("boundary certification fails for averaging aggregations but the residual still "
          "degrades monotonically") {
  const Implication res = residual_implication(builtin_aggregation("arithmetic_mean"));
  CHECK(res.attrs.certified == false);
  CHECK(res.attrs.warnings.size() > 0);
  // Not an implication: the vacuous-antecedent corner collapses.
  CHECK(res(0.0, 0.0) == doctest::Approx(0.0).epsilon(1e-6));
  // Monotone in both arguments regardless.
  const auto rep = check_implication_properties(res, grid_points(21));
  CHECK(rep.i1.holds);
  CHECK(rep.i2.holds);
  CHECK(rep.i3.holds == false);
}

TEST_CASE("induced aggregations of the named implications match their closed forms") {
  const Aggregation product = induced_aggregation(builtin_implication("goguen"));
  CHECK(product.name == "product");
  CHECK(product(0.5, 0.4) == doctest::Approx(0.2));

  const Aggregation mn = induced_aggregation(builtin_implication("godel"));
  CHECK(mn.name == "min");
  CHECK(mn(0.6, 0.4) == 0.4);

  const Grid grid = grid_points(41);
  for (const std::string name : {"goguen", "godel", "lukasiewicz"}) {
    CAPTURE(name);
    const Aggregation closed = induced_aggregation(builtin_implication(name));
    const Aggregation searched =
        induced_aggregation(builtin_implication(name), search_only());
    for (double x : grid.points) {
      for (double y : grid.points) {
        CHECK(std::abs(closed(x, y) - searched(x, y)) <= 1e-6);
      }
    }
  }
}

TEST_CASE("induced aggregations absorb zero exactly, even through the search path") {
  for (const std::string& name : builtin_implication_names()) {
    CAPTURE(name);
    const Aggregation a = induced_aggregation_unchecked(builtin_implication(name), search_only());
    const Grid grid = grid_points(21);
    for (double t : grid.points) {
      CHECK(a(0.0, t) == 0.0);
      CHECK(a(t, 0.0) == 0.0);
    }
    CHECK(a.attrs.annihilator.has_value());
  }
}

TEST_CASE("an implication whose top section saturates early is rejected") {
  Implication saturating;
  saturating.name = "saturating";
  saturating.fn = [](double x, double y) { return (x == 1.0 && y < 0.5) ? y : 1.0; };
  CHECK_THROWS_AS(induced_aggregation(saturating), ConditionViolated);
}

TEST_CASE("adjoint pairs satisfy the residuation equivalence on exhaustive grids") {
  const Grid grid = grid_points(21);
  CHECK(check_adjunction(builtin_aggregation("product"), builtin_implication("goguen"), grid)
            .holds);
  CHECK(check_adjunction(builtin_aggregation("min"), builtin_implication("godel"), grid).holds);
  CHECK(check_adjunction(builtin_aggregation("lukasiewicz_tnorm"),
                         builtin_implication("lukasiewicz"), grid)
            .holds);
}

TEST_CASE("mismatched pairs produce a concrete adjunction counterexample") {
  const Aggregation product = builtin_aggregation("product");
  const Implication kd = builtin_implication("kleene_dienes");
  const AdjunctionReport rep = check_adjunction(product, kd, grid_points(51));
  REQUIRE(rep.holds == false);
  // Re-verify the reported triple.
  const bool forward = product(rep.x, rep.z) <= rep.y && rep.z > kd(rep.x, rep.y) + 1e-6;
  const bool backward = rep.z <= kd(rep.x, rep.y) && product(rep.x, rep.z) > rep.y + 1e-6;
  CHECK((forward || backward));
}

TEST_CASE("a t-norm discontinuous in its second argument loses the equivalence") {
  const Aggregation drastic = builtin_aggregation("drastic_tnorm");
  const Implication res = residual_implication(drastic, search_only());
  // The residual is a searched supremum that is not attained, so the premise
  // side gets the search tolerance.
  CHECK(check_adjunction(drastic, res, grid_points(21), 1e-6, 1e-8).holds == false);
}

TEST_CASE("right-continuous implications pair with their induced aggregations") {
  const Grid grid = grid_points(21);
  for (const std::string& name : builtin_implication_names()) {
    CAPTURE(name);
    const Implication imp = builtin_implication(name);
    const Aggregation induced = induced_aggregation_unchecked(imp, search_only());
    CHECK(check_adjunction(induced, imp, grid).holds);
  }
}

TEST_CASE("explicit triples drive the adjunction check as well") {
  const std::vector<std::array<double, 3>> triples = {{0.5, 0.2, 0.5}, {0.9, 0.05, 0.1}};
  const AdjunctionReport rep = check_adjunction(builtin_aggregation("product"),
                                                builtin_implication("kleene_dienes"), triples);
  CHECK(rep.holds == false);
}

TEST_CASE("the induced-then-residuated composition returns every builtin unchanged") {
  const Grid grid = grid_points(41);
  for (const std::string& name : builtin_implication_names()) {
    CAPTURE(name);
    const RoundtripReport rep = roundtrip_check(builtin_implication(name), grid);
    CHECK(rep.max_gap <= 1e-6);
  }
}

TEST_CASE("left-continuity alone does not rescue the equivalence when the second argument "
          "cannot vanish") {
  // For a disjunction-like aggregation the set {z : A(x,z) <= y} is empty
  // whenever x > y, and the empty-supremum convention plants a genuine
  // violation at z = 0: A(x,0) = x > y although 0 <= I_A(x,y) = 0.
  const Aggregation mx = builtin_aggregation("max");
  const Implication res = residual_implication(mx, search_only());
  CHECK(res.attrs.certified == false);
  CHECK(res(0.7, 0.3) == 0.0);
  const AdjunctionReport rep = check_adjunction(mx, res, grid_points(21), 1e-6, 1e-8);
  REQUIRE(rep.holds == false);
  CHECK(rep.z == 0.0);

  // The degraded residual still moves the right way in both arguments.
  const auto props = check_implication_properties(res, grid_points(21));
  CHECK(props.i1.holds);
  CHECK(props.i2.holds);
}
