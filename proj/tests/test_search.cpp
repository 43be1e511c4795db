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

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "aggfuzz/search.hpp"

using namespace aggfuzz;

namespace {

// Piecewise-linear nondecreasing function on [0,1] from sorted knot values.
struct MonotoneFn {
  std::vector<double> knots;  // values at 0, 1/(k-1), ..., 1

  double operator()(double z) const {
    const double pos = z * static_cast<double>(knots.size() - 1);
    const std::size_t i = std::min(static_cast<std::size_t>(pos), knots.size() - 2);
    const double frac = pos - static_cast<double>(i);
    return knots[i] + frac * (knots[i + 1] - knots[i]);
  }
};

MonotoneFn random_monotone(std::mt19937_64& eng) {
  std::vector<double> knots(7);
  for (double& k : knots) {
    k = static_cast<double>(eng() % 10001) / 10000.0;
  }
  std::sort(knots.begin(), knots.end());
  return MonotoneFn{std::move(knots)};
}

// Linear-scan references for the boundary of a monotone predicate.
double scan_sup(const UnitPredicate& pred, int n) {
  double best = 0.0;
  bool any = false;
  for (int k = 0; k <= n; ++k) {
    const double z = static_cast<double>(k) / n;
    if (pred(z)) {
      best = z;
      any = true;
    }
  }
  return any ? best : 0.0;
}

double scan_inf(const UnitPredicate& pred, int n) {
  for (int k = 0; k <= n; ++k) {
    const double z = static_cast<double>(k) / n;
    if (pred(z)) return z;
  }
  return 1.0;
}

}  // namespace

TEST_CASE("largest point below a threshold of a scaled identity") {
  const double got = sup_satisfying([](double z) { return 0.5 * z <= 0.2; });
  CHECK(got == doctest::Approx(0.4).epsilon(1e-8));
}

TEST_CASE("down-set boundary behind a plateau") {
  const double got = sup_satisfying([](double z) { return std::min(0.6, z) <= 0.4; });
  CHECK(got == doctest::Approx(0.4).epsilon(1e-8));
}

TEST_CASE("empty down-set gives zero, full set gives one exactly") {
  CHECK(sup_satisfying([](double z) { return z <= -1.0; }) == 0.0);
  CHECK(sup_satisfying([](double) { return true; }) == 1.0);
  CHECK(inf_satisfying([](double) { return false; }) == 1.0);
  CHECK(inf_satisfying([](double) { return true; }) == 0.0);
}

TEST_CASE("up-set boundaries") {
  CHECK(inf_satisfying([](double z) { return z >= 0.3; }) == doctest::Approx(0.3).epsilon(1e-8));
  const double got = inf_satisfying([](double z) { return std::min(z / 0.5, 1.0) >= 0.4; });
  CHECK(got == doctest::Approx(0.2).epsilon(1e-8));
}

TEST_CASE("identical inputs give bit-identical outputs") {
  auto pred = [](double z) { return 0.7 * z <= 0.31; };
  CHECK(sup_satisfying(pred) == sup_satisfying(pred));
  auto up = [](double z) { return z * z >= 0.4; };
  CHECK(inf_satisfying(up) == inf_satisfying(up));
}

TEST_CASE("a middle-interval true-set is rejected") {
  CHECK_THROWS_AS(sup_satisfying([](double z) { return z >= 0.3 && z <= 0.6; }),
                  MonotonicityViolation);
  CHECK_THROWS_AS(inf_satisfying([](double z) { return z >= 0.3 && z <= 0.6; }),
                  MonotonicityViolation);
}

TEST_CASE("search agrees with a linear-scan reference on random monotone functions") {
  std::mt19937_64 eng(20260809);
  const int scan_n = 100000;
  const Tolerance tol;
  for (int trial = 0; trial < 20; ++trial) {
    const MonotoneFn g = random_monotone(eng);
    const double y = static_cast<double>(eng() % 10001) / 10000.0;

    const auto below = [&](double z) { return g(z) <= y; };
    const double sup_got = sup_satisfying(below, tol);
    const double sup_ref = scan_sup(below, scan_n);
    CHECK(std::abs(sup_got - sup_ref) <= tol.eps + 1.0 / scan_n);

    const auto above = [&](double z) { return g(z) >= y; };
    const double inf_got = inf_satisfying(above, tol);
    const double inf_ref = scan_inf(above, scan_n);
    CHECK(std::abs(inf_got - inf_ref) <= tol.eps + 1.0 / scan_n);
  }
}

TEST_CASE("tolerance construction rejects bad values") {
  CHECK_THROWS_AS(Tolerance(0.0, 10), Error);
  CHECK_THROWS_AS(Tolerance(-1e-9, 10), Error);
  CHECK_THROWS_AS(Tolerance(1e-9, 0), Error);
}

TEST_CASE("uniform grids include the endpoints exactly") {
  const Grid two = grid_points(2);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == 0.0);
  CHECK(two[1] == 1.0);

  const Grid three = grid_points(3);
  REQUIRE(three.size() == 3);
  CHECK(three[1] == 0.5);

  const Grid fine = grid_points(101);
  REQUIRE(fine.size() == 101);
  CHECK(fine.step() == doctest::Approx(0.01));
  CHECK(fine[100] == 1.0);

  CHECK_THROWS_AS(grid_points(1), Error);
}

TEST_CASE("unit values reject out-of-range construction") {
  CHECK(UnitValue(0.5).value() == 0.5);
  CHECK(UnitValue(0.0).value() == 0.0);
  CHECK(UnitValue(1.0).value() == 1.0);
  CHECK_THROWS_AS(UnitValue(1.2), RangeError);
  CHECK_THROWS_AS(UnitValue(-0.1), RangeError);
  CHECK_THROWS_AS(UnitValue(std::nan("")), RangeError);
}
