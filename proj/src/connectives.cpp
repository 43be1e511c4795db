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

#include "aggfuzz/connectives.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "aggfuzz/errors.hpp"

namespace aggfuzz {

namespace {

std::string format_point(std::initializer_list<double> xs) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (double x : xs) {
    if (!first) os << ", ";
    os << x;
    first = false;
  }
  os << ")";
  return os.str();
}

PropertyVerdict fail_at(std::vector<double> witness, std::string detail) {
  PropertyVerdict v;
  v.holds = false;
  v.witness = std::move(witness);
  v.detail = std::move(detail);
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// Negations

Negation standard_negation() {
  Negation n;
  n.name = "standard";
  n.fn = [](double x) { return 1.0 - x; };
  n.declared_strict = true;
  n.declared_strong = true;
  return n;
}

Negation builtin_negation(const std::string& name) {
  if (name == "standard") return standard_negation();
  throw UnknownName("unknown negation: " + name);
}

NegationCheckReport check_negation(const Negation& n, const Grid& grid, double tol) {
  NegationCheckReport rep;
  if (std::abs(n(0.0) - 1.0) > tol || std::abs(n(1.0)) > tol) {
    rep.boundary = fail_at({n(0.0), n(1.0)},
                           "expected N(0)=1 and N(1)=0, got " + format_point({n(0.0), n(1.0)}));
  }
  for (std::size_t k = 0; k + 1 < grid.size() && rep.nonincreasing.holds; ++k) {
    const double a = grid[k], b = grid[k + 1];
    if (n(a) < n(b) - tol) {
      rep.nonincreasing = fail_at({a, b}, "N increases between " + format_point({a, b}));
    }
  }
  if (n.declared_strong) {
    for (double x : grid.points) {
      if (std::abs(n(n(x)) - x) > tol) {
        rep.involutive = fail_at({x}, "N(N(x)) != x at x=" + std::to_string(x));
        break;
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Builtin aggregations
//
// Neutral elements and annihilators must hold exactly at every grid point,
// so the formulas below branch on the boundary values instead of trusting
// floating arithmetic to cancel.

namespace {

double agg_min(double x, double y) { return std::min(x, y); }
double agg_max(double x, double y) { return std::max(x, y); }
double agg_product(double x, double y) { return x * y; }

double agg_lukasiewicz_tnorm(double x, double y) {
  if (x == 1.0) return y;
  if (y == 1.0) return x;
  return std::max(x + y - 1.0, 0.0);
}

double agg_drastic_tnorm(double x, double y) {
  if (x == 1.0) return y;
  if (y == 1.0) return x;
  return 0.0;
}

double agg_probabilistic_sum(double x, double y) {
  if (x == 0.0) return y;
  if (y == 0.0) return x;
  if (x == 1.0 || y == 1.0) return 1.0;
  return x + y - x * y;
}

double agg_lukasiewicz_tconorm(double x, double y) {
  if (x == 0.0) return y;
  if (y == 0.0) return x;
  return std::min(x + y, 1.0);
}

double agg_arithmetic_mean(double x, double y) { return 0.5 * (x + y); }

double agg_geometric_mean(double x, double y) {
  if (x == 0.0 || y == 0.0) return 0.0;
  return std::sqrt(x * y);
}

AggregationTags tnorm_tags() {
  AggregationTags t;
  t.commutative = t.associative = t.conjunctive = t.semicopula = t.tnorm = true;
  return t;
}

AggregationTags tconorm_tags() {
  AggregationTags t;
  t.commutative = t.associative = t.disjunctive = t.tconorm = true;
  return t;
}

}  // namespace

Aggregation builtin_aggregation(const std::string& name, const std::vector<double>& params) {
  Aggregation a;
  a.name = name;
  if (name != "clayton_copula" && !params.empty()) {
    throw UnknownName("aggregation " + name + " takes no parameters");
  }

  if (name == "min") {
    a.fn = agg_min;
    a.attrs.tags = tnorm_tags();
    a.attrs.tags.copula = true;
    a.attrs.tags.averaging = true;
    a.attrs.neutral = DistinguishedElement{1.0, ElementSide::both};
    a.attrs.annihilator = DistinguishedElement{0.0, ElementSide::both};
  } else if (name == "product") {
    a.fn = agg_product;
    a.attrs.tags = tnorm_tags();
    a.attrs.tags.copula = true;
    a.attrs.neutral = DistinguishedElement{1.0, ElementSide::both};
    a.attrs.annihilator = DistinguishedElement{0.0, ElementSide::both};
  } else if (name == "lukasiewicz_tnorm") {
    a.fn = agg_lukasiewicz_tnorm;
    a.attrs.tags = tnorm_tags();
    a.attrs.tags.copula = true;
    a.attrs.neutral = DistinguishedElement{1.0, ElementSide::both};
    a.attrs.annihilator = DistinguishedElement{0.0, ElementSide::both};
  } else if (name == "drastic_tnorm") {
    a.fn = agg_drastic_tnorm;
    a.attrs.tags = tnorm_tags();
    a.attrs.left_continuous_second_arg = false;
    a.attrs.neutral = DistinguishedElement{1.0, ElementSide::both};
    a.attrs.annihilator = DistinguishedElement{0.0, ElementSide::both};
  } else if (name == "max") {
    a.fn = agg_max;
    a.attrs.tags = tconorm_tags();
    a.attrs.tags.averaging = true;
    a.attrs.neutral = DistinguishedElement{0.0, ElementSide::both};
    a.attrs.annihilator = DistinguishedElement{1.0, ElementSide::both};
  } else if (name == "probabilistic_sum") {
    a.fn = agg_probabilistic_sum;
    a.attrs.tags = tconorm_tags();
    a.attrs.neutral = DistinguishedElement{0.0, ElementSide::both};
    a.attrs.annihilator = DistinguishedElement{1.0, ElementSide::both};
  } else if (name == "lukasiewicz_tconorm") {
    a.fn = agg_lukasiewicz_tconorm;
    a.attrs.tags = tconorm_tags();
    a.attrs.neutral = DistinguishedElement{0.0, ElementSide::both};
    a.attrs.annihilator = DistinguishedElement{1.0, ElementSide::both};
  } else if (name == "arithmetic_mean") {
    a.fn = agg_arithmetic_mean;
    a.attrs.tags.commutative = true;
    a.attrs.tags.averaging = true;
  } else if (name == "geometric_mean") {
    a.fn = agg_geometric_mean;
    a.attrs.tags.commutative = true;
    a.attrs.tags.averaging = true;
    a.attrs.annihilator = DistinguishedElement{0.0, ElementSide::both};
  } else if (name == "clayton_copula") {
    if (params.size() != 1) {
      throw UnknownName("clayton_copula needs exactly one parameter theta");
    }
    const double theta = params[0];
    if (!(theta > 0.0)) {
      throw RangeError("clayton_copula parameter theta must be positive");
    }
    a.name = "clayton_copula(" + std::to_string(theta) + ")";
    a.fn = [theta](double x, double y) {
      if (x == 0.0 || y == 0.0) return 0.0;
      if (x == 1.0) return y;
      if (y == 1.0) return x;
      const double s = std::pow(x, -theta) + std::pow(y, -theta) - 1.0;
      return std::pow(s, -1.0 / theta);
    };
    a.attrs.tags = tnorm_tags();
    a.attrs.tags.copula = true;
    a.attrs.neutral = DistinguishedElement{1.0, ElementSide::both};
    a.attrs.annihilator = DistinguishedElement{0.0, ElementSide::both};
  } else {
    throw UnknownName("unknown aggregation: " + name);
  }
  return a;
}

const std::vector<std::string>& builtin_aggregation_names() {
  static const std::vector<std::string> names = {
      "min",
      "product",
      "lukasiewicz_tnorm",
      "drastic_tnorm",
      "max",
      "probabilistic_sum",
      "lukasiewicz_tconorm",
      "arithmetic_mean",
      "geometric_mean",
      "clayton_copula",
  };
  return names;
}

// ---------------------------------------------------------------------------
// Checks

AggregationAxiomReport check_aggregation_axioms(const Aggregation& a, const Grid& grid,
                                                double tol) {
  AggregationAxiomReport rep;
  if (std::abs(a(0.0, 0.0)) > tol || std::abs(a(1.0, 1.0) - 1.0) > tol) {
    rep.boundary = fail_at({a(0.0, 0.0), a(1.0, 1.0)},
                           "boundary values " + format_point({a(0.0, 0.0), a(1.0, 1.0)}) +
                               " differ from (0, 1)");
  }
  for (std::size_t i = 0; i < grid.size() && rep.monotone_first.holds; ++i) {
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
      const double y = grid[i];
      if (a(grid[k], y) > a(grid[k + 1], y) + tol) {
        rep.monotone_first = fail_at({grid[k], grid[k + 1], y},
                                     "decreasing in first variable at y=" + std::to_string(y));
        break;
      }
    }
  }
  for (std::size_t i = 0; i < grid.size() && rep.monotone_second.holds; ++i) {
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
      const double x = grid[i];
      if (a(x, grid[k]) > a(x, grid[k + 1]) + tol) {
        rep.monotone_second = fail_at({x, grid[k], grid[k + 1]},
                                      "decreasing in second variable at x=" + std::to_string(x));
        break;
      }
    }
  }
  return rep;
}

namespace {

// Neutral/annihilator scan: exact equality at every grid point.
std::optional<double> scan_distinguished(const Grid& grid,
                                         const std::function<bool(double)>& is_it) {
  for (double e : grid.points) {
    if (is_it(e)) return e;
  }
  return std::nullopt;
}

}  // namespace

ClassifyReport classify(const Aggregation& a, const Grid& grid, double tol) {
  ClassifyReport rep;
  const std::size_t n = grid.size();

  // Cache the grid table once; the rectangle sweep below reuses it.
  std::vector<double> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = a(grid[i], grid[j]);
  }
  auto tab = [&](std::size_t i, std::size_t j) { return table[i * n + j]; };

  for (std::size_t i = 0; i < n && rep.commutative.holds; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(tab(i, j) - tab(j, i)) > tol) {
        rep.commutative = fail_at({grid[i], grid[j]},
                                  "A(x,y) != A(y,x) at " + format_point({grid[i], grid[j]}));
        break;
      }
    }
  }

  for (std::size_t i = 0; i < n && rep.associative.holds; ++i) {
    for (std::size_t j = 0; j < n && rep.associative.holds; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const double left = a(tab(i, j), grid[k]);
        const double right = a(grid[i], tab(j, k));
        if (std::abs(left - right) > tol) {
          rep.associative = fail_at({grid[i], grid[j], grid[k]},
                                    "A(A(x,y),z) != A(x,A(y,z)) at " +
                                        format_point({grid[i], grid[j], grid[k]}));
          break;
        }
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = tab(i, j);
      const double lo = std::min(grid[i], grid[j]);
      const double hi = std::max(grid[i], grid[j]);
      if (rep.conjunctive.holds && v > lo + tol) {
        rep.conjunctive = fail_at({grid[i], grid[j]},
                                  "A exceeds min at " + format_point({grid[i], grid[j]}));
      }
      if (rep.disjunctive.holds && v < hi - tol) {
        rep.disjunctive = fail_at({grid[i], grid[j]},
                                  "A below max at " + format_point({grid[i], grid[j]}));
      }
      if (rep.averaging.holds && (v < lo - tol || v > hi + tol)) {
        rep.averaging = fail_at({grid[i], grid[j]},
                                "A outside [min, max] at " + format_point({grid[i], grid[j]}));
      }
    }
  }

  rep.left_neutral = scan_distinguished(grid, [&](double e) {
    for (double x : grid.points) {
      if (a(e, x) != x) return false;
    }
    return true;
  });
  rep.right_neutral = scan_distinguished(grid, [&](double e) {
    for (double x : grid.points) {
      if (a(x, e) != x) return false;
    }
    return true;
  });
  if (rep.left_neutral && rep.right_neutral && *rep.left_neutral == *rep.right_neutral) {
    rep.neutral = rep.left_neutral;
  }

  rep.left_annihilator = scan_distinguished(grid, [&](double c) {
    for (double x : grid.points) {
      if (a(c, x) != c) return false;
    }
    return true;
  });
  rep.right_annihilator = scan_distinguished(grid, [&](double c) {
    for (double x : grid.points) {
      if (a(x, c) != c) return false;
    }
    return true;
  });
  if (rep.left_annihilator && rep.right_annihilator &&
      *rep.left_annihilator == *rep.right_annihilator) {
    rep.annihilator = rep.left_annihilator;
  }

  // Rectangle inequality on all grid rectangles, from the cached table.
  for (std::size_t i1 = 0; i1 < n && rep.two_increasing.holds; ++i1) {
    for (std::size_t i2 = i1; i2 < n && rep.two_increasing.holds; ++i2) {
      for (std::size_t j1 = 0; j1 < n && rep.two_increasing.holds; ++j1) {
        for (std::size_t j2 = j1; j2 < n; ++j2) {
          const double vol = tab(i1, j1) - tab(i1, j2) - tab(i2, j1) + tab(i2, j2);
          if (vol < -1e-12) {
            rep.two_increasing =
                fail_at({grid[i1], grid[i2], grid[j1], grid[j2]},
                        "negative rectangle volume " + std::to_string(vol) + " at " +
                            format_point({grid[i1], grid[i2], grid[j1], grid[j2]}));
            break;
          }
        }
      }
    }
  }

  rep.semicopula = rep.neutral.has_value() && *rep.neutral == 1.0;
  rep.dual_semicopula = rep.neutral.has_value() && *rep.neutral == 0.0;
  rep.tnorm = rep.commutative.holds && rep.associative.holds && rep.semicopula;
  rep.tconorm = rep.commutative.holds && rep.associative.holds && rep.dual_semicopula;
  rep.copula = rep.semicopula && rep.two_increasing.holds;
  return rep;
}

ContinuityScan check_left_continuity_second_arg(const Aggregation& a, const Grid& grid,
                                                double jump_tol) {
  ContinuityScan scan;
  scan.declared = a.attrs.left_continuous_second_arg;
  const double delta = 1e-7;
  // Walk a refinement of the grid in the second argument and compare each
  // sample with a point just left of it.
  const int refine = 10;
  for (double x : grid.points) {
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
      const double z0 = grid[k], z1 = grid[k + 1];
      for (int r = 1; r <= refine; ++r) {
        const double z = z0 + (z1 - z0) * static_cast<double>(r) / refine;
        const double jump = a(x, z) - a(x, z - delta);
        if (jump > jump_tol) {
          scan.jump_found = true;
          scan.at_x = x;
          scan.at_z = z;
          scan.jump = jump;
          return scan;
        }
      }
    }
  }
  return scan;
}

}  // namespace aggfuzz
