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

#include "aggfuzz/residuation.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "aggfuzz/errors.hpp"
#include "aggfuzz/search.hpp"

namespace aggfuzz {

namespace {

Implication residual_by_search(const Aggregation& a, const Tolerance& tol) {
  Implication imp;
  imp.name = "residual(" + a.name + ")";
  imp.family = ImplicationFamily::residual;
  // The residual of a function left-continuous in its second argument is
  // right-continuous there; carried as a derived declaration.
  imp.attrs.right_continuous_second_arg = a.attrs.left_continuous_second_arg;
  const BinaryFn fn = a.fn;
  imp.fn = [fn, tol](double x, double y) {
    return sup_satisfying([&](double z) { return fn(x, z) <= y; }, tol);
  };
  return imp;
}

Aggregation induced_by_search(const Implication& imp, const Tolerance& tol) {
  Aggregation a;
  a.name = "induced(" + imp.name + ")";
  a.attrs.left_continuous_second_arg = imp.attrs.right_continuous_second_arg;
  a.attrs.annihilator = DistinguishedElement{0.0, ElementSide::both};
  const BinaryFn fn = imp.fn;
  a.fn = [fn, tol](double x, double y) {
    return inf_satisfying([&](double z) { return fn(x, z) >= y; }, tol);
  };
  return a;
}

}  // namespace

Implication residual_implication(const Aggregation& a, const ResiduationOptions& opts) {
  Implication imp;
  if (opts.allow_closed_form && a.name == "product") {
    imp = builtin_implication("goguen");
  } else if (opts.allow_closed_form && a.name == "min") {
    imp = builtin_implication("godel");
  } else if (opts.allow_closed_form && a.name == "lukasiewicz_tnorm") {
    imp = builtin_implication("lukasiewicz");
  } else {
    imp = residual_by_search(a, opts.tol);
  }

  // Certification: the residual is an implication iff A(1,y) > 0 for y > 0
  // and A(0,y) = 0 for y < 1, both taken as grid evidence.
  const Grid grid = grid_points(opts.certification_grid);
  for (double y : grid.points) {
    if (y > 0.0 && !(a(1.0, y) > 0.0)) {
      imp.attrs.certified = false;
      imp.attrs.warnings.push_back("A(1," + std::to_string(y) +
                                   ") = 0; residual is not certified an implication");
      break;
    }
  }
  for (double y : grid.points) {
    if (y < 1.0 && a(0.0, y) != 0.0) {
      imp.attrs.certified = false;
      imp.attrs.warnings.push_back("A(0," + std::to_string(y) +
                                   ") != 0; residual is not certified an implication");
      break;
    }
  }
  return imp;
}

Aggregation induced_aggregation_unchecked(const Implication& imp,
                                          const ResiduationOptions& opts) {
  if (opts.allow_closed_form && imp.family == ImplicationFamily::builtin) {
    if (imp.name == "goguen") return builtin_aggregation("product");
    if (imp.name == "godel") return builtin_aggregation("min");
    if (imp.name == "lukasiewicz") return builtin_aggregation("lukasiewicz_tnorm");
  }
  return induced_by_search(imp, opts.tol);
}

Aggregation induced_aggregation(const Implication& imp, const ResiduationOptions& opts) {
  const Grid grid = grid_points(opts.certification_grid);
  for (double y : grid.points) {
    if (y < 1.0 && imp(1.0, y) >= 1.0) {
      throw ConditionViolated("induced aggregation needs I(1,y) < 1 for y < 1; fails at y=" +
                              std::to_string(y) + " for " + imp.name);
    }
  }
  return induced_aggregation_unchecked(imp, opts);
}

namespace {

AdjunctionReport adjunction_violation(double x, double y, double z, double av, double iv,
                                      const char* direction) {
  AdjunctionReport rep;
  rep.holds = false;
  rep.x = x;
  rep.y = y;
  rep.z = z;
  std::ostringstream os;
  os << direction << " at (x=" << x << ", y=" << y << ", z=" << z << "): A(x,z)=" << av
     << ", I(x,y)=" << iv;
  rep.detail = os.str();
  return rep;
}

AdjunctionReport check_triple(const Aggregation& a, const Implication& imp, double x, double y,
                              double z, double slack, double premise_slack) {
  const double av = a(x, z);
  const double iv = imp(x, y);
  if (av <= y && z > iv + slack) {
    return adjunction_violation(x, y, z, av, iv, "A(x,z) <= y but z > I(x,y)");
  }
  if (z <= iv + premise_slack && av > y + slack) {
    return adjunction_violation(x, y, z, av, iv, "z <= I(x,y) but A(x,z) > y");
  }
  return {};
}

}  // namespace

AdjunctionReport check_adjunction(const Aggregation& a, const Implication& imp, const Grid& grid,
                                  double slack, double premise_slack) {
  for (double x : grid.points) {
    for (double y : grid.points) {
      const double iv = imp(x, y);
      for (double z : grid.points) {
        const double av = a(x, z);
        if (av <= y && z > iv + slack) {
          return adjunction_violation(x, y, z, av, iv, "A(x,z) <= y but z > I(x,y)");
        }
        if (z <= iv + premise_slack && av > y + slack) {
          return adjunction_violation(x, y, z, av, iv, "z <= I(x,y) but A(x,z) > y");
        }
      }
    }
  }
  return {};
}

AdjunctionReport check_adjunction(const Aggregation& a, const Implication& imp,
                                  const std::vector<std::array<double, 3>>& triples,
                                  double slack, double premise_slack) {
  for (const auto& t : triples) {
    AdjunctionReport rep = check_triple(a, imp, t[0], t[1], t[2], slack, premise_slack);
    if (!rep.holds) return rep;
  }
  return {};
}

RoundtripReport roundtrip_check(const Implication& imp, const Grid& grid, const Tolerance& tol) {
  ResiduationOptions opts;
  opts.tol = tol;
  opts.allow_closed_form = false;  // both stages through the search path
  const Aggregation induced = induced_aggregation_unchecked(imp, opts);
  const Implication back = residual_by_search(induced, tol);

  RoundtripReport rep;
  for (double x : grid.points) {
    for (double y : grid.points) {
      const double gap = std::abs(imp(x, y) - back(x, y));
      if (gap > rep.max_gap) {
        rep.max_gap = gap;
        rep.at_x = x;
        rep.at_y = y;
      }
    }
  }
  return rep;
}

}  // namespace aggfuzz
