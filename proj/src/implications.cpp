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

#include "aggfuzz/implications.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "aggfuzz/errors.hpp"
#include "aggfuzz/search.hpp"

namespace aggfuzz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double imp_goguen(double x, double y) {
  if (x == 0.0) return 1.0;
  return std::min(y / x, 1.0);
}

double imp_godel(double x, double y) { return x <= y ? 1.0 : y; }

double imp_lukasiewicz(double x, double y) { return std::min(1.0 - x + y, 1.0); }

double imp_kleene_dienes(double x, double y) { return std::max(1.0 - x, y); }

double imp_reichenbach(double x, double y) { return (1.0 - x) + x * y; }

double imp_rescher_gaines(double x, double y) { return x <= y ? 1.0 : 0.0; }

ImplicationAttrs full_attrs(bool np, bool ip, bool ep, bool op) {
  ImplicationAttrs at;
  at.right_continuous_second_arg = true;
  at.neutrality = np;
  at.identity = ip;
  at.exchange = ep;
  at.ordering = op;
  return at;
}

}  // namespace

Implication builtin_implication(const std::string& name) {
  Implication imp;
  imp.name = name;
  imp.family = ImplicationFamily::builtin;
  if (name == "goguen") {
    imp.fn = imp_goguen;
    imp.attrs = full_attrs(true, true, true, true);
  } else if (name == "godel") {
    imp.fn = imp_godel;
    imp.attrs = full_attrs(true, true, true, true);
  } else if (name == "lukasiewicz") {
    imp.fn = imp_lukasiewicz;
    imp.attrs = full_attrs(true, true, true, true);
    imp.attrs.contraposition = true;
  } else if (name == "kleene_dienes") {
    imp.fn = imp_kleene_dienes;
    imp.attrs = full_attrs(true, false, true, false);
    imp.attrs.contraposition = true;
  } else if (name == "reichenbach") {
    imp.fn = imp_reichenbach;
    imp.attrs = full_attrs(true, false, true, false);
    imp.attrs.contraposition = true;
  } else if (name == "rescher_gaines") {
    imp.fn = imp_rescher_gaines;
    imp.attrs = full_attrs(false, true, false, true);
  } else {
    throw UnknownName("unknown implication: " + name);
  }
  return imp;
}

const std::vector<std::string>& builtin_implication_names() {
  static const std::vector<std::string> names = {
      "goguen", "godel", "lukasiewicz", "kleene_dienes", "reichenbach", "rescher_gaines",
  };
  return names;
}

Implication r_implication_from_tnorm(const Aggregation& tnorm, const Tolerance& tol,
                                     bool allow_closed_form) {
  if (!tnorm.attrs.tags.tnorm) {
    throw NotATNorm("r_implication_from_tnorm needs an aggregation tagged as a t-norm, got " +
                    tnorm.name);
  }
  if (allow_closed_form) {
    if (tnorm.name == "product") return builtin_implication("goguen");
    if (tnorm.name == "min") return builtin_implication("godel");
    if (tnorm.name == "lukasiewicz_tnorm") return builtin_implication("lukasiewicz");
  }
  Implication imp;
  imp.name = "residual(" + tnorm.name + ")";
  imp.family = ImplicationFamily::residual;
  imp.attrs.right_continuous_second_arg = tnorm.attrs.left_continuous_second_arg;
  const BinaryFn t = tnorm.fn;
  imp.fn = [t, tol](double x, double y) {
    return sup_satisfying([&](double z) { return t(x, z) <= y; }, tol);
  };
  return imp;
}

Implication an_implication(const Aggregation& disjunctor, const Negation& n) {
  // Accepts any aggregation for which 0 is a distinguished element, either
  // absorbing (annihilator) or an identity (neutral). Nothing about the left
  // boundary law is assumed from this; it is checked downstream.
  const auto& ann = disjunctor.attrs.annihilator;
  const auto& neu = disjunctor.attrs.neutral;
  const bool zero_annihilator = ann && ann->value == 0.0;
  const bool zero_neutral = neu && neu->value == 0.0;
  if (!zero_annihilator && !zero_neutral) {
    throw NotADisjunctor("an_implication needs an aggregation with 0 as annihilator or neutral "
                         "element, got " +
                         disjunctor.name);
  }
  Implication imp;
  imp.name = "an(" + disjunctor.name + ", " + n.name + ")";
  imp.family = ImplicationFamily::disjunctor;
  imp.attrs.right_continuous_second_arg = disjunctor.attrs.left_continuous_second_arg;
  const BinaryFn a = disjunctor.fn;
  const UnaryFn neg = n.fn;
  imp.fn = [a, neg](double x, double y) { return a(neg(x), y); };
  return imp;
}

// ---------------------------------------------------------------------------
// Generator families

namespace {

void validate_f_generator(const FGenerator& gen) {
  if (!gen.fn) throw InvalidGenerator("f-generator has no function");
  if (gen.fn(1.0) != 0.0) {
    throw InvalidGenerator("f-generator must satisfy f(1) = 0");
  }
  const Grid g = grid_points(33);
  for (std::size_t k = 0; k + 1 < g.size(); ++k) {
    const double lo = gen.fn(g[k]);
    const double hi = gen.fn(g[k + 1]);
    if (!(lo > hi)) {
      throw InvalidGenerator("f-generator is not strictly decreasing near " +
                             std::to_string(g[k]));
    }
    if (hi < 0.0) throw InvalidGenerator("f-generator takes negative values");
  }
}

void validate_g_generator(const GGenerator& gen) {
  if (!gen.fn) throw InvalidGenerator("g-generator has no function");
  if (gen.fn(0.0) != 0.0) {
    throw InvalidGenerator("g-generator must satisfy g(0) = 0");
  }
  const Grid g = grid_points(33);
  for (std::size_t k = 0; k + 1 < g.size(); ++k) {
    const double lo = gen.fn(g[k]);
    const double hi = gen.fn(g[k + 1]);
    if (!(lo < hi)) {
      throw InvalidGenerator("g-generator is not strictly increasing near " +
                             std::to_string(g[k]));
    }
  }
}

// Inverse of a strictly decreasing generator by interval halving; the
// true-set of f(t) >= v is a down-set in t.
double invert_decreasing(const UnaryFn& f, double v, const Tolerance& tol) {
  return sup_satisfying([&](double t) { return f(t) >= v; }, tol);
}

// Inverse of a strictly increasing generator; f(t) >= v is an up-set.
double invert_increasing(const UnaryFn& f, double v, const Tolerance& tol) {
  return inf_satisfying([&](double t) { return f(t) >= v; }, tol);
}

}  // namespace

FGenerator builtin_f_generator(const std::string& name) {
  FGenerator gen;
  gen.name = name;
  if (name == "neg_log") {
    gen.fn = [](double t) { return t == 0.0 ? kInf : -std::log(t); };
    gen.inverse = [](double v) { return v == kInf ? 0.0 : std::exp(-v); };
  } else if (name == "one_minus") {
    gen.fn = [](double t) { return 1.0 - t; };
    gen.inverse = [](double v) { return 1.0 - v; };
  } else {
    throw UnknownName("unknown f-generator: " + name);
  }
  return gen;
}

GGenerator builtin_g_generator(const std::string& name) {
  GGenerator gen;
  gen.name = name;
  if (name == "identity") {
    gen.fn = [](double t) { return t; };
    gen.inverse = [](double v) { return v; };
  } else if (name == "neg_log_complement") {
    gen.fn = [](double t) { return t == 1.0 ? kInf : -std::log1p(-t); };
    gen.inverse = [](double v) { return v == kInf ? 1.0 : -std::expm1(-v); };
  } else {
    throw UnknownName("unknown g-generator: " + name);
  }
  return gen;
}

Implication f_implication(const FGenerator& gen, const Tolerance& tol) {
  validate_f_generator(gen);
  Implication imp;
  imp.name = "f_implication(" + gen.name + ")";
  imp.family = ImplicationFamily::f_generated;
  imp.attrs = ImplicationAttrs{};
  imp.attrs.neutrality = true;
  const UnaryFn f = gen.fn;
  const UnaryFn f_inv = gen.inverse;
  const double f_at_zero = gen.fn(0.0);
  imp.fn = [f, f_inv, f_at_zero, tol](double x, double y) {
    if (x == 0.0) return 1.0;  // zero times anything, even infinity, is zero here
    const double v = x * f(y);
    if (v > f_at_zero) return 0.0;  // pseudo-inverse case split
    if (f_inv) return f_inv(v);
    return invert_decreasing(f, v, tol);
  };
  return imp;
}

Implication g_implication(const GGenerator& gen, const Tolerance& tol) {
  validate_g_generator(gen);
  Implication imp;
  imp.name = "g_implication(" + gen.name + ")";
  imp.family = ImplicationFamily::g_generated;
  imp.attrs = ImplicationAttrs{};
  imp.attrs.neutrality = true;
  const UnaryFn g = gen.fn;
  const UnaryFn g_inv = gen.inverse;
  const double g_at_one = gen.fn(1.0);
  imp.fn = [g, g_inv, g_at_one, tol](double x, double y) {
    if (x == 0.0) return 1.0;  // division by zero reads as infinity
    const double v = g(y) / x;
    if (v >= g_at_one) return 1.0;  // pseudo-inverse caps at 1
    if (g_inv) return g_inv(v);
    return invert_increasing(g, v, tol);
  };
  return imp;
}

Implication probabilistic_implication(const Aggregation& copula) {
  if (!copula.attrs.tags.copula) {
    throw NotACopula("probabilistic_implication needs an aggregation tagged as a copula, got " +
                     copula.name);
  }
  Implication imp;
  imp.name = "probabilistic(" + copula.name + ")";
  imp.family = ImplicationFamily::probabilistic;
  const BinaryFn c = copula.fn;
  imp.fn = [c](double x, double y) {
    if (x == 0.0) return 1.0;
    return std::min(c(x, y) / x, 1.0);
  };
  return imp;
}

Implication probabilistic_s_implication(const Aggregation& copula) {
  if (!copula.attrs.tags.copula) {
    throw NotACopula("probabilistic_s_implication needs an aggregation tagged as a copula, got " +
                     copula.name);
  }
  Implication imp;
  imp.name = "probabilistic_s(" + copula.name + ")";
  imp.family = ImplicationFamily::probabilistic_s;
  const BinaryFn c = copula.fn;
  imp.fn = [c](double x, double y) { return (1.0 - x) + c(x, y); };
  return imp;
}

// ---------------------------------------------------------------------------
// Property checks

namespace {

PropertyVerdict verdict_fail(std::vector<double> witness, std::string detail) {
  PropertyVerdict v;
  v.holds = false;
  v.witness = std::move(witness);
  v.detail = std::move(detail);
  return v;
}

}  // namespace

ImplicationPropertyReport check_implication_properties(const Implication& imp, const Grid& grid,
                                                       const Negation* n, double tol) {
  ImplicationPropertyReport rep;
  const std::size_t m = grid.size();

  for (std::size_t j = 0; j < m && rep.i1.holds; ++j) {
    for (std::size_t k = 0; k + 1 < m; ++k) {
      if (imp(grid[k], grid[j]) < imp(grid[k + 1], grid[j]) - tol) {
        rep.i1 = verdict_fail({grid[k], grid[k + 1], grid[j]}, "increasing in first variable");
        break;
      }
    }
  }
  for (std::size_t i = 0; i < m && rep.i2.holds; ++i) {
    for (std::size_t k = 0; k + 1 < m; ++k) {
      if (imp(grid[i], grid[k]) > imp(grid[i], grid[k + 1]) + tol) {
        rep.i2 = verdict_fail({grid[i], grid[k], grid[k + 1]}, "decreasing in second variable");
        break;
      }
    }
  }
  if (std::abs(imp(0.0, 0.0) - 1.0) > tol) rep.i3 = verdict_fail({}, "I(0,0) != 1");
  if (std::abs(imp(1.0, 1.0) - 1.0) > tol) rep.i4 = verdict_fail({}, "I(1,1) != 1");
  if (std::abs(imp(1.0, 0.0)) > tol) rep.i5 = verdict_fail({}, "I(1,0) != 0");

  for (double y : grid.points) {
    if (std::abs(imp(0.0, y) - 1.0) > tol) {
      rep.lb = verdict_fail({y}, "I(0,y) != 1");
      break;
    }
  }
  for (double x : grid.points) {
    if (std::abs(imp(x, 1.0) - 1.0) > tol) {
      rep.rb = verdict_fail({x}, "I(x,1) != 1");
      break;
    }
  }
  for (double y : grid.points) {
    if (std::abs(imp(1.0, y) - y) > tol) {
      rep.np = verdict_fail({y}, "I(1,y) != y");
      break;
    }
  }
  for (double x : grid.points) {
    if (std::abs(imp(x, x) - 1.0) > tol) {
      rep.ip = verdict_fail({x}, "I(x,x) != 1");
      break;
    }
  }
  for (std::size_t i = 0; i < m && rep.ep.holds; ++i) {
    for (std::size_t j = 0; j < m && rep.ep.holds; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        const double lhs = imp(grid[i], imp(grid[j], grid[k]));
        const double rhs = imp(grid[j], imp(grid[i], grid[k]));
        if (std::abs(lhs - rhs) > tol) {
          rep.ep = verdict_fail({grid[i], grid[j], grid[k]}, "exchange fails");
          break;
        }
      }
    }
  }
  for (std::size_t i = 0; i < m && rep.op.holds; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double v = imp(grid[i], grid[j]);
      if (grid[i] <= grid[j] && v < 1.0 - tol) {
        rep.op = verdict_fail({grid[i], grid[j]}, "I < 1 although x <= y");
        break;
      }
      if (grid[i] > grid[j] && v >= 1.0 - tol) {
        rep.op = verdict_fail({grid[i], grid[j]}, "I = 1 although x > y");
        break;
      }
    }
  }
  if (n != nullptr) {
    PropertyVerdict cp;
    for (std::size_t i = 0; i < m && cp.holds; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const double lhs = imp(grid[i], grid[j]);
        const double rhs = imp((*n)(grid[j]), (*n)(grid[i]));
        if (std::abs(lhs - rhs) > tol) {
          cp = verdict_fail({grid[i], grid[j]}, "contraposition fails");
          break;
        }
      }
    }
    rep.cp = cp;
  }
  // Ties fail on purpose: downstream results need strictness, not just
  // monotonicity, of y -> I(1,y).
  for (std::size_t k = 0; k + 1 < m; ++k) {
    if (!(imp(1.0, grid[k]) < imp(1.0, grid[k + 1]))) {
      rep.strictly_increasing_section =
          verdict_fail({grid[k], grid[k + 1]}, "section y -> I(1,y) not strictly increasing");
      break;
    }
  }
  return rep;
}

}  // namespace aggfuzz
