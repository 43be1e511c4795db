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

#include "aggfuzz/aqip.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "aggfuzz/errors.hpp"

namespace aggfuzz {

double qip_objective_fmp(const DiscreteFuzzySet& d_prime, const DiscreteFuzzySet& d,
                         const DiscreteFuzzySet& b, const DiscreteFuzzySet& b_cand,
                         const Implication& imp, std::size_t xi, std::size_t yi) {
  if (!d_prime.same_universe(d)) {
    throw UniverseMismatch("premise and antecedent live on different universes");
  }
  if (!b_cand.same_universe(b)) {
    throw UniverseMismatch("candidate conclusion and consequent live on different universes");
  }
  const double rule = imp(d[xi], b[yi]);
  const double match = imp(d_prime[xi], d[xi]);
  const double conclude = imp(d_prime[xi], b_cand[yi]);
  return imp(rule, imp(match, conclude));
}

double qip_objective_fmt(const DiscreteFuzzySet& d, const DiscreteFuzzySet& b,
                         const DiscreteFuzzySet& b_prime, const DiscreteFuzzySet& d_cand,
                         const Implication& imp, std::size_t xi, std::size_t yi) {
  if (!b_prime.same_universe(b)) {
    throw UniverseMismatch("premise and consequent live on different universes");
  }
  if (!d_cand.same_universe(d)) {
    throw UniverseMismatch("candidate conclusion and antecedent live on different universes");
  }
  const double rule = imp(d[xi], b[yi]);
  const double match = imp(b[yi], b_prime[yi]);
  const double conclude = imp(d[xi], d_cand[xi]);
  return imp(rule, imp(match, conclude));
}

namespace {

struct InducedSetup {
  Aggregation induced;
  bool hypothesis_satisfied = true;
  std::string warning;
};

InducedSetup make_induced(const Implication& imp, const AqipOptions& opts) {
  InducedSetup setup{induced_aggregation_unchecked(
      imp, ResiduationOptions{opts.tol, opts.allow_closed_form, opts.hypothesis_grid})};
  const Grid grid = grid_points(opts.hypothesis_grid);
  for (double y : grid.points) {
    if (y < 1.0 && imp(1.0, y) >= 1.0) {
      setup.hypothesis_satisfied = false;
      std::ostringstream os;
      os << "I(1," << y << ") = 1 although y < 1; the computed conclusion has no "
         << "optimality guarantee";
      setup.warning = os.str();
      break;
    }
  }
  return setup;
}

}  // namespace

AqipResult aqip_fmp(const DiscreteFuzzySet& d_prime, const DiscreteFuzzySet& d,
                    const DiscreteFuzzySet& b, const Implication& imp, const AqipOptions& opts) {
  if (!d_prime.same_universe(d)) {
    throw UniverseMismatch("premise and antecedent live on different universes");
  }
  InducedSetup setup = make_induced(imp, opts);
  const Aggregation& agg = setup.induced;

  AqipResult res{DiscreteFuzzySet(b.universe()), setup.hypothesis_satisfied, setup.warning};
  for (std::size_t y = 0; y < b.size(); ++y) {
    double best = 0.0;
    for (std::size_t x = 0; x < d.size(); ++x) {
      const double rule = imp(d[x], b[y]);
      const double match = imp(d_prime[x], d[x]);
      const double inner = agg(match, rule);
      const double carried = agg(d_prime[x], inner);
      best = std::max(best, agg(carried, 1.0));
    }
    res.conclusion.set(y, best);
  }
  return res;
}

AqipResult aqip_fmt(const DiscreteFuzzySet& b_prime, const DiscreteFuzzySet& d,
                    const DiscreteFuzzySet& b, const Implication& imp, const AqipOptions& opts) {
  if (!b_prime.same_universe(b)) {
    throw UniverseMismatch("premise and consequent live on different universes");
  }
  InducedSetup setup = make_induced(imp, opts);
  const Aggregation& agg = setup.induced;

  AqipResult res{DiscreteFuzzySet(d.universe()), setup.hypothesis_satisfied, setup.warning};
  for (std::size_t x = 0; x < d.size(); ++x) {
    double best = 0.0;
    for (std::size_t y = 0; y < b.size(); ++y) {
      const double rule = imp(d[x], b[y]);
      const double match = imp(b[y], b_prime[y]);
      const double inner = agg(rule, match);
      const double carried = agg(d[x], inner);
      best = std::max(best, agg(carried, 1.0));
    }
    res.conclusion.set(x, best);
  }
  return res;
}

namespace {

void require_tnorm(const Aggregation& t) {
  if (!t.attrs.tags.tnorm) {
    throw NotATNorm("t-norm closed form needs an aggregation tagged as a t-norm, got " + t.name);
  }
}

}  // namespace

DiscreteFuzzySet qip_tnorm_solution_fmp(const DiscreteFuzzySet& d_prime,
                                        const DiscreteFuzzySet& d, const DiscreteFuzzySet& b,
                                        const Aggregation& tnorm, const Tolerance& tol) {
  require_tnorm(tnorm);
  if (!d_prime.same_universe(d)) {
    throw UniverseMismatch("premise and antecedent live on different universes");
  }
  const Implication imp = r_implication_from_tnorm(tnorm, tol);
  DiscreteFuzzySet out(b.universe());
  for (std::size_t y = 0; y < b.size(); ++y) {
    double best = 0.0;
    for (std::size_t x = 0; x < d.size(); ++x) {
      best = std::max(best, tnorm(d_prime[x], tnorm(imp(d_prime[x], d[x]), imp(d[x], b[y]))));
    }
    out.set(y, best);
  }
  return out;
}

DiscreteFuzzySet qip_tnorm_solution_fmt(const DiscreteFuzzySet& b_prime,
                                        const DiscreteFuzzySet& d, const DiscreteFuzzySet& b,
                                        const Aggregation& tnorm, const Tolerance& tol) {
  require_tnorm(tnorm);
  if (!b_prime.same_universe(b)) {
    throw UniverseMismatch("premise and consequent live on different universes");
  }
  const Implication imp = r_implication_from_tnorm(tnorm, tol);
  DiscreteFuzzySet out(d.universe());
  for (std::size_t x = 0; x < d.size(); ++x) {
    double best = 0.0;
    for (std::size_t y = 0; y < b.size(); ++y) {
      best = std::max(best, tnorm(d[x], tnorm(imp(d[x], b[y]), imp(b[y], b_prime[y]))));
    }
    out.set(x, best);
  }
  return out;
}

OptimalityReport verify_qip_optimality(const DiscreteFuzzySet& d_prime, const DiscreteFuzzySet& d,
                                       const DiscreteFuzzySet& b, const DiscreteFuzzySet& b_cand,
                                       const Implication& imp, const Grid& value_grid,
                                       double tol) {
  OptimalityReport rep;
  rep.grid_step = value_grid.step();

  // (a) the candidate keeps the objective at its maximum, which equals 1
  // whenever the right boundary property holds.
  for (std::size_t x = 0; x < d.size() && rep.attains_max; ++x) {
    for (std::size_t y = 0; y < b.size(); ++y) {
      const double m = qip_objective_fmp(d_prime, d, b, b_cand, imp, x, y);
      if (m < 1.0 - tol) {
        rep.attains_max = false;
        std::ostringstream os;
        os << "objective " << m << " below its maximum at ("
           << d.universe().labels[x] << ", " << b.universe().labels[y] << ")";
        rep.detail = os.str();
        break;
      }
    }
  }

  // (b) per output point, the least grid value that still attains the
  // maximum must sit within one grid step of the candidate.
  DiscreteFuzzySet probe = b_cand;
  for (std::size_t y = 0; y < b.size() && rep.minimal; ++y) {
    double least = 1.0;
    for (double c : value_grid.points) {
      probe.set(y, c);
      bool all_max = true;
      for (std::size_t x = 0; x < d.size(); ++x) {
        if (qip_objective_fmp(d_prime, d, b, probe, imp, x, y) < 1.0 - tol) {
          all_max = false;
          break;
        }
      }
      if (all_max) {
        least = c;
        break;
      }
    }
    probe.set(y, b_cand[y]);
    if (std::abs(least - b_cand[y]) > rep.grid_step + 1e-6) {
      rep.minimal = false;
      std::ostringstream os;
      os << "least grid value " << least << " attaining the maximum at "
         << b.universe().labels[y] << " is not within one step of the candidate " << b_cand[y];
      rep.detail = os.str();
    }
  }
  return rep;
}

}  // namespace aggfuzz
