// Copyright 2026 the nichemip authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nichemip/bnb.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace nichemip {

const char* to_string(BnbStatus status) {
  switch (status) {
    case BnbStatus::optimal: return "optimal";
    case BnbStatus::budget_exhausted: return "budget-exhausted";
    case BnbStatus::infeasible: return "infeasible";
  }
  return "?";
}

BnbResult solve_bnb(const ProblemInstance& p, const BnbOptions& options) {
  BnbResult result;
  ResidualLp lp = lp_relaxation(p);
  SimplexSolver solver(options.lp);
  const int ni = p.n_int();

  bool budget_hit = false;

  std::function<void()> explore = [&]() {
    if (result.lps_solved >= options.lp_cap) {
      budget_hit = true;
      return;
    }
    const LpSolution sol = solver.solve(lp);
    ++result.lps_solved;

    switch (sol.status) {
      case LpStatus::infeasible:
        return;
      case LpStatus::unbounded:
        throw std::runtime_error("node relaxation is unbounded");
      case LpStatus::iteration_limit:
        throw std::runtime_error(
            "node relaxation exhausted the simplex iteration budget");
      case LpStatus::optimal:
        break;
    }
    if (result.best_objective &&
        sol.objective <= *result.best_objective + 1e-9)
      return;  // bound cannot beat the incumbent

    // Branch on the first fractional integer variable.
    int branch = -1;
    double value = 0.0;
    for (int j = 0; j < ni; ++j) {
      const double v = sol.primal_values[j];
      if (std::fabs(v - std::llround(v)) > options.integrality_tol) {
        branch = j;
        value = v;
        break;
      }
    }

    if (branch < 0) {  // integral point, new incumbent
      result.best_objective = sol.objective;
      Genome genome(ni);
      for (int j = 0; j < ni; ++j)
        genome[j] = std::llround(sol.primal_values[j]);
      result.best_genome = std::move(genome);
      result.best_cont.assign(sol.primal_values.begin() + ni,
                              sol.primal_values.end());
      return;
    }

    const Bounds saved = lp.bounds[branch];
    const double floor_value = std::floor(value);
    const double ceil_value = std::ceil(value);

    auto child = [&](bool upper_side) {
      if (budget_hit) return;
      if (upper_side) {
        lp.bounds[branch].lower = std::max(saved.lower, ceil_value);
        lp.bounds[branch].upper = saved.upper;
      } else {
        lp.bounds[branch].lower = saved.lower;
        lp.bounds[branch].upper = std::min(saved.upper, floor_value);
      }
      if (lp.bounds[branch].lower <= lp.bounds[branch].upper) explore();
      lp.bounds[branch] = saved;
    };

    child(options.ceil_first);
    child(!options.ceil_first);
  };

  explore();

  if (budget_hit)
    result.status = BnbStatus::budget_exhausted;
  else if (result.best_objective)
    result.status = BnbStatus::optimal;
  else
    result.status = BnbStatus::infeasible;
  return result;
}

}  // namespace nichemip
