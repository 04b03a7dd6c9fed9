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

#ifndef NICHEMIP_EVOLUTION_HPP_
#define NICHEMIP_EVOLUTION_HPP_

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "nichemip/model.hpp"
#include "nichemip/rng.hpp"
#include "nichemip/simplex.hpp"

namespace nichemip {

/// The integer-variable vector an individual carries; one entry per integer
/// variable, in genome index order (file column order).
using Genome = std::vector<std::int64_t>;

enum class FitnessKind : char { feasible, infeasible };

/// Tagged evaluation of an individual: the objective value z when the fixed
/// LP is feasible, or the minimized infeasibility sum zeta when it is not.
struct Fitness {
  FitnessKind kind = FitnessKind::infeasible;
  double value = 0.0;

  bool operator==(const Fitness&) const = default;
};

/// Strict "is better" order: feasible beats infeasible, feasible compare by
/// larger objective, infeasible by smaller infeasibility.
bool better(const Fitness& a, const Fitness& b);

/// Three-way variant: -1 when a is worse, 0 when equivalent, +1 when better.
int compare(const Fitness& a, const Fitness& b);

struct Individual {
  Genome genome;
  Fitness fitness{};
  std::vector<double> cont_values;  // continuous block from the LP
  bool evaluated = false;
};

/// Exogenous per-niche operator controls: probability and intensity for
/// meiosis, crossover and mutation, all in [0, 1].
struct OperatorParams {
  double nu_p = 0.0, chi_p = 0.0, mu_p = 0.0;  // probabilities
  double nu_s = 0.0, chi_s = 0.0, mu_s = 0.0;  // intensities

  static OperatorParams random(Rng& rng);
};

/// Which way the fractional relaxation values are rounded at initialization.
/// `printed` rounds DOWN with probability equal to the fractional part;
/// `complement` uses one minus that (distance-proportional rounding).
enum class RoundingConvention : char { printed, complement };

/// Evaluates individuals against one problem instance, owning the solver
/// context and the global LP-solve counter.  Every evaluation that actually
/// reaches the solver counts as one LP solution, including the trivial LPs of
/// pure-integer instances; evaluations skipped through the `evaluated` flag
/// never touch the counter.
///
/// An Evaluator must not be shared by concurrent callers; run one per worker
/// and aggregate the counters.
class Evaluator {
 public:
  explicit Evaluator(const ProblemInstance& p, SimplexOptions options = {});

  /// No-op when ind.evaluated is already set.
  void evaluate(Individual& ind);

  const ProblemInstance& instance() const { return *instance_; }

  std::uint64_t lps_solved() const {
    return lp_count_.load(std::memory_order_relaxed);
  }

  /// Evaluations that hit the pivot budget or an unbounded residual LP; both
  /// are mapped to the worst possible infeasible fitness instead of aborting.
  std::uint64_t degraded_evaluations() const {
    return degraded_.load(std::memory_order_relaxed);
  }

  /// Counts an LP solved outside evaluate() against the same budget, e.g.
  /// the root relaxation.
  void count_external_lp();

  /// Invoked after every counted evaluation; used by the search driver to
  /// maintain the incumbent trace.  fitness/cont_values are populated.
  void set_on_evaluated(std::function<void(const Individual&)> hook) {
    on_evaluated_ = std::move(hook);
  }

 private:
  const ProblemInstance* instance_;
  SimplexSolver solver_;
  std::atomic<std::uint64_t> lp_count_{0};
  std::atomic<std::uint64_t> degraded_{0};
  std::function<void(const Individual&)> on_evaluated_;
};

/// Biased initialization from the LP relaxation: gene k is rounded down with
/// probability equal to the fractional part of the relaxed value (printed
/// convention), otherwise up, then clamped to its bounds.
Genome init_genome(std::span<const double> relaxed_values,
                   std::span<const Bounds> bounds,
                   RoundingConvention convention, Rng& rng);

/// Fallback initialization when the relaxation is unavailable: uniform genes
/// in [lower, min(upper, lower + 100)].
Genome random_genome(std::span<const Bounds> bounds, Rng& rng);

/// Creates an offspring from two parents: meiosis copies runs of genes
/// alternately from either parent with per-gene crossover pull toward the
/// other parent, then per-gene mutation adds a bound-scaled perturbation.
/// When the child genome comes out identical to a parent, that parent's LP
/// information is carried over and the child needs no re-evaluation.
Individual reproduce(const Individual& father, const Individual& mother,
                     const OperatorParams& params,
                     std::span<const Bounds> bounds, Rng& rng);

/// Coordinate hill climbing with geometrically doubling steps ("hunt
/// search"): per integer index, probe +-1, then walk the better direction
/// doubling the step while probes keep improving.  Visits the coordinates in
/// random order; out-of-bounds probes count as non-improving.  The individual
/// is updated in place and never gets worse.
void local_search(Individual& ind, Evaluator& evaluator, Rng& rng);

}  // namespace nichemip

#endif  // NICHEMIP_EVOLUTION_HPP_
