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

#ifndef NICHEMIP_NICHE_HPP_
#define NICHEMIP_NICHE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "nichemip/evolution.hpp"
#include "nichemip/model.hpp"
#include "nichemip/rng.hpp"

namespace nichemip {

/// A sub-population evolving with its own exogenous operator parameters and
/// selection pressure.
struct Niche {
  std::vector<Individual> members;
  OperatorParams params;
  double selectivity = 1.0;  // exponent on the rank fitness, >= 0
  bool elitist = true;

  /// Index of the best member; ties resolve to the lowest index.
  int best_index() const;
  const Individual& best() const { return members[best_index()]; }
};

struct SearchConfig {
  int n_niches = 5;
  int pop_per_niche = 5;
  int n_generations = 250;
  double extinction_fraction = 0.35;     // share of niches at risk
  double extinction_probability = 0.35;  // chance each candidate dies
  std::uint64_t lp_budget = 0;           // 0 = unlimited
  std::uint64_t rng_seed = 1;
  int stagnation_patience = 1;  // subgenerations without improvement
  double selectivity_max = 4.0;
  RoundingConvention rounding = RoundingConvention::printed;
  /// Known optimum in internal (maximization) form; enables first-optimal
  /// detection in the run record.
  std::optional<double> optimum;
  SimplexOptions lp;
};

struct TraceEvent {
  std::uint64_t lp_index;  // 1-based count of LPs solved so far
  Fitness fitness;
};

/// Everything a single search run reports: LP counters, the indices at which
/// feasibility and the known optimum were first reached, the best individual,
/// and the incumbent improvement trace.
struct RunRecord {
  std::uint64_t seed = 0;
  std::uint64_t lps_total = 0;
  std::optional<std::uint64_t> first_feasible_lp;  // n^f
  std::optional<std::uint64_t> first_optimal_lp;   // n^o
  Fitness best_fitness{};
  Genome best_genome;
  std::vector<double> best_cont;
  std::vector<TraceEvent> trace;
  bool truncated = false;  // stopped by the LP budget
  /// Evaluations that hit the pivot budget or an unbounded residual and were
  /// mapped to the worst infeasible fitness.
  std::uint64_t degraded_evaluations = 0;
};

/// Members sorted best-first; equal fitnesses keep their insertion order.
std::vector<int> rank_order(const Niche& niche);

/// Rank-based roulette wheel: rank fitness (P - rank)/P raised to the
/// niche's selectivity, selection probability proportional to the result.
const Individual& select_parent(const Niche& niche, Rng& rng);
int select_parent_index(const Niche& niche, Rng& rng);

/// Marks elitist niches: a niche keeps its best individual across
/// subgenerations unless another niche with lower index has the identical
/// best genome.  Genome equality is vector equality, not fitness equality.
void apply_elitism(std::vector<Niche>& niches);

/// Indices of niches extinguishing this generation: the worst
/// ceil(fraction*N) niches by best-member fitness are candidates and each
/// dies independently with the given probability.
std::vector<int> select_weak(const std::vector<Niche>& niches, double fraction,
                             double probability, Rng& rng);

/// Donor niche for recombination: the best niche whose best genome appears in
/// no other niche, falling back to the best overall; extinguishing niches are
/// excluded.  Returns -1 when no donor exists.
int select_strong(const std::vector<Niche>& niches,
                  std::span<const int> extinguishing);

/// Builds the replacement niche from the union of a weak and a strong niche:
/// the best pop_size distinct genomes survive, the remainder (if the pool is
/// not diverse enough) comes from fresh_genome, and new random operator
/// parameters are drawn.  Fresh members are returned unevaluated.
Niche recombine_niches(const Niche& weak, const Niche& strong, int pop_size,
                       const std::function<Genome()>& fresh_genome,
                       double selectivity_max, Rng& rng);

/// One inside-niche breeding cycle: subgenerations of roulette selection,
/// reproduction, local search and evaluation replace the population until the
/// niche best stops improving (patience subgenerations) or the LP budget is
/// hit.  Elitist niches reinsert their previous best when the offspring lost
/// it.
void breed(Niche& niche, Evaluator& evaluator, Rng& rng, int patience,
           std::uint64_t lp_budget);

/// Full two-layer niche search on a maximization-form instance.
///
/// All stochastic draws come from one seeded stream in a fixed order
/// (per-niche parameters, then per-member initialization, then per
/// generation: breeding draws niche by niche, extinction draws, and
/// recombination fills), so identical seed and config give bit-identical
/// run records.
RunRecord run(const ProblemInstance& p, const SearchConfig& config);

}  // namespace nichemip

#endif  // NICHEMIP_NICHE_HPP_
