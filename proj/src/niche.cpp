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

#include "nichemip/niche.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace nichemip {

int Niche::best_index() const {
  int best = 0;
  for (int i = 1; i < static_cast<int>(members.size()); ++i)
    if (better(members[i].fitness, members[best].fitness)) best = i;
  return best;
}

std::vector<int> rank_order(const Niche& niche) {
  std::vector<int> order(niche.members.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return better(niche.members[a].fitness, niche.members[b].fitness);
  });
  return order;
}

int select_parent_index(const Niche& niche, Rng& rng) {
  const int pop = static_cast<int>(niche.members.size());
  const std::vector<int> order = rank_order(niche);

  // Rank fitness (P - rank)/P, best = 1, raised to the selectivity.
  double total = 0.0;
  std::vector<double> weight(pop);
  for (int pos = 0; pos < pop; ++pos) {
    const double rank_fitness = static_cast<double>(pop - pos) / pop;
    weight[pos] = std::pow(rank_fitness, niche.selectivity);
    total += weight[pos];
  }

  const double spin = rng.uniform() * total;
  double acc = 0.0;
  for (int pos = 0; pos < pop; ++pos) {
    acc += weight[pos];
    if (spin < acc) return order[pos];
  }
  return order[pop - 1];
}

const Individual& select_parent(const Niche& niche, Rng& rng) {
  return niche.members[select_parent_index(niche, rng)];
}

void apply_elitism(std::vector<Niche>& niches) {
  for (std::size_t i = 0; i < niches.size(); ++i) {
    const Genome& genome = niches[i].best().genome;
    bool first_holder = true;
    for (std::size_t j = 0; j < i && first_holder; ++j)
      first_holder = niches[j].best().genome != genome;
    niches[i].elitist = first_holder;
  }
}

std::vector<int> select_weak(const std::vector<Niche>& niches, double fraction,
                             double probability, Rng& rng) {
  const int count = static_cast<int>(niches.size());
  if (count < 2) return {};

  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return better(niches[b].best().fitness, niches[a].best().fitness);
  });  // worst first

  const int candidates = std::min(
      count, static_cast<int>(std::ceil(fraction * count)));
  std::vector<int> extinguishing;
  for (int c = 0; c < candidates; ++c)
    if (rng.chance(probability)) extinguishing.push_back(order[c]);
  return extinguishing;
}

int select_strong(const std::vector<Niche>& niches,
                  std::span<const int> extinguishing) {
  auto dying = [&](int i) {
    return std::find(extinguishing.begin(), extinguishing.end(), i) !=
           extinguishing.end();
  };

  std::vector<int> order(niches.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return better(niches[a].best().fitness, niches[b].best().fitness);
  });  // best first

  // Preferred donor: best niche whose best genome is a member of no other
  // niche.
  for (int i : order) {
    if (dying(i)) continue;
    const Genome& genome = niches[i].best().genome;
    bool unique = true;
    for (std::size_t j = 0; j < niches.size() && unique; ++j) {
      if (static_cast<int>(j) == i) continue;
      for (const Individual& member : niches[j].members)
        if (member.genome == genome) {
          unique = false;
          break;
        }
    }
    if (unique) return i;
  }
  // Fallback: best surviving niche.
  for (int i : order)
    if (!dying(i)) return i;
  return -1;
}

Niche recombine_niches(const Niche& weak, const Niche& strong, int pop_size,
                       const std::function<Genome()>& fresh_genome,
                       double selectivity_max, Rng& rng) {
  std::vector<const Individual*> pool;
  pool.reserve(weak.members.size() + strong.members.size());
  for (const Individual& ind : weak.members) pool.push_back(&ind);
  for (const Individual& ind : strong.members) pool.push_back(&ind);
  std::stable_sort(pool.begin(), pool.end(),
                   [](const Individual* a, const Individual* b) {
                     return better(a->fitness, b->fitness);
                   });

  Niche fresh;
  fresh.members.reserve(pop_size);
  for (const Individual* ind : pool) {
    if (static_cast<int>(fresh.members.size()) == pop_size) break;
    bool seen = false;
    for (const Individual& taken : fresh.members)
      if (taken.genome == ind->genome) {
        seen = true;
        break;
      }
    if (!seen) fresh.members.push_back(*ind);
  }
  // Pool not diverse enough: top up with freshly initialized individuals.
  while (static_cast<int>(fresh.members.size()) < pop_size) {
    Individual ind;
    ind.genome = fresh_genome();
    fresh.members.push_back(std::move(ind));
  }

  fresh.params = OperatorParams::random(rng);
  fresh.selectivity = rng.uniform(0.0, selectivity_max);
  return fresh;
}

namespace {

bool budget_reached(const Evaluator& evaluator, std::uint64_t budget) {
  return budget != 0 && evaluator.lps_solved() >= budget;
}

int worst_index(const Niche& niche) {
  const std::vector<int> order = rank_order(niche);
  return order.back();
}

}  // namespace

void breed(Niche& niche, Evaluator& evaluator, Rng& rng, int patience,
           std::uint64_t lp_budget) {
  const int pop = static_cast<int>(niche.members.size());
  const std::span<const Bounds> bounds = evaluator.instance().bounds_int;

  Fitness best_so_far = niche.best().fitness;
  int stagnant = 0;

  for (;;) {
    if (budget_reached(evaluator, lp_budget)) return;

    const Individual carried = niche.best();
    std::vector<Individual> offspring;
    offspring.reserve(pop);
    for (int i = 0; i < pop; ++i) {
      if (budget_reached(evaluator, lp_budget)) return;  // keep the old population
      const Individual& father = select_parent(niche, rng);
      const Individual& mother = select_parent(niche, rng);
      Individual child = reproduce(father, mother, niche.params, bounds, rng);
      if (!child.evaluated) {
        // Clones carried a parent's evaluation and had their neighbourhood
        // searched already; only genuinely new genomes cost LPs.
        evaluator.evaluate(child);
        local_search(child, evaluator, rng);
      }
      offspring.push_back(std::move(child));
    }

    niche.members = std::move(offspring);
    if (niche.elitist) {
      const int now_best = niche.best_index();
      if (better(carried.fitness, niche.members[now_best].fitness))
        niche.members[worst_index(niche)] = carried;
    }

    const Fitness now = niche.best().fitness;
    if (better(now, best_so_far)) {
      best_so_far = now;
      stagnant = 0;
    } else if (++stagnant >= patience) {
      return;
    }
  }
}

namespace {

void validate_config(const SearchConfig& cfg) {
  if (cfg.n_niches < 1 || cfg.pop_per_niche < 1 || cfg.n_generations < 0)
    throw std::invalid_argument("niche/population/generation counts invalid");
  if (cfg.extinction_fraction < 0.0 || cfg.extinction_fraction > 1.0 ||
      cfg.extinction_probability < 0.0 || cfg.extinction_probability > 1.0)
    throw std::invalid_argument("extinction parameters must be in [0,1]");
  if (cfg.stagnation_patience < 1)
    throw std::invalid_argument("stagnation patience must be >= 1");
}

bool matches_optimum(double value, double optimum) {
  return std::fabs(value - optimum) <= 1e-6 * std::max(1.0, std::fabs(optimum));
}

}  // namespace

RunRecord run(const ProblemInstance& p, const SearchConfig& cfg) {
  validate_config(cfg);

  RunRecord record;
  record.seed = cfg.rng_seed;

  Rng rng(cfg.rng_seed);
  Evaluator evaluator(p, cfg.lp);

  bool have_best = false;
  evaluator.set_on_evaluated([&](const Individual& ind) {
    const std::uint64_t index = evaluator.lps_solved();
    if (!record.first_feasible_lp && ind.fitness.kind == FitnessKind::feasible)
      record.first_feasible_lp = index;
    if (!record.first_optimal_lp && cfg.optimum &&
        ind.fitness.kind == FitnessKind::feasible &&
        matches_optimum(ind.fitness.value, *cfg.optimum))
      record.first_optimal_lp = index;
    if (!have_best || better(ind.fitness, record.best_fitness)) {
      have_best = true;
      record.best_fitness = ind.fitness;
      record.best_genome = ind.genome;
      record.best_cont = ind.cont_values;
      record.trace.push_back({index, ind.fitness});
    }
  });

  auto finish = [&](bool truncated) {
    record.truncated = truncated;
    record.lps_total = evaluator.lps_solved();
    record.degraded_evaluations = evaluator.degraded_evaluations();
    return record;
  };

  // Root relaxation, solved once and counted against the LP budget; its
  // integer block drives the biased initialization.
  std::optional<std::vector<double>> relaxed_int;
  {
    SimplexSolver root(cfg.lp);
    const LpSolution sol = root.solve(lp_relaxation(p));
    evaluator.count_external_lp();
    if (sol.status == LpStatus::optimal)
      relaxed_int.emplace(sol.primal_values.begin(),
                          sol.primal_values.begin() + p.n_int());
  }

  auto fresh_genome = [&]() {
    if (relaxed_int)
      return init_genome(*relaxed_int, p.bounds_int, cfg.rounding, rng);
    return random_genome(p.bounds_int, rng);
  };

  std::vector<Niche> niches(cfg.n_niches);
  for (Niche& niche : niches) {
    niche.params = OperatorParams::random(rng);
    niche.selectivity = rng.uniform(0.0, cfg.selectivity_max);
  }
  for (Niche& niche : niches) {
    niche.members.reserve(cfg.pop_per_niche);
    for (int i = 0; i < cfg.pop_per_niche; ++i) {
      Individual ind;
      ind.genome = fresh_genome();
      niche.members.push_back(std::move(ind));
    }
  }
  for (Niche& niche : niches)
    for (Individual& ind : niche.members) {
      if (budget_reached(evaluator, cfg.lp_budget)) return finish(true);
      evaluator.evaluate(ind);
    }
  apply_elitism(niches);

  for (int t = 0; t < cfg.n_generations; ++t) {
    for (Niche& niche : niches) {
      breed(niche, evaluator, rng, cfg.stagnation_patience, cfg.lp_budget);
      if (budget_reached(evaluator, cfg.lp_budget)) return finish(true);
    }

    const std::vector<int> weak =
        select_weak(niches, cfg.extinction_fraction,
                    cfg.extinction_probability, rng);

    // All replacements are built against the pre-extinction state, then
    // evaluated, then swapped in.
    std::vector<std::pair<int, Niche>> replacements;
    replacements.reserve(weak.size());
    for (int w : weak) {
      const int donor = select_strong(niches, weak);
      if (donor < 0) continue;
      replacements.emplace_back(
          w, recombine_niches(niches[w], niches[donor], cfg.pop_per_niche,
                              fresh_genome, cfg.selectivity_max, rng));
    }
    for (auto& [w, fresh] : replacements)
      for (Individual& ind : fresh.members) {
        if (budget_reached(evaluator, cfg.lp_budget)) return finish(true);
        evaluator.evaluate(ind);
      }
    for (auto& [w, fresh] : replacements) niches[w] = std::move(fresh);

    apply_elitism(niches);
  }

  return finish(false);
}

}  // namespace nichemip
