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

#include "nichemip/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace nichemip {

bool better(const Fitness& a, const Fitness& b) {
  if (a.kind != b.kind) return a.kind == FitnessKind::feasible;
  if (a.kind == FitnessKind::feasible) return a.value > b.value;
  return a.value < b.value;
}

int compare(const Fitness& a, const Fitness& b) {
  if (better(a, b)) return 1;
  if (better(b, a)) return -1;
  return 0;
}

OperatorParams OperatorParams::random(Rng& rng) {
  // Draw order: probability then intensity, meiosis / crossover / mutation.
  OperatorParams p;
  p.nu_p = rng.uniform();
  p.nu_s = rng.uniform();
  p.chi_p = rng.uniform();
  p.chi_s = rng.uniform();
  p.mu_p = rng.uniform();
  p.mu_s = rng.uniform();
  return p;
}

Evaluator::Evaluator(const ProblemInstance& p, SimplexOptions options)
    : instance_(&p), solver_(std::move(options)) {}

void Evaluator::evaluate(Individual& ind) {
  if (ind.evaluated) return;

  const ResidualLp lp = fix_integers(*instance_, ind.genome);
  LpSolution sol = solver_.solve(lp);
  switch (sol.status) {
    case LpStatus::optimal:
      ind.fitness = {FitnessKind::feasible, sol.objective};
      ind.cont_values = std::move(sol.primal_values);
      break;
    case LpStatus::infeasible:
      ind.fitness = {FitnessKind::infeasible, solver_.last_phase1().zeta};
      ind.cont_values.clear();
      break;
    case LpStatus::unbounded:
    case LpStatus::iteration_limit:
      // Degraded evaluation: count it and hand back the worst possible
      // infeasibility so the run keeps going.
      ind.fitness = {FitnessKind::infeasible, kInfinity};
      ind.cont_values.clear();
      degraded_.fetch_add(1, std::memory_order_relaxed);
      break;
  }
  ind.evaluated = true;
  lp_count_.fetch_add(1, std::memory_order_relaxed);
  if (on_evaluated_) on_evaluated_(ind);
}

void Evaluator::count_external_lp() {
  lp_count_.fetch_add(1, std::memory_order_relaxed);
}

namespace {

std::int64_t clamp_gene(double value, const Bounds& b) {
  double v = std::llround(value);
  if (v < b.lower) v = std::ceil(b.lower);
  if (v > b.upper) v = std::floor(b.upper);
  return static_cast<std::int64_t>(v);
}

}  // namespace

Genome init_genome(std::span<const double> relaxed_values,
                   std::span<const Bounds> bounds,
                   RoundingConvention convention, Rng& rng) {
  Genome g(relaxed_values.size());
  for (std::size_t k = 0; k < relaxed_values.size(); ++k) {
    const double x = relaxed_values[k];
    const double down = std::floor(x);
    const double up = std::ceil(x);
    const double fraction = x - down;
    const double p_down = convention == RoundingConvention::printed
                              ? fraction
                              : 1.0 - fraction;
    const double chosen = rng.uniform() < p_down ? down : up;
    g[k] = clamp_gene(chosen, bounds[k]);
  }
  return g;
}

Genome random_genome(std::span<const Bounds> bounds, Rng& rng) {
  Genome g(bounds.size());
  for (std::size_t k = 0; k < bounds.size(); ++k) {
    const Bounds& b = bounds[k];
    double lo = b.lower;
    if (std::isinf(lo)) lo = std::isinf(b.upper) ? -50.0 : b.upper - 100.0;
    const double hi = std::min(b.upper, lo + 100.0);
    g[k] = rng.uniform_int(static_cast<std::int64_t>(std::ceil(lo)),
                           static_cast<std::int64_t>(std::floor(hi)));
  }
  return g;
}

namespace {

// Width of the region between a gene and its bound in the mutation
// direction; infinite bounds get a finite stand-in so perturbations stay
// bounded.
double mutation_span(double gene, const Bounds& b, bool upward) {
  const double bound = upward ? b.upper : b.lower;
  if (std::isinf(bound)) return std::max(10.0, std::fabs(gene));
  return upward ? bound - gene : gene - bound;
}

}  // namespace

Individual reproduce(const Individual& father, const Individual& mother,
                     const OperatorParams& params,
                     std::span<const Bounds> bounds, Rng& rng) {
  const int n = static_cast<int>(father.genome.size());
  Genome child(n);

  if (rng.chance(params.nu_p)) {
    // Meiosis: copy runs ("paths") of genes from either parent.  The run
    // length rand*(remaining)*(1-nu_s) may come out fractional or zero; it is
    // rounded up with a minimum of one so the scan always advances.  The
    // outer index moves past each copied run; re-randomizing the length at
    // every position would be the other defensible reading.
    int k = 0;
    while (k < n) {
      const double path = rng.uniform() * (n - k) * (1.0 - params.nu_s);
      const int run = std::max(1, static_cast<int>(std::ceil(path)));
      const bool from_father = rng.uniform() < 0.5;
      const Genome& src = from_father ? father.genome : mother.genome;
      const Genome& other = from_father ? mother.genome : father.genome;
      for (int l = 0; l < run && k < n; ++l, ++k) {
        if (rng.chance(params.chi_p)) {
          const double pulled =
              static_cast<double>(src[k]) +
              static_cast<double>(other[k] - src[k]) * params.chi_s *
                  rng.uniform();
          child[k] = clamp_gene(pulled, bounds[k]);
        } else {
          child[k] = src[k];
        }
      }
    }
  } else {
    child = rng.uniform() < 0.5 ? father.genome : mother.genome;
  }

  // Mutation: gene := round(gene +- delta), delta = (1 - u^(s^2)) scaled to
  // the region between the gene and its bound on the chosen side.  Draw
  // order per gene: gate, magnitude, direction.
  for (int k = 0; k < n; ++k) {
    if (!rng.chance(params.mu_p)) continue;
    const double magnitude =
        1.0 - std::pow(rng.uniform(), params.mu_s * params.mu_s);
    const bool upward = rng.uniform() < 0.5;
    const double span =
        mutation_span(static_cast<double>(child[k]), bounds[k], upward);
    const double moved = static_cast<double>(child[k]) +
                         (upward ? 1.0 : -1.0) * magnitude * span;
    child[k] = clamp_gene(moved, bounds[k]);
  }

  // A child identical to a parent carries that parent's LP information and
  // is not re-evaluated.
  if (child == father.genome) return father;
  if (child == mother.genome) return mother;

  Individual offspring;
  offspring.genome = std::move(child);
  return offspring;
}

void local_search(Individual& ind, Evaluator& evaluator, Rng& rng) {
  const ProblemInstance& p = evaluator.instance();
  const int n = p.n_int();
  if (n == 0) return;

  // Visit the coordinates in a random order (Fisher-Yates on our stream).
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.uniform_int(0, i));
    std::swap(order[i], order[j]);
  }

  Individual candidate;
  for (const int k : order) {
    const Bounds& b = p.bounds_int[k];

    // Evaluates the incumbent genome with coordinate k set to `value`;
    // out-of-bounds probes are skipped and treated as non-improving.
    auto probe = [&](std::int64_t value) -> const Individual* {
      const double v = static_cast<double>(value);
      if (v < b.lower || v > b.upper) return nullptr;
      candidate.genome = ind.genome;
      candidate.genome[k] = value;
      candidate.evaluated = false;
      candidate.cont_values.clear();
      evaluator.evaluate(candidate);
      return &candidate;
    };

    const std::int64_t base = ind.genome[k];
    Fitness up_fit{}, down_fit{};
    bool up_ok = false, down_ok = false;
    if (const Individual* up = probe(base + 1)) {
      up_fit = up->fitness;
      up_ok = true;
    }
    if (const Individual* down = probe(base - 1)) {
      down_fit = down->fitness;
      down_ok = true;
    }

    const bool up_improves = up_ok && better(up_fit, ind.fitness);
    const bool down_improves = down_ok && better(down_fit, ind.fitness);
    if (!up_improves && !down_improves) continue;

    std::int64_t step;
    if (up_ok && down_ok)
      step = better(up_fit, down_fit) ? 1 : -1;
    else
      step = up_improves ? 1 : -1;

    // Walk in the chosen direction, doubling the step while the probes keep
    // improving; each probe is re-evaluated from scratch.
    for (;;) {
      const Individual* cand = probe(ind.genome[k] + step);
      if (cand == nullptr || !better(cand->fitness, ind.fitness)) break;
      ind = *cand;
      step *= 2;
    }
  }
}

}  // namespace nichemip
