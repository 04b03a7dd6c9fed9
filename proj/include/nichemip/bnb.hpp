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

#ifndef NICHEMIP_BNB_HPP_
#define NICHEMIP_BNB_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "nichemip/evolution.hpp"
#include "nichemip/model.hpp"
#include "nichemip/simplex.hpp"

namespace nichemip {

enum class BnbStatus : char { optimal, budget_exhausted, infeasible };

const char* to_string(BnbStatus status);

struct BnbResult {
  BnbStatus status = BnbStatus::infeasible;
  std::optional<double> best_objective;  // internal maximization form
  std::optional<Genome> best_genome;
  std::vector<double> best_cont;
  std::uint64_t lps_solved = 0;
};

struct BnbOptions {
  std::uint64_t lp_cap = 50'000'000;
  double integrality_tol = 1e-6;
  bool ceil_first = false;  // child exploration order; floor branch first
  SimplexOptions lp;
};

/// Plain depth-first branch-and-bound baseline: LP relaxation at every node,
/// branching on the first (lowest-index) fractional integer variable into a
/// floor child and a ceil child, pruning on bound or infeasibility.  No cuts,
/// no heuristics.  The instance must be in maximization form.
///
/// Throws std::runtime_error when a node relaxation is unbounded or runs out
/// of simplex iterations, since either would make the result unreliable.
BnbResult solve_bnb(const ProblemInstance& p, const BnbOptions& options = {});

}  // namespace nichemip

#endif  // NICHEMIP_BNB_HPP_
