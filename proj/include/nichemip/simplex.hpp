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

#ifndef NICHEMIP_SIMPLEX_HPP_
#define NICHEMIP_SIMPLEX_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nichemip/model.hpp"

namespace nichemip {

struct SimplexOptions {
  double feasibility_tol = 1e-7;
  double optimality_tol = 1e-9;   // reduced-cost threshold
  double zero_pivot_tol = 1e-10;  // reject pivot elements below this
  int refactor_interval = 50;     // rebuild the dense basis inverse
  long iteration_limit = 20000;
  /// Optional pivot trace sink; receives one line per iteration.
  std::function<void(const std::string&)> trace;
};

enum class LpStatus : char { optimal, infeasible, unbounded, iteration_limit };

const char* to_string(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::optimal;
  /// Objective value including constant terms; only meaningful when optimal.
  double objective = 0.0;
  std::vector<double> primal_values;
  long iterations = 0;
  /// Value of the last primal-feasible basis when the iteration budget ran
  /// out during phase II; never stored in `objective`.
  std::optional<double> incumbent_objective;
};

struct Phase1Result {
  double zeta = 0.0;                  // minimized sum of artificials
  std::vector<double> artificials;    // per-constraint violation, length m
  long iterations = 0;
};

/// Bounded-variable two-phase primal simplex with a dense working basis.
///
/// Phase I relaxes every violated constraint direction with a nonnegative
/// artificial variable and minimizes the artificials' sum; the original LP is
/// feasible exactly when that minimum is within the feasibility tolerance.
/// Phase II then optimizes the true objective.  Pricing is Dantzig's rule
/// with an automatic switch to Bland's rule after 2*m consecutive degenerate
/// steps, so the classic cycling examples terminate.  Variable bounds are
/// handled natively (nonbasic-at-lower/upper with bound flips) rather than by
/// expanding them into rows.
///
/// A solver object is a reusable context: workspaces survive between calls,
/// but it must not be shared by concurrent solves.  Results are a pure
/// function of the input bits.
class SimplexSolver {
 public:
  explicit SimplexSolver(SimplexOptions options = {});

  /// Runs both phases and reports the optimum (constant terms included).
  LpSolution solve(const ResidualLp& lp);

  /// Runs phase I only and reports the minimized infeasibility.
  Phase1Result solve_phase1(const ResidualLp& lp);

  /// Phase I data of the most recent solve(); populated for every status.
  const Phase1Result& last_phase1() const { return phase1_; }

  const SimplexOptions& options() const { return options_; }

 private:
  enum class VarStatus : char { basic, at_lower, at_upper, free_nonbasic };
  enum class PhaseStatus : char { optimal, unbounded, limit };

  void load(const ResidualLp& lp);
  void install_artificials();
  PhaseStatus run_phase(int phase);
  void finish_phase1();

  int column_count() const { return n_ + m_ + static_cast<int>(art_row_.size()); }
  double column_cost(int phase, int col) const;
  template <typename Fn>
  void for_column(int col, Fn&& fn) const;  // (row, value) pairs

  void compute_duals(int phase);
  int price(int phase, bool bland);
  void compute_direction(int col);
  void refactorize();
  void recompute_basics();
  double current_objective(int phase) const;

  SimplexOptions options_;
  const ResidualLp* lp_ = nullptr;

  int n_ = 0;  // structural variables
  int m_ = 0;  // rows

  // Column data beyond the structural block: slack j is the unit column of
  // row j; artificials are signed unit columns created by install_artificials.
  std::vector<double> lower_, upper_;   // per column
  std::vector<double> rhs_eq_;          // right-hand side of the equality form
  std::vector<int> art_row_;            // artificial -> row
  std::vector<double> art_sign_;        // artificial column coefficient

  std::vector<int> basis_;              // row position -> column
  std::vector<VarStatus> status_;       // per column
  std::vector<double> value_;           // per column
  std::vector<double> binv_;            // m x m dense inverse, row-major
  std::vector<double> duals_, direction_, work_;

  long iterations_ = 0;
  int pivots_since_refactor_ = 0;
  int degenerate_streak_ = 0;
  bool bland_mode_ = false;

  Phase1Result phase1_;
};

/// One-shot helpers matching the solver's two entry points.
LpSolution solve_lp(const ResidualLp& lp, const SimplexOptions& options = {});
Phase1Result phase1(const ResidualLp& lp, const SimplexOptions& options = {});

}  // namespace nichemip

#endif  // NICHEMIP_SIMPLEX_HPP_
