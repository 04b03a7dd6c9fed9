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

#include "nichemip/simplex.hpp"

#include <cassert>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace nichemip {

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
    case LpStatus::iteration_limit: return "iteration-limit";
  }
  return "?";
}

SimplexSolver::SimplexSolver(SimplexOptions options)
    : options_(std::move(options)) {}

// The LP is solved in the equality form  A x + s (+ sigma w) = rhs_eq with
// per-column bounds.  Rows with a finite upper activity U use rhs_eq = U and
// slack in [0, U - L]; pure >= rows use rhs_eq = L and slack in (-inf, 0].
void SimplexSolver::load(const ResidualLp& lp) {
  lp_ = &lp;
  n_ = lp.num_vars();
  m_ = lp.num_rows();

  const int cols = n_ + m_;
  lower_.assign(cols, 0.0);
  upper_.assign(cols, 0.0);
  rhs_eq_.assign(m_, 0.0);
  art_row_.clear();
  art_sign_.clear();

  for (int j = 0; j < n_; ++j) {
    if (lp.bounds[j].lower > lp.bounds[j].upper)
      throw std::invalid_argument("inconsistent variable bounds");
    lower_[j] = lp.bounds[j].lower;
    upper_[j] = lp.bounds[j].upper;
  }
  for (int i = 0; i < m_; ++i) {
    const RowInterval iv = lp.row_interval(i);
    const int s = n_ + i;
    if (!std::isinf(iv.hi)) {
      rhs_eq_[i] = iv.hi;
      lower_[s] = 0.0;
      upper_[s] = iv.hi - iv.lo;  // +inf for one-sided rows
    } else {
      rhs_eq_[i] = iv.lo;
      lower_[s] = -kInfinity;
      upper_[s] = 0.0;
    }
  }

  // Nonbasic start: structural variables at a finite bound (lower preferred),
  // free variables at zero; slacks form the initial basis.
  status_.assign(cols, VarStatus::at_lower);
  value_.assign(cols, 0.0);
  for (int j = 0; j < n_; ++j) {
    if (!std::isinf(lower_[j])) {
      status_[j] = VarStatus::at_lower;
      value_[j] = lower_[j];
    } else if (!std::isinf(upper_[j])) {
      status_[j] = VarStatus::at_upper;
      value_[j] = upper_[j];
    } else {
      status_[j] = VarStatus::free_nonbasic;
      value_[j] = 0.0;
    }
  }

  basis_.assign(m_, 0);
  binv_.assign(static_cast<std::size_t>(m_) * m_, 0.0);
  work_.assign(m_, 0.0);
  lp.matrix.multiply_add(std::span<const double>(value_.data(), n_), work_);
  for (int i = 0; i < m_; ++i) {
    const int s = n_ + i;
    basis_[i] = s;
    status_[s] = VarStatus::basic;
    value_[s] = rhs_eq_[i] - work_[i];
    binv_[static_cast<std::size_t>(i) * m_ + i] = 1.0;
  }

  iterations_ = 0;
  pivots_since_refactor_ = 0;
  degenerate_streak_ = 0;
  bland_mode_ = false;
  phase1_.zeta = 0.0;
  phase1_.iterations = 0;
  phase1_.artificials.assign(m_, 0.0);
}

// One artificial column per violated constraint direction: sign -1 absorbs
// activity above the row's upper limit, +1 below its lower limit.  They are
// installed for every direction a row can be violated in, so the minimized
// sum equals the total constraint violation of the best point, not just the
// violation reachable from the starting basis.
void SimplexSolver::install_artificials() {
  for (int i = 0; i < m_; ++i) {
    const int s = n_ + i;
    if (!std::isinf(lower_[s])) {  // row can be violated above
      art_row_.push_back(i);
      art_sign_.push_back(-1.0);
    }
    if (!std::isinf(upper_[s])) {  // row can be violated below
      art_row_.push_back(i);
      art_sign_.push_back(1.0);
    }
  }
  const int first = n_ + m_;
  const int cols = first + static_cast<int>(art_row_.size());
  lower_.resize(cols, 0.0);
  upper_.resize(cols, kInfinity);
  status_.resize(cols, VarStatus::at_lower);
  value_.resize(cols, 0.0);

  // Violated rows swap their slack out of the basis for the artificial that
  // absorbs the violation.
  for (int a = 0; a < static_cast<int>(art_row_.size()); ++a) {
    const int i = art_row_[a];
    const int s = n_ + i;
    if (basis_[i] != s) continue;  // other direction already handled this row
    const double v = value_[s];
    double violation = 0.0;
    VarStatus parked = VarStatus::at_lower;
    if (v < lower_[s] && art_sign_[a] < 0.0) {
      violation = lower_[s] - v;
      parked = VarStatus::at_lower;
    } else if (v > upper_[s] && art_sign_[a] > 0.0) {
      violation = v - upper_[s];
      parked = VarStatus::at_upper;
    } else {
      continue;
    }
    const int w = first + a;
    status_[s] = parked;
    value_[s] = parked == VarStatus::at_lower ? lower_[s] : upper_[s];
    basis_[i] = w;
    status_[w] = VarStatus::basic;
    value_[w] = violation;
    binv_[static_cast<std::size_t>(i) * m_ + i] = art_sign_[a];
  }
}

double SimplexSolver::column_cost(int phase, int col) const {
  if (phase == 1) return col >= n_ + m_ ? -1.0 : 0.0;
  return col < n_ ? lp_->objective[col] : 0.0;
}

template <typename Fn>
void SimplexSolver::for_column(int col, Fn&& fn) const {
  if (col < n_) {
    const SparseMatrix& a = lp_->matrix;
    for (int k = a.col_start[col]; k < a.col_start[col + 1]; ++k)
      fn(a.row_index[k], a.values[k]);
  } else if (col < n_ + m_) {
    fn(col - n_, 1.0);
  } else {
    const int a = col - n_ - m_;
    fn(art_row_[a], art_sign_[a]);
  }
}

void SimplexSolver::compute_duals(int phase) {
  duals_.assign(m_, 0.0);
  for (int i = 0; i < m_; ++i) {
    const double cb = column_cost(phase, basis_[i]);
    if (cb == 0.0) continue;
    const double* row = binv_.data() + static_cast<std::size_t>(i) * m_;
    for (int k = 0; k < m_; ++k) duals_[k] += cb * row[k];
  }
}

int SimplexSolver::price(int phase, bool bland) {
  const int cols = column_count();
  int best = -1;
  double best_score = options_.optimality_tol;
  for (int j = 0; j < cols; ++j) {
    const VarStatus st = status_[j];
    if (st == VarStatus::basic) continue;
    if (lower_[j] == upper_[j]) continue;  // fixed, never enters
    double d = column_cost(phase, j);
    for_column(j, [&](int row, double v) { d -= duals_[row] * v; });

    bool eligible = false;
    if (st == VarStatus::at_lower)
      eligible = d > options_.optimality_tol;
    else if (st == VarStatus::at_upper)
      eligible = d < -options_.optimality_tol;
    else  // free
      eligible = std::fabs(d) > options_.optimality_tol;
    if (!eligible) continue;

    if (bland) return j;  // lowest eligible index
    const double score = std::fabs(d);
    if (score > best_score) {
      best_score = score;
      best = j;
    }
  }
  return best;
}

void SimplexSolver::compute_direction(int col) {
  work_.assign(m_, 0.0);
  for_column(col, [&](int row, double v) { work_[row] = v; });
  direction_.assign(m_, 0.0);
  for (int i = 0; i < m_; ++i) {
    const double* row = binv_.data() + static_cast<std::size_t>(i) * m_;
    double sum = 0.0;
    for (int k = 0; k < m_; ++k) sum += row[k] * work_[k];
    direction_[i] = sum;
  }
}

void SimplexSolver::refactorize() {
  // Rebuild the dense inverse of the basis matrix by Gauss-Jordan with
  // partial pivoting.
  const std::size_t mm = static_cast<std::size_t>(m_) * m_;
  std::vector<double> b(mm, 0.0);
  for (int pos = 0; pos < m_; ++pos)
    for_column(basis_[pos],
               [&](int row, double v) { b[static_cast<std::size_t>(row) * m_ + pos] = v; });

  binv_.assign(mm, 0.0);
  for (int i = 0; i < m_; ++i)
    binv_[static_cast<std::size_t>(i) * m_ + i] = 1.0;

  for (int col = 0; col < m_; ++col) {
    int piv = -1;
    double piv_abs = options_.zero_pivot_tol;
    for (int i = col; i < m_; ++i) {
      const double a = std::fabs(b[static_cast<std::size_t>(i) * m_ + col]);
      if (a > piv_abs) {
        piv_abs = a;
        piv = i;
      }
    }
    if (piv < 0) throw std::runtime_error("simplex basis numerically singular");
    if (piv != col) {
      for (int k = 0; k < m_; ++k) {
        std::swap(b[static_cast<std::size_t>(piv) * m_ + k],
                  b[static_cast<std::size_t>(col) * m_ + k]);
        std::swap(binv_[static_cast<std::size_t>(piv) * m_ + k],
                  binv_[static_cast<std::size_t>(col) * m_ + k]);
      }
    }
    const double inv = 1.0 / b[static_cast<std::size_t>(col) * m_ + col];
    for (int k = 0; k < m_; ++k) {
      b[static_cast<std::size_t>(col) * m_ + k] *= inv;
      binv_[static_cast<std::size_t>(col) * m_ + k] *= inv;
    }
    for (int i = 0; i < m_; ++i) {
      if (i == col) continue;
      const double f = b[static_cast<std::size_t>(i) * m_ + col];
      if (f == 0.0) continue;
      for (int k = 0; k < m_; ++k) {
        b[static_cast<std::size_t>(i) * m_ + k] -=
            f * b[static_cast<std::size_t>(col) * m_ + k];
        binv_[static_cast<std::size_t>(i) * m_ + k] -=
            f * binv_[static_cast<std::size_t>(col) * m_ + k];
      }
    }
  }
  pivots_since_refactor_ = 0;
}

void SimplexSolver::recompute_basics() {
  work_.assign(m_, 0.0);
  for (int j = 0; j < column_count(); ++j) {
    if (status_[j] == VarStatus::basic || value_[j] == 0.0) continue;
    const double xj = value_[j];
    for_column(j, [&](int row, double v) { work_[row] += v * xj; });
  }
  for (int i = 0; i < m_; ++i) work_[i] = rhs_eq_[i] - work_[i];
  for (int i = 0; i < m_; ++i) {
    const double* row = binv_.data() + static_cast<std::size_t>(i) * m_;
    double sum = 0.0;
    for (int k = 0; k < m_; ++k) sum += row[k] * work_[k];
    value_[basis_[i]] = sum;
  }
}

double SimplexSolver::current_objective(int phase) const {
  double z = 0.0;
  for (int j = 0; j < column_count(); ++j) {
    const double c = column_cost(phase, j);
    if (c != 0.0) z += c * value_[j];
  }
  if (phase == 2) z += lp_->constant_term + lp_->objective_constant;
  return z;
}

SimplexSolver::PhaseStatus SimplexSolver::run_phase(int phase) {
  for (;;) {
    if (iterations_ >= options_.iteration_limit) return PhaseStatus::limit;
    if (pivots_since_refactor_ >= options_.refactor_interval) {
      refactorize();
      recompute_basics();
    }

    compute_duals(phase);
    const int entering = price(phase, bland_mode_);
    if (entering < 0) return PhaseStatus::optimal;

    compute_direction(entering);

    double sigma = 1.0;
    if (status_[entering] == VarStatus::at_upper) {
      sigma = -1.0;
    } else if (status_[entering] == VarStatus::free_nonbasic) {
      double d = column_cost(phase, entering);
      for_column(entering, [&](int row, double v) { d -= duals_[row] * v; });
      sigma = d > 0.0 ? 1.0 : -1.0;
    }

    // Ratio test: smallest step at which a basic variable hits a bound, or
    // the entering variable reaches its opposite bound (a bound flip).
    double own_span = kInfinity;
    if (!std::isinf(lower_[entering]) && !std::isinf(upper_[entering]))
      own_span = upper_[entering] - lower_[entering];

    int leaving_pos = -1;
    bool leaving_at_upper = false;
    double min_ratio = kInfinity;
    double best_alpha = 0.0;
    for (int i = 0; i < m_; ++i) {
      const double step = sigma * direction_[i];
      const int col = basis_[i];
      double ratio;
      bool to_upper;
      if (step > options_.zero_pivot_tol) {
        if (std::isinf(lower_[col])) continue;
        ratio = (value_[col] - lower_[col]) / step;
        to_upper = false;
      } else if (step < -options_.zero_pivot_tol) {
        if (std::isinf(upper_[col])) continue;
        ratio = (value_[col] - upper_[col]) / step;
        to_upper = true;
      } else {
        continue;
      }
      if (ratio < 0.0) ratio = 0.0;  // tolerance residue on a tight basic
      const double alpha = std::fabs(direction_[i]);
      bool take = false;
      if (ratio < min_ratio) {
        take = true;
      } else if (ratio == min_ratio && leaving_pos >= 0) {
        if (bland_mode_)
          take = col < basis_[leaving_pos];
        else
          take = alpha > best_alpha ||
                 (alpha == best_alpha && col < basis_[leaving_pos]);
      }
      if (take) {
        min_ratio = ratio;
        leaving_pos = i;
        leaving_at_upper = to_upper;
        best_alpha = alpha;
      }
    }

    if (std::isinf(min_ratio) && std::isinf(own_span)) {
      if (phase == 1)
        throw std::runtime_error("phase I unbounded: numerical failure");
      return PhaseStatus::unbounded;
    }

    const bool flip = own_span <= min_ratio;
    const double delta = flip ? own_span : min_ratio;

    if (options_.trace) {
      std::ostringstream line;
      line << "it " << iterations_ << " phase " << phase << " enter c"
           << entering << (flip ? " flip" : " leave c") ;
      if (!flip) line << basis_[leaving_pos];
      line << " step " << delta << " obj " << current_objective(phase);
      options_.trace(line.str());
    }

    // Apply the step to the basic values and the entering variable.
    if (delta != 0.0) {
      for (int i = 0; i < m_; ++i)
        value_[basis_[i]] -= sigma * delta * direction_[i];
      value_[entering] += sigma * delta;
    }

    if (flip) {
      status_[entering] = status_[entering] == VarStatus::at_lower
                              ? VarStatus::at_upper
                              : VarStatus::at_lower;
      value_[entering] = status_[entering] == VarStatus::at_lower
                             ? lower_[entering]
                             : upper_[entering];
    } else {
      const double pivot = direction_[leaving_pos];
      if (std::fabs(pivot) < options_.zero_pivot_tol)
        throw std::runtime_error("simplex pivot numerically singular");
      const int leaving_col = basis_[leaving_pos];
      status_[leaving_col] =
          leaving_at_upper ? VarStatus::at_upper : VarStatus::at_lower;
      value_[leaving_col] =
          leaving_at_upper ? upper_[leaving_col] : lower_[leaving_col];
      basis_[leaving_pos] = entering;
      status_[entering] = VarStatus::basic;

      // Product-form update of the dense inverse.
      double* prow = binv_.data() + static_cast<std::size_t>(leaving_pos) * m_;
      const double inv = 1.0 / pivot;
      for (int k = 0; k < m_; ++k) prow[k] *= inv;
      for (int i = 0; i < m_; ++i) {
        if (i == leaving_pos) continue;
        const double f = direction_[i];
        if (f == 0.0) continue;
        double* row = binv_.data() + static_cast<std::size_t>(i) * m_;
        for (int k = 0; k < m_; ++k) row[k] -= f * prow[k];
      }
      ++pivots_since_refactor_;
    }

    ++iterations_;
    if (delta <= 1e-12) {
      if (++degenerate_streak_ >= 2 * std::max(m_, 1)) bland_mode_ = true;
    } else {
      degenerate_streak_ = 0;
      bland_mode_ = false;
    }
  }
}

void SimplexSolver::finish_phase1() {
  const int first = n_ + m_;
  phase1_.artificials.assign(m_, 0.0);
  double zeta = 0.0;
  for (int a = 0; a < static_cast<int>(art_row_.size()); ++a) {
    const double w = value_[first + a];
    phase1_.artificials[art_row_[a]] += w;
    zeta += w;
  }
  phase1_.zeta = zeta;
  phase1_.iterations = iterations_;
  // Artificials are pinned at zero for phase II; basic ones may linger in
  // the basis at value zero.
  for (int a = 0; a < static_cast<int>(art_row_.size()); ++a) {
    const int col = first + a;
    lower_[col] = upper_[col] = 0.0;
    if (status_[col] != VarStatus::basic) value_[col] = 0.0;
  }
}

namespace {

// Distance of zero-activity rows to their interval; used for variable-free
// LPs where every row activity is a constant.
double interval_violation(double activity, const RowInterval& iv) {
  if (activity < iv.lo) return iv.lo - activity;
  if (activity > iv.hi) return activity - iv.hi;
  return 0.0;
}

}  // namespace

LpSolution SimplexSolver::solve(const ResidualLp& lp) {
  LpSolution result;

  if (lp.num_vars() == 0) {
    // Nothing to pivot on: the fixing determined every activity already.
    phase1_.artificials.assign(lp.num_rows(), 0.0);
    phase1_.iterations = 0;
    double zeta = 0.0;
    for (int i = 0; i < lp.num_rows(); ++i) {
      const double v = interval_violation(0.0, lp.row_interval(i));
      phase1_.artificials[i] = v;
      zeta += v;
    }
    phase1_.zeta = zeta;
    result.status = zeta <= options_.feasibility_tol ? LpStatus::optimal
                                                     : LpStatus::infeasible;
    if (result.status == LpStatus::optimal)
      result.objective = lp.constant_term + lp.objective_constant;
    return result;
  }

  load(lp);

  bool violated = false;
  for (int i = 0; i < m_ && !violated; ++i) {
    const int s = n_ + i;
    violated = value_[s] < lower_[s] - options_.feasibility_tol ||
               value_[s] > upper_[s] + options_.feasibility_tol;
  }

  if (violated) {
    install_artificials();
    const PhaseStatus st = run_phase(1);
    finish_phase1();
    if (st == PhaseStatus::limit) {
      result.status = LpStatus::iteration_limit;
      result.iterations = iterations_;
      return result;
    }
    if (phase1_.zeta > options_.feasibility_tol) {
      result.status = LpStatus::infeasible;
      result.iterations = iterations_;
      return result;
    }
  }

  const PhaseStatus st = run_phase(2);
  result.iterations = iterations_;
  switch (st) {
    case PhaseStatus::optimal: {
      result.status = LpStatus::optimal;
      result.objective = current_objective(2);
      result.primal_values.assign(value_.begin(), value_.begin() + n_);
      break;
    }
    case PhaseStatus::unbounded:
      result.status = LpStatus::unbounded;
      break;
    case PhaseStatus::limit:
      result.status = LpStatus::iteration_limit;
      result.incumbent_objective = current_objective(2);
      break;
  }
  return result;
}

Phase1Result SimplexSolver::solve_phase1(const ResidualLp& lp) {
  if (lp.num_vars() == 0) {
    Phase1Result r;
    r.artificials.assign(lp.num_rows(), 0.0);
    for (int i = 0; i < lp.num_rows(); ++i) {
      r.artificials[i] =
          interval_violation(0.0, lp.row_interval(i));
      r.zeta += r.artificials[i];
    }
    return r;
  }
  load(lp);
  install_artificials();
  run_phase(1);  // on the iteration limit the current sum is still an upper bound
  finish_phase1();
  return phase1_;
}

LpSolution solve_lp(const ResidualLp& lp, const SimplexOptions& options) {
  SimplexSolver solver(options);
  return solver.solve(lp);
}

Phase1Result phase1(const ResidualLp& lp, const SimplexOptions& options) {
  SimplexSolver solver(options);
  return solver.solve_phase1(lp);
}

}  // namespace nichemip
