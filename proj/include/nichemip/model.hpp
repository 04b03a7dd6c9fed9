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

#ifndef NICHEMIP_MODEL_HPP_
#define NICHEMIP_MODEL_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace nichemip {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class RowSense : char { le, ge, eq };
enum class ObjectiveSense : char { minimize, maximize };

/// Column-major sparse matrix (compressed sparse column).
struct SparseMatrix {
  int num_rows = 0;
  int num_cols = 0;
  std::vector<int> col_start{0};  // size num_cols + 1
  std::vector<int> row_index;     // size nnz
  std::vector<double> values;     // size nnz

  int nnz() const { return static_cast<int>(values.size()); }

  /// Appends one column; entries must have row indices < num_rows.
  void add_column(std::span<const std::pair<int, double>> entries);

  /// y += A * x
  void multiply_add(std::span<const double> x, std::span<double> y) const;
  void multiply_add(std::span<const std::int64_t> x, std::span<double> y) const;

  double at(int row, int col) const;

  static SparseMatrix from_dense(int rows, int cols,
                                 std::span<const double> row_major);

  bool operator==(const SparseMatrix&) const = default;
};

struct Bounds {
  double lower = 0.0;
  double upper = kInfinity;

  bool contains(double v) const { return v >= lower && v <= upper; }
  bool operator==(const Bounds&) const = default;
};

/// Allowed interval [lo, hi] for a row activity, after applying sense and
/// optional range.
struct RowInterval {
  double lo;
  double hi;
};

RowInterval make_row_interval(RowSense sense, double rhs,
                              std::optional<double> range);

/// A mixed integer linear program in the form
///   opt  c x + h y + const
///   s.t. A x + G y  (<=, >=, =)  b,   possibly ranged
///        x integral within bounds, y within bounds.
/// Integer and continuous variables are kept in separate blocks; within each
/// block the original column order of the source file is preserved, which
/// also fixes the genome index order used by the evolutionary solver.
struct ProblemInstance {
  std::string name;
  std::string objective_name = "COST";
  ObjectiveSense sense_flag = ObjectiveSense::minimize;
  double objective_constant = 0.0;

  std::vector<std::string> int_names, cont_names, row_names;
  std::vector<double> objective_int, objective_cont;
  SparseMatrix matrix_int, matrix_cont;
  std::vector<double> rhs;
  std::vector<RowSense> senses;
  std::vector<std::optional<double>> ranges;
  std::vector<Bounds> bounds_int, bounds_cont;

  int n_int() const { return static_cast<int>(objective_int.size()); }
  int n_cont() const { return static_cast<int>(objective_cont.size()); }
  int num_rows() const { return static_cast<int>(rhs.size()); }

  RowInterval row_interval(int row) const {
    return make_row_interval(senses[row], rhs[row], ranges[row]);
  }

  /// Throws std::invalid_argument if the structural invariants are broken
  /// (index ranges, vector lengths, bound ordering).
  void validate() const;

  bool operator==(const ProblemInstance&) const = default;
};

/// The continuous program left over once the integer variables are fixed,
/// and also the container for any plain LP handed to the simplex solver
/// (the full relaxation uses the same shape with an all-variable block).
struct ResidualLp {
  std::vector<double> objective;
  SparseMatrix matrix;
  std::vector<double> rhs_shifted;
  std::vector<RowSense> senses;
  std::vector<std::optional<double>> ranges;
  std::vector<Bounds> bounds;
  double constant_term = 0.0;      // objective share of the fixed genes
  double objective_constant = 0.0; // constant carried over from the instance

  int num_vars() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rhs_shifted.size()); }

  RowInterval row_interval(int row) const {
    return make_row_interval(senses[row], rhs_shifted[row], ranges[row]);
  }
};

/// Negates the objective when the instance is flagged as a minimization.
/// The flag itself keeps recording the original direction, so applying the
/// conversion twice restores the original coefficients.
ProblemInstance to_maximization(const ProblemInstance& p);

/// Maps an internal (maximization-form) objective value back to the sign
/// convention of the source file.
double original_objective(const ProblemInstance& p, double internal_value);

/// Residual LP of a genome: rhs_shifted = b - A*genome, constant = c*genome.
/// Throws std::invalid_argument when a gene violates its variable bounds.
ResidualLp fix_integers(const ProblemInstance& p,
                        std::span<const std::int64_t> genome);

/// The LP relaxation: integrality dropped, all variables free within their
/// bounds.  Integer variables occupy positions [0, n_int) of the LP.
ResidualLp lp_relaxation(const ProblemInstance& p);

}  // namespace nichemip

#endif  // NICHEMIP_MODEL_HPP_
