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

#include "nichemip/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace nichemip {

void SparseMatrix::add_column(
    std::span<const std::pair<int, double>> entries) {
  for (const auto& [row, value] : entries) {
    if (row < 0 || row >= num_rows)
      throw std::invalid_argument("matrix entry row " + std::to_string(row) +
                                  " out of range");
    row_index.push_back(row);
    values.push_back(value);
  }
  ++num_cols;
  col_start.push_back(nnz());
}

void SparseMatrix::multiply_add(std::span<const double> x,
                                std::span<double> y) const {
  for (int col = 0; col < num_cols; ++col) {
    const double xc = x[col];
    if (xc == 0.0) continue;
    for (int k = col_start[col]; k < col_start[col + 1]; ++k)
      y[row_index[k]] += values[k] * xc;
  }
}

void SparseMatrix::multiply_add(std::span<const std::int64_t> x,
                                std::span<double> y) const {
  for (int col = 0; col < num_cols; ++col) {
    const double xc = static_cast<double>(x[col]);
    if (xc == 0.0) continue;
    for (int k = col_start[col]; k < col_start[col + 1]; ++k)
      y[row_index[k]] += values[k] * xc;
  }
}

double SparseMatrix::at(int row, int col) const {
  for (int k = col_start[col]; k < col_start[col + 1]; ++k)
    if (row_index[k] == row) return values[k];
  return 0.0;
}

SparseMatrix SparseMatrix::from_dense(int rows, int cols,
                                      std::span<const double> row_major) {
  SparseMatrix m;
  m.num_rows = rows;
  std::vector<std::pair<int, double>> column;
  for (int j = 0; j < cols; ++j) {
    column.clear();
    for (int i = 0; i < rows; ++i) {
      const double v = row_major[static_cast<std::size_t>(i) * cols + j];
      if (v != 0.0) column.emplace_back(i, v);
    }
    m.add_column(column);
  }
  return m;
}

RowInterval make_row_interval(RowSense sense, double rhs,
                              std::optional<double> range) {
  RowInterval iv{-kInfinity, kInfinity};
  switch (sense) {
    case RowSense::le:
      iv.hi = rhs;
      if (range) iv.lo = rhs - std::fabs(*range);
      break;
    case RowSense::ge:
      iv.lo = rhs;
      if (range) iv.hi = rhs + std::fabs(*range);
      break;
    case RowSense::eq:
      iv.lo = iv.hi = rhs;
      if (range) {
        if (*range >= 0.0)
          iv.hi = rhs + *range;
        else
          iv.lo = rhs + *range;
      }
      break;
  }
  return iv;
}

namespace {

void check(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

void check_matrix(const SparseMatrix& m, int rows, int cols,
                  const char* name) {
  check(m.num_rows == rows, "matrix row count mismatch");
  check(m.num_cols == cols, "matrix column count mismatch");
  check(static_cast<int>(m.col_start.size()) == cols + 1,
        "matrix column starts malformed");
  for (int k = 0; k < m.nnz(); ++k)
    check(m.row_index[k] >= 0 && m.row_index[k] < rows,
          name != nullptr ? name : "matrix entry row index out of range");
}

void check_bounds(const std::vector<Bounds>& bounds) {
  for (const Bounds& b : bounds)
    check(b.lower <= b.upper, "lower bound exceeds upper bound");
}

}  // namespace

void ProblemInstance::validate() const {
  const int ni = n_int(), nc = n_cont(), m = num_rows();
  check(static_cast<int>(bounds_int.size()) == ni,
        "integer bounds length mismatch");
  check(static_cast<int>(bounds_cont.size()) == nc,
        "continuous bounds length mismatch");
  check(static_cast<int>(int_names.size()) == ni,
        "integer names length mismatch");
  check(static_cast<int>(cont_names.size()) == nc,
        "continuous names length mismatch");
  check(static_cast<int>(row_names.size()) == m, "row names length mismatch");
  check(static_cast<int>(senses.size()) == m, "senses length mismatch");
  check(static_cast<int>(ranges.size()) == m, "ranges length mismatch");
  check_matrix(matrix_int, m, ni, "integer matrix entry out of range");
  check_matrix(matrix_cont, m, nc, "continuous matrix entry out of range");
  check_bounds(bounds_int);
  check_bounds(bounds_cont);
}

ProblemInstance to_maximization(const ProblemInstance& p) {
  ProblemInstance out = p;
  if (p.sense_flag == ObjectiveSense::minimize) {
    for (double& c : out.objective_int) c = -c;
    for (double& c : out.objective_cont) c = -c;
    out.objective_constant = -out.objective_constant;
  }
  return out;
}

double original_objective(const ProblemInstance& p, double internal_value) {
  return p.sense_flag == ObjectiveSense::minimize ? -internal_value
                                                  : internal_value;
}

ResidualLp fix_integers(const ProblemInstance& p,
                        std::span<const std::int64_t> genome) {
  if (static_cast<int>(genome.size()) != p.n_int())
    throw std::invalid_argument("genome length does not match n_int");
  for (int k = 0; k < p.n_int(); ++k) {
    const Bounds& b = p.bounds_int[k];
    const double g = static_cast<double>(genome[k]);
    if (g < b.lower || g > b.upper)
      throw std::invalid_argument("gene " + std::to_string(k) +
                                  " violates its bounds");
  }

  ResidualLp lp;
  lp.objective = p.objective_cont;
  lp.matrix = p.matrix_cont;
  lp.senses = p.senses;
  lp.ranges = p.ranges;
  lp.bounds = p.bounds_cont;
  lp.objective_constant = p.objective_constant;

  lp.rhs_shifted.assign(p.num_rows(), 0.0);
  p.matrix_int.multiply_add(genome, lp.rhs_shifted);
  for (int i = 0; i < p.num_rows(); ++i)
    lp.rhs_shifted[i] = p.rhs[i] - lp.rhs_shifted[i];

  double fixed = 0.0;
  for (int k = 0; k < p.n_int(); ++k)
    fixed += p.objective_int[k] * static_cast<double>(genome[k]);
  lp.constant_term = fixed;
  return lp;
}

ResidualLp lp_relaxation(const ProblemInstance& p) {
  ResidualLp lp;
  const int ni = p.n_int(), nc = p.n_cont(), m = p.num_rows();
  lp.objective.reserve(ni + nc);
  lp.objective.insert(lp.objective.end(), p.objective_int.begin(),
                      p.objective_int.end());
  lp.objective.insert(lp.objective.end(), p.objective_cont.begin(),
                      p.objective_cont.end());
  lp.bounds.reserve(ni + nc);
  lp.bounds.insert(lp.bounds.end(), p.bounds_int.begin(), p.bounds_int.end());
  lp.bounds.insert(lp.bounds.end(), p.bounds_cont.begin(),
                   p.bounds_cont.end());

  SparseMatrix& a = lp.matrix;
  a.num_rows = m;
  a.num_cols = ni + nc;
  a.col_start = p.matrix_int.col_start;
  a.row_index = p.matrix_int.row_index;
  a.values = p.matrix_int.values;
  const int shift = p.matrix_int.nnz();
  for (int j = 0; j <= nc; ++j)
    if (j > 0) a.col_start.push_back(p.matrix_cont.col_start[j] + shift);
  a.row_index.insert(a.row_index.end(), p.matrix_cont.row_index.begin(),
                     p.matrix_cont.row_index.end());
  a.values.insert(a.values.end(), p.matrix_cont.values.begin(),
                  p.matrix_cont.values.end());

  lp.rhs_shifted = p.rhs;
  lp.senses = p.senses;
  lp.ranges = p.ranges;
  lp.constant_term = 0.0;
  lp.objective_constant = p.objective_constant;
  return lp;
}

}  // namespace nichemip
