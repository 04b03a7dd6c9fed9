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

#include <cmath>
#include <ostream>
#include <sstream>

#include "double_format.hpp"
#include "nichemip/mps.hpp"

namespace nichemip {
namespace {

char sense_char(RowSense sense) {
  switch (sense) {
    case RowSense::le: return 'L';
    case RowSense::ge: return 'G';
    case RowSense::eq: return 'E';
  }
  return '?';
}

void write_column_block(std::ostream& out, const ProblemInstance& p,
                        const std::vector<std::string>& names,
                        const std::vector<double>& objective,
                        const SparseMatrix& matrix) {
  for (std::size_t j = 0; j < names.size(); ++j) {
    // The objective entry is always emitted, so columns without matrix
    // entries still get declared.
    out << "    " << names[j] << "  " << p.objective_name << "  "
        << format_double(objective[j]) << "\n";
    const int col = static_cast<int>(j);
    for (int k = matrix.col_start[col]; k < matrix.col_start[col + 1]; ++k)
      out << "    " << names[j] << "  " << p.row_names[matrix.row_index[k]]
          << "  " << format_double(matrix.values[k]) << "\n";
  }
}

void write_bounds_block(std::ostream& out,
                        const std::vector<std::string>& names,
                        const std::vector<Bounds>& bounds, bool integer) {
  for (std::size_t j = 0; j < names.size(); ++j) {
    const Bounds& b = bounds[j];
    const std::string& name = names[j];
    if (b.lower == b.upper) {
      out << " FX BND  " << name << "  " << format_double(b.lower) << "\n";
      continue;
    }
    bool wrote = false;
    if (std::isinf(b.lower)) {
      out << " MI BND  " << name << "\n";
      wrote = true;
    } else if (b.lower != 0.0) {
      out << " LO BND  " << name << "  " << format_double(b.lower) << "\n";
      wrote = true;
    }
    if (!std::isinf(b.upper)) {
      out << " UP BND  " << name << "  " << format_double(b.upper) << "\n";
    } else if (integer && !wrote) {
      // Pin the default explicitly so re-reading never applies the
      // binary-default option to this column.
      out << " PL BND  " << name << "\n";
    }
  }
}

}  // namespace

void write_mps(const ProblemInstance& p, std::ostream& out) {
  out << "NAME  " << p.name << "\n";
  if (p.sense_flag == ObjectiveSense::maximize) out << "OBJSENSE\n    MAX\n";

  out << "ROWS\n";
  out << " N  " << p.objective_name << "\n";
  for (int i = 0; i < p.num_rows(); ++i)
    out << " " << sense_char(p.senses[i]) << "  " << p.row_names[i] << "\n";

  out << "COLUMNS\n";
  if (p.n_int() > 0) {
    out << "    MARKER  'MARKER'  'INTORG'\n";
    write_column_block(out, p, p.int_names, p.objective_int, p.matrix_int);
    out << "    MARKER  'MARKER'  'INTEND'\n";
  }
  write_column_block(out, p, p.cont_names, p.objective_cont, p.matrix_cont);

  out << "RHS\n";
  for (int i = 0; i < p.num_rows(); ++i)
    if (p.rhs[i] != 0.0)
      out << "    RHS  " << p.row_names[i] << "  " << format_double(p.rhs[i])
          << "\n";
  if (p.objective_constant != 0.0)
    out << "    RHS  " << p.objective_name << "  "
        << format_double(-p.objective_constant) << "\n";

  bool any_range = false;
  for (const auto& r : p.ranges) any_range |= r.has_value();
  if (any_range) {
    out << "RANGES\n";
    for (int i = 0; i < p.num_rows(); ++i)
      if (p.ranges[i])
        out << "    RNG  " << p.row_names[i] << "  "
            << format_double(*p.ranges[i]) << "\n";
  }

  out << "BOUNDS\n";
  write_bounds_block(out, p.int_names, p.bounds_int, /*integer=*/true);
  write_bounds_block(out, p.cont_names, p.bounds_cont, /*integer=*/false);

  out << "ENDATA\n";
}

std::string to_mps(const ProblemInstance& p) {
  std::ostringstream out;
  write_mps(p, out);
  return out.str();
}

std::string instance_summary(const ProblemInstance& p) {
  int le = 0, ge = 0, eq = 0, ranged = 0;
  for (int i = 0; i < p.num_rows(); ++i) {
    switch (p.senses[i]) {
      case RowSense::le: ++le; break;
      case RowSense::ge: ++ge; break;
      case RowSense::eq: ++eq; break;
    }
    if (p.ranges[i]) ++ranged;
  }
  std::ostringstream out;
  out << "name:       " << p.name << "\n"
      << "objective:  "
      << (p.sense_flag == ObjectiveSense::minimize ? "minimize" : "maximize")
      << " " << p.objective_name;
  if (p.objective_constant != 0.0)
    out << " (constant " << format_double(p.objective_constant) << ")";
  out << "\n"
      << "rows:       " << p.num_rows() << " (L " << le << ", G " << ge
      << ", E " << eq << ", ranged " << ranged << ")\n"
      << "columns:    " << p.n_int() + p.n_cont() << " (integer " << p.n_int()
      << ", continuous " << p.n_cont() << ")\n"
      << "nonzeros:   " << p.matrix_int.nnz() + p.matrix_cont.nnz() << "\n";
  return out.str();
}

}  // namespace nichemip
