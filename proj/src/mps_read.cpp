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

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "nichemip/mps.hpp"

namespace nichemip {
namespace {

enum class Section {
  none,
  name,
  objsense,
  rows,
  columns,
  rhs,
  ranges,
  bounds,
  endata
};

// Per-column state accumulated while reading; integrality can still change in
// BOUNDS (BV/UI/LI), so the integer/continuous partition happens at the end.
struct ColumnRecord {
  std::string name;
  double objective = 0.0;
  std::vector<std::pair<int, double>> entries;
  Bounds bounds;
  bool is_integer = false;
  bool marker_integer = false;   // declared via INTORG/INTEND
  bool explicit_bound = false;   // any BOUNDS entry seen
};

struct Parser {
  Parser(std::istream& stream, const MpsOptions& opts)
      : in(stream), options(opts) {}

  std::istream& in;
  const MpsOptions& options;
  int lineno = 0;

  Section section = Section::none;
  bool seen_rows = false, seen_columns = false;

  ProblemInstance out;

  // Row bookkeeping: constraint rows map to their index; the objective row
  // and any extra free (N) rows map to negative sentinels.
  static constexpr int kObjectiveRow = -1;
  static constexpr int kFreeRow = -2;
  std::unordered_map<std::string, int> row_of;
  bool have_objective_row = false;

  std::vector<ColumnRecord> columns;
  std::unordered_map<std::string, int> column_of;
  int current_column = -1;
  bool in_integer_block = false;
  int integer_block_line = 0;

  std::vector<bool> rhs_seen, range_seen;
  bool objective_rhs_seen = false;

  [[noreturn]] void fail(const std::string& message) const {
    throw MpsParseError(message, lineno);
  }

  double parse_number(const std::string& token) const {
    const char* begin = token.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') fail("bad numeric field '" + token + "'");
    return v;
  }

  int constraint_row(const std::string& name) const {
    auto it = row_of.find(name);
    if (it == row_of.end()) fail("unknown row '" + name + "'");
    return it->second;
  }

  void handle_section_header(const std::vector<std::string>& tokens) {
    static const std::pair<const char*, Section> kSections[] = {
        {"NAME", Section::name},     {"OBJSENSE", Section::objsense},
        {"ROWS", Section::rows},     {"COLUMNS", Section::columns},
        {"RHS", Section::rhs},       {"RANGES", Section::ranges},
        {"BOUNDS", Section::bounds}, {"ENDATA", Section::endata}};
    Section next = Section::none;
    for (const auto& [keyword, sec] : kSections)
      if (tokens[0] == keyword) next = sec;
    if (next == Section::none) fail("unknown section '" + tokens[0] + "'");
    if (static_cast<int>(next) <= static_cast<int>(section))
      fail("section '" + tokens[0] + "' out of order");
    if (next == Section::columns && !seen_rows)
      fail("COLUMNS before ROWS");
    if ((next == Section::rhs || next == Section::ranges ||
         next == Section::bounds) &&
        !seen_columns)
      fail("section '" + tokens[0] + "' before COLUMNS");
    if (section == Section::columns && in_integer_block) {
      lineno = integer_block_line;
      fail("INTORG marker never closed");
    }

    if (next == Section::name && tokens.size() > 1) out.name = tokens[1];
    if (next == Section::rows) seen_rows = true;
    if (next == Section::columns) seen_columns = true;
    section = next;
  }

  void handle_objsense(const std::vector<std::string>& tokens) {
    const std::string& v = tokens[0];
    if (v == "MAX" || v == "MAXIMIZE")
      out.sense_flag = ObjectiveSense::maximize;
    else if (v == "MIN" || v == "MINIMIZE")
      out.sense_flag = ObjectiveSense::minimize;
    else
      fail("bad OBJSENSE value '" + v + "'");
  }

  void handle_row(const std::vector<std::string>& tokens) {
    if (tokens.size() != 2) fail("ROWS line needs a type and a name");
    const std::string& type = tokens[0];
    const std::string& name = tokens[1];
    if (row_of.count(name)) fail("duplicate row name '" + name + "'");
    if (type == "N") {
      if (!have_objective_row) {
        out.objective_name = name;
        have_objective_row = true;
        row_of.emplace(name, kObjectiveRow);
      } else {
        row_of.emplace(name, kFreeRow);  // extra free row, coefficients dropped
      }
      return;
    }
    RowSense sense;
    if (type == "L")
      sense = RowSense::le;
    else if (type == "G")
      sense = RowSense::ge;
    else if (type == "E")
      sense = RowSense::eq;
    else
      fail("bad row type '" + type + "'");
    row_of.emplace(name, static_cast<int>(out.row_names.size()));
    out.row_names.push_back(name);
    out.senses.push_back(sense);
  }

  bool is_marker_line(const std::vector<std::string>& tokens) const {
    return std::find(tokens.begin(), tokens.end(), "'MARKER'") != tokens.end();
  }

  void handle_marker(const std::vector<std::string>& tokens) {
    const bool org =
        std::find(tokens.begin(), tokens.end(), "'INTORG'") != tokens.end();
    const bool end =
        std::find(tokens.begin(), tokens.end(), "'INTEND'") != tokens.end();
    if (org == end) fail("marker line needs exactly one of INTORG/INTEND");
    if (org) {
      if (in_integer_block) fail("nested INTORG marker");
      in_integer_block = true;
      integer_block_line = lineno;
    } else {
      if (!in_integer_block) fail("INTEND without INTORG");
      in_integer_block = false;
    }
  }

  void handle_column(const std::vector<std::string>& tokens) {
    if (is_marker_line(tokens)) {
      handle_marker(tokens);
      return;
    }
    if (tokens.size() < 3 || tokens.size() % 2 == 0)
      fail("COLUMNS line needs a name and row/value pairs");
    const std::string& name = tokens[0];
    if (current_column < 0 || columns[current_column].name != name) {
      if (column_of.count(name))
        fail("column '" + name + "' entries are not contiguous");
      current_column = static_cast<int>(columns.size());
      column_of.emplace(name, current_column);
      ColumnRecord rec;
      rec.name = name;
      rec.is_integer = rec.marker_integer = in_integer_block;
      columns.push_back(std::move(rec));
    }
    ColumnRecord& col = columns[current_column];
    for (std::size_t k = 1; k + 1 < tokens.size(); k += 2) {
      const std::string& row_name = tokens[k];
      const double value = parse_number(tokens[k + 1]);
      const int row = constraint_row(row_name);
      if (row == kObjectiveRow) {
        col.objective += value;
        continue;
      }
      if (row == kFreeRow) continue;
      for (const auto& [r, v] : col.entries)
        if (r == row)
          fail("duplicate entry for column '" + name + "', row '" + row_name +
               "'");
      col.entries.emplace_back(row, value);
    }
  }

  // RHS and RANGES lines share the layout [set-name] (row value)+ where the
  // set name may be omitted; an odd token count means it is present.
  std::size_t pair_start(const std::vector<std::string>& tokens) const {
    if (tokens.size() < 2) fail("line needs row/value pairs");
    return tokens.size() % 2 == 1 ? 1 : 0;
  }

  void handle_rhs(const std::vector<std::string>& tokens) {
    out.rhs.resize(out.row_names.size(), 0.0);
    rhs_seen.resize(out.row_names.size(), false);
    for (std::size_t k = pair_start(tokens); k + 1 < tokens.size(); k += 2) {
      const double value = parse_number(tokens[k + 1]);
      const int row = constraint_row(tokens[k]);
      if (row == kObjectiveRow) {
        if (objective_rhs_seen) fail("duplicate RHS entry for objective row");
        objective_rhs_seen = true;
        out.objective_constant = -value;
        continue;
      }
      if (row == kFreeRow) continue;
      if (rhs_seen[row]) fail("duplicate RHS entry for row '" + tokens[k] + "'");
      rhs_seen[row] = true;
      out.rhs[row] = value;
    }
  }

  void handle_range(const std::vector<std::string>& tokens) {
    out.ranges.resize(out.row_names.size());
    range_seen.resize(out.row_names.size(), false);
    for (std::size_t k = pair_start(tokens); k + 1 < tokens.size(); k += 2) {
      const double value = parse_number(tokens[k + 1]);
      const int row = constraint_row(tokens[k]);
      if (row < 0) fail("RANGES entry on a non-constraint row");
      if (range_seen[row])
        fail("duplicate RANGES entry for row '" + tokens[k] + "'");
      range_seen[row] = true;
      out.ranges[row] = value;
    }
  }

  void handle_bound(const std::vector<std::string>& tokens) {
    if (tokens.empty()) return;
    const std::string& type = tokens[0];
    const bool needs_value = type == "UP" || type == "LO" || type == "FX" ||
                             type == "UI" || type == "LI";
    const bool valueless =
        type == "FR" || type == "MI" || type == "PL" || type == "BV";
    if (!needs_value && !valueless) fail("bad bound type '" + type + "'");

    std::string col_name;
    double value = 0.0;
    if (needs_value) {
      if (tokens.size() == 4) {
        col_name = tokens[2];
        value = parse_number(tokens[3]);
      } else if (tokens.size() == 3) {  // bound-set name omitted
        col_name = tokens[1];
        value = parse_number(tokens[2]);
      } else {
        fail("BOUNDS line has the wrong number of fields");
      }
    } else {
      if (tokens.size() == 3)
        col_name = tokens[2];
      else if (tokens.size() == 2)
        col_name = tokens[1];
      else
        fail("BOUNDS line has the wrong number of fields");
    }

    auto it = column_of.find(col_name);
    if (it == column_of.end()) fail("unknown column '" + col_name + "'");
    ColumnRecord& col = columns[it->second];
    col.explicit_bound = true;

    if (type == "UP") {
      col.bounds.upper = value;
    } else if (type == "LO") {
      col.bounds.lower = value;
    } else if (type == "FX") {
      col.bounds.lower = col.bounds.upper = value;
    } else if (type == "FR") {
      col.bounds.lower = -kInfinity;
      col.bounds.upper = kInfinity;
    } else if (type == "MI") {
      col.bounds.lower = -kInfinity;
    } else if (type == "PL") {
      col.bounds.upper = kInfinity;
    } else if (type == "BV") {
      col.bounds = Bounds{0.0, 1.0};
      col.is_integer = true;
    } else if (type == "UI") {
      col.bounds.upper = value;
      col.is_integer = true;
    } else if (type == "LI") {
      col.bounds.lower = value;
      col.is_integer = true;
    }
  }

  void handle_data(const std::vector<std::string>& tokens) {
    switch (section) {
      case Section::objsense:
        handle_objsense(tokens);
        break;
      case Section::rows:
        handle_row(tokens);
        break;
      case Section::columns:
        handle_column(tokens);
        break;
      case Section::rhs:
        handle_rhs(tokens);
        break;
      case Section::ranges:
        handle_range(tokens);
        break;
      case Section::bounds:
        handle_bound(tokens);
        break;
      case Section::name:
      case Section::none:
        fail("data line outside any section");
      default:
        break;
    }
  }

  ProblemInstance parse() {
    std::string line;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '*') continue;

      std::vector<std::string> tokens;
      std::istringstream fields(line);
      std::string tok;
      while (fields >> tok) {
        if (tok[0] == '$') break;  // free-format trailing comment
        tokens.push_back(tok);
      }
      if (tokens.empty()) continue;

      const bool header = line[0] != ' ' && line[0] != '\t';
      if (header) {
        handle_section_header(tokens);
        if (section == Section::endata) break;
      } else {
        handle_data(tokens);
      }
    }
    if (!seen_rows) fail("missing ROWS section");
    if (!seen_columns) fail("missing COLUMNS section");
    if (in_integer_block) {
      lineno = integer_block_line;
      fail("INTORG marker never closed");
    }
    finish();
    return std::move(out);
  }

  void finish() {
    if (out.rhs.empty()) out.rhs.assign(out.row_names.size(), 0.0);
    out.ranges.resize(out.row_names.size());
    const int m = static_cast<int>(out.row_names.size());
    out.matrix_int.num_rows = m;
    out.matrix_cont.num_rows = m;

    for (ColumnRecord& col : columns) {
      if (options.integer_default_binary && col.marker_integer &&
          !col.explicit_bound)
        col.bounds.upper = 1.0;
      std::sort(col.entries.begin(), col.entries.end());
      if (col.is_integer) {
        out.int_names.push_back(col.name);
        out.objective_int.push_back(col.objective);
        out.bounds_int.push_back(col.bounds);
        out.matrix_int.add_column(col.entries);
      } else {
        out.cont_names.push_back(col.name);
        out.objective_cont.push_back(col.objective);
        out.bounds_cont.push_back(col.bounds);
        out.matrix_cont.add_column(col.entries);
      }
    }
    out.validate();
  }
};

}  // namespace

ProblemInstance parse_mps(std::istream& in, const MpsOptions& options) {
  Parser parser{in, options};
  return parser.parse();
}

ProblemInstance parse_mps_file(const std::string& path,
                               const MpsOptions& options) {
  if (path == "-") return parse_mps(std::cin, options);
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open '" + path + "'");
  return parse_mps(file, options);
}

}  // namespace nichemip
