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

#ifndef NICHEMIP_MPS_HPP_
#define NICHEMIP_MPS_HPP_

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "nichemip/model.hpp"

namespace nichemip {

struct MpsOptions {
  /// When set, integer columns declared only through INTORG/INTEND markers
  /// (no explicit BOUNDS entry) get bounds [0, 1] instead of [0, +inf).
  bool integer_default_binary = false;
};

class MpsParseError : public std::runtime_error {
 public:
  MpsParseError(const std::string& message, int line)
      : std::runtime_error("MPS parse error, line " + std::to_string(line) +
                           ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// Reads an MPS document.  Both fixed-column and whitespace-delimited free
/// layouts are accepted; fields are split on blanks, so names themselves may
/// not contain blanks.  Sections must appear in the standard order
/// NAME, [OBJSENSE], ROWS, COLUMNS, RHS, [RANGES], [BOUNDS], ENDATA.
/// The first N row is the objective; additional N rows are treated as free
/// rows and their coefficients are dropped.  An RHS entry on the objective
/// row is read as the negated objective constant.
ProblemInstance parse_mps(std::istream& in, const MpsOptions& options = {});

/// Convenience wrapper; path "-" reads standard input.
ProblemInstance parse_mps_file(const std::string& path,
                               const MpsOptions& options = {});

/// Canonical re-serialization: free-format fields, integer columns emitted
/// first inside a single INTORG/INTEND block, explicit BOUNDS entries for
/// every non-default bound.  Values are printed with enough digits to
/// round-trip doubles exactly, so parse(write(parse(x))) == parse(x).
void write_mps(const ProblemInstance& p, std::ostream& out);
std::string to_mps(const ProblemInstance& p);

/// Short human-readable description (name, variable counts, row counts).
std::string instance_summary(const ProblemInstance& p);

}  // namespace nichemip

#endif  // NICHEMIP_MPS_HPP_
