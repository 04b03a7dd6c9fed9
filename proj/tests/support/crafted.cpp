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

#include "support/crafted.hpp"

#include <sstream>

#include "nichemip/mps.hpp"

namespace nichemip::testing {
namespace {

// 1: two-constraint knapsack, six binaries.
const char* kKnap6 = R"(NAME  knap6
ROWS
 N  OBJ
 L  CAP1
 L  CAP2
COLUMNS
    MARKER  'MARKER'  'INTORG'
    X1  OBJ  -3
    X1  CAP1  2
    X1  CAP2  3
    X2  OBJ  -5
    X2  CAP1  4
    X2  CAP2  1
    X3  OBJ  -4
    X3  CAP1  3
    X3  CAP2  2
    X4  OBJ  -2
    X4  CAP1  1
    X4  CAP2  4
    X5  OBJ  -7
    X5  CAP1  5
    X5  CAP2  2
    X6  OBJ  -1
    X6  CAP1  1
    X6  CAP2  2
    MARKER  'MARKER'  'INTEND'
RHS
    RHS  CAP1  11
    RHS  CAP2  10
BOUNDS
 UP BND  X1  1
 UP BND  X2  1
 UP BND  X3  1
 UP BND  X4  1
 UP BND  X5  1
 UP BND  X6  1
ENDATA
)";

// 2: covering problem, five binaries declared through BV.
const char* kCover5 = R"(NAME  cover5
ROWS
 N  COST
 G  C1
 G  C2
 G  C3
 G  C4
 G  C5
COLUMNS
    MARKER  'MARKER'  'INTORG'
    Y1  COST  1
    Y1  C1  1
    Y1  C4  1
    Y2  COST  1
    Y2  C1  1
    Y2  C2  1
    Y3  COST  1
    Y3  C2  1
    Y3  C5  1
    Y4  COST  1
    Y4  C2  1
    Y4  C3  1
    Y5  COST  1
    Y5  C3  1
    Y5  C4  1
    Y5  C5  1
    MARKER  'MARKER'  'INTEND'
RHS
    RHS  C1  1
    RHS  C2  1
    RHS  C3  1
    RHS  C4  1
    RHS  C5  1
BOUNDS
 BV BND  Y1
 BV BND  Y2
 BV BND  Y3
 BV BND  Y4
 BV BND  Y5
ENDATA
)";

// 3: three general integers plus two continuous variables.
const char* kMix32 = R"(NAME  mix32
ROWS
 N  OBJ
 G  DEM1
 G  DEM2
COLUMNS
    MARKER  'MARKER'  'INTORG'
    X1  OBJ  2
    X1  DEM1  1
    X2  OBJ  1
    X2  DEM1  1
    X2  DEM2  1
    X3  OBJ  3
    X3  DEM2  1
    MARKER  'MARKER'  'INTEND'
    Y1  OBJ  1.5
    Y1  DEM1  1
    Y2  OBJ  1
    Y2  DEM2  1
RHS
    RHS  DEM1  5
    RHS  DEM2  4
BOUNDS
 UP BND  X1  4
 UP BND  X2  4
 UP BND  X3  4
 UP BND  Y1  3
 UP BND  Y2  3
ENDATA
)";

// 4: equality row makes random genomes mostly infeasible.
const char* kEqMix = R"(NAME  eqmix
ROWS
 N  OBJ
 E  BAL
 L  DIFF
COLUMNS
    MARKER  'MARKER'  'INTORG'
    X1  OBJ  1
    X1  BAL  1
    X1  DIFF  1
    X2  OBJ  2
    X2  BAL  1
    X2  DIFF  -1
    MARKER  'MARKER'  'INTEND'
    Y1  OBJ  1
    Y1  BAL  1
RHS
    RHS  BAL  7
    RHS  DIFF  2
BOUNDS
 UP BND  X1  5
 UP BND  X2  5
 UP BND  Y1  4.5
ENDATA
)";

// 5: ranged row: 5 <= X1+X2+X3+X4 <= 7.
const char* kRange4 = R"(NAME  range4
ROWS
 N  OBJ
 L  BAND
 L  PAIR1
 L  PAIR2
COLUMNS
    MARKER  'MARKER'  'INTORG'
    X1  OBJ  -1
    X1  BAND  1
    X1  PAIR1  1
    X2  OBJ  -2
    X2  BAND  1
    X2  PAIR2  1
    X3  OBJ  -3
    X3  BAND  1
    X3  PAIR1  1
    X4  OBJ  -1
    X4  BAND  1
    X4  PAIR2  1
    MARKER  'MARKER'  'INTEND'
RHS
    RHS  BAND  7
    RHS  PAIR1  4
    RHS  PAIR2  4
RANGES
    RNG  BAND  2
BOUNDS
 UP BND  X1  3
 UP BND  X2  3
 UP BND  X3  3
 UP BND  X4  3
ENDATA
)";

// 6: negative integer bounds.
const char* kNegObj = R"(NAME  negobj
ROWS
 N  OBJ
 G  LOW
 L  GAP
 L  TOP
COLUMNS
    MARKER  'MARKER'  'INTORG'
    X1  OBJ  1
    X1  LOW  1
    X1  GAP  1
    X2  OBJ  -1
    X2  LOW  1
    X2  TOP  1
    MARKER  'MARKER'  'INTEND'
    Y1  OBJ  0.5
    Y1  GAP  -1
    Y1  TOP  1
RHS
    RHS  LOW  -3
    RHS  GAP  2
    RHS  TOP  6
BOUNDS
 LO BND  X1  -5
 UP BND  X1  5
 LO BND  X2  -5
 UP BND  X2  5
 UP BND  Y1  8
ENDATA
)";

// 7: objective constant through an RHS entry on the objective row.
const char* kConst7 = R"(NAME  const7
ROWS
 N  OBJ
 G  R1
 G  R2
COLUMNS
    MARKER  'MARKER'  'INTORG'
    X1  OBJ  1
    X1  R1  1
    X2  OBJ  1
    X2  R1  1
    X2  R2  1
    X3  OBJ  1
    X3  R2  1
    MARKER  'MARKER'  'INTEND'
RHS
    RHS  R1  4
    RHS  R2  5
    RHS  OBJ  -100
BOUNDS
 UI BND  X1  10
 UI BND  X2  10
 UI BND  X3  10
ENDATA
)";

// 8: knapsack with a continuous coupling variable forced off zero.
const char* kBigCoef = R"(NAME  bigcoef
ROWS
 N  OBJ
 L  CAP
 G  USE
COLUMNS
    MARKER  'MARKER'  'INTORG'
    X1  OBJ  -10
    X1  CAP  4
    X2  OBJ  -7
    X2  CAP  3
    X3  OBJ  -5
    X3  CAP  2
    X4  OBJ  -3
    X4  CAP  1
    X5  OBJ  -1
    X5  CAP  1
    MARKER  'MARKER'  'INTEND'
    Y1  OBJ  2
    Y1  CAP  1
    Y1  USE  1
RHS
    RHS  CAP  8
    RHS  USE  0.5
BOUNDS
 UP BND  X1  1
 UP BND  X2  1
 UP BND  X3  1
 UP BND  X4  1
 UP BND  X5  1
 UP BND  Y1  4
ENDATA
)";

// 9: eight binaries under two equality rows and a coupling cap.
const char* kTight8 = R"(NAME  tight8
ROWS
 N  OBJ
 E  GRP1
 E  GRP2
 L  MIXCAP
COLUMNS
    MARKER  'MARKER'  'INTORG'
    X1  OBJ  -1
    X1  GRP1  1
    X1  MIXCAP  1
    X2  OBJ  -2
    X2  GRP1  1
    X3  OBJ  -3
    X3  GRP1  1
    X3  MIXCAP  1
    X4  OBJ  -4
    X4  GRP1  1
    X5  OBJ  -5
    X5  GRP2  1
    X5  MIXCAP  1
    X6  OBJ  -6
    X6  GRP2  1
    X7  OBJ  -7
    X7  GRP2  1
    X7  MIXCAP  1
    X8  OBJ  -8
    X8  GRP2  1
    MARKER  'MARKER'  'INTEND'
RHS
    RHS  GRP1  2
    RHS  GRP2  2
    RHS  MIXCAP  2
BOUNDS
 BV BND  X1
 BV BND  X2
 BV BND  X3
 BV BND  X4
 BV BND  X5
 BV BND  X6
 BV BND  X7
 BV BND  X8
ENDATA
)";

// 10: OBJSENSE maximization file with a continuous tail.
const char* kMaxFile = R"(NAME  maxfile
OBJSENSE
    MAX
ROWS
 N  PROFIT
 L  RES1
 L  RES2
 G  MIN1
COLUMNS
    MARKER  'MARKER'  'INTORG'
    X1  PROFIT  2
    X1  RES1  1
    X1  MIN1  1
    X2  PROFIT  3
    X2  RES1  1
    X2  RES2  1
    X3  PROFIT  1
    X3  RES1  1
    X4  PROFIT  1
    X4  RES2  1
    X4  MIN1  1
    MARKER  'MARKER'  'INTEND'
    Y1  PROFIT  1
    Y1  RES2  1
RHS
    RHS  RES1  8
    RHS  RES2  7
    RHS  MIN1  2
BOUNDS
 UP BND  X1  6
 UP BND  X2  6
 UP BND  X3  6
 UP BND  X4  6
 UP BND  Y1  5
ENDATA
)";

// Optima in internal maximization form, frozen from the lattice oracle (the
// tests recompute them; see test_bnb and the acceptance suite).
const CraftedMip kInstances[] = {
    {"knap6", kKnap6, 15.0},   {"cover5", kCover5, -2.0},
    {"mix32", kMix32, -5.5},   {"eqmix", kEqMix, -8.0},
    {"range4", kRange4, 16.0}, {"negobj", kNegObj, 10.0},
    {"const7", kConst7, -105.0}, {"bigcoef", kBigCoef, 17.0},
    {"tight8", kTight8, 22.0}, {"maxfile", kMaxFile, 23.0},
};

}  // namespace

std::span<const CraftedMip> crafted_mips() { return kInstances; }

ProblemInstance load_crafted(const CraftedMip& crafted) {
  std::istringstream in(crafted.mps);
  return to_maximization(parse_mps(in));
}

}  // namespace nichemip::testing
