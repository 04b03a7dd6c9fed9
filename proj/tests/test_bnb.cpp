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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>

#include "doctest.h"
#include "nichemip/bnb.hpp"
#include "nichemip/mps.hpp"
#include "nichemip/simplex.hpp"
#include "support/crafted.hpp"
#include "support/oracle.hpp"

using namespace nichemip;
using nichemip::testing::crafted_mips;
using nichemip::testing::load_crafted;
using nichemip::testing::oracle_solve_mip;

namespace {

ProblemInstance parse_max(const char* text) {
  std::istringstream in(text);
  return to_maximization(parse_mps(in));
}

}  // namespace

TEST_CASE("integral relaxation solves in a single LP") {
  const char* doc = R"(NAME  easy
ROWS
 N  OBJ
 L  R1
COLUMNS
    MARKER  'MARKER'  'INTORG'
    X  OBJ  -1
    X  R1  1
    MARKER  'MARKER'  'INTEND'
RHS
    RHS  R1  3
ENDATA
)";
  const BnbResult result = solve_bnb(parse_max(doc));
  REQUIRE(result.status == BnbStatus::optimal);
  CHECK(result.best_objective == doctest::Approx(3.0));
  CHECK(result.best_genome == Genome{3});
  CHECK(result.lps_solved == 1);
}

TEST_CASE("infeasible instances are reported as such") {
  const char* doc = R"(NAME  empty
ROWS
 N  OBJ
 L  R1
 G  R2
COLUMNS
    MARKER  'MARKER'  'INTORG'
    X  OBJ  -1
    X  R1  1
    X  R2  1
    MARKER  'MARKER'  'INTEND'
RHS
    RHS  R1  2
    RHS  R2  5
ENDATA
)";
  const BnbResult result = solve_bnb(parse_max(doc));
  CHECK(result.status == BnbStatus::infeasible);
  CHECK_FALSE(result.best_objective.has_value());
}

TEST_CASE("branch and bound matches the lattice oracle on the crafted corpus") {
  for (const auto& crafted : crafted_mips()) {
    const ProblemInstance p = load_crafted(crafted);
    const BnbResult result = solve_bnb(p);
    const auto expected = oracle_solve_mip(p);
    CAPTURE(crafted.name);
    REQUIRE(result.status == BnbStatus::optimal);
    REQUIRE(expected.feasible);
    CHECK(result.best_objective ==
          doctest::Approx(expected.objective).epsilon(1e-9));
    CHECK(*result.best_objective ==
          doctest::Approx(crafted.optimum).epsilon(1e-9));
  }
}

TEST_CASE("the incumbent never exceeds the root relaxation bound") {
  for (const auto& crafted : crafted_mips()) {
    const ProblemInstance p = load_crafted(crafted);
    const LpSolution root = solve_lp(lp_relaxation(p));
    REQUIRE(root.status == LpStatus::optimal);
    const BnbResult result = solve_bnb(p);
    REQUIRE(result.status == BnbStatus::optimal);
    CHECK(*result.best_objective <= root.objective + 1e-7);
  }
}

TEST_CASE("the returned genome is feasible and integral") {
  for (const auto& crafted : crafted_mips()) {
    const ProblemInstance p = load_crafted(crafted);
    const BnbResult result = solve_bnb(p);
    REQUIRE(result.status == BnbStatus::optimal);
    REQUIRE(result.best_genome.has_value());
    // fix_integers validates the bounds; the residual must be feasible and
    // reproduce the reported objective.
    const ResidualLp residual = fix_integers(p, *result.best_genome);
    const LpSolution sol = solve_lp(residual);
    REQUIRE(sol.status == LpStatus::optimal);
    CHECK(sol.objective == doctest::Approx(*result.best_objective).epsilon(1e-7));
  }
}

TEST_CASE("LP cap turns into budget-exhausted with the incumbent kept") {
  const ProblemInstance p = load_crafted(crafted_mips()[0]);  // knap6: 11 LPs
  BnbOptions options;
  options.lp_cap = 3;
  const BnbResult result = solve_bnb(p, options);
  CHECK(result.status == BnbStatus::budget_exhausted);
  CHECK(result.lps_solved <= 3);
}

TEST_CASE("ceil-first ordering explores the other child first but agrees") {
  const ProblemInstance p = load_crafted(crafted_mips()[0]);
  BnbOptions ceil_first;
  ceil_first.ceil_first = true;
  const BnbResult a = solve_bnb(p);
  const BnbResult b = solve_bnb(p, ceil_first);
  REQUIRE(a.status == BnbStatus::optimal);
  REQUIRE(b.status == BnbStatus::optimal);
  CHECK(*a.best_objective == doctest::Approx(*b.best_objective));
}

TEST_CASE("lps_solved never exceeds the cap") {
  for (std::uint64_t cap : {1ull, 2ull, 5ull, 50ull}) {
    BnbOptions options;
    options.lp_cap = cap;
    const BnbResult result =
        solve_bnb(load_crafted(crafted_mips()[4]), options);
    CHECK(result.lps_solved <= cap);
  }
}
