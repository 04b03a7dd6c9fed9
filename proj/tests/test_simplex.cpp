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
#include <cmath>
#include <cstring>

#include "doctest.h"
#include "nichemip/simplex.hpp"
#include "support/oracle.hpp"
#include "support/random_lp.hpp"

using namespace nichemip;
using nichemip::testing::OracleStatus;
using nichemip::testing::oracle_min_violation;
using nichemip::testing::oracle_solve_lp;
using nichemip::testing::random_lp;

namespace {

ResidualLp single_row(RowSense sense, double rhs, double coef = 1.0,
                      Bounds bounds = {0.0, kInfinity}, double obj = 1.0) {
  ResidualLp lp;
  lp.objective = {obj};
  lp.matrix = SparseMatrix::from_dense(1, 1, std::vector<double>{coef});
  lp.rhs_shifted = {rhs};
  lp.senses = {sense};
  lp.ranges.resize(1);
  lp.bounds = {bounds};
  return lp;
}

}  // namespace

TEST_CASE("max y subject to y<=3 gives 3") {
  const LpSolution sol = solve_lp(single_row(RowSense::le, 3.0));
  REQUIRE(sol.status == LpStatus::optimal);
  CHECK(sol.objective == doctest::Approx(3.0));
  CHECK(sol.primal_values[0] == doctest::Approx(3.0));
}

TEST_CASE("y<=-1 with y>=0 is infeasible") {
  const LpSolution sol = solve_lp(single_row(RowSense::le, -1.0));
  CHECK(sol.status == LpStatus::infeasible);
}

TEST_CASE("max y with no blocking row is unbounded") {
  ResidualLp lp = single_row(RowSense::ge, 0.0);
  const LpSolution sol = solve_lp(lp);
  CHECK(sol.status == LpStatus::unbounded);
}

TEST_CASE("bounded variables solve through bound flips") {
  // max -y with y in [2,5] and a slack row that never binds.
  ResidualLp lp = single_row(RowSense::le, 100.0, 1.0, {2.0, 5.0}, -1.0);
  const LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::optimal);
  CHECK(sol.objective == doctest::Approx(-2.0));
  CHECK(sol.primal_values[0] == doctest::Approx(2.0));
}

TEST_CASE("constant terms flow into the reported objective") {
  ResidualLp lp = single_row(RowSense::le, 3.0);
  lp.constant_term = 10.0;
  lp.objective_constant = 2.5;
  const LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::optimal);
  CHECK(sol.objective == doctest::Approx(15.5));
}

TEST_CASE("phase I: feasible problems report zeta 0") {
  const Phase1Result r = phase1(single_row(RowSense::le, 3.0));
  CHECK(r.zeta == doctest::Approx(0.0));
  CHECK(r.artificials == std::vector<double>{0.0});
}

TEST_CASE("phase I: y<=-2 with y>=0 leaves an artificial of 2") {
  const Phase1Result r = phase1(single_row(RowSense::le, -2.0));
  CHECK(r.zeta == doctest::Approx(2.0));
  REQUIRE(r.artificials.size() == 1);
  CHECK(r.artificials[0] == doctest::Approx(2.0));
}

TEST_CASE("zero-variable LPs are decided by inspection") {
  ResidualLp lp;
  lp.rhs_shifted = {1.0, -2.0};
  lp.senses = {RowSense::ge, RowSense::le};
  lp.ranges.resize(2);
  lp.constant_term = 7.0;

  SUBCASE("infeasible when a shifted row excludes zero") {
    const LpSolution sol = solve_lp(lp);
    CHECK(sol.status == LpStatus::infeasible);
    SimplexSolver solver;
    (void)solver.solve(lp);
    CHECK(solver.last_phase1().zeta == doctest::Approx(3.0));  // 1 + 2
  }
  SUBCASE("feasible once the intervals include zero") {
    lp.rhs_shifted = {-1.0, 2.0};
    const LpSolution sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::optimal);
    CHECK(sol.objective == doctest::Approx(7.0));
    CHECK(sol.iterations == 0);
  }
}

TEST_CASE("random LPs match the vertex enumeration oracle") {
  Rng rng(7001);
  int optimal = 0, infeasible = 0, unbounded = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const ResidualLp lp = random_lp(rng);
    const auto expected = oracle_solve_lp(lp);
    const LpSolution got = solve_lp(lp);
    CAPTURE(trial);
    switch (expected.status) {
      case OracleStatus::optimal:
        ++optimal;
        REQUIRE(got.status == LpStatus::optimal);
        CHECK(got.objective == doctest::Approx(expected.objective).epsilon(1e-6));
        break;
      case OracleStatus::infeasible:
        ++infeasible;
        CHECK(got.status == LpStatus::infeasible);
        break;
      case OracleStatus::unbounded:
        ++unbounded;
        CHECK(got.status == LpStatus::unbounded);
        break;
    }
  }
  // The corpus should exercise every outcome.
  CHECK(optimal > 10);
  CHECK(infeasible > 3);
  CHECK(unbounded > 0);
}

TEST_CASE("phase I value matches the violation-minimization oracle") {
  Rng rng(7002);
  int infeasible_cases = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const ResidualLp lp = random_lp(rng, 4, 5);
    const double expected = oracle_min_violation(lp);
    const Phase1Result got = phase1(lp);
    CAPTURE(trial);
    CHECK(got.zeta == doctest::Approx(expected).epsilon(1e-6));
    double sum = 0.0;
    for (double a : got.artificials) {
      CHECK(a >= -1e-9);
      sum += a;
    }
    CHECK(sum == doctest::Approx(got.zeta).epsilon(1e-9));
    if (expected > 1e-7) ++infeasible_cases;
  }
  CHECK(infeasible_cases > 5);
}

TEST_CASE("relaxing one <= row never increases zeta") {
  Rng rng(7003);
  for (int trial = 0; trial < 30; ++trial) {
    ResidualLp lp = random_lp(rng, 4, 5);
    const double base = phase1(lp).zeta;
    for (int i = 0; i < lp.num_rows(); ++i) {
      if (lp.senses[i] != RowSense::le || lp.ranges[i]) continue;
      ResidualLp relaxed = lp;
      relaxed.rhs_shifted[i] += 1.0;
      CHECK(phase1(relaxed).zeta <= base + 1e-7);
    }
  }
}

TEST_CASE("weak duality spot check on <= rows") {
  Rng rng(7004);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    ResidualLp lp = random_lp(rng, 4, 4);
    // Keep only <= rows and finite boxes so feasible points are easy to draw.
    for (int i = 0; i < lp.num_rows(); ++i) {
      lp.senses[i] = RowSense::le;
      lp.ranges[i].reset();
    }
    for (auto& b : lp.bounds)
      if (std::isinf(b.upper)) b.upper = 9.0;
    const LpSolution sol = solve_lp(lp);
    if (sol.status != LpStatus::optimal) continue;

    for (int sample = 0; sample < 50; ++sample) {
      std::vector<double> x(lp.num_vars());
      for (int j = 0; j < lp.num_vars(); ++j)
        x[j] = rng.uniform(lp.bounds[j].lower, lp.bounds[j].upper);
      bool feasible = true;
      for (int i = 0; i < lp.num_rows() && feasible; ++i) {
        double act = 0.0;
        for (int j = 0; j < lp.num_vars(); ++j) act += lp.matrix.at(i, j) * x[j];
        feasible = act <= lp.rhs_shifted[i];
      }
      if (!feasible) continue;
      ++checked;
      double z = lp.constant_term;
      for (int j = 0; j < lp.num_vars(); ++j) z += lp.objective[j] * x[j];
      CHECK(z <= sol.objective + 1e-7);
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("identical inputs give identical pivot sequences and bits") {
  Rng rng(7005);
  for (int trial = 0; trial < 10; ++trial) {
    const ResidualLp lp = random_lp(rng);
    const LpSolution a = solve_lp(lp);
    const LpSolution b = solve_lp(lp);
    CHECK(a.status == b.status);
    CHECK(a.iterations == b.iterations);
    if (a.status == LpStatus::optimal) {
      CHECK(std::memcmp(&a.objective, &b.objective, sizeof(double)) == 0);
      REQUIRE(a.primal_values.size() == b.primal_values.size());
      CHECK(std::memcmp(a.primal_values.data(), b.primal_values.data(),
                        a.primal_values.size() * sizeof(double)) == 0);
    }
  }
}

TEST_CASE("classic degenerate cycling example terminates") {
  // Beale's example: pure Dantzig pricing cycles on it; the stall detector
  // must hand over to Bland's rule and finish at the known optimum.
  ResidualLp lp;
  lp.objective = {0.75, -150.0, 0.02, -6.0};
  lp.matrix = SparseMatrix::from_dense(
      3, 4,
      std::vector<double>{0.25, -60.0, -0.04, 9.0,   //
                          0.5, -90.0, -0.02, 3.0,    //
                          0.0, 0.0, 1.0, 0.0});
  lp.rhs_shifted = {0.0, 0.0, 1.0};
  lp.senses = {RowSense::le, RowSense::le, RowSense::le};
  lp.ranges.resize(3);
  lp.bounds.assign(4, {0.0, kInfinity});

  const LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::optimal);
  const auto expected = oracle_solve_lp(lp);
  REQUIRE(expected.status == OracleStatus::optimal);
  CHECK(sol.objective == doctest::Approx(expected.objective).epsilon(1e-9));
  CHECK(sol.objective == doctest::Approx(0.05));
}

TEST_CASE("iteration budget reports separately from the objective") {
  Rng rng(7006);
  SimplexOptions tight;
  tight.iteration_limit = 1;
  int limited = 0;
  for (int trial = 0; trial < 40 && limited < 5; ++trial) {
    const ResidualLp lp = random_lp(rng);
    const LpSolution full = solve_lp(lp);
    if (full.status != LpStatus::optimal || full.iterations < 3) continue;
    const LpSolution cut = solve_lp(lp, tight);
    REQUIRE(cut.status == LpStatus::iteration_limit);
    if (cut.incumbent_objective)
      CHECK(*cut.incumbent_objective <= full.objective + 1e-7);
    ++limited;
  }
  CHECK(limited == 5);
}

TEST_CASE("equality rows and ranges are honored") {
  // max x + y with x + y = 4, 1 <= x - y <= 3 (range), x,y >= 0.
  ResidualLp lp;
  lp.objective = {1.0, 1.0};
  lp.matrix = SparseMatrix::from_dense(2, 2, std::vector<double>{1, 1, 1, -1});
  lp.rhs_shifted = {4.0, 3.0};
  lp.senses = {RowSense::eq, RowSense::le};
  lp.ranges = {std::nullopt, 2.0};  // x - y in [1, 3]
  lp.bounds.assign(2, {0.0, kInfinity});
  const LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::optimal);
  CHECK(sol.objective == doctest::Approx(4.0));
  const double diff = sol.primal_values[0] - sol.primal_values[1];
  CHECK(diff >= 1.0 - 1e-7);
  CHECK(diff <= 3.0 + 1e-7);
}

TEST_CASE("pivot trace hook fires when enabled") {
  SimplexOptions options;
  int lines = 0;
  options.trace = [&](const std::string&) { ++lines; };
  const LpSolution sol = solve_lp(single_row(RowSense::le, 3.0), options);
  REQUIRE(sol.status == LpStatus::optimal);
  CHECK(lines == sol.iterations);
}
