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

#ifndef NICHEMIP_TESTS_SUPPORT_RANDOM_LP_HPP_
#define NICHEMIP_TESTS_SUPPORT_RANDOM_LP_HPP_

#include <utility>
#include <vector>

#include "nichemip/model.hpp"
#include "nichemip/rng.hpp"

namespace nichemip::testing {

// Small random LPs with integer data, mixed senses, occasional ranges and a
// mix of finite/infinite bounds.  Coefficients stay small so the enumeration
// oracle's artificial box can always tell a finite optimum from an unbounded
// ray.
inline ResidualLp random_lp(Rng& rng, int max_vars = 5, int max_rows = 6) {
  const int n = static_cast<int>(rng.uniform_int(1, max_vars));
  const int m = static_cast<int>(rng.uniform_int(1, max_rows));

  ResidualLp lp;
  lp.objective.resize(n);
  for (double& c : lp.objective) c = static_cast<double>(rng.uniform_int(-5, 5));

  std::vector<double> dense(static_cast<std::size_t>(m) * n, 0.0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (rng.uniform() < 0.8)
        dense[static_cast<std::size_t>(i) * n + j] =
            static_cast<double>(rng.uniform_int(-5, 5));
  lp.matrix = SparseMatrix::from_dense(m, n, dense);

  lp.rhs_shifted.resize(m);
  lp.senses.resize(m);
  lp.ranges.resize(m);
  for (int i = 0; i < m; ++i) {
    lp.rhs_shifted[i] = static_cast<double>(rng.uniform_int(-10, 10));
    const double pick = rng.uniform();
    if (pick < 0.45)
      lp.senses[i] = RowSense::le;
    else if (pick < 0.85)
      lp.senses[i] = RowSense::ge;
    else
      lp.senses[i] = RowSense::eq;
    if (lp.senses[i] != RowSense::eq && rng.uniform() < 0.15)
      lp.ranges[i] = static_cast<double>(rng.uniform_int(1, 6));
  }

  lp.bounds.resize(n);
  for (int j = 0; j < n; ++j) {
    const double pick = rng.uniform();
    if (pick < 0.55) {
      lp.bounds[j] = {0.0, static_cast<double>(rng.uniform_int(1, 9))};
    } else if (pick < 0.75) {
      const double lo = static_cast<double>(rng.uniform_int(-6, 0));
      lp.bounds[j] = {lo, lo + static_cast<double>(rng.uniform_int(1, 10))};
    } else if (pick < 0.92) {
      lp.bounds[j] = {0.0, kInfinity};
    } else {
      lp.bounds[j] = {-kInfinity, kInfinity};
    }
  }
  lp.constant_term = static_cast<double>(rng.uniform_int(-3, 3));
  return lp;
}

}  // namespace nichemip::testing

#endif  // NICHEMIP_TESTS_SUPPORT_RANDOM_LP_HPP_
