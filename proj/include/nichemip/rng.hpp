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

#ifndef NICHEMIP_RNG_HPP_
#define NICHEMIP_RNG_HPP_

#include <cstdint>
#include <random>

namespace nichemip {

/// Seedable random stream used for every stochastic decision in the solver.
///
/// All draws go through this class instead of <random> distributions, because
/// the standard distributions are implementation-defined and would break
/// bit-for-bit reproducibility across standard libraries.  mt19937_64 itself
/// is specified exactly, so two runs with the same seed produce the same
/// sequence everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform double in [0, 1), 53 significant bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi], both ends inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    if (lo >= hi) return lo;
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next_u64() % span);
  }

  /// True with probability p.
  bool chance(double p) { return uniform() < p; }

  /// Independent child stream, e.g. one per niche when breeding concurrently.
  Rng split() { return Rng(next_u64() ^ 0x9e3779b97f4a7c15ULL); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace nichemip

#endif  // NICHEMIP_RNG_HPP_
