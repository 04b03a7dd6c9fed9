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

#ifndef NICHEMIP_HARNESS_HPP_
#define NICHEMIP_HARNESS_HPP_

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nichemip/niche.hpp"

namespace nichemip {

/// Expectation of LP solves until an event, or a lower bound on it when the
/// event never occurred in the experiment.
struct ExpectedLps {
  double value = 0.0;
  bool lower_bound = false;
};

enum class SuccessKind : char { feasible, optimal };

/// E[n] = sum over all runs of (event index, or the run's total LP count when
/// the event did not occur) divided by the number of successful runs; with
/// zero successes the plain sum is returned flagged as a lower bound.
ExpectedLps expected_lps(std::span<const RunRecord> records, SuccessKind kind);

struct CampaignStats {
  int runs = 0;
  int r_feasible = 0;
  int r_optimal = 0;
  bool optimum_known = false;
  ExpectedLps e_nf;
  ExpectedLps e_no;  // meaningful only when optimum_known
  bool truncated = false;
  std::vector<RunRecord> records;
};

/// Aggregates per-run records into campaign statistics.
CampaignStats stats_from_records(std::vector<RunRecord> records,
                                 bool optimum_known);

/// R independent runs with seeds base.rng_seed .. base.rng_seed + R - 1.
/// `optimum`, when supplied (internal maximization form), enables
/// first-optimal detection; matching uses a 1e-6 relative tolerance.
CampaignStats run_campaign(const ProblemInstance& p, SearchConfig base, int runs,
                           std::optional<double> optimum);

/// Improvement trace of one run: header `lp_index,kind,value`, one row per
/// incumbent improvement.  Byte-deterministic for a given record.
void write_trace_csv(std::ostream& out, const RunRecord& record);

/// Per-run campaign table: header
/// `run,seed,lps_total,n_f,n_o,best_kind,best_value,truncated`.
void write_campaign_csv(std::ostream& out, const CampaignStats& stats);

/// Re-ingests a campaign CSV into records (genomes and traces are not part
/// of the file); stats_from_records on the result reproduces the stats.
std::vector<RunRecord> read_campaign_csv(std::istream& in);

/// Known-optimum manifest: lines of `<instance-name> <optimum>`, '#' starts
/// a comment.  Values are in internal maximization form.
std::map<std::string, double> read_optima_manifest(std::istream& in);

/// Plain-text report of a campaign (per-run table plus the summary row).
void print_campaign_report(std::ostream& out, const std::string& instance_name,
                           const CampaignStats& stats);

}  // namespace nichemip

#endif  // NICHEMIP_HARNESS_HPP_
