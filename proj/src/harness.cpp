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

#include "nichemip/harness.hpp"

#include <cstdlib>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "double_format.hpp"

namespace nichemip {

ExpectedLps expected_lps(std::span<const RunRecord> records,
                         SuccessKind kind) {
  double sum = 0.0;
  int successes = 0;
  for (const RunRecord& record : records) {
    const std::optional<std::uint64_t>& index =
        kind == SuccessKind::feasible ? record.first_feasible_lp
                                      : record.first_optimal_lp;
    if (index) {
      sum += static_cast<double>(*index);
      ++successes;
    } else {
      sum += static_cast<double>(record.lps_total);
    }
  }
  if (successes == 0) return {sum, true};
  return {sum / successes, false};
}

CampaignStats stats_from_records(std::vector<RunRecord> records,
                                 bool optimum_known) {
  CampaignStats stats;
  stats.runs = static_cast<int>(records.size());
  stats.optimum_known = optimum_known;
  for (const RunRecord& record : records) {
    if (record.first_feasible_lp) ++stats.r_feasible;
    if (record.first_optimal_lp) ++stats.r_optimal;
    stats.truncated |= record.truncated;
  }
  stats.e_nf = expected_lps(records, SuccessKind::feasible);
  stats.e_no = expected_lps(records, SuccessKind::optimal);
  stats.records = std::move(records);
  return stats;
}

CampaignStats run_campaign(const ProblemInstance& p, SearchConfig base,
                           int runs, std::optional<double> optimum) {
  if (runs < 1) throw std::invalid_argument("campaign needs at least one run");
  base.optimum = optimum;
  std::vector<RunRecord> records;
  records.reserve(runs);
  const std::uint64_t seed0 = base.rng_seed;
  for (int i = 0; i < runs; ++i) {
    base.rng_seed = seed0 + static_cast<std::uint64_t>(i);
    records.push_back(run(p, base));
  }
  return stats_from_records(std::move(records), optimum.has_value());
}

namespace {

const char* kind_name(FitnessKind kind) {
  return kind == FitnessKind::feasible ? "feasible" : "infeasible";
}

}  // namespace

void write_trace_csv(std::ostream& out, const RunRecord& record) {
  out << "lp_index,kind,value\n";
  for (const TraceEvent& event : record.trace)
    out << event.lp_index << ',' << kind_name(event.fitness.kind) << ','
        << format_double(event.fitness.value) << '\n';
}

void write_campaign_csv(std::ostream& out, const CampaignStats& stats) {
  out << "run,seed,lps_total,n_f,n_o,best_kind,best_value,truncated\n";
  for (std::size_t i = 0; i < stats.records.size(); ++i) {
    const RunRecord& r = stats.records[i];
    out << i + 1 << ',' << r.seed << ',' << r.lps_total << ',';
    if (r.first_feasible_lp) out << *r.first_feasible_lp;
    out << ',';
    if (r.first_optimal_lp) out << *r.first_optimal_lp;
    out << ',' << kind_name(r.best_fitness.kind) << ','
        << format_double(r.best_fitness.value) << ','
        << (r.truncated ? 1 : 0) << '\n';
  }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else {
      field += c;
    }
  }
  fields.push_back(field);
  return fields;
}

std::uint64_t parse_u64(const std::string& s) {
  return std::strtoull(s.c_str(), nullptr, 10);
}

}  // namespace

std::vector<RunRecord> read_campaign_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) ||
      line != "run,seed,lps_total,n_f,n_o,best_kind,best_value,truncated")
    throw std::runtime_error("campaign CSV header mismatch");

  std::vector<RunRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = split_csv_line(line);
    if (f.size() != 8) throw std::runtime_error("campaign CSV row malformed");
    RunRecord r;
    r.seed = parse_u64(f[1]);
    r.lps_total = parse_u64(f[2]);
    if (!f[3].empty()) r.first_feasible_lp = parse_u64(f[3]);
    if (!f[4].empty()) r.first_optimal_lp = parse_u64(f[4]);
    r.best_fitness.kind = f[5] == "feasible" ? FitnessKind::feasible
                                             : FitnessKind::infeasible;
    r.best_fitness.value = std::strtod(f[6].c_str(), nullptr);
    r.truncated = f[7] == "1";
    records.push_back(std::move(r));
  }
  return records;
}

std::map<std::string, double> read_optima_manifest(std::istream& in) {
  std::map<std::string, double> optima;
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string name;
    double value;
    if (fields >> name >> value) optima[name] = value;
  }
  return optima;
}

namespace {

std::string expectation_text(const ExpectedLps& e, bool defined) {
  if (!defined) return "-";
  std::ostringstream out;
  if (e.lower_bound) out << "> ";
  out << std::fixed << std::setprecision(1) << e.value;
  if (e.lower_bound) out << " (lower bound)";
  return out.str();
}

}  // namespace

void print_campaign_report(std::ostream& out, const std::string& instance_name,
                           const CampaignStats& stats) {
  out << "campaign: " << instance_name << " (" << stats.runs << " runs)\n";
  out << std::left << std::setw(5) << "run" << std::setw(12) << "seed"
      << std::setw(12) << "lps" << std::setw(10) << "n_f" << std::setw(10)
      << "n_o" << "best\n";
  for (std::size_t i = 0; i < stats.records.size(); ++i) {
    const RunRecord& r = stats.records[i];
    out << std::left << std::setw(5) << i + 1 << std::setw(12) << r.seed
        << std::setw(12) << r.lps_total << std::setw(10)
        << (r.first_feasible_lp ? std::to_string(*r.first_feasible_lp) : "-")
        << std::setw(10)
        << (r.first_optimal_lp ? std::to_string(*r.first_optimal_lp) : "-")
        << kind_name(r.best_fitness.kind) << ' '
        << format_double(r.best_fitness.value)
        << (r.truncated ? "  [truncated]" : "") << '\n';
  }
  out << "feasible runs: " << stats.r_feasible << '/' << stats.runs
      << "   optimal runs: "
      << (stats.optimum_known ? std::to_string(stats.r_optimal) : "-") << '/'
      << stats.runs << '\n';
  out << "E[n_f] = " << expectation_text(stats.e_nf, true)
      << "   E[n_o] = " << expectation_text(stats.e_no, stats.optimum_known)
      << '\n';
}

}  // namespace nichemip
