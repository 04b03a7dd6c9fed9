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

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "nichemip/bnb.hpp"
#include "nichemip/harness.hpp"
#include "nichemip/mps.hpp"
#include "nichemip/niche.hpp"

namespace {

using namespace nichemip;

constexpr int kExitOk = 0;
constexpr int kExitParseError = 2;
constexpr int kExitTruncated = 3;

struct InputOptions {
  std::string file;
  bool integer_default_binary = false;
};

void add_input(CLI::App* cmd, InputOptions& input) {
  cmd->add_option("file", input.file, "MPS file path, or - for standard input")
      ->required();
  cmd->add_flag("--int-default-binary", input.integer_default_binary,
                "give marker-declared integer columns without explicit "
                "bounds the range [0,1] instead of [0,+inf)");
}

ProblemInstance load(const InputOptions& input) {
  MpsOptions options;
  options.integer_default_binary = input.integer_default_binary;
  return parse_mps_file(input.file, options);
}

struct SearchOptions {
  SearchConfig config;
  std::string rounding = "printed";
  std::string out_csv;
  std::optional<double> optimum;
};

void add_search(CLI::App* cmd, SearchOptions& search) {
  cmd->add_option("--niches", search.config.n_niches, "number of niches");
  cmd->add_option("--pop", search.config.pop_per_niche,
                  "individuals per niche");
  cmd->add_option("--generations", search.config.n_generations,
                  "niche generations");
  cmd->add_option("--seed", search.config.rng_seed, "random seed");
  cmd->add_option("--lp-budget", search.config.lp_budget,
                  "stop after this many LP solutions (0 = unlimited)");
  cmd->add_option("--patience", search.config.stagnation_patience,
                  "subgenerations without improvement before a niche stops "
                  "breeding");
  cmd->add_option("--rounding-convention", search.rounding,
                  "initialization rounding: printed | complement")
      ->check(CLI::IsMember({"printed", "complement"}));
  cmd->add_option("--optimum", search.optimum,
                  "known optimum in maximization form, enables n_o detection");
  cmd->add_option("--out", search.out_csv, "write a CSV to this path");
}

SearchConfig finish_search(const SearchOptions& search) {
  SearchConfig cfg = search.config;
  cfg.rounding = search.rounding == "complement"
                     ? RoundingConvention::complement
                     : RoundingConvention::printed;
  cfg.optimum = search.optimum;
  return cfg;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  return out;
}

void print_fitness(std::ostream& out, const ProblemInstance& p,
                   const Fitness& fitness) {
  if (fitness.kind == FitnessKind::feasible) {
    out << "feasible, objective " << fitness.value;
    if (p.sense_flag == ObjectiveSense::minimize)
      out << " (minimization form " << original_objective(p, fitness.value)
          << ")";
  } else {
    out << "infeasible, violation sum " << fitness.value;
  }
}

int run_parse(const InputOptions& input) {
  const ProblemInstance p = load(input);
  std::cout << instance_summary(p);
  return kExitOk;
}

int run_dump(const InputOptions& input) {
  write_mps(load(input), std::cout);
  return kExitOk;
}

int run_lp(const InputOptions& input, bool trace, long iterations) {
  const ProblemInstance p = to_maximization(load(input));
  SimplexOptions options;
  options.iteration_limit = iterations;
  if (trace)
    options.trace = [](const std::string& line) {
      std::cout << line << '\n';
    };
  const LpSolution sol = solve_lp(lp_relaxation(p), options);
  std::cout << "relaxation status: " << to_string(sol.status) << '\n';
  if (sol.status == LpStatus::optimal) {
    std::cout << "objective: " << sol.objective;
    if (p.sense_flag == ObjectiveSense::minimize)
      std::cout << " (minimization form " << original_objective(p, sol.objective)
                << ")";
    std::cout << "\niterations: " << sol.iterations << '\n';
  }
  return kExitOk;
}

int run_solve(const InputOptions& input, const SearchOptions& search) {
  const ProblemInstance p = to_maximization(load(input));
  const SearchConfig cfg = finish_search(search);
  const RunRecord record = run(p, cfg);

  std::cout << "instance: " << p.name << "\n";
  std::cout << "lps solved: " << record.lps_total
            << (record.truncated ? " (budget truncated)" : "") << '\n';
  if (record.degraded_evaluations > 0)
    std::cout << "degraded evaluations (pivot budget or unbounded residual): "
              << record.degraded_evaluations << '\n';
  std::cout << "first feasible at LP: "
            << (record.first_feasible_lp
                    ? std::to_string(*record.first_feasible_lp)
                    : std::string("-"))
            << '\n';
  if (cfg.optimum)
    std::cout << "first optimal at LP: "
              << (record.first_optimal_lp
                      ? std::to_string(*record.first_optimal_lp)
                      : std::string("-"))
              << '\n';
  std::cout << "best: ";
  print_fitness(std::cout, p, record.best_fitness);
  std::cout << "\ngenome:";
  for (const std::int64_t gene : record.best_genome) std::cout << ' ' << gene;
  std::cout << '\n';

  if (!search.out_csv.empty()) {
    std::ofstream out = open_out(search.out_csv);
    write_trace_csv(out, record);
  }
  return kExitOk;
}

int run_bnb(const InputOptions& input, std::uint64_t lp_cap, bool ceil_first) {
  const ProblemInstance p = to_maximization(load(input));
  BnbOptions options;
  options.lp_cap = lp_cap;
  options.ceil_first = ceil_first;
  const BnbResult result = solve_bnb(p, options);

  std::cout << "instance: " << p.name << '\n';
  std::cout << "status: " << to_string(result.status) << '\n';
  std::cout << "lps solved: " << result.lps_solved << '\n';
  if (result.best_objective) {
    std::cout << "objective: " << original_objective(p, *result.best_objective);
    if (p.sense_flag == ObjectiveSense::minimize)
      std::cout << " (maximization form " << *result.best_objective << ")";
    std::cout << "\ngenome:";
    for (const std::int64_t gene : *result.best_genome)
      std::cout << ' ' << gene;
    std::cout << '\n';
  }
  return kExitOk;
}

int run_campaign_cmd(const InputOptions& input, const SearchOptions& search,
                     int runs, const std::string& manifest_path) {
  const ProblemInstance p = to_maximization(load(input));
  std::optional<double> optimum = search.optimum;
  if (!optimum && !manifest_path.empty()) {
    std::ifstream manifest(manifest_path);
    if (!manifest)
      throw std::runtime_error("cannot open '" + manifest_path + "'");
    const auto optima = read_optima_manifest(manifest);
    if (const auto it = optima.find(p.name); it != optima.end())
      optimum = it->second;
    else
      std::cerr << "warning: no optimum for '" << p.name
                << "' in the manifest\n";
  }

  const SearchConfig cfg = finish_search(search);
  const CampaignStats stats = run_campaign(p, cfg, runs, optimum);
  print_campaign_report(std::cout, p.name, stats);
  if (p.sense_flag == ObjectiveSense::minimize)
    std::cout << "(values are in maximization form; negate for the original "
                 "minimization)\n";

  if (!search.out_csv.empty()) {
    std::ofstream out = open_out(search.out_csv);
    write_campaign_csv(out, stats);
  }
  return stats.truncated ? kExitTruncated : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "nichemip: a mixed-integer programming toolkit pairing an evolutionary "
      "niche search (integer variables evolved, continuous part resolved by "
      "an embedded simplex) with a depth-first branch-and-bound baseline"};
  app.require_subcommand(1);

  InputOptions input;

  auto* parse_cmd =
      app.add_subcommand("parse", "read an MPS file and print its shape");
  add_input(parse_cmd, input);

  auto* dump_cmd = app.add_subcommand(
      "dump-mps", "re-serialize the parsed instance as canonical MPS");
  add_input(dump_cmd, input);

  auto* lp_cmd = app.add_subcommand(
      "lp", "solve the LP relaxation (debug; --trace prints pivots)");
  add_input(lp_cmd, input);
  bool lp_trace = false;
  long lp_iterations = 20000;
  lp_cmd->add_flag("--trace", lp_trace, "print one line per simplex pivot");
  lp_cmd->add_option("--iterations", lp_iterations, "pivot budget");

  auto* solve_cmd =
      app.add_subcommand("solve", "run the evolutionary niche search");
  add_input(solve_cmd, input);
  SearchOptions search;
  add_search(solve_cmd, search);

  auto* bnb_cmd =
      app.add_subcommand("bnb", "run the branch-and-bound baseline");
  add_input(bnb_cmd, input);
  std::uint64_t lp_cap = 50'000'000;
  bool ceil_first = false;
  bnb_cmd->add_option("--lp-cap", lp_cap, "maximum LP solutions");
  bnb_cmd->add_flag("--ceil-first", ceil_first,
                    "explore the ceiling child before the floor child");

  auto* campaign_cmd = app.add_subcommand(
      "campaign", "multiple independent searches with statistics");
  add_input(campaign_cmd, input);
  add_search(campaign_cmd, search);
  int runs = 25;
  std::string manifest_path;
  campaign_cmd->add_option("--runs", runs, "number of independent runs");
  campaign_cmd->add_option("--optima", manifest_path,
                           "manifest file of `name optimum` pairs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (parse_cmd->parsed()) return run_parse(input);
    if (dump_cmd->parsed()) return run_dump(input);
    if (lp_cmd->parsed()) return run_lp(input, lp_trace, lp_iterations);
    if (solve_cmd->parsed()) return run_solve(input, search);
    if (bnb_cmd->parsed()) return run_bnb(input, lp_cap, ceil_first);
    if (campaign_cmd->parsed())
      return run_campaign_cmd(input, search, runs, manifest_path);
  } catch (const MpsParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitParseError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParseError;
  }
  return kExitOk;
}
