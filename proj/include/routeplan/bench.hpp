#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "routeplan/cost.hpp"
#include "routeplan/ga.hpp"
#include "routeplan/graph.hpp"
#include "routeplan/pso.hpp"
#include "routeplan/solver.hpp"

namespace routeplan {

enum class Algorithm { ga, pso };

std::string_view to_string(Algorithm a);  // "GA" / "PSO"
/// Accepts ga/GA/pso/PSO; throws InvalidParameter otherwise.
Algorithm parse_algorithm(std::string_view text);

struct RunRecord {
  Algorithm algorithm = Algorithm::ga;
  std::uint64_t seed = 0;
  double cpu_time_s = 0.0;
  double best_cost = 0.0;
  double t_available_s = 0.0;
  double t_route_s = 0.0;
  double total_distance_m = 0.0;
  double total_weight = 0.0;
  std::size_t n_tasks = 0;
  double violation = 0.0;
  bool feasible = false;
  Route route;

  std::optional<std::string> error;  // set when the engine threw
  std::vector<HistoryRecord> history;
};

struct EngineSettings {
  GAConfig ga;
  SwarmConfig pso;
};

/// Runs one engine with both configs' seeds replaced by `seed`, times the
/// solve, then re-evaluates the returned route from scratch. Never throws
/// for engine failures; they land in RunRecord::error.
RunRecord run_once(const MissionGraph& g, Algorithm algo, const EngineSettings& engines, const CostParams& p,
                   std::uint64_t seed, bool record_cpu_time = true);

struct CampaignConfig {
  int n_runs = 100;
  std::uint64_t master_seed = 1;
  ScenarioConfig scenario;
  EngineSettings engines;
  CostParams cost;
  bool regenerate_graph_per_run = true;
  /// 0 picks std::thread::hardware_concurrency().
  int threads = 0;
  /// When false, cpu_time_s is written as 0 so reports are byte-reproducible.
  bool record_cpu_time = true;
};

void validate(const CampaignConfig& cfg);

struct RunFailure {
  int run_index = 0;
  std::uint64_t seed = 0;
  std::string message;
};

struct Summary {
  std::size_t count = 0;
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation, 0 for a single value
  double min = 0.0;
  double max = 0.0;
};

Summary summarize(const std::vector<double>& values);

struct AlgorithmSummary {
  Algorithm algorithm = Algorithm::ga;
  std::size_t runs = 0;
  double feasibility_rate = 0.0;
  Summary t_route;
  Summary total_weight;
  Summary best_cost;
};

struct CampaignReport {
  std::vector<RunRecord> records;  // GA then PSO for each run index
  std::vector<RunFailure> failures;
  std::vector<AlgorithmSummary> summaries;
};

/// Derived seeds for run i: graph and engine seeds are counter splits of
/// the master seed.
std::uint64_t graph_seed(std::uint64_t master, int run_index);
std::uint64_t engine_seed(std::uint64_t master, int run_index);

CampaignReport monte_carlo(const CampaignConfig& cfg);

std::vector<AlgorithmSummary> summarize_records(const std::vector<RunRecord>& records);

enum class ReportFormat { csv, json };

inline constexpr std::string_view kCsvHeader =
    "algorithm,seed,cpu_time_s,best_cost,t_available_s,t_route_s,total_distance_m,total_weight,n_tasks,violation,"
    "feasible,route";

std::string emit_csv(const std::vector<RunRecord>& records);
std::string emit_json(const CampaignReport& report);
std::string emit_report(const CampaignReport& report, ReportFormat format);
/// Single-run report (as a one-record campaign).
std::string emit_record(const RunRecord& record, ReportFormat format);

/// "iteration,best_cost,mean_cost" series.
std::string emit_history_csv(const std::vector<HistoryRecord>& history);

/// Inverse of emit_csv. Throws ParseError.
std::vector<RunRecord> parse_csv(std::string_view text);

}  // namespace routeplan
