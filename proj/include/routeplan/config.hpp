#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "routeplan/bench.hpp"
#include "routeplan/cost.hpp"
#include "routeplan/ga.hpp"
#include "routeplan/graph.hpp"
#include "routeplan/pso.hpp"

namespace routeplan {

/// Everything a CLI run can be configured with. Sections and keys mirror
/// the struct fields; missing keys keep their defaults.
struct RunConfig {
  ScenarioConfig scenario;
  GAConfig ga;
  SwarmConfig pso;
  CostParams cost;
  struct Campaign {
    int n_runs = 100;
    std::uint64_t master_seed = 1;
    bool regenerate_graph_per_run = true;
    int threads = 0;
    bool record_cpu_time = true;
  } campaign;

  CampaignConfig campaign_config() const;
};

/// Throws ParseError on malformed JSON, unknown sections/keys or wrongly
/// typed values, and InvalidParameter when a value is out of range.
RunConfig parse_run_config(std::string_view text);
RunConfig read_run_config(const std::filesystem::path& path);

/// The full document with every default filled in.
std::string dump_run_config(const RunConfig& cfg);

}  // namespace routeplan
