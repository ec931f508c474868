#include "routeplan/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "routeplan/error.hpp"

namespace routeplan {

using nlohmann::json;

CampaignConfig RunConfig::campaign_config() const {
  CampaignConfig c;
  c.n_runs = campaign.n_runs;
  c.master_seed = campaign.master_seed;
  c.scenario = scenario;
  c.engines = {ga, pso};
  c.cost = cost;
  c.regenerate_graph_per_run = campaign.regenerate_graph_per_run;
  c.threads = campaign.threads;
  c.record_cpu_time = campaign.record_cpu_time;
  return c;
}

namespace {

// Reads keys out of one section and remembers which were consumed.
class Section {
 public:
  Section(const json& obj, std::string name) : obj_(obj), name_(std::move(name)) {
    if (!obj_.is_object()) throw ParseError("config section '" + name_ + "' must be an object");
  }

  template <typename T>
  void read(const char* key, T& out) {
    known_.insert(key);
    auto it = obj_.find(key);
    if (it == obj_.end()) return;
    try {
      if constexpr (std::is_same_v<T, bool>) {
        if (!it->is_boolean()) throw ParseError("expected a boolean");
      } else if constexpr (std::is_integral_v<T>) {
        if (!it->is_number_integer()) throw ParseError("expected an integer");
        if constexpr (std::is_unsigned_v<T>) {
          if (it->is_number_integer() && !it->is_number_unsigned()) throw ParseError("expected a non-negative integer");
        }
      } else if constexpr (std::is_floating_point_v<T>) {
        if (!it->is_number()) throw ParseError("expected a number");
      }
      out = it->get<T>();
    } catch (const std::exception& e) {
      throw ParseError("config " + name_ + "." + key + ": " + e.what());
    }
  }

  void read_range(const char* key, std::pair<double, double>& out) {
    known_.insert(key);
    auto it = obj_.find(key);
    if (it == obj_.end()) return;
    if (!it->is_array() || it->size() != 2 || !(*it)[0].is_number() || !(*it)[1].is_number())
      throw ParseError("config " + name_ + "." + key + ": expected [min, max]");
    out = {(*it)[0].get<double>(), (*it)[1].get<double>()};
  }

  void finish() const {
    for (const auto& [key, value] : obj_.items())
      if (!known_.count(key)) throw ParseError("config " + name_ + ": unknown key '" + key + "'");
  }

 private:
  const json& obj_;
  std::string name_;
  std::set<std::string> known_;
};

}  // namespace

RunConfig parse_run_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("config document must be a JSON object");

  RunConfig cfg;
  static const std::set<std::string> sections = {"scenario", "ga", "pso", "cost", "campaign"};
  for (const auto& [key, value] : doc.items())
    if (!sections.count(key)) throw ParseError("config: unknown section '" + key + "'");

  if (doc.contains("scenario")) {
    Section s(doc["scenario"], "scenario");
    auto& c = cfg.scenario;
    s.read("n_nodes", c.n_nodes);
    s.read("area_x", c.area_x);
    s.read("area_y", c.area_y);
    s.read("depth", c.depth);
    s.read("edge_density", c.edge_density);
    s.read_range("priority_range", c.priority_range);
    s.read_range("risk_range", c.risk_range);
    s.read_range("task_time_range", c.task_time_range);
    s.read("seed", c.seed);
    s.finish();
  }
  if (doc.contains("ga")) {
    Section s(doc["ga"], "ga");
    auto& c = cfg.ga;
    s.read("population_size", c.population_size);
    s.read("max_generations", c.max_generations);
    s.read("stall_generations", c.stall_generations);
    s.read("crossover_fraction", c.crossover_fraction);
    s.read("mutation_fraction", c.mutation_fraction);
    s.read("mix_probability", c.mix_probability);
    s.read("elite_count", c.elite_count);
    s.read("init_retries", c.init_retries);
    s.read("seed", c.seed);
    s.finish();
  }
  if (doc.contains("pso")) {
    Section s(doc["pso"], "pso");
    auto& c = cfg.pso;
    s.read("swarm_size", c.swarm_size);
    s.read("max_iterations", c.max_iterations);
    s.read("omega", c.omega);
    s.read("c1", c.c1);
    s.read("c2", c.c2);
    s.read("v_max", c.v_max);
    s.read("position_min", c.position_min);
    s.read("position_max", c.position_max);
    s.read("init_velocity", c.init_velocity);
    s.read("per_component_random", c.per_component_random);
    s.read("seed", c.seed);
    s.finish();
  }
  if (doc.contains("cost")) {
    Section s(doc["cost"], "cost");
    auto& c = cfg.cost;
    s.read("phi1", c.phi1);
    s.read("phi2", c.phi2);
    s.read("gamma", c.gamma);
    s.read("eta", c.eta);
    s.read("beta", c.beta);
    s.read("v_auv", c.v_auv);
    s.read("t_available", c.t_available);
    s.read("penalty", c.penalty);
    s.read("signed_route_gap", c.signed_route_gap);
    s.finish();
  }
  if (doc.contains("campaign")) {
    Section s(doc["campaign"], "campaign");
    auto& c = cfg.campaign;
    s.read("n_runs", c.n_runs);
    s.read("master_seed", c.master_seed);
    s.read("regenerate_graph_per_run", c.regenerate_graph_per_run);
    s.read("threads", c.threads);
    s.read("record_cpu_time", c.record_cpu_time);
    s.finish();
  }

  validate(cfg.scenario);
  validate(cfg.ga);
  validate(cfg.pso);
  validate(cfg.cost);
  if (cfg.campaign.n_runs < 1) throw InvalidParameter("campaign.n_runs must be at least 1");
  if (cfg.campaign.threads < 0) throw InvalidParameter("campaign.threads must be non-negative");
  return cfg;
}

RunConfig read_run_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str());
}

std::string dump_run_config(const RunConfig& cfg) {
  const auto& sc = cfg.scenario;
  const auto& ga = cfg.ga;
  const auto& ps = cfg.pso;
  const auto& co = cfg.cost;
  const auto& ca = cfg.campaign;
  json doc = {
      {"scenario",
       {{"n_nodes", sc.n_nodes},
        {"area_x", sc.area_x},
        {"area_y", sc.area_y},
        {"depth", sc.depth},
        {"edge_density", sc.edge_density},
        {"priority_range", {sc.priority_range.first, sc.priority_range.second}},
        {"risk_range", {sc.risk_range.first, sc.risk_range.second}},
        {"task_time_range", {sc.task_time_range.first, sc.task_time_range.second}},
        {"seed", sc.seed}}},
      {"ga",
       {{"population_size", ga.population_size},
        {"max_generations", ga.max_generations},
        {"stall_generations", ga.stall_generations},
        {"crossover_fraction", ga.crossover_fraction},
        {"mutation_fraction", ga.mutation_fraction},
        {"mix_probability", ga.mix_probability},
        {"elite_count", ga.elite_count},
        {"init_retries", ga.init_retries},
        {"seed", ga.seed}}},
      {"pso",
       {{"swarm_size", ps.swarm_size},
        {"max_iterations", ps.max_iterations},
        {"omega", ps.omega},
        {"c1", ps.c1},
        {"c2", ps.c2},
        {"v_max", ps.v_max},
        {"position_min", ps.position_min},
        {"position_max", ps.position_max},
        {"init_velocity", ps.init_velocity},
        {"per_component_random", ps.per_component_random},
        {"seed", ps.seed}}},
      {"cost",
       {{"phi1", co.phi1},
        {"phi2", co.phi2},
        {"gamma", co.gamma},
        {"eta", co.eta},
        {"beta", co.beta},
        {"v_auv", co.v_auv},
        {"t_available", co.t_available},
        {"penalty", co.penalty},
        {"signed_route_gap", co.signed_route_gap}}},
      {"campaign",
       {{"n_runs", ca.n_runs},
        {"master_seed", ca.master_seed},
        {"regenerate_graph_per_run", ca.regenerate_graph_per_run},
        {"threads", ca.threads},
        {"record_cpu_time", ca.record_cpu_time}}},
  };
  return doc.dump(2) + "\n";
}

}  // namespace routeplan
