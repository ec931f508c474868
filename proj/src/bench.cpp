#include "routeplan/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "routeplan/error.hpp"

namespace routeplan {

using nlohmann::json;

std::string_view to_string(Algorithm a) { return a == Algorithm::ga ? "GA" : "PSO"; }

Algorithm parse_algorithm(std::string_view text) {
  if (text == "ga" || text == "GA") return Algorithm::ga;
  if (text == "pso" || text == "PSO") return Algorithm::pso;
  throw InvalidParameter("unknown algorithm '" + std::string(text) + "' (expected ga or pso)");
}

RunRecord run_once(const MissionGraph& g, Algorithm algo, const EngineSettings& engines, const CostParams& p,
                   std::uint64_t seed, bool record_cpu_time) {
  RunRecord rec;
  rec.algorithm = algo;
  rec.seed = seed;
  rec.t_available_s = p.t_available;

  SolveResult solved;
  try {
    const auto t0 = std::chrono::steady_clock::now();
    if (algo == Algorithm::ga) {
      auto cfg = engines.ga;
      cfg.seed = seed;
      solved = evolve(g, cfg, p);
    } else {
      auto cfg = engines.pso;
      cfg.seed = seed;
      solved = run_pso(g, cfg, p);
    }
    const auto t1 = std::chrono::steady_clock::now();
    if (record_cpu_time) rec.cpu_time_s = std::chrono::duration<double>(t1 - t0).count();
  } catch (const std::exception& e) {
    rec.error = e.what();
    return rec;
  }

  // Independent re-evaluation of the returned route.
  const Evaluation check = evaluate(solved.best.route, g, p);
  rec.route = check.route;
  rec.best_cost = check.objective;
  rec.t_route_s = check.metrics.t_route;
  rec.total_distance_m = check.metrics.total_distance;
  rec.total_weight = check.metrics.total_weight;
  rec.n_tasks = check.metrics.n_tasks;
  rec.violation = check.cost.viol;
  rec.feasible = check.feasible();
  rec.history = std::move(solved.history);
  return rec;
}

void validate(const CampaignConfig& cfg) {
  if (cfg.n_runs < 1) throw InvalidParameter("campaign.n_runs must be at least 1");
  if (cfg.threads < 0) throw InvalidParameter("campaign.threads must be non-negative");
  validate(cfg.scenario);
  validate(cfg.engines.ga);
  validate(cfg.engines.pso);
  validate(cfg.cost);
}

std::uint64_t graph_seed(std::uint64_t master, int run_index) {
  return split_seed(master, 2 * static_cast<std::uint64_t>(run_index));
}

std::uint64_t engine_seed(std::uint64_t master, int run_index) {
  return split_seed(master, 2 * static_cast<std::uint64_t>(run_index) + 1);
}

Summary summarize(const std::vector<double>& values) {
  Summary s;
  s.count = values.size();
  if (values.empty()) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  double sq = 0.0;
  for (double v : values) sq += (v - s.mean) * (v - s.mean);
  s.stddev = values.size() > 1 ? std::sqrt(sq / static_cast<double>(values.size() - 1)) : 0.0;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  s.min = *lo;
  s.max = *hi;
  return s;
}

std::vector<AlgorithmSummary> summarize_records(const std::vector<RunRecord>& records) {
  std::vector<AlgorithmSummary> out;
  for (Algorithm algo : {Algorithm::ga, Algorithm::pso}) {
    AlgorithmSummary s;
    s.algorithm = algo;
    std::vector<double> t_route, weight, cost;
    std::size_t feasible = 0;
    for (const auto& r : records) {
      if (r.algorithm != algo || r.error) continue;
      ++s.runs;
      feasible += r.feasible ? 1 : 0;
      t_route.push_back(r.t_route_s);
      weight.push_back(r.total_weight);
      cost.push_back(r.best_cost);
    }
    s.feasibility_rate = s.runs ? static_cast<double>(feasible) / static_cast<double>(s.runs) : 0.0;
    s.t_route = summarize(t_route);
    s.total_weight = summarize(weight);
    s.best_cost = summarize(cost);
    out.push_back(s);
  }
  return out;
}

namespace {

struct RunSlot {
  std::vector<RunRecord> records;
  std::vector<RunFailure> failures;
};

RunSlot execute_run(const CampaignConfig& cfg, int index, const MissionGraph* shared_graph) {
  RunSlot slot;
  const auto seed = engine_seed(cfg.master_seed, index);
  std::optional<MissionGraph> own;
  if (!shared_graph) {
    auto scenario = cfg.scenario;
    scenario.seed = graph_seed(cfg.master_seed, index);
    try {
      own.emplace(generate_scenario(scenario));
    } catch (const std::exception& e) {
      slot.failures.push_back({index, scenario.seed, std::string("scenario generation failed: ") + e.what()});
      return slot;
    }
  }
  const MissionGraph& g = shared_graph ? *shared_graph : *own;
  for (Algorithm algo : {Algorithm::ga, Algorithm::pso}) {
    auto rec = run_once(g, algo, cfg.engines, cfg.cost, seed, cfg.record_cpu_time);
    if (rec.error)
      slot.failures.push_back({index, seed, std::string(to_string(algo)) + ": " + *rec.error});
    else
      slot.records.push_back(std::move(rec));
  }
  return slot;
}

}  // namespace

CampaignReport monte_carlo(const CampaignConfig& cfg) {
  validate(cfg);
  CampaignReport report;

  std::optional<MissionGraph> shared;
  if (!cfg.regenerate_graph_per_run) {
    auto scenario = cfg.scenario;
    scenario.seed = graph_seed(cfg.master_seed, 0);
    try {
      shared.emplace(generate_scenario(scenario));
    } catch (const std::exception& e) {
      report.failures.push_back({0, scenario.seed, std::string("scenario generation failed: ") + e.what()});
      report.summaries = summarize_records(report.records);
      return report;
    }
  }

  const auto runs = static_cast<std::size_t>(cfg.n_runs);
  std::vector<RunSlot> slots(runs);
  unsigned workers = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads) : std::thread::hardware_concurrency();
  workers = std::clamp(workers, 1u, static_cast<unsigned>(runs));

  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i = cursor++; i < runs; i = cursor++)
      slots[i] = execute_run(cfg, static_cast<int>(i), shared ? &*shared : nullptr);
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  for (auto& slot : slots) {
    for (auto& r : slot.records) report.records.push_back(std::move(r));
    for (auto& f : slot.failures) report.failures.push_back(std::move(f));
  }
  report.summaries = summarize_records(report.records);
  return report;
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json summary_json(const Summary& s) {
  return {{"count", s.count}, {"mean", s.mean}, {"stddev", s.stddev}, {"min", s.min}, {"max", s.max}};
}

json history_json(const std::vector<HistoryRecord>& history) {
  json out = json::array();
  for (const auto& h : history) out.push_back({h.iteration, h.best_cost, h.mean_cost});
  return out;
}

json record_json(const RunRecord& r) {
  json j = {{"algorithm", to_string(r.algorithm)},
            {"seed", r.seed},
            {"cpu_time_s", r.cpu_time_s},
            {"best_cost", r.best_cost},
            {"t_available_s", r.t_available_s},
            {"t_route_s", r.t_route_s},
            {"total_distance_m", r.total_distance_m},
            {"total_weight", r.total_weight},
            {"n_tasks", r.n_tasks},
            {"violation", r.violation},
            {"feasible", r.feasible},
            {"route", r.route.nodes},
            {"history", history_json(r.history)}};
  if (r.error) j["error"] = *r.error;
  return j;
}

}  // namespace

std::string emit_csv(const std::vector<RunRecord>& records) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : records) {
    out += std::string(to_string(r.algorithm)) + ',' + std::to_string(r.seed) + ',' + num(r.cpu_time_s) + ',' +
           num(r.best_cost) + ',' + num(r.t_available_s) + ',' + num(r.t_route_s) + ',' + num(r.total_distance_m) +
           ',' + num(r.total_weight) + ',' + std::to_string(r.n_tasks) + ',' + num(r.violation) + ',' +
           (r.feasible ? "true" : "false") + ',' + to_string(r.route) + '\n';
  }
  return out;
}

std::string emit_json(const CampaignReport& report) {
  json records = json::array();
  for (const auto& r : report.records) records.push_back(record_json(r));
  json failures = json::array();
  for (const auto& f : report.failures)
    failures.push_back({{"run_index", f.run_index}, {"seed", f.seed}, {"message", f.message}});
  json summaries = json::array();
  for (const auto& s : report.summaries) {
    summaries.push_back({{"algorithm", to_string(s.algorithm)},
                         {"runs", s.runs},
                         {"feasibility_rate", s.feasibility_rate},
                         {"t_route_s", summary_json(s.t_route)},
                         {"total_weight", summary_json(s.total_weight)},
                         {"best_cost", summary_json(s.best_cost)}});
  }
  return json{{"records", records}, {"failures", failures}, {"summaries", summaries}}.dump(2) + "\n";
}

std::string emit_report(const CampaignReport& report, ReportFormat format) {
  return format == ReportFormat::csv ? emit_csv(report.records) : emit_json(report);
}

std::string emit_record(const RunRecord& record, ReportFormat format) {
  CampaignReport single;
  single.records.push_back(record);
  single.summaries = summarize_records(single.records);
  return emit_report(single, format);
}

std::string emit_history_csv(const std::vector<HistoryRecord>& history) {
  std::string out = "iteration,best_cost,mean_cost\n";
  for (const auto& h : history) out += std::to_string(h.iteration) + ',' + num(h.best_cost) + ',' + num(h.mean_cost) + '\n';
  return out;
}

namespace {

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t begin = 0;
  while (true) {
    const auto pos = line.find(sep, begin);
    out.emplace_back(line.substr(begin, pos - begin));
    if (pos == std::string_view::npos) break;
    begin = pos + 1;
  }
  return out;
}

double parse_double(const std::string& field, std::size_t line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(field, &used);
    if (used != field.size()) throw std::invalid_argument(field);
    return v;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line) + ": bad number '" + field + "'");
  }
}

std::uint64_t parse_u64(const std::string& field, std::size_t line) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(field, &used);
    if (used != field.size()) throw std::invalid_argument(field);
    return v;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line) + ": bad integer '" + field + "'");
  }
}

}  // namespace

std::vector<RunRecord> parse_csv(std::string_view text) {
  std::vector<RunRecord> out;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw ParseError("missing or unexpected CSV header");
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 12) throw ParseError("line " + std::to_string(lineno) + ": expected 12 columns");
    RunRecord r;
    try {
      r.algorithm = parse_algorithm(f[0]);
    } catch (const InvalidParameter& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
    r.seed = parse_u64(f[1], lineno);
    r.cpu_time_s = parse_double(f[2], lineno);
    r.best_cost = parse_double(f[3], lineno);
    r.t_available_s = parse_double(f[4], lineno);
    r.t_route_s = parse_double(f[5], lineno);
    r.total_distance_m = parse_double(f[6], lineno);
    r.total_weight = parse_double(f[7], lineno);
    r.n_tasks = static_cast<std::size_t>(parse_u64(f[8], lineno));
    r.violation = parse_double(f[9], lineno);
    if (f[10] != "true" && f[10] != "false") throw ParseError("line " + std::to_string(lineno) + ": bad feasible flag");
    r.feasible = f[10] == "true";
    r.route = parse_route(f[11]);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace routeplan
