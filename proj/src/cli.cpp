#include "routeplan/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "routeplan/bench.hpp"
#include "routeplan/config.hpp"
#include "routeplan/error.hpp"
#include "routeplan/graph_io.hpp"
#include "routeplan/oracle.hpp"

namespace routeplan::cli {

namespace fs = std::filesystem;

namespace {

enum class LogLevel { quiet, info, debug };

LogLevel log_level() {
  const char* env = std::getenv("ROUTEPLAN_LOG");
  if (!env) return LogLevel::info;
  const std::string v(env);
  if (v == "quiet" || v == "error") return LogLevel::quiet;
  if (v == "debug") return LogLevel::debug;
  return LogLevel::info;
}

/// Reported to the user with an exit code attached.
struct Failure {
  int code;
  std::string message;
};

RunConfig load_config(const std::string& path) {
  if (path.empty()) return RunConfig{};
  if (!fs::exists(path)) throw Failure{kIo, "config file not found: " + path};
  try {
    return read_run_config(path);
  } catch (const std::ios_base::failure& e) {
    throw Failure{kIo, e.what()};
  } catch (const Error& e) {
    throw Failure{kUsage, std::string("invalid config: ") + e.what()};
  }
}

MissionGraph load_graph_file(const std::string& path) {
  if (!fs::exists(path)) throw Failure{kIo, "graph file not found: " + path};
  try {
    return read_graph_file(path);
  } catch (const std::ios_base::failure& e) {
    throw Failure{kIo, e.what()};
  } catch (const Error& e) {
    throw Failure{kUsage, std::string("invalid graph file: ") + e.what()};
  }
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Failure{kIo, "cannot write " + path.string()};
  out << text;
  if (!out) throw Failure{kIo, "write failed for " + path.string()};
}

std::string bracketed(const Route& r) {
  std::string s = "[";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r.nodes[i]);
  return s + "]";
}

void print_summary(std::ostream& out, const RunRecord& r) {
  auto row = [&](const char* label, const std::string& value) {
    out << std::left << std::setw(28) << label << value << '\n';
  };
  auto fixed = [](double v, int digits) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(digits) << v;
    return ss.str();
  };
  row("Performance metrics", std::string(to_string(r.algorithm)));
  row("CPU Run Time(sec)", fixed(r.cpu_time_s, 3));
  row("Best Cost", fixed(r.best_cost, 4));
  row("Total Available Time(sec)", fixed(r.t_available_s, 0));
  row("Route Travel Time(sec)", fixed(r.t_route_s, 0));
  row("Total Distance", fixed(r.total_distance_m, 0));
  row("Total Weight", fixed(r.total_weight, 2));
  row("N-Tasks", std::to_string(r.n_tasks));
  row("Violation", fixed(r.violation, 4));
  row("Feasibility", r.feasible ? "Yes" : "No");
  row("Route", bracketed(r.route));
}

ReportFormat parse_format(const std::string& f) { return f == "json" ? ReportFormat::json : ReportFormat::csv; }

int cmd_generate(const std::string& config_path, const std::string& out_path, std::optional<std::uint64_t> seed,
                 std::ostream& out) {
  auto cfg = load_config(config_path);
  if (seed) cfg.scenario.seed = *seed;
  MissionGraph g = [&] {
    try {
      return generate_scenario(cfg.scenario);
    } catch (const Error& e) {
      throw Failure{kUsage, std::string("scenario generation failed: ") + e.what()};
    }
  }();
  write_text(out_path, save_graph(g));
  out << "nodes: " << g.node_count() << "\nedges: " << g.edge_count() << '\n';
  return kOk;
}

int cmd_solve(const std::string& graph_path, const std::string& algo_name, const std::string& config_path,
              const std::string& report_path, const std::string& format, std::optional<std::uint64_t> seed,
              std::ostream& out, std::ostream& err) {
  auto cfg = load_config(config_path);
  const auto g = load_graph_file(graph_path);
  const Algorithm algo = parse_algorithm(algo_name);
  const std::uint64_t run_seed = seed ? *seed : (algo == Algorithm::ga ? cfg.ga.seed : cfg.pso.seed);

  if (!report_path.empty()) {
    const auto parent = fs::path(report_path).parent_path();
    if (!parent.empty() && !fs::is_directory(parent))
      throw Failure{kIo, "report directory does not exist: " + parent.string()};
  }

  const auto record = run_once(g, algo, {cfg.ga, cfg.pso}, cfg.cost, run_seed);
  if (record.error) {
    err << "no feasible route found: " << *record.error << '\n';
    return kNoFeasibleRoute;
  }
  print_summary(out, record);
  if (!report_path.empty()) {
    write_text(report_path, emit_record(record, parse_format(format)));
    write_text(report_path + ".history.csv", emit_history_csv(record.history));
  }
  if (!record.feasible) {
    err << "no feasible route found\n";
    return kNoFeasibleRoute;
  }
  return kOk;
}

int cmd_bench(const std::string& config_path, const std::string& out_dir, std::optional<std::uint64_t> seed,
              std::ostream& out, std::ostream& err) {
  auto cfg = load_config(config_path);
  if (seed) cfg.campaign.master_seed = *seed;

  const fs::path dir(out_dir);
  std::error_code ec;
  fs::create_directories(dir / "histories", ec);
  const auto probe = dir / ".write-probe";
  {
    std::ofstream test(probe);
    if (ec || !test) throw Failure{kIo, "output directory is not writable: " + out_dir};
  }
  fs::remove(probe, ec);

  const auto campaign = cfg.campaign_config();
  if (log_level() == LogLevel::debug) err << "running " << campaign.n_runs << " runs\n";
  const auto report = monte_carlo(campaign);

  write_text(dir / "campaign.csv", emit_report(report, ReportFormat::csv));
  write_text(dir / "campaign.json", emit_report(report, ReportFormat::json));
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const auto& r = report.records[i];
    std::ostringstream name;
    name << "run_" << std::setw(4) << std::setfill('0') << i / 2 << '_' << to_string(r.algorithm) << ".csv";
    write_text(dir / "histories" / name.str(), emit_history_csv(r.history));
  }

  for (const auto& s : report.summaries) {
    out << to_string(s.algorithm) << ": runs=" << s.runs << " feasible=" << s.feasibility_rate
        << " t_route mean=" << s.t_route.mean << " sd=" << s.t_route.stddev << " weight mean=" << s.total_weight.mean
        << " sd=" << s.total_weight.stddev << '\n';
  }
  for (const auto& f : report.failures) err << "run " << f.run_index << " (seed " << f.seed << "): " << f.message << '\n';
  if (report.records.empty()) {
    err << "no run succeeded\n";
    return kNoFeasibleRoute;
  }
  return kOk;
}

int cmd_oracle(const std::string& graph_path, const std::string& config_path, bool compare,
               std::optional<std::uint64_t> seed, std::ostream& out, std::ostream& err) {
  auto cfg = load_config(config_path);
  const auto g = load_graph_file(graph_path);

  OracleResult best;
  std::vector<Evaluation> all;
  try {
    best = optimal_route_bruteforce(g, cfg.cost);
    if (best.n_paths_enumerated <= 32) all = evaluate_all_paths(g, cfg.cost);
  } catch (const OracleSizeError& e) {
    throw Failure{kUsage, e.what()};
  }

  for (const auto& e : all)
    out << "path " << bracketed(e.route) << " cost " << std::setprecision(10) << e.objective << '\n';
  out << "paths enumerated: " << best.n_paths_enumerated << '\n';
  if (!best.has_solution()) {
    err << "no feasible route found\n";
    return kNoFeasibleRoute;
  }
  out << "optimal route: " << bracketed(best.best->route) << '\n';
  out << "optimal cost: " << std::setprecision(10) << best.best->objective << '\n';

  if (compare) {
    for (Algorithm algo : {Algorithm::ga, Algorithm::pso}) {
      const std::uint64_t s = seed ? *seed : (algo == Algorithm::ga ? cfg.ga.seed : cfg.pso.seed);
      const auto rec = run_once(g, algo, {cfg.ga, cfg.pso}, cfg.cost, s);
      if (rec.error) {
        out << to_string(algo) << ": failed (" << *rec.error << ")\n";
        continue;
      }
      const double gap = (rec.best_cost - best.best->objective) / best.best->objective;
      out << to_string(algo) << ": cost " << std::setprecision(10) << rec.best_cost << " route "
          << bracketed(rec.route) << " gap " << gap << '\n';
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Time-budgeted, task-prioritized route planning on waypoint graphs"};
  app.require_subcommand(1);

  std::string config_path, graph_path, out_path, algo = "ga", format = "csv";
  std::optional<std::uint64_t> seed;
  bool compare = false;

  auto* generate = app.add_subcommand("generate", "Generate a random scenario graph");
  generate->add_option("--config", config_path, "Run configuration (JSON)");
  generate->add_option("--out", out_path, "Graph file to write")->required();
  generate->add_option("--seed", seed, "Overrides scenario.seed");

  auto* solve = app.add_subcommand("solve", "Solve one graph with GA or PSO");
  solve->add_option("--graph", graph_path, "Graph file")->required();
  solve->add_option("--algo", algo, "ga or pso")->check(CLI::IsMember({"ga", "pso"}));
  solve->add_option("--config", config_path, "Run configuration (JSON)");
  solve->add_option("--out", out_path, "Report file; history goes to <out>.history.csv");
  solve->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  solve->add_option("--seed", seed, "Overrides the engine seed");

  auto* bench = app.add_subcommand("bench", "Monte Carlo GA vs PSO campaign");
  bench->add_option("--config", config_path, "Run configuration (JSON)");
  bench->add_option("--out", out_path, "Output directory")->required();
  bench->add_option("--seed", seed, "Overrides campaign.master_seed");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive optimum for small graphs");
  oracle->add_option("--graph", graph_path, "Graph file")->required();
  oracle->add_option("--config", config_path, "Run configuration (JSON)");
  oracle->add_flag("--compare", compare, "Also run GA and PSO and print optimality gaps");
  oracle->add_option("--seed", seed, "Overrides the engine seeds in compare mode");

  auto* defaults = app.add_subcommand("defaults", "Print the default run configuration");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*generate) return cmd_generate(config_path, out_path, seed, out);
    if (*solve) return cmd_solve(graph_path, algo, config_path, out_path, format, seed, out, err);
    if (*bench) return cmd_bench(config_path, out_path, seed, out, err);
    if (*oracle) return cmd_oracle(graph_path, config_path, compare, seed, out, err);
    if (*defaults) {
      out << dump_run_config(RunConfig{});
      return kOk;
    }
  } catch (const Failure& f) {
    err << f.message << '\n';
    return f.code;
  } catch (const std::ios_base::failure& e) {
    err << e.what() << '\n';
    return kIo;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace routeplan::cli
