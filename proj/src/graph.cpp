#include "routeplan/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <string>

#include "routeplan/error.hpp"
#include "routeplan/rng.hpp"

namespace routeplan {

double traversal_time(double distance, double speed, const Task& task) {
  if (!(speed > 0.0)) throw InvalidParameter("vehicle speed must be positive");
  return distance / speed + task.completion_time;
}

namespace {

void check_task(const Task& t, std::size_t index) {
  const auto where = "edge #" + std::to_string(index) + ": ";
  if (!std::isfinite(t.priority) || t.priority <= 0.0)
    throw InvalidParameter(where + "priority must be positive");
  if (!std::isfinite(t.risk_pct) || t.risk_pct <= 0.0 || t.risk_pct > 100.0)
    throw InvalidParameter(where + "risk_pct must be in (0, 100]");
  if (!std::isfinite(t.completion_time) || t.completion_time < 0.0)
    throw InvalidParameter(where + "completion_time must be non-negative");
}

}  // namespace

MissionGraph::MissionGraph(std::vector<Waypoint> waypoints, std::vector<Edge> edges, NodeId start,
                           NodeId destination)
    : waypoints_(std::move(waypoints)),
      edges_(std::move(edges)),
      start_(start),
      destination_(destination) {
  const auto n = waypoints_.size();
  if (n < 2) throw InvalidParameter("graph needs at least two waypoints");

  std::sort(waypoints_.begin(), waypoints_.end(),
            [](const Waypoint& l, const Waypoint& r) { return l.id < r.id; });
  for (std::size_t i = 0; i < n; ++i) {
    const auto& w = waypoints_[i];
    if (w.id != static_cast<NodeId>(i + 1))
      throw InvalidParameter("waypoint ids must be unique and contiguous 1.." + std::to_string(n) +
                             " (found id " + std::to_string(w.id) + ")");
    if (!w.position.allFinite())
      throw InvalidParameter("waypoint " + std::to_string(w.id) + " has non-finite coordinates");
    if (w.z() < 0.0)
      throw InvalidParameter("waypoint " + std::to_string(w.id) + " has negative depth");
  }
  if (!contains(start_)) throw InvalidParameter("start node " + std::to_string(start_) + " is not a waypoint");
  if (!contains(destination_))
    throw InvalidParameter("destination node " + std::to_string(destination_) + " is not a waypoint");
  if (start_ == destination_) throw InvalidParameter("start and destination must differ");

  edge_lookup_ = Eigen::MatrixXi::Constant(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n), -1);
  neighbors_.assign(n, {});
  edge_lengths_.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto& e = edges_[i];
    const auto label = "edge #" + std::to_string(i) + " (" + std::to_string(e.a) + "-" + std::to_string(e.b) + ")";
    if (!contains(e.a) || !contains(e.b)) throw InvalidParameter(label + ": endpoint is not a waypoint");
    if (e.a == e.b) throw InvalidParameter(label + ": self loop");
    check_task(e.task, i);
    e.task.risk_pct = std::max(e.task.risk_pct, kMinRiskPct);
    auto& slot = edge_lookup_(e.a - 1, e.b - 1);
    if (slot >= 0) throw InvalidParameter(label + ": duplicate edge");
    slot = static_cast<int>(i);
    edge_lookup_(e.b - 1, e.a - 1) = static_cast<int>(i);
    neighbors_[static_cast<std::size_t>(e.a - 1)].push_back(e.b);
    neighbors_[static_cast<std::size_t>(e.b - 1)].push_back(e.a);
    edge_lengths_.push_back(euclidean_distance(waypoint(e.a), waypoint(e.b)));
  }
  for (auto& adj : neighbors_) std::sort(adj.begin(), adj.end());
}

std::span<const NodeId> MissionGraph::neighbors(NodeId id) const {
  if (!contains(id)) throw InvalidParameter("unknown node id " + std::to_string(id));
  return neighbors_[static_cast<std::size_t>(id - 1)];
}

bool connected(const MissionGraph& g) {
  std::vector<char> seen(g.node_count() + 1, 0);
  std::deque<NodeId> frontier{g.start()};
  seen[static_cast<std::size_t>(g.start())] = 1;
  while (!frontier.empty()) {
    const NodeId u = frontier.front();
    frontier.pop_front();
    if (u == g.destination()) return true;
    for (NodeId v : g.neighbors(u)) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        frontier.push_back(v);
      }
    }
  }
  return false;
}

void validate(const ScenarioConfig& cfg) {
  auto range_ok = [](const std::pair<double, double>& r) {
    return std::isfinite(r.first) && std::isfinite(r.second) && r.first < r.second;
  };
  if (cfg.n_nodes < 2) throw InvalidParameter("scenario.n_nodes must be at least 2");
  if (!(cfg.area_x > 0.0) || !(cfg.area_y > 0.0)) throw InvalidParameter("scenario area must be positive");
  if (!(cfg.depth >= 0.0) || !std::isfinite(cfg.depth)) throw InvalidParameter("scenario.depth must be non-negative");
  if (!(cfg.edge_density > 0.0 && cfg.edge_density <= 1.0))
    throw InvalidParameter("scenario.edge_density must be in (0, 1]");
  if (!range_ok(cfg.priority_range) || cfg.priority_range.first <= 0.0)
    throw InvalidParameter("scenario.priority_range must be a positive, non-degenerate range");
  if (!range_ok(cfg.risk_range) || cfg.risk_range.first < 0.0 || cfg.risk_range.second > 100.0)
    throw InvalidParameter("scenario.risk_range must be a non-degenerate range within [0, 100]");
  if (!range_ok(cfg.task_time_range) || cfg.task_time_range.first < 0.0)
    throw InvalidParameter("scenario.task_time_range must be a non-negative, non-degenerate range");
}

namespace {

constexpr int kMaxGenerationAttempts = 16;

Task draw_task(const ScenarioConfig& cfg, Rng& rng) {
  Task t;
  t.priority = rng.uniform(cfg.priority_range.first, cfg.priority_range.second);
  // (min, max]: 1 - uniform() is in (0, 1].
  t.risk_pct = cfg.risk_range.first + (cfg.risk_range.second - cfg.risk_range.first) * (1.0 - rng.uniform());
  t.risk_pct = std::max(t.risk_pct, kMinRiskPct);
  t.completion_time = rng.uniform(cfg.task_time_range.first, cfg.task_time_range.second);
  return t;
}

std::vector<Waypoint> lattice_waypoints(const ScenarioConfig& cfg, Rng& rng) {
  const int n = cfg.n_nodes;
  // 2-D lattice over the horizontal extent, laid out along x first so that
  // node 1 sits near x = 0 and node n near x = area_x.
  const int nx = std::max(1, static_cast<int>(std::ceil(std::sqrt(n * cfg.area_x / cfg.area_y))));
  const int ny = (n + nx - 1) / nx;
  const int cells = nx * ny;
  const double cx = cfg.area_x / nx;
  const double cy = cfg.area_y / ny;

  std::vector<Waypoint> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int cell = n == 1 ? 0 : static_cast<int>(std::llround(static_cast<double>(i) * (cells - 1) / (n - 1)));
    const int ix = cell / ny;
    const int iy = cell % ny;
    Waypoint w;
    w.id = i + 1;
    w.position.x() = std::clamp(rng.normal((ix + 0.5) * cx, cx / 4.0), 0.0, cfg.area_x);
    w.position.y() = std::clamp(rng.normal((iy + 0.5) * cy, cy / 4.0), 0.0, cfg.area_y);
    w.position.z() = std::clamp(rng.normal(cfg.depth / 2.0, cfg.depth / 4.0), 0.0, cfg.depth);
    out.push_back(w);
  }
  return out;
}

}  // namespace

MissionGraph generate_scenario(const ScenarioConfig& cfg) {
  validate(cfg);
  Rng rng(cfg.seed);
  const int n = cfg.n_nodes;

  for (int attempt = 0; attempt < kMaxGenerationAttempts; ++attempt) {
    auto waypoints = lattice_waypoints(cfg, rng);

    Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> present =
        Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>::Constant(n, n, false);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) present(a, b) = rng.bernoulli(cfg.edge_density);

    // Spanning path start -> shuffled interior -> destination.
    std::vector<int> order(static_cast<std::size_t>(n - 2));
    std::iota(order.begin(), order.end(), 1);
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.index(i)]);
    order.insert(order.begin(), 0);
    order.push_back(n - 1);
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
      const auto [lo, hi] = std::minmax(order[i], order[i + 1]);
      present(lo, hi) = true;
    }

    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (present(a, b)) edges.push_back(Edge{a + 1, b + 1, draw_task(cfg, rng)});

    MissionGraph g(std::move(waypoints), std::move(edges), 1, n);
    if (connected(g)) return g;
  }
  throw GenerationFailure("could not generate a connected scenario after " +
                          std::to_string(kMaxGenerationAttempts) + " attempts");
}

}  // namespace routeplan
