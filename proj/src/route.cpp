#include "routeplan/route.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

namespace routeplan {

std::string to_string(const Route& r) {
  std::string out;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(r.nodes[i]);
  }
  return out;
}

Route parse_route(std::string_view text) {
  Route r;
  const char* p = text.data();
  const char* end = text.data() + text.size();
  while (p < end) {
    if (*p == ' ') {
      ++p;
      continue;
    }
    NodeId id = 0;
    auto [next, ec] = std::from_chars(p, end, id);
    if (ec != std::errc{} || (next < end && *next != ' '))
      throw ParseError("malformed route '" + std::string(text) + "'");
    r.nodes.push_back(id);
    p = next;
  }
  return r;
}

std::string_view to_string(Violation v) {
  switch (v) {
    case Violation::bad_endpoints: return "bad-endpoints";
    case Violation::nonexistent_edge: return "nonexistent-edge";
    case Violation::repeated_node: return "repeated-node";
    case Violation::repeated_edge: return "repeated-edge";
    case Violation::time_budget_exceeded: return "time-budget-exceeded";
  }
  return "unknown";
}

bool ValidationReport::has(Violation v) const {
  return std::find(violations.begin(), violations.end(), v) != violations.end();
}

bool ValidationReport::structurally_invalid() const {
  return std::any_of(violations.begin(), violations.end(),
                     [](Violation v) { return v != Violation::time_budget_exceeded; });
}

PriorityVector random_priority_vector(std::size_t n, Rng& rng) {
  PriorityVector u(static_cast<Eigen::Index>(n));
  std::set<double> used;
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    double v = rng.uniform(kPriorityMin, kPriorityMax);
    while (!used.insert(v).second) v = rng.uniform(kPriorityMin, kPriorityMax);
    u[i] = v;
  }
  return u;
}

Route repair(Route partial, const MissionGraph& g) {
  if (partial.empty()) partial.nodes.push_back(g.start());
  if (partial.back() == g.destination()) return partial;
  if (partial.size() == 1)
    partial.nodes.push_back(g.destination());
  else
    partial.nodes.back() = g.destination();
  return partial;
}

namespace detail {

Route decode_in_place(Eigen::Ref<Eigen::VectorXd> working, const MissionGraph& g) {
  constexpr double masked = -std::numeric_limits<double>::infinity();
  const auto n = g.node_count();
  Route route;
  route.nodes.reserve(n);

  NodeId current = g.start();
  route.nodes.push_back(current);
  working[current - 1] = masked;

  while (current != g.destination() && route.size() < n) {
    NodeId best = 0;
    double best_priority = masked;
    for (NodeId v : g.neighbors(current)) {
      const double p = working[v - 1];
      if (p > best_priority) {  // strict: ties keep the lower id
        best_priority = p;
        best = v;
      }
    }
    if (best == 0) break;  // dead end
    route.nodes.push_back(best);
    working[best - 1] = masked;
    current = best;
  }
  return repair(std::move(route), g);
}

}  // namespace detail

RouteMetrics route_metrics(const Route& r, const MissionGraph& g, double v_auv) {
  RouteMetrics m;
  for (std::size_t i = 0; i + 1 < r.size(); ++i) {
    const int idx = g.edge_index(r.nodes[i], r.nodes[i + 1]);
    if (idx < 0)
      throw MetricsUndefined("route hop " + std::to_string(r.nodes[i]) + "-" + std::to_string(r.nodes[i + 1]) +
                             " is not an edge");
    const auto& task = g.edges()[static_cast<std::size_t>(idx)].task;
    const double d = g.edge_length(static_cast<std::size_t>(idx));
    m.t_route += traversal_time(d, v_auv, task);
    m.total_distance += d;
    m.total_weight += task.priority / task.risk_pct;
    m.sum_priority += task.priority;
    m.sum_risk += task.risk_pct;
    ++m.n_tasks;
  }
  return m;
}

ValidationReport validate_structure(const Route& r, const MissionGraph& g) {
  ValidationReport report;
  auto flag = [&](Violation v) {
    if (!report.has(v)) report.violations.push_back(v);
  };

  if (r.size() < 2 || r.front() != g.start() || r.back() != g.destination()) flag(Violation::bad_endpoints);

  for (std::size_t i = 0; i + 1 < r.size(); ++i) {
    if (!g.has_edge(r.nodes[i], r.nodes[i + 1])) {
      flag(Violation::nonexistent_edge);
      break;
    }
  }

  std::vector<char> seen(g.node_count() + 1, 0);
  for (NodeId v : r.nodes) {
    if (!g.contains(v)) {
      flag(Violation::nonexistent_edge);
      continue;
    }
    if (seen[static_cast<std::size_t>(v)]++) {
      flag(Violation::repeated_node);
      break;
    }
  }

  std::set<std::pair<NodeId, NodeId>> used;
  for (std::size_t i = 0; i + 1 < r.size(); ++i) {
    if (!used.insert(std::minmax(r.nodes[i], r.nodes[i + 1])).second) {
      flag(Violation::repeated_edge);
      break;
    }
  }

  report.feasible = report.violations.empty();
  return report;
}

ValidationReport validate(const Route& r, const MissionGraph& g, const RouteMetrics& metrics, double t_available) {
  auto report = validate_structure(r, g);
  if (metrics.t_route > t_available) report.violations.push_back(Violation::time_budget_exceeded);
  report.feasible = report.violations.empty();
  return report;
}

}  // namespace routeplan
