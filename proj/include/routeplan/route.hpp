#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "routeplan/error.hpp"
#include "routeplan/graph.hpp"
#include "routeplan/rng.hpp"

namespace routeplan {

/// Per-node priority genotype; entry i belongs to node i+1.
using PriorityVector = Eigen::VectorXd;

inline constexpr double kPriorityMin = -100.0;
inline constexpr double kPriorityMax = 100.0;

struct Route {
  std::vector<NodeId> nodes;

  std::size_t size() const { return nodes.size(); }
  bool empty() const { return nodes.empty(); }
  NodeId front() const { return nodes.front(); }
  NodeId back() const { return nodes.back(); }

  bool operator==(const Route&) const = default;
  auto operator<=>(const Route&) const = default;
};

/// "1 3 8 13 18"
std::string to_string(const Route& r);
/// Inverse of to_string; throws ParseError on junk.
Route parse_route(std::string_view text);

struct RouteMetrics {
  double t_route = 0.0;         // seconds, travel + task completion
  double total_weight = 0.0;    // sum of priority / risk
  double total_distance = 0.0;  // meters
  std::size_t n_tasks = 0;
  double sum_priority = 0.0;
  double sum_risk = 0.0;  // percent
};

enum class Violation { bad_endpoints, nonexistent_edge, repeated_node, repeated_edge, time_budget_exceeded };

std::string_view to_string(Violation v);

struct ValidationReport {
  bool feasible = true;
  std::vector<Violation> violations;

  bool has(Violation v) const;
  /// Any violation other than the time budget.
  bool structurally_invalid() const;
};

/// Distinct values drawn uniformly from [kPriorityMin, kPriorityMax].
PriorityVector random_priority_vector(std::size_t n, Rng& rng);

/// Replaces a non-destination ending with the destination. A route holding
/// only the start gets the destination appended.
Route repair(Route partial, const MissionGraph& g);

namespace detail {
// Greedy walk; `working` is consumed (visited entries become -inf).
Route decode_in_place(Eigen::Ref<Eigen::VectorXd> working, const MissionGraph& g);
}  // namespace detail

/// Walks from the start, always stepping to the unvisited neighbor with the
/// highest priority (ties go to the lowest id), until the destination is
/// appended. Dead ends are repaired. The argument is not modified; any dense
/// Eigen matrix or array expression is accepted.
template <typename Derived>
Route decode(const Eigen::DenseBase<Derived>& priorities, const MissionGraph& g) {
  if (static_cast<std::size_t>(priorities.size()) != g.node_count())
    throw InvalidParameter("priority vector length " + std::to_string(priorities.size()) +
                           " does not match node count " + std::to_string(g.node_count()));
  Eigen::VectorXd working(priorities.size());
  working.array() = priorities.derived().template cast<double>().array();
  return detail::decode_in_place(working, g);
}

/// Throws MetricsUndefined if a hop is not an edge of g.
RouteMetrics route_metrics(const Route& r, const MissionGraph& g, double v_auv);

/// Endpoint, edge-existence, repeated-node and repeated-edge checks.
ValidationReport validate_structure(const Route& r, const MissionGraph& g);

/// All five feasibility criteria: the structural ones plus
/// metrics.t_route <= t_available.
ValidationReport validate(const Route& r, const MissionGraph& g, const RouteMetrics& metrics, double t_available);

}  // namespace routeplan
