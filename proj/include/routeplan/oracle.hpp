#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "routeplan/cost.hpp"
#include "routeplan/graph.hpp"
#include "routeplan/route.hpp"

namespace routeplan {

using PathVisitor = std::function<void(std::span<const NodeId>)>;

/// Depth-first, ascending-neighbor enumeration of every simple
/// start -> destination path with at most max_nodes nodes. Paths arrive in
/// lexicographic order.
void for_each_simple_path(const MissionGraph& g, std::size_t max_nodes, const PathVisitor& visit);

std::vector<Route> enumerate_simple_paths(const MissionGraph& g, std::size_t max_nodes);

inline constexpr std::size_t kOracleNodeLimit = 12;

struct OracleResult {
  std::optional<Evaluation> best;  // empty: no path fits the time budget
  std::size_t n_paths_enumerated = 0;

  bool has_solution() const { return best.has_value(); }
};

/// Exact argmin of the objective over feasible simple paths; partial paths
/// already over the time budget are cut. Ties go to the lexicographically
/// smallest route. Throws OracleSizeError above node_limit nodes.
OracleResult optimal_route_bruteforce(const MissionGraph& g, const CostParams& p,
                                      std::size_t node_limit = kOracleNodeLimit);

/// Every feasible path with its evaluation, in enumeration order.
std::vector<Evaluation> evaluate_all_paths(const MissionGraph& g, const CostParams& p,
                                           std::size_t node_limit = kOracleNodeLimit);

}  // namespace routeplan
