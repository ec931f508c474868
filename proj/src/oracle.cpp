#include "routeplan/oracle.hpp"

#include <limits>
#include <string>

#include "routeplan/error.hpp"

namespace routeplan {

namespace {

class PathWalker {
 public:
  PathWalker(const MissionGraph& g, std::size_t max_nodes, double time_budget, double speed, const PathVisitor& visit)
      : g_(g), max_nodes_(max_nodes), budget_(time_budget), speed_(speed), visit_(visit),
        on_path_(g.node_count() + 1, 0) {}

  void run() {
    if (max_nodes_ < 2) return;
    push(g_.start());
    walk(g_.start(), 0.0);
  }

 private:
  void push(NodeId v) {
    path_.push_back(v);
    on_path_[static_cast<std::size_t>(v)] = 1;
  }

  void pop() {
    on_path_[static_cast<std::size_t>(path_.back())] = 0;
    path_.pop_back();
  }

  void walk(NodeId at, double elapsed) {
    for (NodeId next : g_.neighbors(at)) {
      if (on_path_[static_cast<std::size_t>(next)]) continue;
      const auto idx = static_cast<std::size_t>(g_.edge_index(at, next));
      const double t = elapsed + traversal_time(g_.edge_length(idx), speed_, g_.edges()[idx].task);
      if (t > budget_) continue;
      push(next);
      if (next == g_.destination())
        visit_(path_);
      else if (path_.size() < max_nodes_)
        walk(next, t);
      pop();
    }
  }

  const MissionGraph& g_;
  std::size_t max_nodes_;
  double budget_;
  double speed_;
  const PathVisitor& visit_;
  std::vector<NodeId> path_;
  std::vector<char> on_path_;
};

void check_size(const MissionGraph& g, std::size_t node_limit) {
  if (g.node_count() > node_limit)
    throw OracleSizeError("graph has " + std::to_string(g.node_count()) + " nodes; exhaustive search is limited to " +
                          std::to_string(node_limit));
}

}  // namespace

void for_each_simple_path(const MissionGraph& g, std::size_t max_nodes, const PathVisitor& visit) {
  PathWalker(g, max_nodes, std::numeric_limits<double>::infinity(), 1.0, visit).run();
}

std::vector<Route> enumerate_simple_paths(const MissionGraph& g, std::size_t max_nodes) {
  std::vector<Route> out;
  for_each_simple_path(g, max_nodes, [&](std::span<const NodeId> path) {
    out.push_back(Route{{path.begin(), path.end()}});
  });
  return out;
}

OracleResult optimal_route_bruteforce(const MissionGraph& g, const CostParams& p, std::size_t node_limit) {
  check_size(g, node_limit);
  validate(p);
  OracleResult result;
  PathWalker(g, g.node_count(), p.t_available, p.v_auv, [&](std::span<const NodeId> path) {
    ++result.n_paths_enumerated;
    auto e = evaluate(Route{{path.begin(), path.end()}}, g, p);
    if (!e.feasible()) return;
    if (!result.best || e.objective < result.best->objective ||
        (e.objective == result.best->objective && e.route < result.best->route))
      result.best = std::move(e);
  }).run();
  return result;
}

std::vector<Evaluation> evaluate_all_paths(const MissionGraph& g, const CostParams& p, std::size_t node_limit) {
  check_size(g, node_limit);
  validate(p);
  std::vector<Evaluation> out;
  PathWalker(g, g.node_count(), p.t_available, p.v_auv, [&](std::span<const NodeId> path) {
    out.push_back(evaluate(Route{{path.begin(), path.end()}}, g, p));
  }).run();
  return out;
}

}  // namespace routeplan
