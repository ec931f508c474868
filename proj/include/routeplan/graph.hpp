#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace routeplan {

/// 1-based waypoint index.
using NodeId = int;

struct Waypoint {
  NodeId id = 0;
  Eigen::Vector3d position = Eigen::Vector3d::Zero();  // x, y, z (depth >= 0), meters

  double x() const { return position.x(); }
  double y() const { return position.y(); }
  double z() const { return position.z(); }

  bool operator==(const Waypoint& other) const {
    return id == other.id && position == other.position;
  }
};

struct Task {
  double priority = 1.0;         // > 0
  double risk_pct = 1.0;         // percent, (0, 100]
  double completion_time = 0.0;  // seconds

  bool operator==(const Task&) const = default;
};

struct Edge {
  NodeId a = 0;
  NodeId b = 0;
  Task task;

  bool operator==(const Edge&) const = default;
};

/// Smallest risk percentage a task may carry; lower positive values are
/// raised to this so that priority / risk stays bounded.
inline constexpr double kMinRiskPct = 0.1;

template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar euclidean_distance(const Eigen::MatrixBase<DerivedA>& a,
                                             const Eigen::MatrixBase<DerivedB>& b) {
  return (b - a).norm();
}

inline double euclidean_distance(const Waypoint& a, const Waypoint& b) {
  return euclidean_distance(a.position, b.position);
}

/// Time to cross an edge of length `distance` at `speed` and then complete
/// the edge's task. Throws InvalidParameter for non-positive speed.
double traversal_time(double distance, double speed, const Task& task);

/// Undirected, task-labeled waypoint graph. Immutable after construction.
class MissionGraph {
 public:
  /// Validates ids (contiguous 1..n in any order), endpoints, duplicate edges
  /// and task ranges. Throws InvalidParameter describing the first problem.
  MissionGraph(std::vector<Waypoint> waypoints, std::vector<Edge> edges, NodeId start,
               NodeId destination);

  std::size_t node_count() const { return waypoints_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  NodeId start() const { return start_; }
  NodeId destination() const { return destination_; }

  bool contains(NodeId id) const { return id >= 1 && id <= static_cast<NodeId>(waypoints_.size()); }

  const Waypoint& waypoint(NodeId id) const { return waypoints_[static_cast<std::size_t>(id - 1)]; }
  std::span<const Waypoint> waypoints() const { return waypoints_; }
  std::span<const Edge> edges() const { return edges_; }

  /// Adjacent nodes in ascending id order. Throws InvalidParameter on unknown id.
  std::span<const NodeId> neighbors(NodeId id) const;

  bool has_edge(NodeId a, NodeId b) const { return edge_index(a, b) >= 0; }

  /// Index into edges(), or -1 when a and b are not adjacent (or invalid).
  int edge_index(NodeId a, NodeId b) const {
    if (!contains(a) || !contains(b)) return -1;
    return edge_lookup_(a - 1, b - 1);
  }

  /// Euclidean length of edges()[index].
  double edge_length(std::size_t index) const { return edge_lengths_[index]; }

  /// Symmetric boolean adjacency matrix, row/col i is node i+1.
  Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> adjacency() const {
    return (edge_lookup_.array() >= 0).matrix();
  }

  bool operator==(const MissionGraph& other) const {
    return waypoints_ == other.waypoints_ && edges_ == other.edges_ && start_ == other.start_ &&
           destination_ == other.destination_;
  }

 private:
  std::vector<Waypoint> waypoints_;
  std::vector<Edge> edges_;
  NodeId start_;
  NodeId destination_;
  Eigen::MatrixXi edge_lookup_;
  std::vector<std::vector<NodeId>> neighbors_;
  std::vector<double> edge_lengths_;
};

/// True when destination is reachable from start.
bool connected(const MissionGraph& g);

struct ScenarioConfig {
  int n_nodes = 20;
  double area_x = 10000.0;
  double area_y = 1000.0;
  double depth = 100.0;
  double edge_density = 0.5;
  std::pair<double, double> priority_range{1.0, 10.0};
  std::pair<double, double> risk_range{1.0, 10.0};
  std::pair<double, double> task_time_range{60.0, 600.0};
  std::uint64_t seed = 1;
};

/// Throws InvalidParameter naming the first bad field.
void validate(const ScenarioConfig& cfg);

/// Random scenario: Gaussian-perturbed lattice positions filling the volume,
/// Bernoulli(edge_density) edges plus a random start-to-destination spanning
/// path. Start is node 1 and destination node n. Deterministic in cfg.seed.
MissionGraph generate_scenario(const ScenarioConfig& cfg);

}  // namespace routeplan
