#pragma once

#include <utility>
#include <vector>

#include "routeplan/graph.hpp"
#include "routeplan/route.hpp"

namespace routeplan::testing {

inline Task task(double priority, double risk, double completion = 0.0) { return Task{priority, risk, completion}; }

inline std::vector<Waypoint> line_waypoints(int n, double spacing = 1000.0) {
  std::vector<Waypoint> w;
  for (int i = 1; i <= n; ++i) w.push_back({i, {spacing * (i - 1), 0.0, 0.0}});
  return w;
}

inline MissionGraph graph_from_pairs(int n, const std::vector<std::pair<int, int>>& pairs, NodeId start, NodeId dest,
                                     std::vector<Waypoint> waypoints = {}) {
  if (waypoints.empty()) waypoints = line_waypoints(n);
  std::vector<Edge> edges;
  for (auto [a, b] : pairs) edges.push_back({a, b, task(5.0, 2.0, 10.0)});
  return MissionGraph(std::move(waypoints), std::move(edges), start, dest);
}

inline MissionGraph complete_graph(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) pairs.emplace_back(a, b);
  return graph_from_pairs(n, pairs, 1, n);
}

inline MissionGraph two_node_graph() { return graph_from_pairs(2, {{1, 2}}, 1, 2); }

/// The priority vector printed with the 18-node decoding example.
inline PriorityVector decoding_example_priorities() {
  PriorityVector u(18);
  u << 44, -38, 76, -78, 18, 47, 42, 61, 66, -69, -25, -93, 58, -15, 11, -43, 81, 97;
  return u;
}

/// 18 nodes on a 3 x 6 grid. neighbors(1) = {2,3,4,5}; the neighborhoods of
/// 3, 8 and 13 are chosen so the greedy walk reproduces 1,3,8,13,18.
inline MissionGraph decoding_example_graph() {
  std::vector<Waypoint> w;
  for (int i = 1; i <= 18; ++i) {
    const int col = (i - 1) / 3;
    const int row = (i - 1) % 3;
    w.push_back({i, {1500.0 * col, 500.0 * row, 10.0 * row}});
  }
  const std::vector<std::pair<int, int>> pairs = {
      {1, 2},   {1, 3},   {1, 4},   {1, 5},   {3, 7},   {3, 8},   {3, 12},  {8, 13},  {8, 14},
      {13, 17}, {13, 18}, {2, 6},   {4, 9},   {5, 10},  {6, 7},   {9, 10},  {10, 11}, {11, 16},
      {14, 15}, {15, 16}, {16, 17}, {17, 18}, {12, 14}, {6, 11},  {7, 12},
  };
  std::vector<Edge> edges;
  int k = 0;
  for (auto [a, b] : pairs) {
    ++k;
    edges.push_back({a, b, task(1.0 + k % 9, 1.0 + (k * 7) % 10, 30.0 * (k % 4))});
  }
  return MissionGraph(std::move(w), std::move(edges), 1, 18);
}

/// 1 -- 2 -- 3 plus the direct 1 -- 3 chord, start 1, destination 3.
/// The chord is short on priority and heavy on risk.
inline MissionGraph triangle_graph() {
  std::vector<Waypoint> w = {{1, {0.0, 0.0, 0.0}}, {2, {1000.0, 0.0, 0.0}}, {3, {2000.0, 0.0, 0.0}}};
  std::vector<Edge> edges = {
      {1, 2, task(10.0, 1.0, 100.0)},
      {2, 3, task(10.0, 1.0, 100.0)},
      {1, 3, task(1.0, 10.0, 0.0)},
  };
  return MissionGraph(std::move(w), std::move(edges), 1, 3);
}

/// Small graph used for hand-traced decoding (includes a dead end).
inline MissionGraph five_node_graph() {
  return graph_from_pairs(5, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}}, 1, 5);
}

}  // namespace routeplan::testing
