#include <filesystem>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "fixtures.hpp"
#include "routeplan/error.hpp"
#include "routeplan/graph.hpp"
#include "routeplan/graph_io.hpp"

using namespace routeplan;
using namespace routeplan::testing;

TEST(Distance, IdenticalPointsAreZeroApart) {
  EXPECT_DOUBLE_EQ(euclidean_distance(Eigen::Vector3d(5, 5, 5), Eigen::Vector3d(5, 5, 5)), 0.0);
}

TEST(Distance, PythagoreanTriples) {
  EXPECT_DOUBLE_EQ(euclidean_distance(Eigen::Vector3d(0, 0, 0), Eigen::Vector3d(3, 4, 0)), 5.0);
  EXPECT_DOUBLE_EQ(euclidean_distance(Eigen::Vector3d(1, 2, 3), Eigen::Vector3d(4, 6, 15)), 13.0);
}

TEST(Distance, WaypointOverloadAndExpressions) {
  Waypoint a{1, {0, 0, 0}};
  Waypoint b{2, {3, 4, 0}};
  EXPECT_DOUBLE_EQ(euclidean_distance(a, b), 5.0);
  // Works on arbitrary dense expressions, not just stored vectors.
  EXPECT_DOUBLE_EQ(euclidean_distance(2.0 * a.position, b.position * 2.0), 10.0);
}

TEST(TraversalTime, TravelPlusTask) {
  EXPECT_DOUBLE_EQ(traversal_time(100, 2, task(1, 1, 30)), 80.0);
  EXPECT_DOUBLE_EQ(traversal_time(0, 1, task(1, 1, 0)), 0.0);
  EXPECT_DOUBLE_EQ(traversal_time(500, 2.5, task(1, 1, 0)), 200.0);
}

TEST(TraversalTime, RejectsNonPositiveSpeed) {
  EXPECT_THROW(traversal_time(10, 0, task(1, 1)), InvalidParameter);
  EXPECT_THROW(traversal_time(10, -1, task(1, 1)), InvalidParameter);
}

TEST(MissionGraph, NeighborsOfDecodingFixtureStart) {
  const auto g = decoding_example_graph();
  const auto nb = g.neighbors(1);
  EXPECT_EQ(std::vector<NodeId>(nb.begin(), nb.end()), (std::vector<NodeId>{2, 3, 4, 5}));
}

TEST(MissionGraph, IsolatedNodeHasNoNeighbors) {
  const auto g = graph_from_pairs(3, {{1, 3}}, 1, 3);
  EXPECT_TRUE(g.neighbors(2).empty());
}

TEST(MissionGraph, PathGraphMiddleNode) {
  const auto g = graph_from_pairs(3, {{1, 2}, {2, 3}}, 1, 3);
  const auto nb = g.neighbors(2);
  EXPECT_EQ(std::vector<NodeId>(nb.begin(), nb.end()), (std::vector<NodeId>{1, 3}));
}

TEST(MissionGraph, UnknownNodeThrows) {
  const auto g = two_node_graph();
  EXPECT_THROW(g.neighbors(0), InvalidParameter);
  EXPECT_THROW(g.neighbors(3), InvalidParameter);
  EXPECT_FALSE(g.has_edge(1, 7));
}

TEST(MissionGraph, EdgeLookupIsSymmetric) {
  const auto g = triangle_graph();
  EXPECT_EQ(g.edge_index(1, 3), g.edge_index(3, 1));
  EXPECT_DOUBLE_EQ(g.edge_length(static_cast<std::size_t>(g.edge_index(1, 3))), 2000.0);
  EXPECT_EQ(g.adjacency().count(), 6);
}

TEST(MissionGraph, RejectsBadInput) {
  auto w = line_waypoints(3);
  EXPECT_THROW(MissionGraph(w, {{1, 1, task(1, 1)}}, 1, 3), InvalidParameter);
  EXPECT_THROW(MissionGraph(w, {{1, 2, task(1, 1)}, {2, 1, task(1, 1)}}, 1, 3), InvalidParameter);
  EXPECT_THROW(MissionGraph(w, {{1, 4, task(1, 1)}}, 1, 3), InvalidParameter);
  EXPECT_THROW(MissionGraph(w, {}, 1, 1), InvalidParameter);
  EXPECT_THROW(MissionGraph(w, {{1, 2, task(0, 1)}}, 1, 3), InvalidParameter);
  EXPECT_THROW(MissionGraph(w, {{1, 2, task(1, 101)}}, 1, 3), InvalidParameter);
  auto bad = w;
  bad[1].position.z() = -1;
  EXPECT_THROW(MissionGraph(bad, {}, 1, 3), InvalidParameter);
  bad = w;
  bad[2].id = 7;
  EXPECT_THROW(MissionGraph(bad, {}, 1, 3), InvalidParameter);
}

TEST(MissionGraph, TinyRiskIsRaisedToFloor) {
  const MissionGraph g(line_waypoints(2), {{1, 2, task(1, 0.01)}}, 1, 2);
  EXPECT_DOUBLE_EQ(g.edges()[0].task.risk_pct, kMinRiskPct);
}

TEST(Generator, SameSeedSameGraph) {
  ScenarioConfig cfg;
  cfg.seed = 42;
  EXPECT_EQ(generate_scenario(cfg), generate_scenario(cfg));
  auto other = cfg;
  other.seed = 43;
  EXPECT_FALSE(generate_scenario(cfg) == generate_scenario(other));
}

TEST(Generator, TwentyWaypointsByDefault) {
  const auto g = generate_scenario(ScenarioConfig{});
  EXPECT_EQ(g.node_count(), 20u);
  EXPECT_EQ(g.start(), 1);
  EXPECT_EQ(g.destination(), 20);
  EXPECT_TRUE(connected(g));
}

TEST(Generator, ThousandNodesStayInsideVolume) {
  ScenarioConfig cfg;
  cfg.n_nodes = 1000;
  cfg.edge_density = 0.01;
  cfg.seed = 9;
  const auto g = generate_scenario(cfg);
  ASSERT_EQ(g.node_count(), 1000u);
  for (const auto& w : g.waypoints()) {
    EXPECT_GE(w.x(), 0.0);
    EXPECT_LE(w.x(), cfg.area_x);
    EXPECT_GE(w.y(), 0.0);
    EXPECT_LE(w.y(), cfg.area_y);
    EXPECT_GE(w.z(), 0.0);
    EXPECT_LE(w.z(), cfg.depth);
  }
}

TEST(Generator, TaskValuesWithinRanges) {
  ScenarioConfig cfg;
  cfg.seed = 3;
  const auto g = generate_scenario(cfg);
  for (const auto& e : g.edges()) {
    EXPECT_GE(e.task.priority, cfg.priority_range.first);
    EXPECT_LE(e.task.priority, cfg.priority_range.second);
    EXPECT_GT(e.task.risk_pct, cfg.risk_range.first);
    EXPECT_LE(e.task.risk_pct, cfg.risk_range.second);
    EXPECT_GE(e.task.completion_time, cfg.task_time_range.first);
    EXPECT_LE(e.task.completion_time, cfg.task_time_range.second);
  }
}

TEST(Generator, DensityControlsEdgeCount) {
  ScenarioConfig cfg;
  cfg.n_nodes = 50;
  cfg.edge_density = 0.977;
  const auto g = generate_scenario(cfg);
  EXPECT_NEAR(static_cast<double>(g.edge_count()), 1197.0, 40.0);
}

TEST(Generator, RejectsBadConfig) {
  ScenarioConfig cfg;
  cfg.n_nodes = -5;
  EXPECT_THROW(generate_scenario(cfg), InvalidParameter);
  cfg = {};
  cfg.edge_density = 0.0;
  EXPECT_THROW(generate_scenario(cfg), InvalidParameter);
  cfg = {};
  cfg.risk_range = {5.0, 2.0};
  EXPECT_THROW(generate_scenario(cfg), InvalidParameter);
}

TEST(GraphIo, RoundTripFiveNodes) {
  const auto g = five_node_graph();
  const auto text = save_graph(g);
  const auto back = load_graph(text);
  EXPECT_EQ(back, g);
  EXPECT_EQ(save_graph(back), text);
}

TEST(GraphIo, RoundTripGeneratedFile) {
  ScenarioConfig cfg;
  cfg.seed = 11;
  const auto g = generate_scenario(cfg);
  const auto path = std::filesystem::temp_directory_path() / "routeplan_graph_io_test.json";
  write_graph_file(g, path);
  EXPECT_EQ(read_graph_file(path), g);
  std::filesystem::remove(path);
}

TEST(GraphIo, UnknownNodeIsParseError) {
  auto doc = nlohmann::json::parse(save_graph(five_node_graph()));
  doc["edges"].push_back({{"a", 1}, {"b", 99}, {"priority", 1}, {"risk_pct", 1}, {"completion_time", 0}});
  try {
    load_graph(doc.dump());
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("99"), std::string::npos);
  }
}

TEST(GraphIo, ZeroRiskIsRejected) {
  auto doc = nlohmann::json::parse(save_graph(two_node_graph()));
  doc["edges"][0]["risk_pct"] = 0;
  EXPECT_THROW(load_graph(doc.dump()), ParseError);
}

TEST(GraphIo, MalformedDocuments) {
  EXPECT_THROW(load_graph("not json"), ParseError);
  EXPECT_THROW(load_graph("[]"), ParseError);
  EXPECT_THROW(load_graph(R"({"nodes": []})"), ParseError);
  auto doc = nlohmann::json::parse(save_graph(two_node_graph()));
  doc["start"] = 2;
  EXPECT_THROW(load_graph(doc.dump()), ParseError);
}

TEST(GraphIo, MissingFileThrows) {
  EXPECT_THROW(read_graph_file("/nonexistent/dir/graph.json"), std::ios_base::failure);
}
