#include "routeplan/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "routeplan/error.hpp"

namespace routeplan {

using nlohmann::json;

namespace {

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing field '" + key + "'");
  return *it;
}

double number(const json& obj, const char* key, const std::string& where) {
  const auto& v = require(obj, key, where);
  if (!v.is_number()) throw ParseError(where + ": field '" + key + "' must be a number");
  return v.get<double>();
}

NodeId node_id(const json& obj, const char* key, const std::string& where) {
  const auto& v = require(obj, key, where);
  if (!v.is_number_integer()) throw ParseError(where + ": field '" + key + "' must be an integer node id");
  return v.get<NodeId>();
}

}  // namespace

MissionGraph load_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("graph file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("graph document must be a JSON object");

  const auto& nodes = require(doc, "nodes", "graph");
  const auto& edges = require(doc, "edges", "graph");
  if (!nodes.is_array()) throw ParseError("graph: 'nodes' must be an array");
  if (!edges.is_array()) throw ParseError("graph: 'edges' must be an array");

  std::vector<Waypoint> waypoints;
  waypoints.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto where = "node #" + std::to_string(i);
    if (!nodes[i].is_object()) throw ParseError(where + ": must be an object");
    Waypoint w;
    w.id = node_id(nodes[i], "id", where);
    w.position = {number(nodes[i], "x", where), number(nodes[i], "y", where), number(nodes[i], "z", where)};
    waypoints.push_back(w);
  }

  const auto n = static_cast<NodeId>(waypoints.size());
  std::vector<char> seen_id(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& w : waypoints) {
    if (w.id < 1 || w.id > n)
      throw ParseError("node " + std::to_string(w.id) + ": id outside 1.." + std::to_string(n));
    if (seen_id[static_cast<std::size_t>(w.id)]++) throw ParseError("node " + std::to_string(w.id) + ": duplicate id");
  }

  std::vector<Edge> parsed_edges;
  parsed_edges.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto where = "edge #" + std::to_string(i);
    if (!edges[i].is_object()) throw ParseError(where + ": must be an object");
    Edge e;
    e.a = node_id(edges[i], "a", where);
    e.b = node_id(edges[i], "b", where);
    e.task.priority = number(edges[i], "priority", where);
    e.task.risk_pct = number(edges[i], "risk_pct", where);
    e.task.completion_time = number(edges[i], "completion_time", where);
    const auto label = where + " (" + std::to_string(e.a) + "-" + std::to_string(e.b) + ")";
    if (e.a < 1 || e.a > n) throw ParseError(label + ": unknown node " + std::to_string(e.a));
    if (e.b < 1 || e.b > n) throw ParseError(label + ": unknown node " + std::to_string(e.b));
    if (!(e.task.risk_pct > 0.0)) throw ParseError(label + ": risk_pct must be positive");
    parsed_edges.push_back(e);
  }

  const NodeId start = node_id(doc, "start", "graph");
  const NodeId destination = node_id(doc, "destination", "graph");
  try {
    return MissionGraph(std::move(waypoints), std::move(parsed_edges), start, destination);
  } catch (const InvalidParameter& e) {
    throw ParseError(e.what());
  }
}

std::string save_graph(const MissionGraph& g) {
  json nodes = json::array();
  for (const auto& w : g.waypoints()) nodes.push_back({{"id", w.id}, {"x", w.x()}, {"y", w.y()}, {"z", w.z()}});
  json edges = json::array();
  for (const auto& e : g.edges()) {
    edges.push_back({{"a", e.a},
                     {"b", e.b},
                     {"priority", e.task.priority},
                     {"risk_pct", e.task.risk_pct},
                     {"completion_time", e.task.completion_time}});
  }
  json doc = {{"nodes", std::move(nodes)},
              {"edges", std::move(edges)},
              {"start", g.start()},
              {"destination", g.destination()}};
  return doc.dump(1) + "\n";
}

MissionGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open graph file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_graph(ss.str());
}

void write_graph_file(const MissionGraph& g, const std::filesystem::path& path) {
  const auto text = save_graph(g);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::ios_base::failure("cannot write graph file " + path.string());
  out << text;
  if (!out) throw std::ios_base::failure("write failed for " + path.string());
}

}  // namespace routeplan
