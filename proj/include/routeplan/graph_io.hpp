#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "routeplan/graph.hpp"

namespace routeplan {

/// JSON graph document:
///   {"nodes": [{"id","x","y","z"}...],
///    "edges": [{"a","b","priority","risk_pct","completion_time"}...],
///    "start": id, "destination": id}
/// Throws ParseError naming the offending element.
MissionGraph load_graph(std::string_view text);

/// Canonical serialization; equal graphs give byte-identical output.
std::string save_graph(const MissionGraph& g);

MissionGraph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const MissionGraph& g, const std::filesystem::path& path);

}  // namespace routeplan
