#pragma once
/*
  File formats:

    instance    {"dim": 1|2, "points": [[x] | [x, y], ...]}
    assignment  {"ranges": [r0, r1, ...]}
    grid graph  {"vertices": [[x, y], ...], "edges": [[i, j], ...], "cycle": [v, ...]?}
    edge list   {"edges": [[src, dst], ...]}

  Doubles are written with round-trip precision, so reloading an emitted
  file reproduces the exact values.
*/
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "mtip/core.hpp"
#include "mtip/instances.hpp"

namespace mtip::io {

using json = nlohmann::json;

json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const json& value);

// Throws Error parse_error on schema violations, then the validation errors.
ValidatedInstance parse_instance(const json& j);
json instance_to_json(const Instance& instance);
ValidatedInstance load_instance(const std::filesystem::path& path);

RangeAssignment parse_assignment(const json& j);
json assignment_to_json(const RangeAssignment& assignment);

struct GridFile {
  GridGraph graph;
  std::optional<std::vector<std::size_t>> cycle;
};

GridFile parse_grid(const json& j);
json grid_to_json(const GridGraph& graph, const std::optional<std::vector<std::size_t>>& cycle = std::nullopt);

std::vector<Edge> parse_edges(const json& j);
json edges_to_json(const std::vector<Edge>& edges);

// Graphviz digraph; node v is pinned at positions[v].
std::string to_dot(std::span<const Point> positions, const CommGraph& graph);

}  // namespace mtip::io
