#include "mtip/io.hpp"

#include <fstream>
#include <sstream>

namespace mtip::io {

namespace {

[[noreturn]] void parse_error(const std::string& why) { throw Error("parse_error", why); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) parse_error(where + " must be a number");
  return v.get<double>();
}

std::size_t index(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) parse_error(where + " must be a non-negative integer");
  return v.get<std::size_t>();
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("io_error", "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    parse_error(path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const json& value) {
  std::ofstream out(path);
  if (!out) throw Error("io_error", "cannot write " + path.string());
  out << value.dump(2) << '\n';
  if (!out) throw Error("io_error", "failed writing " + path.string());
}

ValidatedInstance parse_instance(const json& j) {
  const json& dim = field(j, "dim");
  if (!dim.is_number_integer()) parse_error("'dim' must be 1 or 2");
  const json& pts = field(j, "points");
  if (!pts.is_array()) parse_error("'points' must be an array");
  std::vector<std::vector<double>> raw;
  raw.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!pts[i].is_array()) parse_error("point " + std::to_string(i) + " must be an array");
    std::vector<double> c;
    for (const auto& v : pts[i]) c.push_back(number(v, "coordinate of point " + std::to_string(i)));
    raw.push_back(std::move(c));
  }
  return validate_instance(raw, dim.get<int>());
}

json instance_to_json(const Instance& instance) {
  json pts = json::array();
  for (const auto& p : instance.points()) {
    pts.push_back(instance.dimension() == 1 ? json::array({p.x}) : json::array({p.x, p.y}));
  }
  return {{"dim", instance.dimension()}, {"points", std::move(pts)}};
}

ValidatedInstance load_instance(const std::filesystem::path& path) { return parse_instance(read_json(path)); }

RangeAssignment parse_assignment(const json& j) {
  const json& ranges = field(j, "ranges");
  if (!ranges.is_array()) parse_error("'ranges' must be an array");
  RangeAssignment out;
  for (std::size_t i = 0; i < ranges.size(); ++i) out.ranges.push_back(number(ranges[i], "range " + std::to_string(i)));
  return out;
}

json assignment_to_json(const RangeAssignment& assignment) { return {{"ranges", assignment.ranges}}; }

GridFile parse_grid(const json& j) {
  const json& verts = field(j, "vertices");
  const json& edges = field(j, "edges");
  if (!verts.is_array() || !edges.is_array()) parse_error("'vertices' and 'edges' must be arrays");
  std::vector<GridPoint> vertices;
  for (const auto& v : verts) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer()) {
      parse_error("grid vertices must be [x, y] integer pairs");
    }
    vertices.push_back({v[0].get<std::int64_t>(), v[1].get<std::int64_t>()});
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) parse_error("grid edges must be [i, j] pairs");
    pairs.emplace_back(index(e[0], "edge endpoint"), index(e[1], "edge endpoint"));
  }
  GridFile out{GridGraph(std::move(vertices), std::move(pairs)), std::nullopt};
  if (j.contains("cycle")) {
    if (!j["cycle"].is_array()) parse_error("'cycle' must be an array");
    std::vector<std::size_t> cycle;
    for (const auto& v : j["cycle"]) cycle.push_back(index(v, "cycle vertex"));
    out.cycle = std::move(cycle);
  }
  return out;
}

json grid_to_json(const GridGraph& graph, const std::optional<std::vector<std::size_t>>& cycle) {
  json verts = json::array();
  for (const auto& v : graph.vertices()) verts.push_back({v.x, v.y});
  json edges = json::array();
  for (const auto& [a, b] : graph.edges()) edges.push_back({a, b});
  json out = {{"vertices", std::move(verts)}, {"edges", std::move(edges)}};
  if (cycle) out["cycle"] = *cycle;
  return out;
}

std::vector<Edge> parse_edges(const json& j) {
  const json& edges = field(j, "edges");
  if (!edges.is_array()) parse_error("'edges' must be an array");
  std::vector<Edge> out;
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) parse_error("edges must be [src, dst] pairs");
    out.push_back({index(e[0], "edge source"), index(e[1], "edge target")});
  }
  return out;
}

json edges_to_json(const std::vector<Edge>& edges) {
  json arr = json::array();
  for (const auto& e : edges) arr.push_back({e.from, e.to});
  return {{"edges", std::move(arr)}};
}

std::string to_dot(std::span<const Point> positions, const CommGraph& graph) {
  std::ostringstream os;
  os << "digraph comm {\n  node [shape=circle];\n";
  for (std::size_t v = 0; v < positions.size(); ++v) {
    const Point& p = positions[v];
    os << "  " << v << " [pos=\"" << fmt(p.x) << ',' << fmt(p.y) << "!\"];\n";
  }
  for (const auto& e : graph.edges()) os << "  " << e.from << " -> " << e.to << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace mtip::io
