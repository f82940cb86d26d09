#include "mtip/instances.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace mtip {

namespace {

// Portable uniform double in [0, 1) from the top 53 bits.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

[[noreturn]] void bad_grid(const std::string& why) { throw Error("invalid_grid_graph", why); }

[[noreturn]] void not_hamiltonian(const std::string& why) { throw Error("not_hamiltonian", why); }

bool unit_apart(const GridPoint& a, const GridPoint& b) {
  const auto dx = a.x > b.x ? a.x - b.x : b.x - a.x;
  const auto dy = a.y > b.y ? a.y - b.y : b.y - a.y;
  return dx + dy == 1;
}

}  // namespace

Spread parse_spread(const std::string& text) {
  if (text == "uniform") return Spread::uniform;
  if (text == "clustered") return Spread::clustered;
  if (text == "geometric") return Spread::geometric;
  throw Error("bad_spread", "spread must be uniform, clustered or geometric, got '" + text + "'");
}

std::string to_string(Spread spread) {
  switch (spread) {
    case Spread::uniform:
      return "uniform";
    case Spread::clustered:
      return "clustered";
    case Spread::geometric:
      return "geometric";
  }
  return "uniform";
}

Instance gen_random_line(std::size_t n, std::uint64_t seed, Spread spread) {
  if (n == 0) throw Error("empty_instance", "cannot generate an instance with 0 points");
  std::mt19937_64 rng(seed);
  std::vector<double> xs;
  xs.reserve(n);

  if (spread == Spread::geometric) {
    const double ratio = 1.2 + 0.8 * unit(rng);
    double x = 0.0;
    double gap = 1.0;
    xs.push_back(x);
    while (xs.size() < n) {
      x += gap;
      gap *= ratio;
      xs.push_back(x);
    }
    return Instance::line(std::move(xs));
  }

  std::vector<double> centers;
  if (spread == Spread::clustered) {
    const std::size_t clusters = 1 + static_cast<std::size_t>(rng() % std::max<std::size_t>(1, (n + 2) / 3));
    for (std::size_t c = 0; c < clusters; ++c) centers.push_back(unit(rng));
  }
  std::set<double> seen;
  while (xs.size() < n) {
    double x = unit(rng);
    if (spread == Spread::clustered) x = centers[rng() % centers.size()] + 0.02 * (x - 0.5);
    if (seen.insert(x).second) xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  return Instance::line(std::move(xs));
}

Instance gen_random_plane(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error("empty_instance", "cannot generate an instance with 0 points");
  std::mt19937_64 rng(seed);
  std::vector<Point> pts;
  std::set<std::pair<double, double>> seen;
  while (pts.size() < n) {
    const double x = unit(rng);
    const double y = unit(rng);
    if (seen.emplace(x, y).second) pts.push_back({x, y});
  }
  return Instance::plane(std::move(pts));
}

GridGraph::GridGraph(std::vector<GridPoint> vertices, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), neighbours_(vertices_.size()) {
  if (vertices_.empty()) bad_grid("grid graph has no vertices");
  std::set<GridPoint> distinct(vertices_.begin(), vertices_.end());
  if (distinct.size() != vertices_.size()) bad_grid("grid graph has duplicate vertices");

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [a, b] : edges_) {
    if (a >= size() || b >= size()) bad_grid("edge endpoint out of range");
    if (!unit_apart(vertices_[a], vertices_[b])) {
      bad_grid("edge " + std::to_string(a) + "-" + std::to_string(b) + " does not join unit-distance vertices");
    }
    if (!seen.emplace(std::min(a, b), std::max(a, b)).second) bad_grid("duplicate edge");
    neighbours_[a].push_back(b);
    neighbours_[b].push_back(a);
  }
  // Gadget geometry cannot tell an omitted unit edge from a present one.
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = a + 1; b < size(); ++b) {
      if (unit_apart(vertices_[a], vertices_[b]) && !seen.count({a, b})) {
        bad_grid("unit-distance vertices " + std::to_string(a) + " and " + std::to_string(b) + " are not joined");
      }
    }
  }
}

GridGraph GridGraph::induced(std::vector<GridPoint> vertices) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (unit_apart(vertices[a], vertices[b])) edges.emplace_back(a, b);
    }
  }
  return GridGraph(std::move(vertices), std::move(edges));
}

GridGraph GridGraph::rectangle(std::int64_t width, std::int64_t height) {
  if (width <= 0 || height <= 0) bad_grid("rectangle sides must be positive");
  std::vector<GridPoint> vertices;
  for (std::int64_t y = 0; y < height; ++y) {
    for (std::int64_t x = 0; x < width; ++x) vertices.push_back({x, y});
  }
  return induced(std::move(vertices));
}

bool GridGraph::adjacent(std::size_t a, std::size_t b) const {
  const auto& nb = neighbours_.at(a);
  return std::find(nb.begin(), nb.end(), b) != nb.end();
}

std::size_t GridGraph::degree(std::size_t v) const { return neighbours_.at(v).size(); }

void GridGraph::check_hamiltonian_cycle(const std::vector<std::size_t>& cycle) const {
  for (std::size_t v = 0; v < size(); ++v) {
    if (degree(v) < 2) not_hamiltonian("vertex " + std::to_string(v) + " has degree < 2");
  }
  if (cycle.size() != size()) {
    not_hamiltonian("cycle visits " + std::to_string(cycle.size()) + " vertices, graph has " + std::to_string(size()));
  }
  std::vector<bool> visited(size(), false);
  for (std::size_t v : cycle) {
    if (v >= size()) not_hamiltonian("cycle vertex " + std::to_string(v) + " out of range");
    if (visited[v]) not_hamiltonian("cycle repeats vertex " + std::to_string(v));
    visited[v] = true;
  }
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const std::size_t a = cycle[i];
    const std::size_t b = cycle[(i + 1) % cycle.size()];
    if (!adjacent(a, b)) {
      not_hamiltonian("consecutive vertices " + std::to_string(a) + " and " + std::to_string(b) + " are not adjacent");
    }
  }
}

Gadget gen_grid_gadget(const GridGraph& grid) {
  constexpr std::int64_t s = Gadget::kSpacing;
  constexpr std::int64_t o = Gadget::kOffset;
  std::vector<Point> pts;
  std::vector<GadgetSet> sets;
  pts.reserve(5 * grid.size());
  for (const auto& v : grid.vertices()) {
    const auto cx = static_cast<double>(s * v.x);
    const auto cy = static_cast<double>(s * v.y);
    const std::size_t base = pts.size();
    pts.push_back({cx, cy});
    pts.push_back({cx + o, cy});
    pts.push_back({cx - o, cy});
    pts.push_back({cx, cy + o});
    pts.push_back({cx, cy - o});
    sets.push_back({base, {base + 1, base + 2, base + 3, base + 4}});
  }
  return Gadget{grid, Instance::plane(std::move(pts)), std::move(sets)};
}

RangeAssignment gadget_assignment_from_hamiltonian(const Gadget& gadget, const std::vector<std::size_t>& cycle) {
  const GridGraph& grid = gadget.grid;
  grid.check_hamiltonian_cycle(cycle);
  RangeAssignment out;
  out.ranges.assign(gadget.instance.size(), Gadget::kShortRange);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const std::size_t v = cycle[i];
    const std::size_t next = cycle[(i + 1) % cycle.size()];
    const GridPoint a = grid.vertices()[v];
    const GridPoint b = grid.vertices()[next];
    Connector facing = Connector::right;
    if (b.x == a.x - 1) {
      facing = Connector::left;
    } else if (b.y == a.y + 1) {
      facing = Connector::top;
    } else if (b.y == a.y - 1) {
      facing = Connector::bottom;
    }
    out.ranges[gadget.vertex_map[v].connector(facing)] = Gadget::kLongRange;
  }
  return out;
}

std::vector<std::size_t> set_sender_interference(const Gadget& gadget, const RangeAssignment& assignment) {
  const CommGraph g = build_comm_graph(gadget.instance, assignment);
  std::vector<std::size_t> si(gadget.vertex_map.size(), 0);
  for (std::size_t p = 0; p < g.size(); ++p) si[gadget.set_of(p)] += g.successors(p).size();
  return si;
}

std::string to_string(ExtractionFailure failure) {
  switch (failure) {
    case ExtractionFailure::none:
      return "none";
    case ExtractionFailure::length_mismatch:
      return "length_mismatch";
    case ExtractionFailure::not_strongly_connected:
      return "not_strongly_connected";
    case ExtractionFailure::total_mismatch:
      return "total_mismatch";
    case ExtractionFailure::set_violation:
      return "set_violation";
    case ExtractionFailure::not_hamiltonian:
      return "not_hamiltonian";
  }
  return "unknown";
}

ExtractionResult extract_hamiltonian_cycle(const Gadget& gadget, const RangeAssignment& assignment) {
  ExtractionResult res;
  const std::size_t n = gadget.vertex_map.size();
  auto fail = [&res](ExtractionFailure why, std::string message) {
    res.failure = why;
    res.message = std::move(message);
    return res;
  };
  if (assignment.size() != gadget.instance.size()) {
    return fail(ExtractionFailure::length_mismatch, "assignment length does not match the gadget");
  }

  const CommGraph g = build_comm_graph(gadget.instance, assignment);
  res.total = g.edge_count();
  const double diagonal = std::sqrt(2.0 * Gadget::kOffset * Gadget::kOffset);
  for (std::size_t v = 0; v < n; ++v) {
    const GadgetSet& set = gadget.vertex_map[v];
    SetDiagnostic d;
    d.vertex = v;
    d.sender_interference = g.successors(set.center).size();
    d.center_short = assignment[set.center] < Gadget::kCenterReach;
    for (std::size_t c : set.connectors) {
      d.sender_interference += g.successors(c).size();
      if (assignment[c] >= Gadget::kLongRange && assignment[c] < diagonal) ++d.long_connectors;
    }
    res.sets.push_back(d);
  }

  if (!is_strongly_connected(g)) {
    return fail(ExtractionFailure::not_strongly_connected, "assignment is not valid: graph not strongly connected");
  }
  if (res.total != 9 * n) {
    std::string heavy;
    for (const auto& d : res.sets) {
      if (d.sender_interference > 9) heavy += " " + std::to_string(d.vertex);
    }
    return fail(ExtractionFailure::total_mismatch,
                "total interference " + std::to_string(res.total) + " != 9n = " + std::to_string(9 * n) +
                    (heavy.empty() ? "" : "; sets above 9:" + heavy));
  }

  std::vector<std::size_t> successor(n, n);
  for (const auto& d : res.sets) {
    if (!d.center_short || d.long_connectors != 1) {
      return fail(ExtractionFailure::set_violation,
                  "set " + std::to_string(d.vertex) + " has " + std::to_string(d.long_connectors) +
                      " long connectors" + (d.center_short ? "" : " and a long center"));
    }
    const GadgetSet& set = gadget.vertex_map[d.vertex];
    std::set<std::size_t> reached;
    for (std::size_t c : set.connectors) {
      for (std::size_t q : g.successors(c)) {
        if (gadget.set_of(q) != d.vertex) reached.insert(gadget.set_of(q));
      }
    }
    if (reached.size() != 1) {
      return fail(ExtractionFailure::set_violation,
                  "set " + std::to_string(d.vertex) + " reaches " + std::to_string(reached.size()) + " other sets");
    }
    successor[d.vertex] = *reached.begin();
  }

  std::vector<std::size_t> cycle;
  std::vector<bool> visited(n, false);
  std::size_t v = 0;
  while (!visited[v]) {
    visited[v] = true;
    cycle.push_back(v);
    v = successor[v];
  }
  if (v != 0 || cycle.size() != n) {
    return fail(ExtractionFailure::not_hamiltonian, "long connectors form a cycle of length " +
                                                        std::to_string(cycle.size()) + " instead of " + std::to_string(n));
  }
  try {
    gadget.grid.check_hamiltonian_cycle(cycle);
  } catch (const Error& e) {
    return fail(ExtractionFailure::not_hamiltonian, e.what());
  }
  res.cycle = std::move(cycle);
  return res;
}

}  // namespace mtip
