#pragma once
/*
  Instance generators and the Hamiltonian-cycle gadget.

  The gadget replaces every grid vertex by a center and four connectors. All
  coordinates are the textbook construction scaled by 5 so that every
  distance threshold is decided exactly:

    connector offset   1   -> 5
    long connector     1.4 -> 7    (reaches the facing connector next door)
    diagonal pair      sqrt(2) -> 5*sqrt(2)
    center reach       2.4 -> 12   (reaches neighbouring connectors)
    grid spacing       3.4 -> 17
*/
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mtip/core.hpp"

namespace mtip {

enum class Spread { uniform, clustered, geometric };

Spread parse_spread(const std::string& text);
std::string to_string(Spread spread);

// n distinct sorted coordinates, deterministic per (n, seed, spread).
// Geometric gaps grow by a seed-derived ratio in [1.2, 2.0).
Instance gen_random_line(std::size_t n, std::uint64_t seed, Spread spread = Spread::uniform);

// n distinct points in the unit box, deterministic per (n, seed).
Instance gen_random_plane(std::size_t n, std::uint64_t seed);

struct GridPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

// Vertices on the integer lattice with edges exactly between pairs at
// distance 1.
class GridGraph {
 public:
  // Validates: distinct vertices, every edge joins unit-distance vertices,
  // no duplicate edges, and every unit-distance pair is an edge.
  // Throws Error invalid_grid_graph.
  GridGraph(std::vector<GridPoint> vertices, std::vector<std::pair<std::size_t, std::size_t>> edges);

  // All unit-distance pairs become edges.
  static GridGraph induced(std::vector<GridPoint> vertices);
  // w x h block of vertices with corner (0, 0).
  static GridGraph rectangle(std::int64_t width, std::int64_t height);

  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<GridPoint>& vertices() const noexcept { return vertices_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
  bool adjacent(std::size_t a, std::size_t b) const;
  std::size_t degree(std::size_t v) const;

  // Throws Error not_hamiltonian with the reason.
  void check_hamiltonian_cycle(const std::vector<std::size_t>& cycle) const;

 private:
  std::vector<GridPoint> vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> neighbours_;
};

enum class Connector : std::size_t { right = 0, left = 1, top = 2, bottom = 3 };

struct GadgetSet {
  std::size_t center = 0;
  std::array<std::size_t, 4> connectors{};  // indexed by Connector

  std::size_t connector(Connector c) const { return connectors[static_cast<std::size_t>(c)]; }
};

struct Gadget {
  static constexpr std::int64_t kSpacing = 17;
  static constexpr std::int64_t kOffset = 5;
  static constexpr double kShortRange = 5.0;
  static constexpr double kLongRange = 7.0;
  static constexpr double kCenterReach = 12.0;

  GridGraph grid;
  Instance instance;
  // vertex_map[v] lists the 5 point indices of vertex v; set v occupies
  // points 5v .. 5v+4 in the order center, right, left, top, bottom.
  std::vector<GadgetSet> vertex_map;

  std::size_t set_of(std::size_t point) const { return point / 5; }
};

Gadget gen_grid_gadget(const GridGraph& grid);

// Center 5, the connector facing the cycle successor 7, all others 5.
// Throws Error not_hamiltonian.
RangeAssignment gadget_assignment_from_hamiltonian(const Gadget& gadget, const std::vector<std::size_t>& cycle);

// Sum of sender interference over each vertex set.
std::vector<std::size_t> set_sender_interference(const Gadget& gadget, const RangeAssignment& assignment);

struct SetDiagnostic {
  std::size_t vertex = 0;
  std::size_t sender_interference = 0;
  std::size_t long_connectors = 0;  // connectors with 7 <= range < 5*sqrt(2)
  bool center_short = true;         // center range < 12
};

enum class ExtractionFailure {
  none,
  length_mismatch,
  not_strongly_connected,
  total_mismatch,
  set_violation,
  not_hamiltonian,
};

std::string to_string(ExtractionFailure failure);

struct ExtractionResult {
  std::optional<std::vector<std::size_t>> cycle;
  ExtractionFailure failure = ExtractionFailure::none;
  std::string message;
  std::size_t total = 0;
  std::vector<SetDiagnostic> sets;

  bool ok() const noexcept { return cycle.has_value(); }
};

// Reads a Hamiltonian cycle back off a valid assignment of total 9n: each
// set's unique long connector names the successor vertex it reaches.
ExtractionResult extract_hamiltonian_cycle(const Gadget& gadget, const RangeAssignment& assignment);

}  // namespace mtip
