#pragma once

#include <cstddef>
#include <vector>

#include "mtip/core.hpp"

namespace mtip {

struct Arborescence {
  static constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

  std::size_t root = 0;
  // parent[root] == kNoParent.
  std::vector<std::size_t> parent;
  Weight weight = 0;

  // parent(v) -> v for every non-root v, ordered by v.
  std::vector<Edge> edges() const;
};

// Minimum-weight spanning out-arborescence by Chu-Liu/Edmonds cycle
// contraction on a dense matrix, O(n^3) worst case. Among equal-weight
// incoming edges the lowest source index wins.
// Throws Error index_out_of_range, unreachable.
Arborescence min_arborescence(const WeightedDigraph& g, std::size_t root);

struct SinkTree {
  std::size_t root = 0;
  // v -> next hop toward the root, ordered by v.
  std::vector<Edge> edges;
  Weight weight = 0;
};

// Minimum sink tree of g: the out-arborescence of the inverted digraph with
// every edge reversed.
SinkTree min_sink_tree(const WeightedDigraph& g, std::size_t root);

// Checks the structural invariants: n-1 edges, one parent per non-root,
// every node reaches the root through parent links.
bool is_spanning_arborescence(std::size_t n, std::size_t root, const std::vector<std::size_t>& parent);

}  // namespace mtip
