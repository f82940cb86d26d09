#include "mtip/arborescence.hpp"

#include <cstdint>
#include <limits>
#include <string>

namespace mtip {

namespace {

constexpr Weight kInfinity = std::numeric_limits<Weight>::max();
constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// A candidate edge of the current (possibly contracted) graph, remembering
// the original edge it stands for.
struct Cell {
  Weight w = kInfinity;
  std::uint32_t src = 0;
  std::uint32_t dst = 0;
};

// What a contraction round needs to expand its solution again.
struct Round {
  std::size_t root = 0;
  std::vector<Cell> best;                // cheapest entering edge per node
  std::vector<std::size_t> cycle_of;     // cycle id or kNone
  std::vector<std::size_t> next_id;      // node id in the contracted graph
  std::vector<std::size_t> node_of_orig; // original node -> node this round
  std::size_t cycles = 0;
};

void check_reachable(const WeightedDigraph& g, std::size_t root) {
  const std::size_t n = g.size();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{root};
  seen[root] = true;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < n; ++v) {
      if (!seen[v] && g.has_edge(u, v)) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!seen[v]) {
      throw Error("unreachable", "node " + std::to_string(v) + " is unreachable from root " + std::to_string(root));
    }
  }
}

}  // namespace

std::vector<Edge> Arborescence::edges() const {
  std::vector<Edge> out;
  for (std::size_t v = 0; v < parent.size(); ++v) {
    if (v != root) out.push_back({parent[v], v});
  }
  return out;
}

Arborescence min_arborescence(const WeightedDigraph& g, std::size_t root) {
  const std::size_t n = g.size();
  if (root >= n) {
    throw Error("index_out_of_range", "root " + std::to_string(root) + " out of range for " + std::to_string(n) + " nodes");
  }
  check_reachable(g, root);

  Arborescence result;
  result.root = root;
  result.parent.assign(n, Arborescence::kNoParent);
  if (n == 1) return result;

  std::size_t m = n;
  std::size_t r = root;
  std::vector<Cell> mat(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (g.has_edge(u, v)) {
        mat[u * n + v] = {g.weight(u, v), static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v)};
      }
    }
  }
  std::vector<std::size_t> node_of_orig(n);
  for (std::size_t v = 0; v < n; ++v) node_of_orig[v] = v;

  std::vector<Round> rounds;
  std::vector<Cell> entering;
  while (true) {
    Round round;
    round.root = r;
    round.best.assign(m, Cell{});
    std::vector<std::size_t> best_src(m, kNone);
    for (std::size_t v = 0; v < m; ++v) {
      if (v == r) continue;
      for (std::size_t u = 0; u < m; ++u) {
        if (u != v && mat[u * m + v].w < round.best[v].w) {
          round.best[v] = mat[u * m + v];
          best_src[v] = u;
        }
      }
      if (best_src[v] == kNone) {
        throw Error("unreachable", "contracted node has no entering edge");
      }
    }

    round.cycle_of.assign(m, kNone);
    std::vector<std::size_t> stamp(m, kNone);
    for (std::size_t s = 0; s < m; ++s) {
      std::size_t v = s;
      while (v != r && stamp[v] == kNone && round.cycle_of[v] == kNone) {
        stamp[v] = s;
        v = best_src[v];
      }
      if (v != r && stamp[v] == s && round.cycle_of[v] == kNone) {
        std::size_t x = v;
        do {
          round.cycle_of[x] = round.cycles;
          x = best_src[x];
        } while (x != v);
        ++round.cycles;
      }
    }

    if (round.cycles == 0) {
      entering = std::move(round.best);
      break;
    }

    // Contract every cycle into one node; ids follow first appearance.
    round.next_id.assign(m, kNone);
    std::vector<std::size_t> cycle_id(round.cycles, kNone);
    std::size_t m2 = 0;
    for (std::size_t v = 0; v < m; ++v) {
      const std::size_t c = round.cycle_of[v];
      if (c == kNone) {
        round.next_id[v] = m2++;
      } else {
        if (cycle_id[c] == kNone) cycle_id[c] = m2++;
        round.next_id[v] = cycle_id[c];
      }
    }

    std::vector<Cell> mat2(m2 * m2);
    for (std::size_t u = 0; u < m; ++u) {
      const std::size_t cu = round.next_id[u];
      for (std::size_t v = 0; v < m; ++v) {
        const std::size_t cv = round.next_id[v];
        if (cu == cv || v == r || mat[u * m + v].w == kInfinity) continue;
        Cell cell = mat[u * m + v];
        if (round.cycle_of[v] != kNone) cell.w -= round.best[v].w;
        if (cell.w < mat2[cu * m2 + cv].w) mat2[cu * m2 + cv] = cell;
      }
    }

    round.node_of_orig = node_of_orig;
    for (auto& node : node_of_orig) node = round.next_id[node];
    r = round.next_id[r];
    rounds.push_back(std::move(round));
    mat = std::move(mat2);
    m = m2;
  }

  // Expand: a cycle keeps all its edges except the one into the node where
  // the contracted solution enters it.
  for (auto it = rounds.rbegin(); it != rounds.rend(); ++it) {
    const Round& round = *it;
    const std::size_t size = round.best.size();
    std::vector<Cell> expanded(size);
    for (std::size_t v = 0; v < size; ++v) {
      if (v == round.root) continue;
      if (round.cycle_of[v] == kNone) {
        expanded[v] = entering[round.next_id[v]];
      } else {
        expanded[v] = round.best[v];
      }
    }
    std::vector<bool> done(round.cycles, false);
    for (std::size_t v = 0; v < size; ++v) {
      const std::size_t c = round.cycle_of[v];
      if (c == kNone || done[c]) continue;
      done[c] = true;
      const Cell in = entering[round.next_id[v]];
      expanded[round.node_of_orig[in.dst]] = in;
    }
    entering = std::move(expanded);
  }

  for (std::size_t v = 0; v < n; ++v) {
    if (v == root) continue;
    result.parent[v] = entering[v].src;
    result.weight += g.weight(entering[v].src, v);
  }
  return result;
}

SinkTree min_sink_tree(const WeightedDigraph& g, std::size_t root) {
  const Arborescence out = min_arborescence(invert_digraph(g), root);
  SinkTree tree;
  tree.root = root;
  for (const auto& e : out.edges()) tree.edges.push_back({e.to, e.from});
  tree.weight = edges_weight(g, tree.edges);
  return tree;
}

bool is_spanning_arborescence(std::size_t n, std::size_t root, const std::vector<std::size_t>& parent) {
  if (parent.size() != n || root >= n || parent[root] != Arborescence::kNoParent) return false;
  for (std::size_t v = 0; v < n; ++v) {
    if (v != root && (parent[v] >= n || parent[v] == v)) return false;
  }
  // Walking parent links from any node must hit the root within n steps.
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t x = v;
    std::size_t steps = 0;
    while (x != root && steps <= n) {
      x = parent[x];
      ++steps;
    }
    if (x != root) return false;
  }
  return true;
}

}  // namespace mtip
