#include "mtip/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace mtip {

namespace {

using Mask = std::uint32_t;
constexpr std::size_t kMaskBits = 32;

// base^exponent * factor, saturating at max.
std::uint64_t search_size(std::uint64_t base, std::uint64_t exponent, std::uint64_t factor) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = factor;
  for (std::uint64_t e = 0; e < exponent; ++e) {
    if (base != 0 && total > kMax / base) return kMax;
    total *= base;
  }
  return total;
}

void check_budget(std::size_t n, std::uint64_t states, const OracleBudget& budget) {
  if (n > budget.max_points || n > kMaskBits) {
    throw Error("budget_exceeded", std::to_string(n) + " points exceed the oracle limit of " +
                                       std::to_string(budget.max_points));
  }
  if (states > budget.max_states) {
    throw Error("budget_exceeded", "search needs ~" + std::to_string(states) + " evaluations, budget is " +
                                       std::to_string(budget.max_states));
  }
}

Mask closure(Mask start, const std::vector<Mask>& succ) {
  Mask reached = start;
  Mask frontier = start;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask f = frontier; f != 0; f &= f - 1) next |= succ[std::countr_zero(f)];
    frontier = next & ~reached;
    reached |= next;
  }
  return reached;
}

bool strongly_connected(const std::vector<Mask>& out) {
  const std::size_t n = out.size();
  const Mask all = n == kMaskBits ? ~Mask{0} : (Mask{1} << n) - 1;
  if (closure(1, out) != all) return false;
  std::vector<Mask> in(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (Mask m = out[u]; m != 0; m &= m - 1) in[std::countr_zero(m)] |= Mask{1} << u;
  }
  return closure(1, in) == all;
}

// Every non-root node v picks one of the other nodes; cost(v, u) is the
// weight of that choice or kAbsent. Valid choices make every node reach the
// root by following picks.
Weight min_parent_function(std::size_t n, std::size_t root,
                           const std::function<Weight(std::size_t, std::size_t)>& cost) {
  if (root >= n) {
    throw Error("index_out_of_range", "root " + std::to_string(root) + " out of range for " + std::to_string(n) + " nodes");
  }
  constexpr Weight kNone = std::numeric_limits<Weight>::max();
  Weight best = kNone;
  std::vector<std::size_t> pick(n, root);
  std::vector<std::size_t> order;
  for (std::size_t v = 0; v < n; ++v) {
    if (v != root) order.push_back(v);
  }

  auto reaches_root = [&]() {
    for (std::size_t v : order) {
      std::size_t x = v;
      for (std::size_t steps = 0; x != root && steps < n; ++steps) x = pick[x];
      if (x != root) return false;
    }
    return true;
  };

  std::function<void(std::size_t, Weight)> search = [&](std::size_t depth, Weight sum) {
    if (sum >= best) return;
    if (depth == order.size()) {
      if (reaches_root()) best = sum;
      return;
    }
    const std::size_t v = order[depth];
    for (std::size_t u = 0; u < n; ++u) {
      if (u == v) continue;
      const Weight c = cost(v, u);
      if (c == WeightedDigraph::kAbsent) continue;
      pick[v] = u;
      search(depth + 1, sum + c);
    }
  };
  search(0, 0);
  if (best == kNone) throw Error("unreachable", "no spanning tree reaches the root");
  return best;
}

}  // namespace

OracleResult brute_force_optimal(const Instance& instance, const OracleBudget& budget) {
  const std::size_t n = instance.size();
  check_budget(n, search_size(n, n, static_cast<std::uint64_t>(n) * n), budget);

  // Per point: distinct candidate ranges ascending, with their coverage masks.
  std::vector<std::vector<double>> ranges(n);
  std::vector<std::vector<Mask>> covers(n);
  std::vector<std::vector<Weight>> counts(n);
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<double> cand{0.0};
    for (std::size_t q = 0; q < n; ++q) {
      if (q != p) cand.push_back(instance.distance(p, q));
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (double r : cand) {
      Mask m = 0;
      for (std::size_t q = 0; q < n; ++q) {
        if (q != p && instance.distance(p, q) <= r) m |= Mask{1} << q;
      }
      ranges[p].push_back(r);
      covers[p].push_back(m);
      counts[p].push_back(std::popcount(m));
    }
  }

  // Any valid assignment with n >= 2 gives every point out-degree >= 1.
  const Weight per_point_floor = n >= 2 ? 1 : 0;
  Weight best = static_cast<Weight>(n * (n - 1)) + 1;
  std::vector<std::size_t> choice(n, 0), best_choice(n, 0);
  std::vector<Mask> out(n, 0);

  std::function<void(std::size_t, Weight)> search = [&](std::size_t p, Weight cost) {
    if (cost + per_point_floor * static_cast<Weight>(n - p) >= best) return;
    if (p == n) {
      if (strongly_connected(out)) {
        best = cost;
        best_choice = choice;
      }
      return;
    }
    for (std::size_t c = 0; c < ranges[p].size(); ++c) {
      choice[p] = c;
      out[p] = covers[p][c];
      search(p + 1, cost + counts[p][c]);
    }
  };
  search(0, 0);

  OracleResult result;
  result.opt = best;
  result.assignment.ranges.resize(n);
  for (std::size_t p = 0; p < n; ++p) result.assignment.ranges[p] = ranges[p][best_choice[p]];
  return result;
}

Weight brute_force_min_sink_tree(const WeightedDigraph& g, std::size_t root, const OracleBudget& budget) {
  const std::size_t n = g.size();
  check_budget(n, search_size(n > 0 ? n - 1 : 0, n > 0 ? n - 1 : 0, static_cast<std::uint64_t>(n) * n), budget);
  return min_parent_function(n, root, [&](std::size_t v, std::size_t u) {
    return g.has_edge(v, u) ? g.weight(v, u) : WeightedDigraph::kAbsent;
  });
}

Weight brute_force_min_arborescence(const WeightedDigraph& g, std::size_t root, const OracleBudget& budget) {
  const std::size_t n = g.size();
  check_budget(n, search_size(n > 0 ? n - 1 : 0, n > 0 ? n - 1 : 0, static_cast<std::uint64_t>(n) * n), budget);
  return min_parent_function(n, root, [&](std::size_t v, std::size_t u) {
    return g.has_edge(u, v) ? g.weight(u, v) : WeightedDigraph::kAbsent;
  });
}

}  // namespace mtip
