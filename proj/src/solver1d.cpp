#include "mtip/solver1d.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

namespace mtip {

namespace {

constexpr Weight kInfinity = std::numeric_limits<Weight>::max() / 4;

}  // namespace

SinkTables::SinkTables(std::size_t n)
    : n_(n), left_(n * n, 0), right_(n * n, 0), left_choice_(n * n, 0), right_choice_(n * n, 0) {}

SinkTables compute_all_sinks(const WeightedDigraph& g) {
  const std::size_t n = g.size();
  SinkTables t(n);
  for (std::size_t d = 1; d < n; ++d) {
    for (std::size_t i = 0; i + d < n; ++i) {
      const std::size_t j = i + d;

      // Rooted at p_i: p_j's edge lands on p_k, splitting [i, k] and [k+1, j].
      Weight best = kInfinity;
      std::size_t arg = i;
      for (std::size_t k = i; k < j; ++k) {
        const Weight v = t.left(i, k) + g.weight(j, k) + t.right(k + 1, j);
        if (v < best) {
          best = v;
          arg = k;
        }
      }
      t.left_[i * n + j] = best;
      t.left_choice_[i * n + j] = arg;

      // Rooted at p_j: p_i's edge lands on p_k, splitting [i, k-1] and [k, j].
      best = kInfinity;
      arg = j;
      for (std::size_t k = i + 1; k <= j; ++k) {
        const Weight v = t.left(i, k - 1) + g.weight(i, k) + t.right(k, j);
        if (v < best) {
          best = v;
          arg = k;
        }
      }
      t.right_[i * n + j] = best;
      t.right_choice_[i * n + j] = arg;
    }
  }
  return t;
}

std::vector<Edge> reconstruct_sink_tree(const SinkTables& tables, std::size_t i, std::size_t j, RootSide side) {
  if (i > j || j >= tables.size()) {
    throw Error("invalid_interval", "interval [" + std::to_string(i) + ", " + std::to_string(j) +
                                        "] is not inside " + std::to_string(tables.size()) + " points");
  }
  std::vector<Edge> edges;
  edges.reserve(j - i);
  struct Frame {
    std::size_t i, j;
    RootSide side;
  };
  std::vector<Frame> pending{{i, j, side}};
  while (!pending.empty()) {
    const Frame f = pending.back();
    pending.pop_back();
    if (f.i == f.j) continue;
    if (f.side == RootSide::left) {
      const std::size_t k = tables.left_choice(f.i, f.j);
      edges.push_back({f.j, k});
      pending.push_back({f.i, k, RootSide::left});
      pending.push_back({k + 1, f.j, RootSide::right});
    } else {
      const std::size_t k = tables.right_choice(f.i, f.j);
      edges.push_back({f.i, k});
      pending.push_back({f.i, k - 1, RootSide::left});
      pending.push_back({k, f.j, RootSide::right});
    }
  }
  return edges;
}

Weight delta(const Instance& instance, std::size_t i, std::size_t j, std::size_t k) {
  if (!(k <= i && i < j && j < instance.size())) {
    throw Error("index_order", "delta requires k <= i < j < n, got k=" + std::to_string(k) +
                                   " i=" + std::to_string(i) + " j=" + std::to_string(j));
  }
  if (instance.distance(i, j) <= instance.distance(i, k)) return 0;
  const Weight covered = k == i ? 0 : edge_weight(instance, i, k);
  return edge_weight(instance, i, j) - covered;
}

MtipTables::MtipTables(std::size_t n)
    : n_(n), opt_(n * n, kInfinity), c_(n, kInfinity), best_j_(n * n, 0), best_t_(n, 0) {}

MtipTables compute_mtip_tables(const Instance& instance, const WeightedDigraph& g, const SinkTables& sinks) {
  const std::size_t n = instance.size();
  MtipTables m(n);
  if (n == 0) return m;
  for (std::size_t k = 0; k < n; ++k) m.opt_[(n - 1) * n + k] = 0;

  // c(j) only reads rows t >= j, so it is final as soon as row j is.
  auto fill_c = [&](std::size_t j) {
    Weight best = kInfinity;
    std::size_t arg = j;
    for (std::size_t t = j; t < n; ++t) {
      const Weight v = sinks.right(j, t) + g.weight(t, j - 1) + m.opt(t, j - 1);
      if (v < best) {
        best = v;
        arg = t;
      }
    }
    m.c_[j] = best;
    m.best_t_[j] = arg;
  };

  for (std::size_t i = n - 1; i-- > 0;) {
    fill_c(i + 1);
    for (std::size_t k = 0; k <= i; ++k) {
      const double reach_left = instance.distance(i, k);
      const Weight covered_left = k == i ? 0 : g.weight(i, k);
      Weight best = kInfinity;
      std::size_t arg = i + 1;
      for (std::size_t j = i + 1; j < n; ++j) {
        const Weight extra = instance.distance(i, j) > reach_left ? g.weight(i, j) - covered_left : 0;
        const Weight v = extra + sinks.left(i, j - 1) + m.c(j);
        if (v < best) {
          best = v;
          arg = j;
        }
      }
      m.opt_[i * n + k] = best;
      m.best_j_[i * n + k] = arg;
    }
  }
  return m;
}

RangeAssignment LeftRightAssignment::combine() const {
  RangeAssignment out;
  out.ranges.resize(rho_left.size());
  for (std::size_t p = 0; p < rho_left.size(); ++p) out.ranges[p] = std::max(rho_left[p], rho_right[p]);
  return out;
}

Solution1d solve_mtip_1d(const Instance& instance) {
  if (instance.dimension() != 1) {
    throw Error("dimension_mismatch", "the exact solver needs a 1D instance");
  }
  const std::size_t n = instance.size();
  const WeightedDigraph g = build_weighted_digraph(instance);
  const SinkTables sinks = compute_all_sinks(g);
  const MtipTables tables = compute_mtip_tables(instance, g, sinks);

  Solution1d sol;
  sol.total = tables.optimum();
  sol.left_right.rho_left.assign(n, 0.0);
  sol.left_right.rho_right.assign(n, 0.0);
  auto& lr = sol.left_right;

  auto apply_tree_edge = [&](const Edge& e) {
    const double r = instance.distance(e.from, e.to);
    if (e.to < e.from) {
      lr.rho_left[e.from] = r;
    } else {
      lr.rho_right[e.from] = r;
    }
    sol.witness_edges.push_back(e);
  };

  std::size_t i = 0;
  std::size_t k = 0;
  while (true) {
    lr.rho_left[i] = instance.distance(i, k);
    if (i + 1 == n) break;
    const std::size_t j = tables.best_j(i, k);
    const std::size_t t = tables.best_t(j);
    lr.rho_right[i] = instance.distance(i, j);
    sol.witness_edges.push_back({i, j});
    for (const auto& e : reconstruct_sink_tree(sinks, i, j - 1, RootSide::left)) apply_tree_edge(e);
    for (const auto& e : reconstruct_sink_tree(sinks, j, t, RootSide::right)) apply_tree_edge(e);
    sol.witness_edges.push_back({t, j - 1});
    i = t;
    k = j - 1;
  }
  sol.assignment = lr.combine();
  return sol;
}

}  // namespace mtip
