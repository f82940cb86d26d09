#include "mtip/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace mtip {

struct InstanceAccess {
  static Instance make(int dimension, std::vector<Point> points) {
    return Instance(dimension, std::move(points));
  }
};

namespace {

void check_index(std::size_t i, std::size_t n, const char* what) {
  if (i >= n) {
    throw Error("index_out_of_range", std::string(what) + " index " + std::to_string(i) +
                                          " out of range for " + std::to_string(n) + " nodes");
  }
}

}  // namespace

double Instance::distance(std::size_t a, std::size_t b) const {
  const Point& p = points_[a];
  const Point& q = points_[b];
  if (dimension_ == 1) return std::fabs(p.x - q.x);
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  return std::sqrt(dx * dx + dy * dy);
}

ValidatedInstance validate_instance(std::span<const std::vector<double>> raw, int dimension) {
  if (dimension != 1 && dimension != 2) {
    throw Error("bad_dimension", "dimension must be 1 or 2, got " + std::to_string(dimension));
  }
  if (raw.empty()) throw Error("empty_instance", "instance has no points");

  std::vector<Point> points;
  points.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto& c = raw[i];
    if (c.size() != static_cast<std::size_t>(dimension)) {
      throw Error("bad_dimension", "point " + std::to_string(i) + " has " + std::to_string(c.size()) +
                                       " coordinates, expected " + std::to_string(dimension));
    }
    for (double v : c) {
      if (!std::isfinite(v)) {
        throw Error("non_finite_coordinate", "point " + std::to_string(i) + " has a non-finite coordinate");
      }
    }
    // +0.0 so that -0.0 and 0.0 compare and print identically.
    points.push_back(Point{c[0] + 0.0, dimension == 2 ? c[1] + 0.0 : 0.0});
  }

  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  auto less = [&](std::size_t a, std::size_t b) {
    if (points[a].x != points[b].x) return points[a].x < points[b].x;
    if (points[a].y != points[b].y) return points[a].y < points[b].y;
    return a < b;
  };
  std::sort(order.begin(), order.end(), less);
  for (std::size_t r = 1; r < order.size(); ++r) {
    if (points[order[r - 1]] == points[order[r]]) {
      throw Error("duplicate_point", "points " + std::to_string(order[r - 1]) + " and " +
                                         std::to_string(order[r]) + " coincide");
    }
  }

  std::vector<std::size_t> permutation(points.size());
  if (dimension == 1) {
    std::vector<Point> sorted;
    sorted.reserve(points.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
      permutation[order[r]] = r;
      sorted.push_back(points[order[r]]);
    }
    points = std::move(sorted);
  } else {
    std::iota(permutation.begin(), permutation.end(), 0);
  }
  return {InstanceAccess::make(dimension, std::move(points)), std::move(permutation)};
}

Instance Instance::line(std::vector<double> xs) {
  std::vector<std::vector<double>> raw;
  raw.reserve(xs.size());
  for (double x : xs) raw.push_back({x});
  auto v = validate_instance(raw, 1);
  if (!std::is_sorted(v.permutation.begin(), v.permutation.end())) {
    throw Error("unsorted_line", "1D coordinates must be strictly ascending");
  }
  return std::move(v.instance);
}

Instance Instance::plane(std::vector<Point> pts) {
  std::vector<std::vector<double>> raw;
  raw.reserve(pts.size());
  for (const auto& p : pts) raw.push_back({p.x, p.y});
  return std::move(validate_instance(raw, 2).instance);
}

void check_assignment(const Instance& instance, const RangeAssignment& assignment) {
  if (assignment.size() != instance.size()) {
    throw Error("length_mismatch", "assignment has " + std::to_string(assignment.size()) +
                                       " ranges for " + std::to_string(instance.size()) + " points");
  }
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    const double r = assignment[i];
    if (!std::isfinite(r) || r < 0.0) {
      throw Error("invalid_range", "range of point " + std::to_string(i) + " must be finite and >= 0");
    }
  }
}

CommGraph::CommGraph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
  for (const auto& e : edges) add_edge(e.from, e.to);
}

void CommGraph::add_edge(std::size_t from, std::size_t to) {
  check_index(from, size(), "source");
  check_index(to, size(), "target");
  if (from == to) throw Error("self_edge", "self-loops are not allowed");
  adjacency_[from].push_back(to);
}

bool CommGraph::has_edge(std::size_t from, std::size_t to) const {
  const auto& succ = adjacency_.at(from);
  return std::find(succ.begin(), succ.end(), to) != succ.end();
}

std::size_t CommGraph::edge_count() const noexcept {
  std::size_t m = 0;
  for (const auto& succ : adjacency_) m += succ.size();
  return m;
}

std::vector<Edge> CommGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (std::size_t v : adjacency_[u]) out.push_back({u, v});
  }
  return out;
}

CommGraph build_comm_graph(const Instance& instance, const RangeAssignment& assignment) {
  check_assignment(instance, assignment);
  const std::size_t n = instance.size();
  CommGraph g(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p != q && instance.distance(p, q) <= assignment[p]) g.add_edge(p, q);
    }
  }
  return g;
}

std::vector<std::size_t> strongly_connected_components(const CommGraph& graph) {
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  const std::size_t n = graph.size();
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0), component(n, kUnvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  // (node, position of next successor to explore)
  std::vector<std::pair<std::size_t, std::size_t>> call;
  std::size_t counter = 0;
  std::size_t components = 0;

  for (std::size_t s = 0; s < n; ++s) {
    if (index[s] != kUnvisited) continue;
    call.emplace_back(s, 0);
    index[s] = low[s] = counter++;
    stack.push_back(s);
    on_stack[s] = true;
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      const auto succ = graph.successors(v);
      if (pos < succ.size()) {
        const std::size_t w = succ[pos++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const std::size_t done = v;
      call.pop_back();
      if (!call.empty()) {
        const std::size_t parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component[w] = components;
        } while (w != done);
        ++components;
      }
    }
  }
  return component;
}

bool is_strongly_connected(const CommGraph& graph) {
  const auto comp = strongly_connected_components(graph);
  return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

bool is_valid_assignment(const Instance& instance, const RangeAssignment& assignment) {
  return is_strongly_connected(build_comm_graph(instance, assignment));
}

std::size_t sender_interference(const Instance& instance, const RangeAssignment& assignment, std::size_t p) {
  check_assignment(instance, assignment);
  check_index(p, instance.size(), "point");
  std::size_t count = 0;
  for (std::size_t q = 0; q < instance.size(); ++q) {
    if (q != p && instance.distance(p, q) <= assignment[p]) ++count;
  }
  return count;
}

std::size_t receiver_interference(const Instance& instance, const RangeAssignment& assignment, std::size_t p) {
  check_assignment(instance, assignment);
  check_index(p, instance.size(), "point");
  std::size_t count = 0;
  for (std::size_t q = 0; q < instance.size(); ++q) {
    if (q != p && instance.distance(q, p) <= assignment[q]) ++count;
  }
  return count;
}

std::size_t total_interference(const Instance& instance, const RangeAssignment& assignment) {
  return build_comm_graph(instance, assignment).edge_count();
}

Weight edge_weight(const Instance& instance, std::size_t p, std::size_t q) {
  check_index(p, instance.size(), "source");
  check_index(q, instance.size(), "target");
  if (p == q) throw Error("self_edge", "edge weight is undefined for p == q");
  const double reach = instance.distance(p, q);
  Weight count = 0;
  for (std::size_t z = 0; z < instance.size(); ++z) {
    if (z != p && instance.distance(p, z) <= reach) ++count;
  }
  return count;
}

WeightedDigraph::WeightedDigraph(std::size_t n, Weight fill) : n_(n), weights_(n * n, fill) {
  for (std::size_t v = 0; v < n; ++v) weights_[v * n + v] = 0;
}

void WeightedDigraph::set_weight(std::size_t from, std::size_t to, Weight w) {
  check_index(from, n_, "source");
  check_index(to, n_, "target");
  if (from == to) throw Error("self_edge", "cannot weight a self-loop");
  if (w < 0 && w != kAbsent) throw Error("negative_weight", "edge weights must be non-negative");
  weights_[from * n_ + to] = w;
}

WeightedDigraph WeightedDigraph::induced(std::size_t first, std::size_t last) const {
  if (first > last || last >= n_) {
    throw Error("invalid_interval", "interval [" + std::to_string(first) + ", " + std::to_string(last) +
                                        "] is not inside " + std::to_string(n_) + " nodes");
  }
  const std::size_t m = last - first + 1;
  WeightedDigraph sub(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) sub.weights_[a * m + b] = weight(first + a, first + b);
  }
  return sub;
}

WeightedDigraph build_weighted_digraph(const Instance& instance) {
  const std::size_t n = instance.size();
  WeightedDigraph g(n);
  std::vector<double> dist(n);
  std::vector<double> sorted;
  sorted.reserve(n);
  for (std::size_t p = 0; p < n; ++p) {
    sorted.clear();
    for (std::size_t q = 0; q < n; ++q) {
      dist[q] = instance.distance(p, q);
      if (q != p) sorted.push_back(dist[q]);
    }
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t q = 0; q < n; ++q) {
      if (q == p) continue;
      // Inclusive count: ties at dist(p, q) are covered too.
      const auto covered = std::upper_bound(sorted.begin(), sorted.end(), dist[q]) - sorted.begin();
      g.set_weight(p, q, static_cast<Weight>(covered));
    }
  }
  return g;
}

WeightedDigraph invert_digraph(const WeightedDigraph& g) {
  const std::size_t n = g.size();
  WeightedDigraph out(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p != q) out.set_weight(p, q, g.weight(q, p));
    }
  }
  return out;
}

Weight edges_weight(const WeightedDigraph& g, std::span<const Edge> edges) {
  Weight total = 0;
  for (const auto& e : edges) {
    check_index(e.from, g.size(), "source");
    check_index(e.to, g.size(), "target");
    if (!g.has_edge(e.from, e.to)) {
      throw Error("missing_edge", "edge " + std::to_string(e.from) + " -> " + std::to_string(e.to) +
                                      " is not in the digraph");
    }
    total += g.weight(e.from, e.to);
  }
  return total;
}

}  // namespace mtip
