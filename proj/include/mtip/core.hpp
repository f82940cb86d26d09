#pragma once
/*
  Interference model shared by every solver.

  A range assignment gives each point a transmission radius. Point p reaches
  q (directed edge p -> q) iff dist(p, q) <= range(p). Sender interference of
  p is its out-degree, receiver interference its in-degree, and the total
  interference is the edge count of the induced communication graph.

  All distance comparisons go through Instance::distance(), which is a
  deterministic function of the stored coordinates with no tolerance. A range
  equal to distance(p, q) therefore always covers q, and coverage weights
  w(p, q) agree exactly with the coverage of a range set to distance(p, q).
*/
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mtip/error.hpp"

namespace mtip {

using Weight = std::int64_t;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

struct Edge {
  std::size_t from = 0;
  std::size_t to = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A validated point set. 1D instances are sorted ascending by x (y == 0).
class Instance {
 public:
  int dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return points_.size(); }
  std::span<const Point> points() const noexcept { return points_; }
  const Point& point(std::size_t i) const { return points_.at(i); }

  double distance(std::size_t a, std::size_t b) const;

  // Same contract as validate_instance() but for already-structured points;
  // 1D inputs must already be strictly ascending.
  static Instance line(std::vector<double> xs);
  static Instance plane(std::vector<Point> pts);

 private:
  friend struct InstanceAccess;
  Instance(int dimension, std::vector<Point> points)
      : dimension_(dimension), points_(std::move(points)) {}

  int dimension_ = 1;
  std::vector<Point> points_;
};

struct ValidatedInstance {
  Instance instance;
  // permutation[original index] == index in instance (identity for 2D).
  std::vector<std::size_t> permutation;
};

// Accepts raw coordinate tuples (one value per point in 1D, two in 2D).
// Throws Error: empty_instance, bad_dimension, non_finite_coordinate,
// duplicate_point.
ValidatedInstance validate_instance(std::span<const std::vector<double>> raw, int dimension);

// Reorders file-order values into instance order and back.
template <typename T>
std::vector<T> to_instance_order(std::span<const std::size_t> permutation, std::span<const T> values) {
  std::vector<T> out(values.size());
  for (std::size_t o = 0; o < values.size(); ++o) out.at(permutation[o]) = values[o];
  return out;
}

template <typename T>
std::vector<T> to_original_order(std::span<const std::size_t> permutation, std::span<const T> values) {
  std::vector<T> out(values.size());
  for (std::size_t o = 0; o < values.size(); ++o) out[o] = values[permutation[o]];
  return out;
}

struct RangeAssignment {
  std::vector<double> ranges;

  std::size_t size() const noexcept { return ranges.size(); }
  double operator[](std::size_t i) const { return ranges[i]; }
  friend bool operator==(const RangeAssignment&, const RangeAssignment&) = default;
};

// Throws Error: length_mismatch, invalid_range (negative or non-finite).
void check_assignment(const Instance& instance, const RangeAssignment& assignment);

// Plain adjacency-list digraph; also used for communication graphs.
class CommGraph {
 public:
  CommGraph() = default;
  explicit CommGraph(std::size_t n) : adjacency_(n) {}
  CommGraph(std::size_t n, std::span<const Edge> edges);

  std::size_t size() const noexcept { return adjacency_.size(); }
  std::span<const std::size_t> successors(std::size_t v) const { return adjacency_.at(v); }
  bool has_edge(std::size_t from, std::size_t to) const;
  std::size_t edge_count() const noexcept;
  std::vector<Edge> edges() const;

  void add_edge(std::size_t from, std::size_t to);

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
};

CommGraph build_comm_graph(const Instance& instance, const RangeAssignment& assignment);

// Tarjan's algorithm, iterative. Returns the component id of every node;
// ids are in reverse topological order of the condensation.
std::vector<std::size_t> strongly_connected_components(const CommGraph& graph);
bool is_strongly_connected(const CommGraph& graph);
bool is_valid_assignment(const Instance& instance, const RangeAssignment& assignment);

std::size_t sender_interference(const Instance& instance, const RangeAssignment& assignment, std::size_t p);
std::size_t receiver_interference(const Instance& instance, const RangeAssignment& assignment, std::size_t p);
std::size_t total_interference(const Instance& instance, const RangeAssignment& assignment);

// w(p, q) = |{z != p : dist(p, z) <= dist(p, q)}|. Throws Error self_edge if p == q.
Weight edge_weight(const Instance& instance, std::size_t p, std::size_t q);

// Dense weighted digraph. weight(v, v) is 0; absent edges hold kAbsent.
class WeightedDigraph {
 public:
  static constexpr Weight kAbsent = -1;

  WeightedDigraph() = default;
  // Complete digraph with all off-diagonal weights set to `fill`.
  explicit WeightedDigraph(std::size_t n, Weight fill = kAbsent);

  std::size_t size() const noexcept { return n_; }
  Weight weight(std::size_t from, std::size_t to) const { return weights_[from * n_ + to]; }
  bool has_edge(std::size_t from, std::size_t to) const {
    return from != to && weight(from, to) != kAbsent;
  }
  void set_weight(std::size_t from, std::size_t to, Weight w);

  // Subgraph induced by nodes [first, last], keeping the original weights.
  WeightedDigraph induced(std::size_t first, std::size_t last) const;

  friend bool operator==(const WeightedDigraph&, const WeightedDigraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Weight> weights_;
};

// O(n^2 log n): one distance sort per source.
WeightedDigraph build_weighted_digraph(const Instance& instance);

WeightedDigraph invert_digraph(const WeightedDigraph& g);

// Sum of g's weights over the given edges. Throws Error missing_edge.
Weight edges_weight(const WeightedDigraph& g, std::span<const Edge> edges);

}  // namespace mtip
