#pragma once
/*
  Exact minimum total interference for points on a line.

  Stage 1 fills two interval tables of minimum-weight sink trees over the
  coverage-weight digraph: left(i, j) is the lightest tree on points i..j
  draining into p_i, right(i, j) the lightest draining into p_j.

  Stage 2 solves the left-right formulation where every point carries an
  independent left reach and right reach and pays for the larger of the two.
  opt(i, k) is the cheapest completion of points i..n-1 given that p_i's left
  reach already extends to p_k (k == i means no left reach). Each row picks
  the right reach p_j of p_i and the next row point p_t whose left reach
  returns to p_{j-1}:

    opt(i, k) = min_{i < j}  delta(i, j, k) + left(i, j-1) + c(j)
    c(j)      = min_{t >= j} right(j, t) + w(p_t, p_{j-1}) + opt(t, j-1)

  Indices are 0-based throughout and refer to the sorted instance.
*/
#include <cstddef>
#include <vector>

#include "mtip/core.hpp"

namespace mtip {

class SinkTables {
 public:
  explicit SinkTables(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  // Valid for i <= j < size().
  Weight left(std::size_t i, std::size_t j) const { return left_[i * n_ + j]; }
  Weight right(std::size_t i, std::size_t j) const { return right_[i * n_ + j]; }
  // Split index k of the last recurrence step (meaningless when i == j).
  std::size_t left_choice(std::size_t i, std::size_t j) const { return left_choice_[i * n_ + j]; }
  std::size_t right_choice(std::size_t i, std::size_t j) const { return right_choice_[i * n_ + j]; }

 private:
  friend SinkTables compute_all_sinks(const WeightedDigraph& g);

  std::size_t n_;
  std::vector<Weight> left_, right_;
  std::vector<std::size_t> left_choice_, right_choice_;
};

// O(n^3) interval DP over increasing interval length. Ties pick the smallest
// split index. `g` must be the coverage digraph of a sorted 1D instance.
SinkTables compute_all_sinks(const WeightedDigraph& g);

enum class RootSide { left, right };

// Edges of the minimum sink tree over [i, j] rooted at p_i (left) or p_j
// (right). Exactly j - i edges. Throws Error invalid_interval.
std::vector<Edge> reconstruct_sink_tree(const SinkTables& tables, std::size_t i, std::size_t j, RootSide side);

// max{0, w(p_i, p_j) - w(p_i, p_k)} restricted to the strictly-farther case;
// k == i stands for an empty left reach. Requires k <= i < j.
Weight delta(const Instance& instance, std::size_t i, std::size_t j, std::size_t k);

class MtipTables {
 public:
  explicit MtipTables(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  // opt(i, k) for k <= i.
  Weight opt(std::size_t i, std::size_t k) const { return opt_[i * n_ + k]; }
  // c(j) for 1 <= j.
  Weight c(std::size_t j) const { return c_[j]; }
  std::size_t best_j(std::size_t i, std::size_t k) const { return best_j_[i * n_ + k]; }
  std::size_t best_t(std::size_t j) const { return best_t_[j]; }

  Weight optimum() const { return opt(0, 0); }

 private:
  friend MtipTables compute_mtip_tables(const Instance& instance, const WeightedDigraph& g,
                                        const SinkTables& sinks);

  std::size_t n_;
  std::vector<Weight> opt_, c_;
  std::vector<std::size_t> best_j_, best_t_;
};

MtipTables compute_mtip_tables(const Instance& instance, const WeightedDigraph& g, const SinkTables& sinks);

struct LeftRightAssignment {
  std::vector<double> rho_left;
  std::vector<double> rho_right;

  // rho(p) = max(rho_left(p), rho_right(p)).
  RangeAssignment combine() const;
};

struct Solution1d {
  RangeAssignment assignment;
  Weight total = 0;
  LeftRightAssignment left_right;
  // Every edge the witness relies on: sink-tree edges plus each row point's
  // right reach and each next row point's left reach.
  std::vector<Edge> witness_edges;
};

// Requires a 1D instance (Error dimension_mismatch otherwise).
Solution1d solve_mtip_1d(const Instance& instance);

}  // namespace mtip
