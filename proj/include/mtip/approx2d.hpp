#pragma once
/*
  2-approximation for the plane: a broadcast assignment (the root reaches
  everyone, total n-1) combined pointwise-max with the optimal sink-tree
  assignment toward the same root. Every p reaches every q through the root,
  and each part is at most the optimum.
*/
#include <cstddef>
#include <string>
#include <vector>

#include "mtip/core.hpp"

namespace mtip {

struct RootPolicy {
  enum class Kind { first, fixed, best };

  Kind kind = Kind::best;
  std::size_t root = 0;  // used by Kind::fixed

  static RootPolicy first() { return {Kind::first, 0}; }
  static RootPolicy fixed(std::size_t root) { return {Kind::fixed, root}; }
  static RootPolicy best() { return {Kind::best, 0}; }

  // "first", "best" or "fixed:<i>". Throws Error bad_root_policy.
  static RootPolicy parse(const std::string& text);
  std::string to_string() const;
};

struct ApproxParts {
  Weight broadcast = 0;
  Weight sink = 0;
};

struct ApproxResult {
  RangeAssignment assignment;
  Weight total = 0;
  std::size_t root = 0;
  ApproxParts parts;
};

RangeAssignment solve_mtip1(const Instance& instance, std::size_t root);

struct SinkSolution {
  RangeAssignment assignment;
  Weight total = 0;
  std::vector<Edge> tree;
};

SinkSolution solve_mtip2(const Instance& instance, std::size_t root);

// Under RootPolicy::best every root is tried; the lowest total wins, ties to
// the lowest root. Throws Error index_out_of_range for a bad fixed root.
ApproxResult approx_mtip_2d(const Instance& instance, RootPolicy policy = RootPolicy::best());

}  // namespace mtip
