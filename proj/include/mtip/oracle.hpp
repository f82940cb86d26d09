#pragma once
/*
  Exhaustive reference solvers. They share nothing with the polynomial
  solvers beyond the Instance/WeightedDigraph types and are only meant for
  desk-scale inputs.
*/
#include <cstddef>
#include <cstdint>

#include "mtip/core.hpp"

namespace mtip {

struct OracleBudget {
  std::size_t max_points = 7;
  // Upper bound on edge-predicate evaluations the enumeration may need.
  std::uint64_t max_states = 100'000'000;
};

struct OracleResult {
  RangeAssignment assignment;
  Weight opt = 0;
};

// Tries every assignment drawn from {0} u {dist(p, q) : q != p} per point.
// Among minimizers returns the lexicographically smallest range vector.
// Throws Error budget_exceeded.
OracleResult brute_force_optimal(const Instance& instance, const OracleBudget& budget = {});

// Minimum sink tree weight: every non-root picks any next hop.
Weight brute_force_min_sink_tree(const WeightedDigraph& g, std::size_t root, const OracleBudget& budget = {});

// Minimum out-arborescence weight: every non-root picks any parent.
Weight brute_force_min_arborescence(const WeightedDigraph& g, std::size_t root, const OracleBudget& budget = {});

}  // namespace mtip
