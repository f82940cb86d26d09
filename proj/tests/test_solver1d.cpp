#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mtip/instances.hpp"
#include "mtip/oracle.hpp"
#include "mtip/solver1d.hpp"
#include "test_support.hpp"

using namespace mtip;

namespace {

std::string error_code(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return "none";
}

std::vector<Edge> sorted(std::vector<Edge> e) {
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace

TEST_CASE("sink tables on three unit-spaced points") {
  const auto inst = Instance::line({0, 1, 2});
  const auto g = build_weighted_digraph(inst);
  const auto t = compute_all_sinks(g);
  CHECK(t.left(0, 0) == 0);
  CHECK(t.right(1, 1) == 0);
  // p_2 ties with p_0 at distance 1 from p_1.
  CHECK(t.left(0, 1) == 2);
  CHECK(t.right(0, 1) == 1);
  // 2 -> 1 -> 0 costs 1 + 2.
  CHECK(t.left(0, 2) == 3);
  CHECK(sorted(reconstruct_sink_tree(t, 0, 2, RootSide::left)) == std::vector<Edge>{{1, 0}, {2, 1}});
  CHECK(t.right(0, 2) == 3);
  CHECK(sorted(reconstruct_sink_tree(t, 0, 2, RootSide::right)) == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(reconstruct_sink_tree(t, 1, 1, RootSide::left).empty());
  CHECK(error_code([&] { reconstruct_sink_tree(t, 2, 1, RootSide::left); }) == "invalid_interval");
  CHECK(error_code([&] { reconstruct_sink_tree(t, 0, 3, RootSide::left); }) == "invalid_interval");
}

TEST_CASE("sink tables match the brute-force sink tree on every interval") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 6;
    const auto inst = trial % 2 ? testing::integer_line(n, rng, 12) : gen_random_line(n, rng());
    const auto g = build_weighted_digraph(inst);
    const auto t = compute_all_sinks(g);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        const auto sub = g.induced(i, j);
        CHECK(t.left(i, j) == brute_force_min_sink_tree(sub, 0));
        CHECK(t.right(i, j) == brute_force_min_sink_tree(sub, j - i));

        const auto lt = reconstruct_sink_tree(t, i, j, RootSide::left);
        const auto rt = reconstruct_sink_tree(t, i, j, RootSide::right);
        CHECK(testing::is_sink_tree(i, j, i, lt));
        CHECK(testing::is_sink_tree(i, j, j, rt));
        CHECK(edges_weight(g, lt) == t.left(i, j));
        CHECK(edges_weight(g, rt) == t.right(i, j));
      }
    }
  }
}

TEST_CASE("reconstructed sink trees do not cross when distances are distinct") {
  std::mt19937_64 rng(202);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 60; ++trial) {
    const std::size_t n = 3 + rng() % 10;
    const auto inst = gen_random_line(n, rng(), trial % 3 == 0 ? Spread::geometric : Spread::uniform);
    if (!testing::distinct_pairwise_distances(inst)) continue;
    ++checked;
    const auto t = compute_all_sinks(build_weighted_digraph(inst));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        CHECK(testing::non_crossing(reconstruct_sink_tree(t, i, j, RootSide::left)));
        CHECK(testing::non_crossing(reconstruct_sink_tree(t, i, j, RootSide::right)));
      }
    }
  }
  CHECK(checked >= 30);
}

TEST_CASE("delta") {
  const auto inst = Instance::line({0, 1, 2, 3});
  // Reach p_3 when p_1's left reach already spans distance 1: w(1,3) = 3, w(1,0) = 2.
  CHECK(delta(inst, 1, 3, 0) == 1);
  // Right reach shorter than the left reach costs nothing extra.
  CHECK(delta(inst, 1, 2, 0) == 0);
  // Empty left reach pays the whole weight.
  CHECK(delta(inst, 1, 2, 1) == 2);
  CHECK(delta(inst, 0, 1, 0) == 1);
  CHECK(error_code([&] { delta(inst, 2, 1, 0); }) == "index_order");
  CHECK(error_code([&] { delta(inst, 1, 2, 2); }) == "index_order");
}

TEST_CASE("delta never goes negative and is monotone in the right reach") {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 10;
    const auto inst = testing::integer_line(n, rng, 20);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k <= i; ++k) {
        Weight prev = -1;
        for (std::size_t j = i + 1; j < n; ++j) {
          const Weight d = delta(inst, i, j, k);
          CHECK(d >= 0);
          CHECK(d >= prev);
          prev = d;
        }
      }
    }
  }
}

TEST_CASE("small lines") {
  SUBCASE("single point") {
    const auto s = solve_mtip_1d(Instance::line({4}));
    CHECK(s.total == 0);
    CHECK(s.assignment.ranges == std::vector<double>{0});
  }
  SUBCASE("two points") {
    const auto s = solve_mtip_1d(Instance::line({0, 2.5}));
    CHECK(s.total == 2);
    CHECK(s.assignment.ranges == std::vector<double>{2.5, 2.5});
  }
  SUBCASE("three evenly spaced") {
    const auto inst = Instance::line({0, 1, 2});
    const auto s = solve_mtip_1d(inst);
    CHECK(s.total == 4);
    CHECK(total_interference(inst, s.assignment) == 4);
    CHECK(is_valid_assignment(inst, s.assignment));
  }
  SUBCASE("exponential chain") {
    const auto inst = Instance::line({0, 1, 3, 7, 15});
    const auto s = solve_mtip_1d(inst);
    CHECK(s.total == brute_force_optimal(inst).opt);
  }
  SUBCASE("2D input rejected") {
    CHECK(error_code([] { solve_mtip_1d(Instance::plane({{0, 0}, {1, 1}})); }) == "dimension_mismatch");
  }
}

TEST_CASE("solve_mtip_1d equals the brute-force optimum") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    Instance inst = Instance::line({0});
    switch (trial % 4) {
      case 0: inst = testing::integer_line(n, rng, 10); break;
      case 1: inst = gen_random_line(n, rng(), Spread::uniform); break;
      case 2: inst = gen_random_line(n, rng(), Spread::clustered); break;
      default: inst = gen_random_line(n, rng(), Spread::geometric); break;
    }
    const auto s = solve_mtip_1d(inst);
    const auto o = brute_force_optimal(inst);
    CAPTURE(trial);
    CHECK(s.total == o.opt);
    CHECK(static_cast<Weight>(total_interference(inst, s.assignment)) == s.total);
    CHECK(is_valid_assignment(inst, s.assignment));
  }
}

TEST_CASE("left-right witness") {
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 30;
    const auto inst = trial % 2 ? testing::integer_line(n, rng, 60) : gen_random_line(n, rng());
    const auto s = solve_mtip_1d(inst);
    CHECK(s.left_right.combine() == s.assignment);
    // Every witness edge is realized by the combined ranges. On a line a reach
    // covers every point it passes, so close each edge over its interval.
    const auto g = build_comm_graph(inst, s.assignment);
    CommGraph closure(n);
    for (const auto& e : s.witness_edges) {
      CHECK(g.has_edge(e.from, e.to));
      const auto lo = std::min(e.from, e.to), hi = std::max(e.from, e.to);
      for (std::size_t q = lo; q <= hi; ++q)
        if (q != e.from && !closure.has_edge(e.from, q)) closure.add_edge(e.from, q);
    }
    CHECK(is_strongly_connected(closure));
    // Reaches point the right way.
    for (std::size_t p = 0; p < n; ++p) {
      const double l = s.left_right.rho_left[p], r = s.left_right.rho_right[p];
      CHECK(l >= 0);
      CHECK(r >= 0);
      if (p == 0) CHECK(l == 0);
      if (p + 1 == n) CHECK(r == 0);
    }
  }
}

TEST_CASE("tables expose the optimum and chosen splits") {
  const auto inst = Instance::line({0, 1, 3, 7, 15});
  const auto g = build_weighted_digraph(inst);
  const auto sinks = compute_all_sinks(g);
  const auto m = compute_mtip_tables(inst, g, sinks);
  CHECK(m.optimum() == solve_mtip_1d(inst).total);
  CHECK(m.opt(4, 0) == 0);
  CHECK(m.opt(4, 4) == 0);
  const std::size_t j = m.best_j(0, 0);
  CHECK(j >= 1);
  CHECK(j < 5);
  CHECK(m.optimum() == delta(inst, 0, j, 0) + sinks.left(0, j - 1) + m.c(j));
}

TEST_CASE("larger lines stay consistent") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto inst = gen_random_line(120, seed, seed % 2 ? Spread::clustered : Spread::uniform);
    const auto s = solve_mtip_1d(inst);
    CHECK(static_cast<Weight>(total_interference(inst, s.assignment)) == s.total);
    CHECK(is_valid_assignment(inst, s.assignment));
    // The nearest-neighbour chain is always valid, so the optimum cannot exceed it.
    RangeAssignment chain{std::vector<double>(inst.size())};
    for (std::size_t p = 0; p < inst.size(); ++p) {
      double r = 0;
      if (p > 0) r = std::max(r, inst.distance(p, p - 1));
      if (p + 1 < inst.size()) r = std::max(r, inst.distance(p, p + 1));
      chain.ranges[p] = r;
    }
    CHECK(s.total <= static_cast<Weight>(total_interference(inst, chain)));
  }
}
