#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <random>

#include "mtip/core.hpp"
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

std::vector<Edge> sorted_edges(const CommGraph& g) {
  auto e = g.edges();
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace

TEST_CASE("validate_instance sorts 1D points and returns the permutation") {
  const std::vector<std::vector<double>> raw{{3}, {1}, {2}};
  const auto v = validate_instance(raw, 1);
  REQUIRE(v.instance.size() == 3);
  CHECK(v.instance.point(0).x == 1);
  CHECK(v.instance.point(1).x == 2);
  CHECK(v.instance.point(2).x == 3);
  CHECK(v.permutation == std::vector<std::size_t>{2, 0, 1});
}

TEST_CASE("validate_instance keeps 2D order") {
  const std::vector<std::vector<double>> raw{{1, 1}, {0, 0}};
  const auto v = validate_instance(raw, 2);
  CHECK(v.instance.point(0) == Point{1, 1});
  CHECK(v.permutation == std::vector<std::size_t>{0, 1});
}

TEST_CASE("validate_instance rejects bad input") {
  CHECK(error_code([] { validate_instance(std::vector<std::vector<double>>{{0, 0}, {0, 0}}, 2); }) == "duplicate_point");
  CHECK(error_code([] { validate_instance(std::vector<std::vector<double>>{{0.0}, {std::nan("")}}, 1); }) ==
        "non_finite_coordinate");
  CHECK(error_code([] {
          validate_instance(std::vector<std::vector<double>>{{std::numeric_limits<double>::infinity()}}, 1);
        }) == "non_finite_coordinate");
  CHECK(error_code([] { validate_instance(std::vector<std::vector<double>>{}, 1); }) == "empty_instance");
  CHECK(error_code([] { validate_instance(std::vector<std::vector<double>>{{0, 1}}, 1); }) == "bad_dimension");
  CHECK(error_code([] { validate_instance(std::vector<std::vector<double>>{{0}}, 3); }) == "bad_dimension");
  CHECK(error_code([] { Instance::line({2, 1}); }) == "unsorted_line");
}

TEST_CASE("build_comm_graph follows the coverage predicate") {
  SUBCASE("two points covering each other") {
    const auto inst = Instance::plane({{0, 0}, {3, 4}});
    const auto g = build_comm_graph(inst, {{5, 5}});
    CHECK(sorted_edges(g) == std::vector<Edge>{{0, 1}, {1, 0}});
  }
  SUBCASE("zero ranges cover nothing") {
    const auto inst = Instance::plane({{0, 0}, {1, 0}, {0, 1}});
    CHECK(build_comm_graph(inst, {{0, 0, 0}}).edge_count() == 0);
  }
  SUBCASE("line 0 1 2 with unit ranges") {
    const auto inst = Instance::line({0, 1, 2});
    const auto g = build_comm_graph(inst, {{1, 1, 1}});
    CHECK(sorted_edges(g) == std::vector<Edge>{{0, 1}, {1, 0}, {1, 2}, {2, 1}});
    CHECK(is_strongly_connected(g));
  }
  SUBCASE("length mismatch") {
    const auto inst = Instance::line({0, 1});
    CHECK(error_code([&] { build_comm_graph(inst, {{1}}); }) == "length_mismatch");
    CHECK(error_code([&] { build_comm_graph(inst, {{1, -1}}); }) == "invalid_range");
  }
  SUBCASE("distance-realized ranges always cover their target") {
    // sqrt(3)^2 rounds below 3; the distance predicate must still cover.
    const auto inst = Instance::plane({{0, 0}, {1, std::sqrt(2.0)}});
    const double r = inst.distance(0, 1);
    CHECK(build_comm_graph(inst, {{r, 0}}).has_edge(0, 1));
  }
}

TEST_CASE("is_strongly_connected") {
  CHECK(is_strongly_connected(CommGraph(1)));
  const std::vector<Edge> one_way{{0, 1}};
  CHECK_FALSE(is_strongly_connected(CommGraph(2, one_way)));
  const std::vector<Edge> path{{0, 1}, {1, 0}, {1, 2}, {2, 1}};
  CHECK(is_strongly_connected(CommGraph(3, path)));
  const std::vector<Edge> two_cycles{{0, 1}, {1, 0}, {2, 3}, {3, 2}, {1, 2}};
  const CommGraph g(4, two_cycles);
  CHECK_FALSE(is_strongly_connected(g));
  const auto comp = strongly_connected_components(g);
  CHECK(comp[0] == comp[1]);
  CHECK(comp[2] == comp[3]);
  CHECK(comp[0] != comp[2]);
}

TEST_CASE("strongly connected components agree with pairwise reachability") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    CommGraph g(n);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        if (u != v && rng() % 4 == 0) g.add_edge(u, v);
      }
    }
    // Floyd-Warshall style closure.
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t u = 0; u < n; ++u) {
      reach[u][u] = true;
      for (std::size_t v : g.successors(u)) reach[u][v] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    const auto comp = strongly_connected_components(g);
    bool all = true;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        CHECK((comp[i] == comp[j]) == (reach[i][j] && reach[j][i]));
        all = all && reach[i][j];
      }
    }
    CHECK(is_strongly_connected(g) == all);
  }
}

TEST_CASE("interference counts") {
  SUBCASE("two points") {
    const auto inst = Instance::line({0, 2.5});
    const RangeAssignment a{{2.5, 2.5}};
    CHECK(total_interference(inst, a) == 2);
  }
  SUBCASE("line 0 1 2") {
    const auto inst = Instance::line({0, 1, 2});
    const RangeAssignment a{{1, 1, 1}};
    CHECK(sender_interference(inst, a, 0) == 1);
    CHECK(sender_interference(inst, a, 1) == 2);
    CHECK(sender_interference(inst, a, 2) == 1);
    CHECK(receiver_interference(inst, a, 1) == 2);
    CHECK(total_interference(inst, a) == 4);
  }
  SUBCASE("sum of SI equals sum of RI equals edge count") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 1 + rng() % 12;
      std::vector<Point> pts;
      for (std::size_t i = 0; i < n; ++i) pts.push_back({testing::uniform(rng, 0, 1), testing::uniform(rng, 0, 1)});
      const auto inst = Instance::plane(pts);
      const auto a = testing::random_assignment(inst, rng, 0.8);
      std::size_t si = 0, ri = 0;
      for (std::size_t p = 0; p < n; ++p) {
        si += sender_interference(inst, a, p);
        ri += receiver_interference(inst, a, p);
      }
      const auto g = build_comm_graph(inst, a);
      CHECK(si == g.edge_count());
      CHECK(ri == g.edge_count());
      CHECK(total_interference(inst, a) == si);
      CHECK(sorted_edges(build_comm_graph(inst, a)) == sorted_edges(g));
    }
  }
}

TEST_CASE("edge_weight counts inclusively") {
  const auto two = Instance::line({0, 1});
  CHECK(edge_weight(two, 0, 1) == 1);
  CHECK(edge_weight(two, 1, 0) == 1);

  const auto inst = Instance::line({0, 1, 3});
  CHECK(edge_weight(inst, 0, 1) == 1);
  CHECK(edge_weight(inst, 0, 2) == 2);
  CHECK(edge_weight(inst, 1, 2) == 2);

  // p0 = 0 and p1 = -1 in input order; both others lie at distance 1 from p0.
  const auto v = validate_instance(std::vector<std::vector<double>>{{0}, {-1}, {1}}, 1);
  CHECK(edge_weight(v.instance, v.permutation[0], v.permutation[1]) == 2);

  CHECK(error_code([&] { edge_weight(inst, 1, 1); }) == "self_edge");
}

TEST_CASE("build_weighted_digraph matches edge_weight and grows with distance") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 10;
    const auto inst = trial % 2 ? testing::integer_line(n, rng, 15)
                                : Instance::plane([&] {
                                    std::vector<Point> pts;
                                    std::set<std::pair<int, int>> seen;
                                    while (pts.size() < n) {
                                      const int x = rng() % 6, y = rng() % 6;
                                      if (seen.emplace(x, y).second) pts.push_back({double(x), double(y)});
                                    }
                                    return pts;
                                  }());
    const auto g = build_weighted_digraph(inst);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        if (p == q) continue;
        CHECK(g.weight(p, q) == edge_weight(inst, p, q));
        CHECK(g.weight(p, q) >= 1);
        CHECK(g.weight(p, q) <= static_cast<Weight>(n - 1));
        for (std::size_t r = 0; r < n; ++r) {
          if (r != p && inst.distance(p, q) < inst.distance(p, r)) CHECK(g.weight(p, q) < g.weight(p, r));
        }
      }
    }
  }
}

TEST_CASE("invert_digraph") {
  WeightedDigraph sym(3, 4);
  CHECK(invert_digraph(sym) == sym);

  WeightedDigraph g(2);
  g.set_weight(0, 1, 3);
  g.set_weight(1, 0, 5);
  const auto inv = invert_digraph(g);
  CHECK(inv.weight(0, 1) == 5);
  CHECK(inv.weight(1, 0) == 3);

  std::mt19937_64 rng(3);
  const auto r = testing::random_digraph(6, rng, 1, 6);
  CHECK(invert_digraph(invert_digraph(r)) == r);
}

TEST_CASE("tree ranges cost exactly the tree weight") {
  // Assign each non-root the distance to its tree target and the root 0;
  // the measured interference is then the sum of coverage weights.
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back({testing::uniform(rng, 0, 1), testing::uniform(rng, 0, 1)});
    const auto inst = Instance::plane(pts);
    const auto g = build_weighted_digraph(inst);
    // Random sink tree rooted at 0: each v > 0 points to some u < v.
    std::vector<Edge> tree;
    RangeAssignment a{std::vector<double>(n, 0.0)};
    for (std::size_t v = 1; v < n; ++v) {
      const std::size_t u = rng() % v;
      tree.push_back({v, u});
      a.ranges[v] = inst.distance(v, u);
    }
    CHECK(static_cast<Weight>(total_interference(inst, a)) == edges_weight(g, tree));
  }
}

TEST_CASE("weighted digraph helpers") {
  WeightedDigraph g(3);
  CHECK_FALSE(g.has_edge(0, 1));
  g.set_weight(0, 1, 2);
  CHECK(g.has_edge(0, 1));
  CHECK(error_code([&] { g.set_weight(0, 0, 1); }) == "self_edge");
  CHECK(error_code([&] { g.set_weight(0, 1, -3); }) == "negative_weight");
  const std::vector<Edge> missing{{1, 2}};
  CHECK(error_code([&] { edges_weight(g, missing); }) == "missing_edge");
  const auto sub = g.induced(0, 1);
  CHECK(sub.size() == 2);
  CHECK(sub.weight(0, 1) == 2);
  CHECK(error_code([&] { g.induced(2, 1); }) == "invalid_interval");
}

TEST_CASE("permutation helpers invert each other") {
  const auto v = validate_instance(std::vector<std::vector<double>>{{5}, {-2}, {9}, {0}}, 1);
  const std::vector<double> file{10, 20, 30, 40};
  const auto sorted = to_instance_order<double>(v.permutation, file);
  CHECK(sorted == std::vector<double>{20, 40, 10, 30});
  CHECK(to_original_order<double>(v.permutation, sorted) == file);
}
