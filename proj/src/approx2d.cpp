#include "mtip/approx2d.hpp"

#include <algorithm>
#include <charconv>

#include "mtip/arborescence.hpp"

namespace mtip {

namespace {

void check_root(const Instance& instance, std::size_t root) {
  if (root >= instance.size()) {
    throw Error("index_out_of_range", "root " + std::to_string(root) + " out of range for " +
                                          std::to_string(instance.size()) + " points");
  }
}

SinkSolution sink_solution(const Instance& instance, const WeightedDigraph& g, std::size_t root) {
  SinkTree tree = min_sink_tree(g, root);
  SinkSolution out;
  out.assignment.ranges.assign(instance.size(), 0.0);
  for (const auto& e : tree.edges) out.assignment.ranges[e.from] = instance.distance(e.from, e.to);
  out.total = tree.weight;
  out.tree = std::move(tree.edges);
  return out;
}

ApproxResult combine(const Instance& instance, const WeightedDigraph& g, std::size_t root) {
  const RangeAssignment broadcast = solve_mtip1(instance, root);
  const SinkSolution sink = sink_solution(instance, g, root);
  ApproxResult result;
  result.root = root;
  result.assignment.ranges.resize(instance.size());
  for (std::size_t p = 0; p < instance.size(); ++p) {
    result.assignment.ranges[p] = std::max(broadcast[p], sink.assignment[p]);
  }
  result.total = static_cast<Weight>(total_interference(instance, result.assignment));
  result.parts = {static_cast<Weight>(instance.size()) - 1, sink.total};
  return result;
}

}  // namespace

RootPolicy RootPolicy::parse(const std::string& text) {
  if (text == "first") return first();
  if (text == "best") return best();
  const std::string prefix = "fixed:";
  if (text.rfind(prefix, 0) == 0) {
    std::size_t root = 0;
    const char* begin = text.data() + prefix.size();
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, root);
    if (ec == std::errc() && ptr == end && begin != end) return fixed(root);
  }
  throw Error("bad_root_policy", "root policy must be first, best or fixed:<i>, got '" + text + "'");
}

std::string RootPolicy::to_string() const {
  switch (kind) {
    case Kind::first:
      return "first";
    case Kind::fixed:
      return "fixed:" + std::to_string(root);
    case Kind::best:
      return "best";
  }
  return "best";
}

RangeAssignment solve_mtip1(const Instance& instance, std::size_t root) {
  check_root(instance, root);
  RangeAssignment out;
  out.ranges.assign(instance.size(), 0.0);
  double reach = 0.0;
  for (std::size_t p = 0; p < instance.size(); ++p) reach = std::max(reach, instance.distance(root, p));
  out.ranges[root] = reach;
  return out;
}

SinkSolution solve_mtip2(const Instance& instance, std::size_t root) {
  check_root(instance, root);
  return sink_solution(instance, build_weighted_digraph(instance), root);
}

ApproxResult approx_mtip_2d(const Instance& instance, RootPolicy policy) {
  const WeightedDigraph g = build_weighted_digraph(instance);
  switch (policy.kind) {
    case RootPolicy::Kind::first:
      return combine(instance, g, 0);
    case RootPolicy::Kind::fixed:
      check_root(instance, policy.root);
      return combine(instance, g, policy.root);
    case RootPolicy::Kind::best:
      break;
  }
  ApproxResult best = combine(instance, g, 0);
  for (std::size_t root = 1; root < instance.size(); ++root) {
    ApproxResult candidate = combine(instance, g, root);
    if (candidate.total < best.total) best = std::move(candidate);
  }
  return best;
}

}  // namespace mtip
