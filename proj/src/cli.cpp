#include "mtip/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <functional>
#include <thread>

#include "CLI11.hpp"
#include "mtip/solver1d.hpp"

namespace mtip::cli {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<std::size_t> inverse(const std::vector<std::size_t>& permutation) {
  std::vector<std::size_t> inv(permutation.size());
  for (std::size_t o = 0; o < permutation.size(); ++o) inv[permutation[o]] = o;
  return inv;
}

RangeAssignment to_file_order(const ValidatedInstance& v, const RangeAssignment& a) {
  return {to_original_order<double>(v.permutation, a.ranges)};
}

RangeAssignment to_solver_order(const ValidatedInstance& v, const RangeAssignment& a) {
  check_assignment(v.instance, a);
  return {to_instance_order<double>(v.permutation, a.ranges)};
}

// Common report body: digest, claimed vs measured total, validity.
json report(const std::string& command, const Instance& instance, std::optional<Weight> claimed,
            const RangeAssignment& assignment, double duration_ms) {
  const CommGraph g = build_comm_graph(instance, assignment);
  const auto measured = static_cast<Weight>(g.edge_count());
  json r = {{"command", command},
            {"instance", {{"n", instance.size()}, {"dim", instance.dimension()}}},
            {"total", measured},
            {"duration_ms", duration_ms},
            {"strongly_connected", is_strongly_connected(g)}};
  if (claimed) {
    r["claimed"] = *claimed;
    r["cost_matches_measured"] = *claimed == measured;
  }
  return r;
}

}  // namespace

json cmd_gen(const GenOptions& o) {
  const auto start = Clock::now();
  json r = {{"command", "gen"}, {"kind", o.kind}};
  if (o.kind == "line" || o.kind == "plane") {
    const Instance inst = o.kind == "line" ? gen_random_line(o.n, o.seed, parse_spread(o.spread))
                                           : gen_random_plane(o.n, o.seed);
    io::write_json(o.out, io::instance_to_json(inst));
    r["instance"] = {{"n", inst.size()}, {"dim", inst.dimension()}};
    r["seed"] = o.seed;
    if (o.kind == "line") r["spread"] = o.spread;
  } else if (o.kind == "gadget") {
    if (!o.grid) throw Error("usage", "gen --kind gadget needs --grid");
    const io::GridFile grid = io::parse_grid(io::read_json(*o.grid));
    const Gadget gadget = gen_grid_gadget(grid.graph);
    io::write_json(o.out, io::instance_to_json(gadget.instance));
    r["instance"] = {{"n", gadget.instance.size()}, {"dim", 2}};
    r["grid_vertices"] = grid.graph.size();
    if (o.assignment_out) {
      if (!grid.cycle) throw Error("usage", "--assignment-out needs a grid file with a 'cycle'");
      const RangeAssignment a = gadget_assignment_from_hamiltonian(gadget, *grid.cycle);
      io::write_json(*o.assignment_out, io::assignment_to_json(a));
      r["assignment_total"] = total_interference(gadget.instance, a);
    }
  } else {
    throw Error("usage", "unknown --kind '" + o.kind + "' (line, plane, gadget)");
  }
  r["duration_ms"] = elapsed_ms(start);
  return r;
}

json cmd_solve1d(const fs::path& in, const std::optional<fs::path>& out, const std::optional<fs::path>& edges_out) {
  const ValidatedInstance v = io::load_instance(in);
  if (v.instance.dimension() != 1) throw Error("dimension_mismatch", "solve1d needs a 1D instance");
  const auto start = Clock::now();
  const Solution1d sol = solve_mtip_1d(v.instance);
  const double ms = elapsed_ms(start);

  const RangeAssignment file_order = to_file_order(v, sol.assignment);
  if (out) io::write_json(*out, io::assignment_to_json(file_order));
  if (edges_out) {
    const auto inv = inverse(v.permutation);
    std::vector<Edge> edges;
    for (const auto& e : sol.witness_edges) edges.push_back({inv[e.from], inv[e.to]});
    io::write_json(*edges_out, io::edges_to_json(edges));
  }
  json r = report("solve1d", v.instance, sol.total, sol.assignment, ms);
  r["ranges"] = file_order.ranges;
  return r;
}

json cmd_approx2d(const fs::path& in, RootPolicy policy, const std::optional<fs::path>& out,
                  std::optional<OracleBudget> compare_oracle) {
  const ValidatedInstance v = io::load_instance(in);
  if (policy.kind == RootPolicy::Kind::fixed && policy.root < v.permutation.size()) {
    policy.root = v.permutation[policy.root];
  }
  const auto start = Clock::now();
  const ApproxResult res = approx_mtip_2d(v.instance, policy);
  const double ms = elapsed_ms(start);

  const RangeAssignment file_order = to_file_order(v, res.assignment);
  if (out) io::write_json(*out, io::assignment_to_json(file_order));
  json r = report("approx2d", v.instance, res.total, res.assignment, ms);
  r["root"] = inverse(v.permutation)[res.root];
  r["root_policy"] = policy.to_string();
  r["broadcast"] = res.parts.broadcast;
  r["sink"] = res.parts.sink;
  r["ranges"] = file_order.ranges;
  if (v.instance.dimension() == 1) {
    const Weight exact = solve_mtip_1d(v.instance).total;
    r["exact_opt"] = exact;
    r["ratio"] = static_cast<double>(res.total) / static_cast<double>(exact > 0 ? exact : 1);
  }
  if (compare_oracle) {
    const Weight opt = brute_force_optimal(v.instance, *compare_oracle).opt;
    r["oracle_opt"] = opt;
    r["ratio"] = static_cast<double>(res.total) / static_cast<double>(opt > 0 ? opt : 1);
    r["within_factor_2"] = res.total <= 2 * opt;
  }
  return r;
}

json cmd_oracle(const fs::path& in, const OracleBudget& budget, const std::optional<fs::path>& out) {
  const ValidatedInstance v = io::load_instance(in);
  const auto start = Clock::now();
  const OracleResult res = brute_force_optimal(v.instance, budget);
  const double ms = elapsed_ms(start);
  const RangeAssignment file_order = to_file_order(v, res.assignment);
  if (out) io::write_json(*out, io::assignment_to_json(file_order));
  json r = report("oracle", v.instance, res.opt, res.assignment, ms);
  r["ranges"] = file_order.ranges;
  return r;
}

json cmd_verify(const fs::path& instance, const fs::path& assignment, const std::optional<fs::path>& grid) {
  const ValidatedInstance v = io::load_instance(instance);
  const RangeAssignment a = to_solver_order(v, io::parse_assignment(io::read_json(assignment)));
  const auto start = Clock::now();
  json r = report("verify", v.instance, std::nullopt, a, 0.0);
  if (grid) {
    const io::GridFile file = io::parse_grid(io::read_json(*grid));
    const Gadget gadget = gen_grid_gadget(file.graph);
    if (gadget.instance.size() != v.instance.size() ||
        !std::equal(gadget.instance.points().begin(), gadget.instance.points().end(), v.instance.points().begin())) {
      throw Error("gadget_mismatch", "instance is not the gadget of the given grid graph");
    }
    const ExtractionResult ex = extract_hamiltonian_cycle(gadget, a);
    json h = {{"ok", ex.ok()}, {"failure", to_string(ex.failure)}, {"message", ex.message}};
    if (ex.cycle) h["cycle"] = *ex.cycle;
    json sets = json::array();
    for (const auto& d : ex.sets) {
      sets.push_back({{"vertex", d.vertex},
                      {"sender_interference", d.sender_interference},
                      {"long_connectors", d.long_connectors},
                      {"center_short", d.center_short}});
    }
    h["sets"] = std::move(sets);
    h["target_total"] = 9 * file.graph.size();
    r["hamiltonian"] = std::move(h);
  }
  r["duration_ms"] = elapsed_ms(start);
  return r;
}

json cmd_export_dot(const fs::path& instance, const std::optional<fs::path>& assignment,
                    const std::optional<fs::path>& out) {
  const ValidatedInstance v = io::load_instance(instance);
  RangeAssignment a{std::vector<double>(v.instance.size(), 0.0)};
  if (assignment) a = to_solver_order(v, io::parse_assignment(io::read_json(*assignment)));
  // Node labels follow file order.
  const auto inv = inverse(v.permutation);
  const CommGraph sorted = build_comm_graph(v.instance, a);
  CommGraph g(v.instance.size());
  for (const auto& e : sorted.edges()) g.add_edge(inv[e.from], inv[e.to]);
  std::vector<Point> pts(v.instance.size());
  for (std::size_t s = 0; s < pts.size(); ++s) pts[inv[s]] = v.instance.point(s);
  const std::string dot = io::to_dot(pts, g);
  if (out) {
    std::ofstream f(*out);
    if (!f) throw Error("io_error", "cannot write " + out->string());
    f << dot;
  }
  json r = {{"command", "export-dot"}, {"nodes", g.size()}, {"edges", g.edge_count()}};
  if (!out) r["dot"] = dot;
  return r;
}

namespace {

// Runs `one` over all inputs with up to `jobs` threads; reports keep input order.
json run_batch(const std::vector<fs::path>& inputs, std::size_t jobs,
               const std::function<json(const fs::path&)>& one) {
  std::vector<json> results(inputs.size());
  std::vector<std::exception_ptr> errors(inputs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) {
      try {
        results[i] = one(inputs[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const std::size_t threads = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(1, inputs.size()));
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  json arr = json::array();
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    results[i]["input"] = inputs[i].string();
    arr.push_back(std::move(results[i]));
  }
  return arr;
}

std::optional<fs::path> batch_output(const std::optional<fs::path>& out, const fs::path& in, std::size_t count,
                                     const std::string& suffix) {
  if (!out || count == 1) return out;
  return *out / (in.stem().string() + suffix);
}

json error_object(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum total interference solvers, oracles and gadget tools"};
  app.require_subcommand(1);

  GenOptions gen;
  std::string gen_out;
  std::string gen_grid;
  std::string gen_assignment;
  auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
  gen_cmd->add_option("--kind", gen.kind, "line, plane or gadget")->check(CLI::IsMember({"line", "plane", "gadget"}));
  gen_cmd->add_option("--n", gen.n, "number of points (line, plane)");
  gen_cmd->add_option("--seed", gen.seed, "generator seed");
  gen_cmd->add_option("--spread", gen.spread, "uniform, clustered or geometric (line)");
  gen_cmd->add_option("--grid", gen_grid, "grid-graph JSON (gadget)");
  gen_cmd->add_option("--out", gen_out, "instance JSON to write")->required();
  gen_cmd->add_option("--assignment-out", gen_assignment, "write the Hamiltonian gadget assignment here");

  std::vector<std::string> inputs;
  std::string out_path;
  std::string edges_path;
  std::size_t jobs = 1;
  auto* solve_cmd = app.add_subcommand("solve1d", "exact solver for points on a line");
  solve_cmd->add_option("--in", inputs, "instance JSON (repeat for batch mode)")->required();
  solve_cmd->add_option("--out", out_path, "assignment JSON (a directory in batch mode)");
  solve_cmd->add_option("--edges", edges_path, "witness edge-list JSON");
  solve_cmd->add_option("--jobs", jobs, "parallel instances in batch mode");

  std::string policy_text = "best";
  bool with_oracle = false;
  std::size_t budget_points = OracleBudget{}.max_points;
  std::uint64_t budget_states = OracleBudget{}.max_states;
  auto* approx_cmd = app.add_subcommand("approx2d", "2-approximation (1D or 2D)");
  approx_cmd->add_option("--in", inputs, "instance JSON (repeat for batch mode)")->required();
  approx_cmd->add_option("--out", out_path, "assignment JSON (a directory in batch mode)");
  approx_cmd->add_option("--root-policy", policy_text, "first | fixed:<i> | best");
  approx_cmd->add_flag("--oracle", with_oracle, "also report the brute-force optimum and ratio");
  approx_cmd->add_option("--budget", budget_points, "oracle point limit");
  approx_cmd->add_option("--jobs", jobs, "parallel instances in batch mode");

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force optimum");
  oracle_cmd->add_option("--in", inputs, "instance JSON (repeat for batch mode)")->required();
  oracle_cmd->add_option("--out", out_path, "assignment JSON (a directory in batch mode)");
  oracle_cmd->add_option("--budget", budget_points, "maximum number of points");
  oracle_cmd->add_option("--max-states", budget_states, "maximum predicate evaluations");
  oracle_cmd->add_option("--jobs", jobs, "parallel instances in batch mode");

  std::string instance_path;
  std::string assignment_path;
  std::string grid_path;
  auto* verify_cmd = app.add_subcommand("verify", "check validity and measure interference");
  verify_cmd->add_option("--instance", instance_path, "instance JSON")->required();
  verify_cmd->add_option("--assignment", assignment_path, "assignment JSON")->required();
  verify_cmd->add_option("--grid", grid_path, "grid graph the instance is a gadget of");

  auto* dot_cmd = app.add_subcommand("export-dot", "communication graph as Graphviz");
  dot_cmd->add_option("--instance", instance_path, "instance JSON")->required();
  dot_cmd->add_option("--assignment", assignment_path, "assignment JSON (default: all ranges 0)");
  dot_cmd->add_option("--out", out_path, "DOT file (default: inside the report)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << error_object("usage", e.what()).dump() << '\n';
    return 64;
  }

  auto opt_path = [](const std::string& s) { return s.empty() ? std::optional<fs::path>{} : fs::path(s); };
  const OracleBudget budget{budget_points, budget_states};
  try {
    json result;
    const std::vector<fs::path> in_paths(inputs.begin(), inputs.end());
    if (in_paths.size() > 1 && !out_path.empty()) fs::create_directories(out_path);

    if (*gen_cmd) {
      gen.out = gen_out;
      gen.grid = opt_path(gen_grid);
      gen.assignment_out = opt_path(gen_assignment);
      result = cmd_gen(gen);
    } else if (*solve_cmd) {
      auto one = [&](const fs::path& in) {
        return cmd_solve1d(in, batch_output(opt_path(out_path), in, in_paths.size(), ".assignment.json"),
                           batch_output(opt_path(edges_path), in, in_paths.size(), ".edges.json"));
      };
      result = in_paths.size() == 1 ? one(in_paths[0]) : run_batch(in_paths, jobs, one);
    } else if (*approx_cmd) {
      const RootPolicy policy = RootPolicy::parse(policy_text);
      auto one = [&](const fs::path& in) {
        return cmd_approx2d(in, policy, batch_output(opt_path(out_path), in, in_paths.size(), ".assignment.json"),
                            with_oracle ? std::optional<OracleBudget>(budget) : std::nullopt);
      };
      result = in_paths.size() == 1 ? one(in_paths[0]) : run_batch(in_paths, jobs, one);
    } else if (*oracle_cmd) {
      auto one = [&](const fs::path& in) {
        return cmd_oracle(in, budget, batch_output(opt_path(out_path), in, in_paths.size(), ".assignment.json"));
      };
      result = in_paths.size() == 1 ? one(in_paths[0]) : run_batch(in_paths, jobs, one);
    } else if (*verify_cmd) {
      result = cmd_verify(instance_path, assignment_path, opt_path(grid_path));
      out << result.dump(2) << '\n';
      return result["strongly_connected"].get<bool>() ? 0 : 1;
    } else if (*dot_cmd) {
      result = cmd_export_dot(instance_path, opt_path(assignment_path), opt_path(out_path));
    }
    out << result.dump(2) << '\n';
    return 0;
  } catch (const Error& e) {
    err << error_object(e.code(), e.what()).dump() << '\n';
    if (e.code() == "usage") return 64;
  } catch (const std::exception& e) {
    err << error_object("internal", e.what()).dump() << '\n';
  }
  return 2;
}

}  // namespace mtip::cli
