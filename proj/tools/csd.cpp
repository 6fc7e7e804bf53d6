// Command-line front end: exact solves, tree decisions, the walk-based
// approximation, profile verification, and instance generation. Every
// subcommand emits one JSON document on stdout; diagnostics go to stderr.
//
// Exit codes: 0 success (including a negative decision), 2 unreadable or
// malformed input, 3 guardrail tripped, 4 invalid parameters, 5 internal
// verification failure, 6 solve completed but the uniform-on-vstar
// equilibrium construction failed (the report carries the fallback).

#include <CLI11.hpp>
#include <json.hpp>

#include <csd/analysis.hpp>
#include <csd/cover.hpp>
#include <csd/errors.hpp>
#include <csd/generators.hpp>
#include <csd/io.hpp>
#include <csd/solver.hpp>
#include <csd/tree_optimality.hpp>
#include <csd/version.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace csd;

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << text;
}

// Shared report skeleton; every subcommand fills params/results.
json envelope(const std::string& command) {
  return {{"command", command},
          {"version", kVersion},
          {"params", json::object()},
          {"results", json::object()}};
}

void attach_input(json& doc, const std::string& path, const std::string& text,
                  const Graph& g) {
  doc["input"] = {{"path", path},
                  {"digest", digest_hex(text)},
                  {"n", g.vertex_count()},
                  {"m", g.edge_count()}};
}

void emit(json& doc, Clock::time_point start) {
  doc["timing_ms"] = elapsed_ms(start);
  std::cout << doc.dump(2) << '\n';
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      values.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer list entry '" + item + "'");
    }
  }
  if (values.empty()) throw std::invalid_argument("empty integer list");
  return values;
}

struct SolveArgs {
  std::string graph_path;
  int lambda = 0;
  int attackers = 0;  // 0 = value/strategy only
  std::size_t theta_cap = kDefaultThetaCap;
  std::string format = "report";
  std::string dump_actions;
};

int run_solve(const SolveArgs& args) {
  auto start = Clock::now();
  std::string text = read_file(args.graph_path);
  Graph g = Graph::parse(text);
  SolveOptions opts{args.theta_cap};

  ExactSolution sol = solve_maxmin(g, args.lambda, opts);

  if (args.format == "bare") {
    std::cout << to_fraction(sol.pstar) << '\n';
    return 0;
  }

  if (!args.dump_actions.empty())
    write_file(args.dump_actions, serialize_subgraphs(*sol.qstar.actions));

  json doc = envelope("solve");
  attach_input(doc, args.graph_path, text, g);
  doc["params"] = {{"lambda", args.lambda}, {"attackers", args.attackers}};
  json results = solution_to_json(sol);
  results["lambda"] = args.lambda;
  results["defense_optimal"] =
      sol.pstar == Rational(args.lambda) / g.vertex_count();

  int exit_code = 0;
  if (args.attackers > 0) {
    json eq = {{"attackers", args.attackers}};
    StrategyProfile profile{sol.qstar, {}};
    try {
      profile = build_equilibrium(sol, args.attackers);
      eq["constructed"] = true;
      eq["construction"] = "uniform-on-vstar";
    } catch (const EquilibriumConstructionError& e) {
      // The certificate distribution always works; surface the failure but
      // still hand back a genuine equilibrium.
      profile.attackers.assign(args.attackers, sol.attacker_certificate);
      eq["constructed"] = false;
      eq["construction"] = "attacker-certificate";
      eq["diagnostic"] = e.what();
      exit_code = 6;
    }
    eq["profile"] = profile_to_json(profile);
    eq["value"] = to_fraction(defense_value(profile));
    results["equilibrium"] = std::move(eq);
  }

  doc["results"] = std::move(results);
  emit(doc, start);
  return exit_code;
}

struct TreeCheckArgs {
  std::string graph_path;
  int lambda = 0;
};

int run_tree_check(const TreeCheckArgs& args) {
  auto start = Clock::now();
  std::string text = read_file(args.graph_path);
  Graph g = Graph::parse(text);
  if (!g.is_tree())
    throw std::invalid_argument("tree-check requires a tree (m == n-1)");
  if (args.lambda < 1 || args.lambda > g.vertex_count())
    throw std::invalid_argument("lambda must be in [1, n]");

  Tree tree(g, 0);
  auto partition = check_tree_defense_optimal(tree, args.lambda);

  json doc = envelope("tree-check");
  attach_input(doc, args.graph_path, text, g);
  doc["params"] = {{"lambda", args.lambda}};
  json results = {{"defense_optimal", partition.has_value()}};
  if (partition) {
    results["partition"] = partition_to_json(*partition);
    results["pstar"] =
        to_fraction(Rational(args.lambda) / g.vertex_count());
    results["strategy"] =
        strategy_to_json(optimal_tree_strategy(tree, *partition));
  } else if (g.vertex_count() % args.lambda != 0) {
    results["reason"] = "lambda does not divide n";
  } else {
    results["reason"] = "no partition into connected lambda-blocks";
  }
  doc["results"] = std::move(results);
  emit(doc, start);
  return 0;
}

struct ApproxArgs {
  std::string graph_path;
  int lambda = 0;
  bool with_exact = false;
  std::size_t theta_cap = kDefaultThetaCap;
  std::string format = "report";
};

int run_approx(const ApproxArgs& args) {
  auto start = Clock::now();
  std::string text = read_file(args.graph_path);
  Graph g = Graph::parse(text);

  Tree tree = g.is_tree() ? Tree(g, 0) : spanning_tree(g);
  CoverCollection cover = cover_tree(tree, args.lambda);
  DefenseStrategy strategy = approx_defense_strategy(g, args.lambda);
  Rational guarantee = vertex_probabilities(strategy).pmin;

  if (args.format == "bare") {
    std::cout << to_fraction(guarantee) << '\n';
    return 0;
  }

  json doc = envelope("approx");
  attach_input(doc, args.graph_path, text, g);
  doc["params"] = {{"lambda", args.lambda}, {"with_exact", args.with_exact}};
  json results = cover_to_json(cover);
  results["lambda"] = args.lambda;
  results["cover_size"] = cover.subgraphs.size();
  results["guarantee"] = to_fraction(guarantee);
  results["strategy"] = strategy_to_json(strategy);
  if (args.with_exact) {
    Rational pstar = maxmin_value(g, args.lambda, SolveOptions{args.theta_cap});
    // Approximation promise: pstar / guarantee <= 2 + (lambda-3)/n.
    Rational bound =
        Rational(2 * g.vertex_count() + args.lambda - 3) / g.vertex_count();
    results["pstar"] = to_fraction(pstar);
    results["approx_factor"] = to_fraction(pstar / guarantee);
    results["factor_bound"] = to_fraction(bound);
    results["within_bound"] = pstar / guarantee <= bound;
  }
  doc["results"] = std::move(results);
  emit(doc, start);
  return 0;
}

struct VerifyArgs {
  std::string graph_path;
  std::string profile_path;
  int lambda = 0;
  std::size_t theta_cap = kDefaultThetaCap;
};

int run_verify(const VerifyArgs& args) {
  auto start = Clock::now();
  std::string text = read_file(args.graph_path);
  Graph g = Graph::parse(text);
  std::string profile_text = read_file(args.profile_path);
  json profile_doc;
  try {
    profile_doc = json::parse(profile_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("profile: ") + e.what());
  }
  StrategyProfile profile = profile_from_json(g, args.lambda, profile_doc);

  SolveOptions opts{args.theta_cap};
  EquilibriumReport report = verify_equilibrium(g, profile, opts);
  PureDeviationResult deviations = pure_deviation_check(g, profile, opts);
  if (report.is_equilibrium != deviations.is_equilibrium)
    throw std::logic_error("equilibrium checkers disagree");

  json doc = envelope("verify");
  attach_input(doc, args.graph_path, text, g);
  doc["params"] = {{"lambda", args.lambda}, {"profile", args.profile_path}};
  json results = report_to_json(report);
  json dev = {{"is_equilibrium", deviations.is_equilibrium}};
  if (deviations.defender_improvement)
    dev["defender_improvement"] = deviations.defender_improvement->vertices;
  if (deviations.attacker_improvement)
    dev["attacker_improvement"] = {
        {"attacker", deviations.attacker_improvement->first},
        {"vertex", deviations.attacker_improvement->second}};
  results["pure_deviations"] = std::move(dev);
  doc["results"] = std::move(results);
  emit(doc, start);
  return 0;
}

struct GenerateArgs {
  std::string family;
  std::string out;
  int n = 0;
  int m = 0;
  int lambda = 0;
  std::uint64_t seed = 1;
  std::string ints;
  int parts = 0;
};

int run_generate(const GenerateArgs& args) {
  auto start = Clock::now();
  std::optional<int> lambda_opt;
  if (args.lambda > 0) lambda_opt = args.lambda;

  GeneratedInstance inst = [&]() -> GeneratedInstance {
    if (args.family == "path") return make_path_instance(args.n, lambda_opt);
    if (args.family == "cycle") return make_cycle_instance(args.n, lambda_opt);
    if (args.family == "star-of-lines") {
      if (args.lambda <= 0) throw std::invalid_argument("star-of-lines needs --lambda");
      return gen_star_of_lines(args.n, args.lambda);
    }
    if (args.family == "three-partition") {
      if (args.ints.empty() || args.parts <= 0)
        throw std::invalid_argument("three-partition needs --ints and --parts");
      return gen_three_partition_tree(parse_int_list(args.ints), args.parts);
    }
    if (args.family == "fig1") return gen_fig1_graph();
    if (args.family == "random-tree") {
      GeneratedInstance out{gen_random_tree(args.n, args.seed),
                            std::nullopt,
                            std::nullopt,
                            std::nullopt,
                            "random-tree",
                            {{"n", args.n}, {"seed", static_cast<long long>(args.seed)}}};
      return out;
    }
    if (args.family == "random-connected") {
      GeneratedInstance out{gen_random_connected(args.n, args.m, args.seed),
                            std::nullopt,
                            std::nullopt,
                            std::nullopt,
                            "random-connected",
                            {{"n", args.n},
                             {"m", args.m},
                             {"seed", static_cast<long long>(args.seed)}}};
      return out;
    }
    throw std::invalid_argument("unknown family '" + args.family + "'");
  }();

  write_file(args.out, inst.graph.serialize());
  json sidecar = instance_sidecar(inst);
  write_file(args.out + ".meta.json", sidecar.dump(2) + "\n");

  json doc = envelope("generate");
  doc["params"] = {{"family", args.family}, {"out", args.out}};
  doc["results"] = std::move(sidecar);
  doc["results"]["graph_file"] = args.out;
  emit(doc, start);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connected-subgraph defense games: exact values, equilibria, "
               "tree decisions, covers, and benchmark instances"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd =
      app.add_subcommand("solve", "Exact maximin catch probability and equilibrium");
  solve_cmd->add_option("graph", solve_args.graph_path, "edge-list file")->required();
  solve_cmd->add_option("--lambda", solve_args.lambda, "subgraph size")->required();
  solve_cmd->add_option("--attackers", solve_args.attackers,
                        "construct an equilibrium for this many attackers (0 = skip)");
  solve_cmd->add_option("--theta-cap", solve_args.theta_cap,
                        "abort if the action set exceeds this size");
  solve_cmd->add_option("--format", solve_args.format, "report (JSON) or bare (value only)")
      ->check(CLI::IsMember({"report", "bare"}));
  solve_cmd->add_option("--dump-actions", solve_args.dump_actions,
                        "also write the enumerated action set to this file");

  TreeCheckArgs tree_args;
  auto* tree_cmd =
      app.add_subcommand("tree-check", "Decide defense optimality for a tree");
  tree_cmd->add_option("graph", tree_args.graph_path, "edge-list file")->required();
  tree_cmd->add_option("--lambda", tree_args.lambda, "subgraph size")->required();

  ApproxArgs approx_args;
  auto* approx_cmd =
      app.add_subcommand("approx", "Cover-based strategy with a factor guarantee");
  approx_cmd->add_option("graph", approx_args.graph_path, "edge-list file")->required();
  approx_cmd->add_option("--lambda", approx_args.lambda, "subgraph size")->required();
  approx_cmd->add_flag("--with-exact", approx_args.with_exact,
                       "also solve exactly and report the realized factor");
  approx_cmd->add_option("--theta-cap", approx_args.theta_cap,
                         "action-set cap for the exact comparison");
  approx_cmd->add_option("--format", approx_args.format,
                         "report (JSON) or bare (guarantee only)")
      ->check(CLI::IsMember({"report", "bare"}));

  VerifyArgs verify_args;
  auto* verify_cmd =
      app.add_subcommand("verify", "Check a strategy profile for equilibrium");
  verify_cmd->add_option("graph", verify_args.graph_path, "edge-list file")->required();
  verify_cmd->add_option("--lambda", verify_args.lambda, "subgraph size")->required();
  verify_cmd->add_option("--profile", verify_args.profile_path, "profile JSON file")
      ->required();
  verify_cmd->add_option("--theta-cap", verify_args.theta_cap,
                         "abort if the action set exceeds this size");

  GenerateArgs gen_args;
  auto* gen_cmd = app.add_subcommand("generate", "Write a benchmark instance");
  gen_cmd->add_option("family", gen_args.family,
                      "path | cycle | star-of-lines | three-partition | fig1 | "
                      "random-tree | random-connected")
      ->required();
  gen_cmd->add_option("--out", gen_args.out, "output edge-list file")->required();
  gen_cmd->add_option("--n", gen_args.n, "vertex count");
  gen_cmd->add_option("--m", gen_args.m, "edge count (random-connected)");
  gen_cmd->add_option("--lambda", gen_args.lambda, "subgraph size");
  gen_cmd->add_option("--seed", gen_args.seed, "RNG seed (random families)");
  gen_cmd->add_option("--ints", gen_args.ints,
                      "comma-separated integers (three-partition)");
  gen_cmd->add_option("--parts", gen_args.parts, "number of triples (three-partition)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 4;  // help/version exit clean, bad usage is 4
  }

  try {
    if (app.got_subcommand(solve_cmd)) return run_solve(solve_args);
    if (app.got_subcommand(tree_cmd)) return run_tree_check(tree_args);
    if (app.got_subcommand(approx_cmd)) return run_approx(approx_args);
    if (app.got_subcommand(verify_cmd)) return run_verify(verify_args);
    if (app.got_subcommand(gen_cmd)) return run_generate(gen_args);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const GuardrailError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const EquilibriumConstructionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 6;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 5;
  }
  return 0;
}
