#include "csd/analysis.hpp"

#include "csd/subgraphs.hpp"

#include <algorithm>
#include <stdexcept>

namespace csd {

namespace {

// Expected attackers per vertex, unnormalized: sum of the k distributions.
RationalVector aggregate_attack(const StrategyProfile& profile) {
  const int n = profile.defense.actions->n;
  RationalVector total = RationalVector::Zero(n);
  for (const auto& t : profile.attackers) total += t;
  return total;
}

Rational subgraph_mass(const LambdaSubgraph& s, const RationalVector& weights) {
  Rational mass = 0;
  for (int v : s.vertices) mass += weights[v];
  return mass;
}

void check_graph_match(const Graph& g, const StrategyProfile& profile) {
  if (profile.defense.actions->n != g.vertex_count())
    throw std::invalid_argument("profile built for " +
                                std::to_string(profile.defense.actions->n) +
                                " vertices, graph has " + std::to_string(g.vertex_count()));
}

}  // namespace

Rational defense_value(const StrategyProfile& profile) {
  validate_profile(profile);
  RationalVector p =
      coverage_probabilities<Rational>(*profile.defense.actions, profile.defense.probs);
  return p.dot(aggregate_attack(profile));
}

Rational attacker_payoff(int attacker_index, const StrategyProfile& profile) {
  validate_profile(profile);
  if (attacker_index < 0 || attacker_index >= profile.attacker_count())
    throw std::invalid_argument("attacker index " + std::to_string(attacker_index) +
                                " out of range");
  RationalVector p =
      coverage_probabilities<Rational>(*profile.defense.actions, profile.defense.probs);
  return Rational(1) - p.dot(profile.attackers[static_cast<std::size_t>(attacker_index)]);
}

EquilibriumReport verify_equilibrium(const Graph& g, const StrategyProfile& profile,
                                     const SolveOptions& opts) {
  validate_profile(profile);
  check_graph_match(g, profile);

  const ActionSet& own = *profile.defense.actions;
  ExactSolution sol = solve_maxmin(g, own.lambda, opts);

  EquilibriumReport report;
  report.pstar = sol.pstar;
  report.vstar = sol.vstar;
  report.attacker_count = profile.attacker_count();
  report.value = defense_value(profile);
  if (report.value > 0)
    report.defense_ratio = Rational(profile.attacker_count()) / report.value;

  // (1) the defense is maximin-optimal
  RationalVector p = coverage_probabilities<Rational>(own, profile.defense.probs);
  report.defense_attains_pstar = p.minCoeff() == sol.pstar;
  if (!report.defense_attains_pstar)
    for (int v = 0; v < own.n; ++v)
      if (p[v] < sol.pstar) {
        report.undercovered_vertex = v;
        break;
      }

  // (2) attacker supports inside the everywhere-tight set
  report.attackers_inside_vstar = true;
  for (int a = 0; a < profile.attacker_count() && report.attackers_inside_vstar; ++a)
    for (int v = 0; v < own.n; ++v)
      if (profile.attackers[static_cast<std::size_t>(a)][v] > 0 &&
          !std::binary_search(sol.vstar.begin(), sol.vstar.end(), v)) {
        report.attackers_inside_vstar = false;
        report.stray_attacker = {a, v};
        break;
      }

  // (3) every support subgraph carries maximal expected attacker mass,
  // maximized over the complete action set
  RationalVector attack = aggregate_attack(profile);
  const ActionSet& full = *sol.qstar.actions;
  Rational best = 0;
  int best_id = 0;
  for (int j = 0; j < full.theta(); ++j) {
    Rational mass = subgraph_mass(full.subgraphs[j], attack);
    if (mass > best) {
      best = mass;
      best_id = j;
    }
  }
  report.support_mass_maximal = true;
  for (int j : profile.defense.support()) {
    if (subgraph_mass(own.subgraphs[j], attack) < best) {
      report.support_mass_maximal = false;
      report.underloaded_support = own.subgraphs[j];
      report.heavier_subgraph = full.subgraphs[best_id];
      break;
    }
  }

  report.is_equilibrium = report.defense_attains_pstar && report.attackers_inside_vstar &&
                          report.support_mass_maximal;
  return report;
}

PureDeviationResult pure_deviation_check(const Graph& g, const StrategyProfile& profile,
                                         const SolveOptions& opts) {
  validate_profile(profile);
  check_graph_match(g, profile);

  const ActionSet& own = *profile.defense.actions;
  ActionSet full = enumerate_action_set(g, own.lambda, opts.theta_cap);
  RationalVector p = coverage_probabilities<Rational>(own, profile.defense.probs);
  RationalVector attack = aggregate_attack(profile);

  PureDeviationResult result;

  // Defender: compare the current expected catch against every pure strategy.
  Rational current = p.dot(attack);
  for (const auto& s : full.subgraphs)
    if (subgraph_mass(s, attack) > current) {
      result.defender_improvement = s;
      break;
    }

  // Attackers: moving all mass to any single vertex with lower coverage.
  for (int a = 0; a < profile.attacker_count() && !result.attacker_improvement; ++a) {
    Rational caught = p.dot(profile.attackers[static_cast<std::size_t>(a)]);
    for (int v = 0; v < own.n; ++v)
      if (p[v] < caught) {
        result.attacker_improvement = {a, v};
        break;
      }
  }

  result.is_equilibrium = !result.defender_improvement && !result.attacker_improvement;
  return result;
}

FictitiousPlayResult fictitious_play_value(const Graph& g, int lambda, long max_iterations,
                                           double tolerance, const SolveOptions& opts) {
  if (max_iterations < 1) throw std::invalid_argument("need at least one iteration");
  ActionSet actions = enumerate_action_set(g, lambda, opts.theta_cap);
  const int n = actions.n;
  const int theta = actions.theta();

  std::vector<long> cover_count(n, 0);    // times each vertex was defended
  std::vector<long> attack_count(n, 0);   // times each vertex was attacked
  std::vector<long> mass(theta, 0);       // attack_count summed over each subgraph
  std::vector<long> defense_count(theta, 0);

  FictitiousPlayResult result;
  double best_lower = 0.0;
  double best_upper = 1.0;
  long t = 0;
  while (t < max_iterations) {
    // defender best-responds to the attack history (first iteration: to zeros)
    int bj = 0;
    for (int j = 1; j < theta; ++j)
      if (mass[j] > mass[bj]) bj = j;
    ++defense_count[bj];
    for (int v : actions.subgraphs[bj].vertices) ++cover_count[v];

    // attacker best-responds to the defense history
    int bv = 0;
    for (int v = 1; v < n; ++v)
      if (cover_count[v] < cover_count[bv]) bv = v;
    ++attack_count[bv];
    for (int j : actions.member_index[bv]) ++mass[j];

    ++t;
    // value bounds from the averaged strategies so far
    long min_cover = *std::min_element(cover_count.begin(), cover_count.end());
    long max_mass = *std::max_element(mass.begin(), mass.end());
    best_lower = std::max(best_lower, static_cast<double>(min_cover) / static_cast<double>(t));
    best_upper = std::min(best_upper, static_cast<double>(max_mass) / static_cast<double>(t));
    if (best_upper - best_lower <= 2 * tolerance) break;
  }

  result.iterations = t;
  result.lower = best_lower;
  result.upper = best_upper;
  result.value = (best_lower + best_upper) / 2;
  result.defense_average = Eigen::VectorXd::Zero(theta);
  for (int j = 0; j < theta; ++j)
    result.defense_average[j] = static_cast<double>(defense_count[j]) / static_cast<double>(t);
  result.attack_average = Eigen::VectorXd::Zero(n);
  for (int v = 0; v < n; ++v)
    result.attack_average[v] = static_cast<double>(attack_count[v]) / static_cast<double>(t);
  return result;
}

}  // namespace csd
