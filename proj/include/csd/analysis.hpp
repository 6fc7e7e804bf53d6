#pragma once

#include "csd/graph.hpp"
#include "csd/rational.hpp"
#include "csd/solver.hpp"
#include "csd/strategy.hpp"

#include <Eigen/Core>

#include <optional>
#include <utility>

namespace csd {

// Expected number of attackers caught under the profile.
Rational defense_value(const StrategyProfile& profile);

// Survival probability of one attacker (their payoff): 1 - sum_i t_i p_i.
Rational attacker_payoff(int attacker_index, const StrategyProfile& profile);

// Equilibrium characterization: (1) the defense attains the maximin value,
// (2) attackers play only vertices that are tight in every optimal defense,
// (3) every defense-support subgraph carries maximal expected attacker mass.
// The three conditions together are equivalent to Nash for any number of
// attackers. pstar/vstar are recomputed here via a fresh exact solve rather
// than trusted from the caller.
struct EquilibriumReport {
  bool is_equilibrium = false;
  bool defense_attains_pstar = false;              // condition 1
  bool attackers_inside_vstar = false;             // condition 2
  bool support_mass_maximal = false;               // condition 3
  Rational pstar;
  std::vector<int> vstar;
  std::optional<int> undercovered_vertex;                  // cond 1 witness
  std::optional<std::pair<int, int>> stray_attacker;       // cond 2: (attacker, vertex)
  std::optional<LambdaSubgraph> underloaded_support;       // cond 3: deficient support block
  std::optional<LambdaSubgraph> heavier_subgraph;          // cond 3: better pure strategy
  Rational value;                                  // defense_value of the profile
  std::optional<Rational> defense_ratio;           // k / value; nullopt when value == 0
  int attacker_count = 0;
};

EquilibriumReport verify_equilibrium(const Graph& g, const StrategyProfile& profile,
                                     const SolveOptions& opts = {});

// Definition-based Nash check: no player gains from a unilateral pure
// deviation (enough, since payoffs are linear in each player's own mixing).
// Shares no machinery with verify_equilibrium beyond the action set.
struct PureDeviationResult {
  bool is_equilibrium = false;
  std::optional<LambdaSubgraph> defender_improvement;
  std::optional<std::pair<int, int>> attacker_improvement;  // (attacker, vertex)
};

PureDeviationResult pure_deviation_check(const Graph& g, const StrategyProfile& profile,
                                         const SolveOptions& opts = {});

// Floating-point fictitious play for the catch probability game (defender
// maximizes, one attacker minimizes; value = pstar). Deterministic: both
// best responses break ties toward the lowest index. Keeps the best value
// bounds seen across iterations and stops once they close to within
// 2 * tolerance (or at max_iterations).
struct FictitiousPlayResult {
  double value = 0;  // midpoint of [lower, upper]
  double lower = 0;  // best guaranteed defender value
  double upper = 0;  // best guaranteed attacker cap
  long iterations = 0;
  Eigen::VectorXd defense_average;
  Eigen::VectorXd attack_average;
};

FictitiousPlayResult fictitious_play_value(const Graph& g, int lambda,
                                           long max_iterations = 100000,
                                           double tolerance = 1e-3,
                                           const SolveOptions& opts = {});

}  // namespace csd
