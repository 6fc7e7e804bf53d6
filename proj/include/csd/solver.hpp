#pragma once

#include "csd/graph.hpp"
#include "csd/rational.hpp"
#include "csd/strategy.hpp"
#include "csd/subgraphs.hpp"

#include <cstddef>
#include <vector>

namespace csd {

struct SolveOptions {
  std::size_t theta_cap = kDefaultThetaCap;
};

// Exact solution of max_q min_i p_i(q) over mixed defender strategies.
struct ExactSolution {
  Rational pstar;
  DefenseStrategy qstar;   // one optimal strategy (deterministic pivoting)
  std::vector<int> vstar;  // vertices tight in every optimal strategy, ascending

  // Dual-optimal attack distribution certifying pstar: y >= 0, sums to 1,
  // and no subgraph holds more than pstar of its mass. By complementary
  // slackness its support lies in vstar and k copies of it always form an
  // equilibrium with qstar.
  RationalVector attacker_certificate;
};

// Full solve: value, optimal strategy, tight set, certificate. The
// certificate is re-verified before returning (logic_error if it fails).
ExactSolution solve_maxmin(const Graph& g, int lambda, const SolveOptions& opts = {});

// Value-only fast path: skips the vstar refinement LPs.
Rational maxmin_value(const Graph& g, int lambda, const SolveOptions& opts = {});

// qstar plus k attackers each uniform on vstar, the textbook construction.
// It does not verify itself; build_equilibrium is the checked variant.
StrategyProfile uniform_attack_profile(const ExactSolution& sol, int k);

// Same construction, verified against the equilibrium conditions; throws
// EquilibriumConstructionError with a witness when uniform-on-vstar is not
// an equilibrium (rare but possible; the attacker_certificate then is one).
StrategyProfile build_equilibrium(const ExactSolution& sol, int k);

// 1 / pstar: expected attackers caught per unit of defense value.
Rational equilibrium_defense_ratio(const ExactSolution& sol);

// pstar == lambda / n, the best value conservation allows.
bool is_defense_optimal(const Graph& g, int lambda, const SolveOptions& opts = {});

}  // namespace csd
