#include "csd/solver.hpp"

#include "csd/errors.hpp"
#include "csd/simplex.hpp"

#include <algorithm>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace csd {

namespace {

struct MaximinLpResult {
  Rational pstar;
  RationalVector q;      // theta entries
  RationalVector duals;  // n vertex-row duals: the attack certificate
};

// max p'  s.t.  p' - sum_{j contains v} q_j <= 0 for each vertex v,
//               sum_j q_j = 1,  q >= 0, p' >= 0.
// Variables x = (q_0..q_{theta-1}, p').
MaximinLpResult solve_maximin_lp(const ActionSet& actions) {
  const int n = actions.n;
  const int theta = actions.theta();
  LpProblem lp;
  lp.constraints = RationalMatrix::Zero(n + 1, theta + 1);
  lp.rhs = RationalVector::Zero(n + 1);
  lp.sense.assign(n + 1, RowSense::LessEq);
  for (int v = 0; v < n; ++v) {
    lp.constraints(v, theta) = 1;
    for (int j : actions.member_index[v]) lp.constraints(v, j) = -1;
  }
  lp.sense[n] = RowSense::Eq;
  for (int j = 0; j < theta; ++j) lp.constraints(n, j) = 1;
  lp.rhs[n] = 1;
  lp.objective = RationalVector::Zero(theta + 1);
  lp.objective[theta] = 1;

  LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal)
    throw std::logic_error("maximin LP not optimal; it is feasible and bounded by design");

  MaximinLpResult out;
  out.pstar = sol.objective;
  out.q = sol.primal.head(theta);
  out.duals = sol.dual.head(n);
  return out;
}

// The dual values must form an attack distribution under which no subgraph
// holds more than pstar mass; together with a primal strategy attaining
// pstar this certifies optimality exactly. Guards the tableau bookkeeping.
void check_certificate(const ActionSet& actions, const Rational& pstar,
                       const RationalVector& q, const RationalVector& y) {
  Rational ysum = 0;
  for (int v = 0; v < actions.n; ++v) {
    if (y[v] < 0) throw std::logic_error("certificate: negative dual weight");
    ysum += y[v];
  }
  if (ysum != 1) throw std::logic_error("certificate: dual weights sum to " + to_fraction(ysum));
  for (const auto& s : actions.subgraphs) {
    Rational mass = 0;
    for (int v : s.vertices) mass += y[v];
    if (mass > pstar) throw std::logic_error("certificate: subgraph mass exceeds pstar");
  }
  Rational qsum = 0;
  for (int j = 0; j < actions.theta(); ++j) {
    if (q[j] < 0) throw std::logic_error("certificate: negative strategy weight");
    qsum += q[j];
  }
  if (qsum != 1) throw std::logic_error("certificate: strategy sums to " + to_fraction(qsum));
  RationalVector p = coverage_probabilities<Rational>(actions, q);
  if (p.minCoeff() != pstar)
    throw std::logic_error("certificate: strategy does not attain pstar");
}

// Vertices tight in every optimal strategy. A vertex with positive dual
// weight is tight everywhere by complementary slackness; the rest of the
// tight set of qstar is probed with one LP each, maximizing that vertex's
// coverage over the optimal face and stopping as soon as it exceeds pstar.
std::vector<int> tight_everywhere(const ActionSet& actions, const Rational& pstar,
                                  const RationalVector& q, const RationalVector& y) {
  const int n = actions.n;
  if (pstar == Rational(actions.lambda) / n) {
    // conservation: sum_i p_i = lambda, so no vertex can exceed lambda/n
    // in any optimum without pushing another below it
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    return all;
  }

  const int theta = actions.theta();
  RationalVector p = coverage_probabilities<Rational>(actions, q);
  std::vector<int> result;
  for (int v = 0; v < n; ++v) {
    if (p[v] != pstar) continue;  // slack in qstar, certainly not tight everywhere
    if (y[v] > 0) {
      result.push_back(v);
      continue;
    }
    // max p_v subject to: every vertex covered >= pstar, weights a distribution
    LpProblem lp;
    lp.constraints = RationalMatrix::Zero(n + 1, theta);
    lp.rhs = RationalVector::Zero(n + 1);
    lp.sense.assign(n + 1, RowSense::LessEq);
    for (int u = 0; u < n; ++u) {
      for (int j : actions.member_index[u]) lp.constraints(u, j) = -1;
      lp.rhs[u] = -pstar;
    }
    lp.sense[n] = RowSense::Eq;
    for (int j = 0; j < theta; ++j) lp.constraints(n, j) = 1;
    lp.rhs[n] = 1;
    lp.objective = RationalVector::Zero(theta);
    for (int j : actions.member_index[v]) lp.objective[j] = 1;

    LpOptions opts;
    opts.stop_above = pstar;
    LpSolution probe = solve_lp(lp, opts);
    if (probe.status != LpStatus::Optimal)
      throw std::logic_error("tight-set probe LP failed; the optimal face is nonempty");
    if (probe.objective <= pstar) result.push_back(v);
  }
  return result;
}

}  // namespace

ExactSolution solve_maxmin(const Graph& g, int lambda, const SolveOptions& opts) {
  const int n = g.vertex_count();
  auto actions =
      std::make_shared<const ActionSet>(enumerate_action_set(g, lambda, opts.theta_cap));

  ExactSolution sol;
  sol.qstar.actions = actions;

  if (lambda == 1) {
    // singletons: uniform is optimal, every vertex tight in every optimum
    sol.pstar = Rational(1) / n;
    sol.qstar.probs = RationalVector::Constant(n, Rational(1) / n);
    sol.attacker_certificate = RationalVector::Constant(n, Rational(1) / n);
  } else if (lambda == n) {
    sol.pstar = 1;
    sol.qstar.probs = RationalVector::Constant(1, Rational(1));
    sol.attacker_certificate = RationalVector::Constant(n, Rational(1) / n);
  } else {
    MaximinLpResult lp = solve_maximin_lp(*actions);
    sol.pstar = lp.pstar;
    sol.qstar.probs = std::move(lp.q);
    sol.attacker_certificate = std::move(lp.duals);
  }

  check_certificate(*actions, sol.pstar, sol.qstar.probs, sol.attacker_certificate);
  sol.vstar = tight_everywhere(*actions, sol.pstar, sol.qstar.probs, sol.attacker_certificate);
  return sol;
}

Rational maxmin_value(const Graph& g, int lambda, const SolveOptions& opts) {
  const int n = g.vertex_count();
  if (lambda >= 1 && lambda == n) return 1;
  ActionSet actions = enumerate_action_set(g, lambda, opts.theta_cap);
  if (lambda == 1) return Rational(1) / n;
  MaximinLpResult lp = solve_maximin_lp(actions);
  check_certificate(actions, lp.pstar, lp.q, lp.duals);
  return lp.pstar;
}

StrategyProfile uniform_attack_profile(const ExactSolution& sol, int k) {
  if (k < 1) throw std::invalid_argument("attacker count must be positive");
  if (sol.vstar.empty()) throw std::invalid_argument("solution has an empty tight set");
  const int n = sol.qstar.actions->n;
  RationalVector t = RationalVector::Zero(n);
  Rational w = Rational(1) / static_cast<int>(sol.vstar.size());
  for (int v : sol.vstar) t[v] = w;
  StrategyProfile profile;
  profile.defense = sol.qstar;
  profile.attackers.assign(static_cast<std::size_t>(k), t);
  return profile;
}

StrategyProfile build_equilibrium(const ExactSolution& sol, int k) {
  StrategyProfile profile = uniform_attack_profile(sol, k);
  const ActionSet& actions = *sol.qstar.actions;

  // Condition 1: the defense attains pstar (re-checked, cheap).
  RationalVector p = coverage_probabilities<Rational>(actions, sol.qstar.probs);
  if (p.minCoeff() != sol.pstar)
    throw std::logic_error("stored strategy does not attain pstar");

  // Condition 2 holds by construction: attackers play exactly vstar.
  // Condition 3: every support subgraph must hold maximal attacker mass,
  // which under uniform-on-vstar attackers means maximal |subgraph ∩ vstar|.
  int best = 0;
  for (const auto& s : actions.subgraphs) {
    int c = 0;
    for (int v : s.vertices)
      if (std::binary_search(sol.vstar.begin(), sol.vstar.end(), v)) ++c;
    best = std::max(best, c);
  }
  for (int j = 0; j < actions.theta(); ++j) {
    if (sol.qstar.probs[j] == 0) continue;
    int c = 0;
    for (int v : actions.subgraphs[j].vertices)
      if (std::binary_search(sol.vstar.begin(), sol.vstar.end(), v)) ++c;
    if (c < best) {
      std::ostringstream msg;
      msg << "uniform-on-vstar attackers do not form an equilibrium here: "
          << "defense support subgraph {";
      for (std::size_t i = 0; i < actions.subgraphs[j].vertices.size(); ++i)
        msg << (i ? " " : "") << actions.subgraphs[j].vertices[i];
      msg << "} holds " << c << "/" << sol.vstar.size() << " of the attacker mass but "
          << best << "/" << sol.vstar.size()
          << " is available elsewhere; use the attacker certificate instead";
      throw EquilibriumConstructionError(msg.str());
    }
  }
  return profile;
}

Rational equilibrium_defense_ratio(const ExactSolution& sol) {
  if (sol.pstar <= 0) throw std::logic_error("pstar must be positive");
  return Rational(1) / sol.pstar;
}

bool is_defense_optimal(const Graph& g, int lambda, const SolveOptions& opts) {
  return maxmin_value(g, lambda, opts) == Rational(lambda) / g.vertex_count();
}

}  // namespace csd
