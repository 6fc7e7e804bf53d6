#pragma once

#include "csd/rational.hpp"
#include "csd/subgraphs.hpp"

#include <Eigen/Core>

#include <memory>
#include <vector>

namespace csd {

// Mixed defender strategy: a probability for each subgraph of an action set.
struct DefenseStrategy {
  std::shared_ptr<const ActionSet> actions;
  RationalVector probs;  // size theta, entries >= 0, sum == 1

  std::vector<int> support() const;  // ids with positive probability, ascending
};

// Per-vertex inclusion probabilities p_i = sum of probs over subgraphs
// containing i. Works for any scalar (exact rationals, doubles for the
// fictitious-play oracle).
template <class Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> coverage_probabilities(
    const ActionSet& actions, const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& weights) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> p =
      Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(actions.n);
  for (int v = 0; v < actions.n; ++v)
    for (int j : actions.member_index[v]) p[v] += weights[j];
  return p;
}

struct VertexProbabilities {
  RationalVector p;
  Rational pmin;
  std::vector<int> argmin;  // vertices attaining pmin, ascending
};

VertexProbabilities vertex_probabilities(const DefenseStrategy& defense);

// k attackers, each a distribution over the n vertices.
struct StrategyProfile {
  DefenseStrategy defense;
  std::vector<RationalVector> attackers;

  int attacker_count() const { return static_cast<int>(attackers.size()); }
};

DefenseStrategy uniform_strategy(std::shared_ptr<const ActionSet> actions);

// Throw std::invalid_argument unless probabilities are nonnegative, sized to
// their carrier, and sum to exactly 1 (profile: every attacker distribution).
void validate_strategy(const DefenseStrategy& defense);
void validate_profile(const StrategyProfile& profile);

}  // namespace csd
