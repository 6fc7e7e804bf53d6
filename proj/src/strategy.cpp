#include "csd/strategy.hpp"

#include <stdexcept>

namespace csd {

std::vector<int> DefenseStrategy::support() const {
  std::vector<int> ids;
  for (int j = 0; j < static_cast<int>(probs.size()); ++j)
    if (probs[j] > 0) ids.push_back(j);
  return ids;
}

VertexProbabilities vertex_probabilities(const DefenseStrategy& defense) {
  validate_strategy(defense);
  VertexProbabilities out;
  out.p = coverage_probabilities<Rational>(*defense.actions, defense.probs);
  out.pmin = out.p.minCoeff();
  for (int v = 0; v < static_cast<int>(out.p.size()); ++v)
    if (out.p[v] == out.pmin) out.argmin.push_back(v);
  return out;
}

DefenseStrategy uniform_strategy(std::shared_ptr<const ActionSet> actions) {
  if (!actions || actions->theta() == 0)
    throw std::invalid_argument("uniform_strategy: empty action set");
  DefenseStrategy d;
  d.probs = RationalVector::Constant(actions->theta(), Rational(1) / actions->theta());
  d.actions = std::move(actions);
  return d;
}

void validate_strategy(const DefenseStrategy& defense) {
  if (!defense.actions) throw std::invalid_argument("defense strategy has no action set");
  if (defense.probs.size() != defense.actions->theta())
    throw std::invalid_argument("defense strategy sized " + std::to_string(defense.probs.size()) +
                                " over " + std::to_string(defense.actions->theta()) + " actions");
  Rational total = 0;
  for (int j = 0; j < static_cast<int>(defense.probs.size()); ++j) {
    if (defense.probs[j] < 0) throw std::invalid_argument("negative defense probability");
    total += defense.probs[j];
  }
  if (total != 1) throw std::invalid_argument("defense probabilities sum to " + to_fraction(total));
}

void validate_profile(const StrategyProfile& profile) {
  validate_strategy(profile.defense);
  if (profile.attackers.empty()) throw std::invalid_argument("profile has no attackers");
  int n = profile.defense.actions->n;
  for (const auto& t : profile.attackers) {
    if (t.size() != n)
      throw std::invalid_argument("attacker distribution sized " + std::to_string(t.size()) +
                                  " over " + std::to_string(n) + " vertices");
    Rational total = 0;
    for (int v = 0; v < n; ++v) {
      if (t[v] < 0) throw std::invalid_argument("negative attacker probability");
      total += t[v];
    }
    if (total != 1)
      throw std::invalid_argument("attacker probabilities sum to " + to_fraction(total));
  }
}

}  // namespace csd
