#include "csd/io.hpp"

#include "csd/errors.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace csd {

std::string subgraph_key(const LambdaSubgraph& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.vertices.size(); ++i) {
    if (i) out << ' ';
    out << s.vertices[i];
  }
  return out.str();
}

nlohmann::json strategy_to_json(const DefenseStrategy& defense) {
  nlohmann::json entries = nlohmann::json::array();
  for (int j : defense.support())
    entries.push_back({{"vertices", defense.actions->subgraphs[j].vertices},
                       {"prob", to_fraction(defense.probs[j])}});
  return entries;
}

nlohmann::json solution_to_json(const ExactSolution& sol) {
  nlohmann::json certificate = nlohmann::json::object();
  for (int v = 0; v < static_cast<int>(sol.attacker_certificate.size()); ++v)
    if (sol.attacker_certificate[v] != 0)
      certificate[std::to_string(v)] = to_fraction(sol.attacker_certificate[v]);
  return {{"pstar", to_fraction(sol.pstar)},
          {"defense_ratio", to_fraction(equilibrium_defense_ratio(sol))},
          {"theta", sol.qstar.actions->theta()},
          {"strategy", strategy_to_json(sol.qstar)},
          {"vstar", sol.vstar},
          {"attacker_certificate", certificate}};
}

nlohmann::json profile_to_json(const StrategyProfile& profile) {
  nlohmann::json defense = nlohmann::json::object();
  for (int j : profile.defense.support())
    defense[subgraph_key(profile.defense.actions->subgraphs[j])] =
        to_fraction(profile.defense.probs[j]);
  nlohmann::json attackers = nlohmann::json::array();
  for (const auto& t : profile.attackers) {
    nlohmann::json dist = nlohmann::json::object();
    for (int v = 0; v < static_cast<int>(t.size()); ++v)
      if (t[v] != 0) dist[std::to_string(v)] = to_fraction(t[v]);
    attackers.push_back(std::move(dist));
  }
  return {{"defense", defense}, {"attackers", attackers}};
}

nlohmann::json report_to_json(const EquilibriumReport& report) {
  nlohmann::json doc = {{"is_equilibrium", report.is_equilibrium},
                        {"defense_attains_pstar", report.defense_attains_pstar},
                        {"attackers_inside_vstar", report.attackers_inside_vstar},
                        {"support_mass_maximal", report.support_mass_maximal},
                        {"pstar", to_fraction(report.pstar)},
                        {"vstar", report.vstar},
                        {"value", to_fraction(report.value)},
                        {"attackers", report.attacker_count}};
  doc["defense_ratio"] =
      report.defense_ratio ? nlohmann::json(to_fraction(*report.defense_ratio))
                           : nlohmann::json("infinite");
  if (report.undercovered_vertex) doc["undercovered_vertex"] = *report.undercovered_vertex;
  if (report.stray_attacker)
    doc["stray_attacker"] = {{"attacker", report.stray_attacker->first},
                             {"vertex", report.stray_attacker->second}};
  if (report.underloaded_support)
    doc["underloaded_support"] = report.underloaded_support->vertices;
  if (report.heavier_subgraph) doc["heavier_subgraph"] = report.heavier_subgraph->vertices;
  return doc;
}

nlohmann::json cover_to_json(const CoverCollection& cover) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& s : cover.subgraphs) blocks.push_back(s.vertices);
  return {{"blocks", blocks}, {"coverage", cover_coverage(cover)}};
}

nlohmann::json partition_to_json(const TreePartition& partition) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& s : partition.blocks) blocks.push_back(s.vertices);
  return blocks;
}

nlohmann::json instance_sidecar(const GeneratedInstance& inst) {
  nlohmann::json doc = {{"family", inst.family},
                        {"n", inst.graph.vertex_count()},
                        {"m", inst.graph.edge_count()},
                        {"params", inst.params}};
  if (inst.lambda) doc["lambda"] = *inst.lambda;
  if (inst.predicted_pstar) doc["predicted_pstar"] = to_fraction(*inst.predicted_pstar);
  if (inst.decision_threshold)
    doc["decision_threshold"] = to_fraction(*inst.decision_threshold);
  return doc;
}

namespace {

std::vector<int> parse_vertex_key(const std::string& key) {
  std::vector<int> vertices;
  const char* p = key.data();
  const char* end = key.data() + key.size();
  while (p < end) {
    while (p < end && *p == ' ') ++p;
    if (p == end) break;
    int v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc() || next == p)
      throw ParseError("bad subgraph key '" + key + "'");
    vertices.push_back(v);
    p = next;
  }
  if (vertices.empty()) throw ParseError("empty subgraph key");
  if (!std::is_sorted(vertices.begin(), vertices.end()) ||
      std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw ParseError("subgraph key '" + key + "' must be strictly ascending");
  return vertices;
}

}  // namespace

StrategyProfile profile_from_json(const Graph& g, int lambda, const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("defense") || !doc.contains("attackers"))
    throw ParseError("profile document needs 'defense' and 'attackers'");
  const auto& defense = doc["defense"];
  const auto& attackers = doc["attackers"];
  if (!defense.is_object() || defense.empty())
    throw ParseError("'defense' must be a nonempty object");
  if (!attackers.is_array() || attackers.empty())
    throw ParseError("'attackers' must be a nonempty array");

  std::vector<LambdaSubgraph> blocks;
  std::vector<Rational> weights;
  for (const auto& [key, value] : defense.items()) {
    if (!value.is_string()) throw ParseError("defense probability must be a fraction string");
    blocks.push_back(LambdaSubgraph{parse_vertex_key(key)});
    weights.push_back(parse_fraction(value.get<std::string>()));
  }

  StrategyProfile profile;
  try {
    auto actions = std::make_shared<const ActionSet>(make_action_set(g, lambda, blocks));
    profile.defense.probs = RationalVector::Zero(actions->theta());
    for (std::size_t i = 0; i < blocks.size(); ++i)
      profile.defense.probs[*actions->find(blocks[i])] = weights[i];
    profile.defense.actions = std::move(actions);

    for (const auto& dist : attackers) {
      if (!dist.is_object()) throw ParseError("attacker entry must be an object");
      RationalVector t = RationalVector::Zero(g.vertex_count());
      for (const auto& [key, value] : dist.items()) {
        int v = 0;
        auto [next, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
        if (ec != std::errc() || next != key.data() + key.size() || v < 0 ||
            v >= g.vertex_count())
          throw ParseError("bad attacker vertex '" + key + "'");
        if (!value.is_string())
          throw ParseError("attacker probability must be a fraction string");
        t[v] = parse_fraction(value.get<std::string>());
      }
      profile.attackers.push_back(std::move(t));
    }
    validate_profile(profile);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("profile: ") + e.what());
  }
  return profile;
}

std::string digest_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace csd
