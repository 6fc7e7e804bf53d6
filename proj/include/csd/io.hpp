#pragma once

#include "csd/analysis.hpp"
#include "csd/cover.hpp"
#include "csd/generators.hpp"
#include "csd/solver.hpp"
#include "csd/strategy.hpp"
#include "csd/subgraphs.hpp"
#include "csd/tree_optimality.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace csd {

// Space-separated ascending vertex list, e.g. "0 1 4"; the map key used for
// subgraphs in profile documents and reports.
std::string subgraph_key(const LambdaSubgraph& s);

nlohmann::json strategy_to_json(const DefenseStrategy& defense);  // support only
nlohmann::json solution_to_json(const ExactSolution& sol);
nlohmann::json profile_to_json(const StrategyProfile& profile);
nlohmann::json report_to_json(const EquilibriumReport& report);
nlohmann::json cover_to_json(const CoverCollection& cover);
nlohmann::json partition_to_json(const TreePartition& partition);
nlohmann::json instance_sidecar(const GeneratedInstance& inst);

// Profile document: {"defense": {"0 1": "1/2", ...},
//                    "attackers": [{"0": "1/4", ...}, ...]}.
// Subgraph keys are validated against g (connected, exactly lambda vertices);
// all failures surface as ParseError.
StrategyProfile profile_from_json(const Graph& g, int lambda, const nlohmann::json& doc);

// FNV-1a 64-bit content digest as 16 hex digits; stamps inputs into reports.
std::string digest_hex(std::string_view bytes);

}  // namespace csd
