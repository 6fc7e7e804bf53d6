#pragma once

#include "csd/graph.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace csd {

// A defender pure strategy: the vertex set of a connected induced subgraph
// with exactly lambda vertices, stored strictly ascending.
struct LambdaSubgraph {
  std::vector<int> vertices;

  bool contains(int v) const;
  int size() const { return static_cast<int>(vertices.size()); }
  auto operator<=>(const LambdaSubgraph&) const = default;
};

// A duplicate-free collection of lambda-subgraphs of one graph, in
// lexicographic order, plus a vertex -> member subgraph ids index.
struct ActionSet {
  int n = 0;
  int lambda = 0;
  std::vector<LambdaSubgraph> subgraphs;
  std::vector<std::vector<int>> member_index;

  int theta() const { return static_cast<int>(subgraphs.size()); }
  std::optional<int> find(const LambdaSubgraph& s) const;  // binary search
};

inline constexpr std::size_t kDefaultThetaCap = 5'000'000;

// The complete defender action set: every connected lambda-vertex subgraph.
// Reverse-search growth, each subgraph generated exactly once (no dedup pass).
// Throws GuardrailError when the count would exceed theta_cap,
// std::invalid_argument when lambda is outside [1, n].
ActionSet enumerate_action_set(const Graph& g, int lambda,
                               std::size_t theta_cap = kDefaultThetaCap);

// Wraps an ad-hoc collection (partition blocks, cover blocks, profile support)
// as an ActionSet: validates each entry against g, sorts, rejects duplicates.
ActionSet make_action_set(const Graph& g, int lambda, std::vector<LambdaSubgraph> subgraphs);

// Per-vertex membership counts over a sub-collection given by subgraph ids
// (duplicates allowed and counted). Throws on out-of-range ids.
std::vector<int> coverage_counts(const ActionSet& actions, std::span<const int> collection);

// Line-delimited sorted vertex lists, for debugging/export.
std::string serialize_subgraphs(const ActionSet& actions);

}  // namespace csd
