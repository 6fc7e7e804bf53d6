#pragma once

#include "csd/graph.hpp"
#include "csd/strategy.hpp"
#include "csd/subgraphs.hpp"

#include <optional>
#include <string>
#include <vector>

namespace csd {

// A partition of a tree's vertices into connected blocks of equal size.
struct TreePartition {
  std::vector<LambdaSubgraph> blocks;  // in discovery (postorder-cut) order
};

// Decides defense optimality for trees in linear time: a partition into
// connected lambda-blocks exists iff pstar == lambda/n. Returns the
// partition, or nullopt when the tree is not defense-optimal (in particular
// whenever lambda does not divide n).
std::optional<TreePartition> check_tree_defense_optimal(const Tree& tree, int lambda);

// Uniform strategy over the partition blocks; attains lambda/n everywhere.
DefenseStrategy optimal_tree_strategy(const Tree& tree, const TreePartition& partition);

// One block per line, vertices ascending.
std::string serialize_partition(const TreePartition& partition);

}  // namespace csd
