#pragma once

#include "csd/graph.hpp"
#include "csd/rational.hpp"
#include "csd/strategy.hpp"
#include "csd/subgraphs.hpp"

#include <string>
#include <vector>

namespace csd {

// A small collection of lambda-subgraphs covering every vertex of a tree,
// in discovery order. At most (2n-3)/lambda + 1 blocks; each vertex lands
// in at most degree_T(v) of them, except up to lambda-1 vertices that gain
// one extra membership from the patch-up pass.
struct CoverCollection {
  std::vector<LambdaSubgraph> subgraphs;
  Tree source_tree;
};

// Walk-based cover construction: a DFS cursor fills blocks of lambda
// visited vertices, each block starting at an uncovered vertex (so blocks
// are pairwise distinct); a final walk re-rooted inside the last block tops
// it up to lambda if covering finished early.
CoverCollection cover_tree(const Tree& tree, int lambda);

std::vector<int> cover_coverage(const CoverCollection& cover);  // per-vertex counts

// Uniform strategy over the cover of a spanning tree of g. Guarantees
// min_i p_i >= 1 / |cover|, within factor 2 + (lambda-3)/n of optimal.
DefenseStrategy approx_defense_strategy(const Graph& g, int lambda);

// min_i p_i of approx_defense_strategy (the guaranteed catch probability).
Rational guaranteed_catch_fraction(const Graph& g, int lambda);

// Blocks one per line, then a "# coverage" section of "vertex count" lines.
std::string serialize_cover(const CoverCollection& cover);

}  // namespace csd
