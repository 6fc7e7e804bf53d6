#pragma once

#include "csd/graph.hpp"
#include "csd/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace csd {

// A generated benchmark graph plus what the construction predicts about it.
struct GeneratedInstance {
  Graph graph;
  std::optional<int> lambda;
  std::optional<Rational> predicted_pstar;
  std::optional<Rational> decision_threshold;  // three-partition gadget only
  std::string family;
  std::map<std::string, long long> params;  // construction parameters, for the sidecar
};

Graph gen_path(int n);
Graph gen_cycle(int n);  // n >= 3

// Path/cycle instances with the known value lambda/n when it applies
// (always for cycles, lambda | n for paths).
GeneratedInstance make_path_instance(int n, std::optional<int> lambda);
GeneratedInstance make_cycle_instance(int n, std::optional<int> lambda);

// Spider of b segments of ceil(lambda/2) path vertices hanging off a hub,
// plus one shorter leftover segment. Worst known defense ratio for trees:
// pstar is 1/b, except 1/(b+1) for odd lambda when the leftover segment is
// exactly one vertex short. Requires 2 <= lambda <= n-1.
GeneratedInstance gen_star_of_lines(int n, int lambda);

// Hardness gadget: a hub vertex plus one path of a_i vertices per integer.
// With lambda = s/m + 1 (s = sum of the integers) every lambda-subgraph
// contains the hub, so a defense reaching the decision threshold 1/m must
// bundle complete branches into blocks of exactly lambda vertices: an
// equal-sum split of the integers into m groups yields pstar = 1/m, and if
// no subset of the integers sums to s/m then pstar < 1/m.  When every a_i
// lies strictly between s/(4m) and s/(2m), equal-sum groups are forced to
// be triples -- the classic 3-partition question.  Requires |a| = 3m,
// m | s, and positive entries below s/m.
GeneratedInstance gen_three_partition_tree(const std::vector<int>& a, int m);

// Fixed 7-vertex mixed instance: a path grafted onto a clique; value 3/7
// at lambda = 3, with every vertex tight.
GeneratedInstance gen_fig1_graph();

// Uniform-attachment random tree / random connected graph (tree plus extra
// uniformly chosen non-edges), deterministic for a given seed.
Graph gen_random_tree(int n, std::uint64_t seed);
Graph gen_random_connected(int n, int m, std::uint64_t seed);

}  // namespace csd
