#include "csd/tree_optimality.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace csd {

std::optional<TreePartition> check_tree_defense_optimal(const Tree& tree, int lambda) {
  const int n = tree.graph().vertex_count();
  if (lambda < 1 || lambda > n)
    throw std::invalid_argument("lambda " + std::to_string(lambda) + " outside [1, " +
                                std::to_string(n) + "]");
  if (n % lambda != 0) return std::nullopt;

  // Bottom-up residual counting: residual(v) = unassigned vertices in v's
  // subtree. Hitting exactly lambda cuts a block there; overshooting proves
  // no partition exists (the leftovers below v would all need to route
  // through v, forcing two blocks to share it).
  std::vector<int> residual(n, 0);
  std::vector<char> assigned(n, 0);
  TreePartition partition;

  for (int v : tree.postorder()) {
    int r = 1;
    for (int c : tree.children(v)) r += residual[c];
    if (r > lambda) return std::nullopt;
    if (r < lambda) {
      residual[v] = r;
      continue;
    }
    // cut: v plus every unassigned vertex below it forms one block
    LambdaSubgraph block;
    std::vector<int> stack{v};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      assigned[u] = 1;
      block.vertices.push_back(u);
      for (int c : tree.children(u))
        if (!assigned[c]) stack.push_back(c);
    }
    std::sort(block.vertices.begin(), block.vertices.end());
    partition.blocks.push_back(std::move(block));
    residual[v] = 0;
  }

  if (residual[tree.root()] != 0)
    throw std::logic_error("leftover residual at root despite lambda | n");
  return partition;
}

DefenseStrategy optimal_tree_strategy(const Tree& tree, const TreePartition& partition) {
  if (partition.blocks.empty()) throw std::invalid_argument("empty partition");
  const int n = tree.graph().vertex_count();
  const int lambda = partition.blocks.front().size();
  auto actions = std::make_shared<const ActionSet>(
      make_action_set(tree.graph(), lambda, partition.blocks));
  if (actions->theta() * lambda != n)
    throw std::invalid_argument("blocks do not cover every vertex exactly once");
  std::vector<int> all(actions->theta());
  std::iota(all.begin(), all.end(), 0);
  for (int c : coverage_counts(*actions, all))
    if (c != 1) throw std::invalid_argument("blocks do not cover every vertex exactly once");
  return uniform_strategy(std::move(actions));
}

std::string serialize_partition(const TreePartition& partition) {
  std::ostringstream out;
  for (const auto& block : partition.blocks) {
    for (std::size_t i = 0; i < block.vertices.size(); ++i) {
      if (i) out << ' ';
      out << block.vertices[i];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace csd
