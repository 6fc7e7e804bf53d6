#include <csd/generators.hpp>
#include <csd/solver.hpp>
#include <csd/strategy.hpp>
#include <csd/tree_optimality.hpp>

#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

using namespace csd;

namespace {

std::set<std::vector<int>> block_set(const TreePartition& partition) {
  std::set<std::vector<int>> blocks;
  for (const auto& b : partition.blocks) blocks.insert(b.vertices);
  return blocks;
}

// A partition is only believable if its blocks are disjoint, connected,
// correctly sized, and jointly exhaustive.
void check_partition_shape(const Graph& g, const TreePartition& partition, int lambda) {
  std::vector<int> seen(g.vertex_count(), 0);
  for (const auto& block : partition.blocks) {
    REQUIRE(block.size() == lambda);
    CHECK(is_connected_subset(g, block.vertices));
    for (int v : block.vertices) ++seen[v];
  }
  for (int v = 0; v < g.vertex_count(); ++v) CHECK(seen[v] == 1);
}

}  // namespace

TEST_CASE("a path splits into consecutive blocks") {
  auto partition = check_tree_defense_optimal(Tree(gen_path(6), 0), 3);
  REQUIRE(partition.has_value());
  CHECK(block_set(*partition) ==
        std::set<std::vector<int>>{{0, 1, 2}, {3, 4, 5}});
  check_partition_shape(gen_path(6), *partition, 3);
}

TEST_CASE("stars have no equal split for lambda 2") {
  Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK_FALSE(check_tree_defense_optimal(Tree(star, 0), 2).has_value());
  // ... and rooting elsewhere cannot change the answer
  CHECK_FALSE(check_tree_defense_optimal(Tree(star, 1), 2).has_value());
}

TEST_CASE("divisibility is necessary") {
  CHECK_FALSE(check_tree_defense_optimal(Tree(gen_path(7), 0), 2).has_value());
  CHECK_FALSE(check_tree_defense_optimal(Tree(gen_path(5), 3), 3).has_value());
}

TEST_CASE("trivial block sizes always work") {
  Graph t = gen_random_tree(9, 5);
  auto singletons = check_tree_defense_optimal(Tree(t, 0), 1);
  REQUIRE(singletons.has_value());
  CHECK(singletons->blocks.size() == 9);
  check_partition_shape(t, *singletons, 1);

  auto whole = check_tree_defense_optimal(Tree(t, 0), 9);
  REQUIRE(whole.has_value());
  CHECK(whole->blocks.size() == 1);
}

TEST_CASE("spider with three legs of two") {
  // n = 7 is only divisible by 1 and 7, both of which trivially work; the
  // interesting question is rejection once a leg residual overshoots.
  Graph spider = Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  CHECK(check_tree_defense_optimal(Tree(spider, 0), 7).has_value());
  CHECK(check_tree_defense_optimal(Tree(spider, 0), 1).has_value());

  // grow one leg to length 3: n = 8, lambda = 4 cannot cut this spider --
  // whatever block takes the hub strands two of the legs.
  Graph spider8 =
      Graph::from_edges(8, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}, {6, 7}});
  CHECK_FALSE(check_tree_defense_optimal(Tree(spider8, 0), 4).has_value());
  // pairs still work: {1,2},{3,4},{6,7} leave {0,5} connected
  auto pairs = check_tree_defense_optimal(Tree(spider8, 0), 2);
  REQUIRE(pairs.has_value());
  check_partition_shape(spider8, *pairs, 2);
}

TEST_CASE("lambda bounds are enforced") {
  Tree t(gen_path(4), 0);
  CHECK_THROWS_AS(check_tree_defense_optimal(t, 0), std::invalid_argument);
  CHECK_THROWS_AS(check_tree_defense_optimal(t, 5), std::invalid_argument);
}

TEST_CASE("partition decision agrees with the exact solver everywhere") {
  // exhaustive over small free trees, every divisor block size
  for (int n = 2; n <= 8; ++n) {
    for (const auto& tree : csd::testing::all_free_trees(n)) {
      for (int lambda = 1; lambda <= n; ++lambda) {
        if (n % lambda != 0) continue;
        auto partition = check_tree_defense_optimal(Tree(tree, 0), lambda);
        bool optimal = maxmin_value(tree, lambda) == Rational(lambda) / n;
        CHECK(partition.has_value() == optimal);
        if (partition) check_partition_shape(tree, *partition, lambda);
      }
    }
  }
}

TEST_CASE("the decision is independent of the chosen root") {
  for (int seed = 0; seed < 10; ++seed) {
    Graph t = gen_random_tree(8, seed);
    for (int lambda : {2, 4}) {
      bool at_root0 = check_tree_defense_optimal(Tree(t, 0), lambda).has_value();
      for (int root = 1; root < 8; ++root)
        CHECK(check_tree_defense_optimal(Tree(t, root), lambda).has_value() == at_root0);
    }
  }
}

TEST_CASE("optimal_tree_strategy attains the conservation bound everywhere") {
  for (auto [n, lambda] : std::vector<std::pair<int, int>>{{6, 3}, {8, 2}, {9, 3}, {8, 4}}) {
    for (int seed = 0; seed < 8; ++seed) {
      Graph t = gen_random_tree(n, 17 * seed + lambda);
      Tree tree(t, 0);
      auto partition = check_tree_defense_optimal(tree, lambda);
      if (!partition) continue;
      DefenseStrategy strategy = optimal_tree_strategy(tree, *partition);
      auto probs = vertex_probabilities(strategy);
      // uniform over a partition covers every vertex exactly lambda/n
      CHECK(probs.pmin == Rational(lambda) / n);
      CHECK(probs.p.maxCoeff() == Rational(lambda) / n);
    }
  }
}

TEST_CASE("serialize_partition lists one block per line") {
  auto partition = check_tree_defense_optimal(Tree(gen_path(4), 0), 2);
  REQUIRE(partition.has_value());
  std::string text = serialize_partition(*partition);
  CHECK(text.find("0 1") != std::string::npos);
  CHECK(text.find("2 3") != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);
}
