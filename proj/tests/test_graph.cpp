#include <csd/errors.hpp>
#include <csd/graph.hpp>

#include "support.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace csd;

TEST_CASE("from_edges normalizes order and orientation") {
  Graph g = Graph::from_edges(4, {{2, 1}, {0, 1}, {3, 2}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(g.has_edge(1, 0));
  CHECK(g.has_edge(2, 3));
  CHECK_FALSE(g.has_edge(0, 3));
  CHECK(g.degree(1) == 2);
  CHECK(g.is_tree());
}

TEST_CASE("from_edges rejects bad input") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}, {1, 2}}), std::invalid_argument);  // loop
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}, {1, 2}}),
                  std::invalid_argument);  // duplicate
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 3}}), std::invalid_argument);  // range
  CHECK_THROWS_AS(Graph::from_edges(4, {{0, 1}, {2, 3}}), std::invalid_argument);  // disconnected
  CHECK_THROWS_AS(Graph::from_edges(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(2, {}), std::invalid_argument);  // two isolated vertices
}

TEST_CASE("single vertex is a valid (trivially connected) graph") {
  Graph g = Graph::from_edges(1, {});
  CHECK(g.vertex_count() == 1);
  CHECK(g.edge_count() == 0);
  CHECK(g.is_tree());
}

TEST_CASE("parse and serialize round trip") {
  std::string text = "4 3\n0 1\n1 2\n2 3\n";
  Graph g = Graph::parse(text);
  CHECK(g.serialize() == text);
  CHECK(Graph::parse(g.serialize()).edges() == g.edges());
}

TEST_CASE("parse tolerates blank lines but nothing else") {
  Graph g = Graph::parse("3 2\n\n0 1\n1 2\n\n");
  CHECK(g.edge_count() == 2);
  CHECK_THROWS_AS(Graph::parse(""), ParseError);
  CHECK_THROWS_AS(Graph::parse("3 2\n0 1\n"), ParseError);            // missing edge
  CHECK_THROWS_AS(Graph::parse("3 2\n0 1\n1 2\n0 2\n"), ParseError);  // extra edge
  CHECK_THROWS_AS(Graph::parse("3 2\n0 1\n1 two\n"), ParseError);
  CHECK_THROWS_AS(Graph::parse("3 2\n1 0\n1 2\n"), ParseError);  // u < v required
  CHECK_THROWS_AS(Graph::parse("3\n0 1\n"), ParseError);
  CHECK_THROWS_AS(Graph::parse("3 2 9\n0 1\n1 2\n"), ParseError);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    Graph::parse("3 2\n0 1\nbad\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("neighbors are sorted spans") {
  Graph g = Graph::from_edges(5, {{0, 4}, {0, 2}, {0, 1}, {2, 3}});
  auto nb = g.neighbors(0);
  CHECK(std::vector<int>(nb.begin(), nb.end()) == std::vector<int>{1, 2, 4});
  CHECK(g.degree(0) == 3);
  CHECK(g.degree(3) == 1);
}

TEST_CASE("is_connected_subset agrees with the brute-force oracle") {
  Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 4}});
  CHECK(is_connected_subset(g, std::vector<int>{0, 1, 2}));
  CHECK_FALSE(is_connected_subset(g, std::vector<int>{0, 2}));
  CHECK(is_connected_subset(g, std::vector<int>{1, 4, 5}));
  CHECK(is_connected_subset(g, std::vector<int>{3}));
  // duplicates collapse
  CHECK(is_connected_subset(g, std::vector<int>{1, 1, 2}));
  CHECK_THROWS_AS(is_connected_subset(g, std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(is_connected_subset(g, std::vector<int>{0, 6}), std::invalid_argument);

  // exhaustive agreement on a small graph
  for (int lambda = 1; lambda <= 6; ++lambda)
    for (const auto& subset : csd::testing::all_connected_subsets(g, lambda))
      CHECK(is_connected_subset(g, subset));
}

TEST_CASE("Tree derives parents and children by BFS") {
  Graph g = Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}});
  Tree t(g, 0);
  CHECK(t.root() == 0);
  CHECK(t.parent(0) == -1);
  CHECK(t.parent(3) == 1);
  CHECK(t.parent(5) == 2);
  auto kids = t.children(1);
  CHECK(std::vector<int>(kids.begin(), kids.end()) == std::vector<int>{3, 4});
  CHECK(t.children(5).empty());

  auto order = t.postorder();
  CHECK(order.size() == 6);
  CHECK(order.back() == 0);  // root last
  std::vector<int> position(6);
  for (int i = 0; i < 6; ++i) position[order[i]] = i;
  for (int v = 1; v < 6; ++v) CHECK(position[v] < position[t.parent(v)]);
}

TEST_CASE("Tree rejects non-trees and re-roots correctly") {
  Graph cycle = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK_THROWS_AS(Tree(cycle, 0), std::invalid_argument);

  Graph path = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  Tree t(path, 2);
  CHECK(t.parent(2) == -1);
  CHECK(t.parent(1) == 2);
  CHECK(t.parent(0) == 1);
  CHECK(t.parent(3) == 2);
}

TEST_CASE("spanning_tree runs BFS from vertex 0 in ascending order") {
  Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  Tree t = spanning_tree(c4);
  CHECK(t.graph().edges() ==
        std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}});
  Graph tree = Graph::from_edges(3, {{0, 1}, {1, 2}});
  CHECK(spanning_tree(tree).graph().edges() == tree.edges());
}

TEST_CASE("free tree enumeration hits the known counts") {
  const int expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47};
  for (int n = 1; n <= 9; ++n) {
    auto trees = csd::testing::all_free_trees(n);
    CHECK(static_cast<int>(trees.size()) == expected[n - 1]);
    for (const auto& t : trees) {
      CHECK(t.vertex_count() == n);
      CHECK(t.is_tree());
    }
  }
}
