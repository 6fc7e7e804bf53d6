#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace csd {

// Simple undirected connected graph on vertices 0..n-1. Immutable once built;
// construction validates simplicity and connectivity. Edges are stored as
// (u, v) with u < v in lexicographic order, adjacency lists sorted ascending.
class Graph {
 public:
  // edges may arrive in any order/orientation; rejects self-loops, duplicates,
  // out-of-range endpoints and disconnected inputs (std::invalid_argument).
  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

  // Edge-list document: "n m\n" then m lines "u v" with u < v, sorted.
  // Throws ParseError with a line number on malformed input.
  static Graph parse(std::string_view text);
  std::string serialize() const;

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::span<const int> neighbors(int v) const;
  int degree(int v) const;
  bool has_edge(int u, int v) const;
  bool is_tree() const { return edge_count() == vertex_count() - 1; }

 private:
  Graph() = default;
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
};

// True iff the (deduplicated) subset induces a connected subgraph of g.
// Throws std::invalid_argument on an empty subset or out-of-range vertex.
bool is_connected_subset(const Graph& g, std::span<const int> subset);

// A tree graph with a designated root; parent/children derived by BFS.
class Tree {
 public:
  // graph must satisfy m == n-1 (connectivity is a Graph invariant already).
  Tree(Graph graph, int root);

  const Graph& graph() const { return graph_; }
  int root() const { return root_; }
  int parent(int v) const;                   // -1 for the root
  std::span<const int> children(int v) const;  // ascending
  std::vector<int> postorder() const;        // children before parents

 private:
  Graph graph_;
  int root_;
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
};

// BFS spanning tree from vertex 0, neighbors visited in ascending order.
Tree spanning_tree(const Graph& g);

}  // namespace csd
