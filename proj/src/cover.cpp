#include "csd/cover.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace csd {

namespace {

int first_uncovered_child(const Tree& tree, const std::vector<char>& covered, int v) {
  for (int c : tree.children(v))
    if (!covered[c]) return c;
  return -1;
}

}  // namespace

CoverCollection cover_tree(const Tree& tree, int lambda) {
  const int n = tree.graph().vertex_count();
  if (lambda < 1 || lambda > n)
    throw std::invalid_argument("lambda " + std::to_string(lambda) + " outside [1, " +
                                std::to_string(n) + "]");

  std::vector<std::set<int>> blocks(1);
  std::vector<char> covered(n, 0);
  int covered_count = 0;
  Tree work = tree;  // re-rooted for the patch-up pass
  int vertex = work.root();

  for (int pass = 0; pass < 2; ++pass) {
    while (covered_count < n) {
      // Start each block at an uncovered vertex so blocks stay distinct.
      // The retreat below never runs past the root: a covered cursor with
      // no uncovered child has an exhausted subtree, and at the root that
      // would mean everything is covered already.
      while (covered[vertex]) {
        int c = first_uncovered_child(work, covered, vertex);
        vertex = c >= 0 ? c : work.parent(vertex);
      }
      // Fill: insert every vertex the cursor touches, covered or not.
      while (static_cast<int>(blocks.back().size()) < lambda) {
        blocks.back().insert(vertex);
        if (!covered[vertex]) {
          covered[vertex] = 1;
          ++covered_count;
        }
        int c = first_uncovered_child(work, covered, vertex);
        if (c >= 0) {
          vertex = c;
        } else if (vertex != work.root()) {
          vertex = work.parent(vertex);
        } else {
          break;  // cursor exhausted the tree; only happens once all is covered
        }
      }
      if (pass > 0) break;  // patch-up tops up one block, never opens more
      blocks.emplace_back();
    }
    if (pass == 0) {
      if (blocks.back().empty()) blocks.pop_back();
      // If covering ended mid-block, one more walk tops the last block up to
      // lambda: re-root at its smallest vertex and fill over a fresh cover set.
      std::fill(covered.begin(), covered.end(), 0);
      covered_count = 0;
      int reroot = *blocks.back().begin();
      work = Tree(work.graph(), reroot);
      vertex = reroot;
    }
  }

  CoverCollection out{{}, tree};
  out.subgraphs.reserve(blocks.size());
  for (const auto& b : blocks)
    out.subgraphs.push_back(LambdaSubgraph{std::vector<int>(b.begin(), b.end())});
  return out;
}

std::vector<int> cover_coverage(const CoverCollection& cover) {
  std::vector<int> counts(cover.source_tree.graph().vertex_count(), 0);
  for (const auto& s : cover.subgraphs)
    for (int v : s.vertices) ++counts[v];
  return counts;
}

DefenseStrategy approx_defense_strategy(const Graph& g, int lambda) {
  Tree tree = g.is_tree() ? Tree(g, 0) : spanning_tree(g);
  CoverCollection cover = cover_tree(tree, lambda);
  auto actions =
      std::make_shared<const ActionSet>(make_action_set(g, lambda, cover.subgraphs));
  return uniform_strategy(std::move(actions));
}

Rational guaranteed_catch_fraction(const Graph& g, int lambda) {
  return vertex_probabilities(approx_defense_strategy(g, lambda)).pmin;
}

std::string serialize_cover(const CoverCollection& cover) {
  std::ostringstream out;
  for (const auto& s : cover.subgraphs) {
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
      if (i) out << ' ';
      out << s.vertices[i];
    }
    out << '\n';
  }
  out << "# coverage\n";
  std::vector<int> counts = cover_coverage(cover);
  for (int v = 0; v < static_cast<int>(counts.size()); ++v)
    out << v << ' ' << counts[v] << '\n';
  return out.str();
}

}  // namespace csd
