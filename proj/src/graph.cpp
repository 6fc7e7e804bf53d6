#include "csd/graph.hpp"

#include "csd/errors.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace csd {

namespace {

std::string vertex_range_msg(int v, int n) {
  return "vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")";
}

}  // namespace

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n) throw std::invalid_argument(vertex_range_msg(u < 0 ? u : v, n));
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.adjacency_.assign(n, {});
  for (auto [u, v] : g.edges_) {
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());

  // connectivity: BFS from 0 must reach everything
  std::vector<char> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.adjacency_[u])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
  }
  if (reached != n) {
    int missing = static_cast<int>(std::find(seen.begin(), seen.end(), 0) - seen.begin());
    throw std::invalid_argument("graph is disconnected (vertex " + std::to_string(missing) +
                                " unreachable from 0)");
  }
  return g;
}

namespace {

// Parses a line of exactly `count` integers; returns false on a blank line.
bool parse_int_line(std::string_view line, int line_no, std::span<int> out) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
  };
  skip_ws();
  if (pos == line.size()) return false;
  for (std::size_t k = 0; k < out.size(); ++k) {
    skip_ws();
    const char* begin = line.data() + pos;
    const char* end = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(begin, end, out[k]);
    if (ec != std::errc() || ptr == begin)
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(out.size()) + " integers");
    pos += static_cast<std::size_t>(ptr - begin);
  }
  skip_ws();
  if (pos != line.size())
    throw ParseError("line " + std::to_string(line_no) + ": trailing content");
  return true;
}

}  // namespace

Graph Graph::parse(std::string_view text) {
  std::vector<std::pair<std::string_view, int>> lines;  // (content, line number)
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == std::string_view::npos ? text.size() - start
                                                                            : nl - start);
    ++line_no;
    lines.emplace_back(line, line_no);
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }

  std::size_t cursor = 0;
  auto next_line = [&](std::span<int> out) -> bool {
    while (cursor < lines.size()) {
      auto [line, no] = lines[cursor++];
      if (parse_int_line(line, no, out)) return true;
    }
    return false;
  };

  int header[2];
  if (!next_line(header)) throw ParseError("missing 'n m' header");
  int n = header[0], m = header[1];
  if (n < 1) throw ParseError("vertex count must be at least 1");
  if (m < 0) throw ParseError("negative edge count");

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    int uv[2];
    if (!next_line(uv))
      throw ParseError("expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    auto [u, v] = std::pair{uv[0], uv[1]};
    if (u >= v) throw ParseError("edge '" + std::to_string(u) + " " + std::to_string(v) +
                                 "' violates u < v");
    if (u < 0 || v >= n) throw ParseError("edge endpoint out of range: " + std::to_string(u) +
                                          " " + std::to_string(v));
    edges.emplace_back(u, v);
  }
  int extra[2];
  if (next_line(extra)) throw ParseError("unexpected content after last edge");

  try {
    return from_edges(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());  // duplicate edge / disconnected, as a document error
  }
}

std::string Graph::serialize() const {
  std::ostringstream out;
  out << n_ << ' ' << edges_.size() << '\n';
  for (auto [u, v] : edges_) out << u << ' ' << v << '\n';
  return out.str();
}

std::span<const int> Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument(vertex_range_msg(v, n_));
  return adjacency_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::pair{u, v});
}

bool is_connected_subset(const Graph& g, std::span<const int> subset) {
  if (subset.empty()) throw std::invalid_argument("empty vertex subset");
  std::set<int> verts;
  for (int v : subset) {
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument(vertex_range_msg(v, g.vertex_count()));
    verts.insert(v);
  }
  std::set<int> seen;
  std::deque<int> queue{*verts.begin()};
  seen.insert(*verts.begin());
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u))
      if (verts.count(w) && !seen.count(w)) {
        seen.insert(w);
        queue.push_back(w);
      }
  }
  return seen.size() == verts.size();
}

Tree::Tree(Graph graph, int root) : graph_(std::move(graph)), root_(root) {
  int n = graph_.vertex_count();
  if (graph_.edge_count() != n - 1)
    throw std::invalid_argument("not a tree: " + std::to_string(graph_.edge_count()) +
                                " edges on " + std::to_string(n) + " vertices");
  if (root < 0 || root >= n) throw std::invalid_argument(vertex_range_msg(root, n));
  parent_.assign(n, -1);
  children_.assign(n, {});
  std::vector<char> seen(n, 0);
  std::deque<int> queue{root};
  seen[root] = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : graph_.neighbors(u))
      if (!seen[w]) {
        seen[w] = 1;
        parent_[w] = u;
        children_[u].push_back(w);  // neighbors ascending => children ascending
        queue.push_back(w);
      }
  }
}

int Tree::parent(int v) const {
  if (v < 0 || v >= graph_.vertex_count())
    throw std::invalid_argument(vertex_range_msg(v, graph_.vertex_count()));
  return parent_[v];
}

std::span<const int> Tree::children(int v) const {
  if (v < 0 || v >= graph_.vertex_count())
    throw std::invalid_argument(vertex_range_msg(v, graph_.vertex_count()));
  return children_[v];
}

std::vector<int> Tree::postorder() const {
  std::vector<int> order;
  order.reserve(graph_.vertex_count());
  // iterative DFS emitting a vertex after all its children
  std::vector<std::pair<int, std::size_t>> stack{{root_, 0}};
  while (!stack.empty()) {
    auto& [v, idx] = stack.back();
    auto kids = children(v);
    if (idx < kids.size()) {
      int child = kids[idx++];
      stack.emplace_back(child, 0);
    } else {
      order.push_back(v);
      stack.pop_back();
    }
  }
  return order;
}

Tree spanning_tree(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::pair<int, int>> tree_edges;
  tree_edges.reserve(static_cast<std::size_t>(n) - 1);
  std::vector<char> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u))
      if (!seen[w]) {
        seen[w] = 1;
        tree_edges.emplace_back(u, w);
        queue.push_back(w);
      }
  }
  return Tree(Graph::from_edges(n, std::move(tree_edges)), 0);
}

}  // namespace csd
