#include "csd/subgraphs.hpp"

#include "csd/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace csd {

bool LambdaSubgraph::contains(int v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

std::optional<int> ActionSet::find(const LambdaSubgraph& s) const {
  auto it = std::lower_bound(subgraphs.begin(), subgraphs.end(), s);
  if (it == subgraphs.end() || !(*it == s)) return std::nullopt;
  return static_cast<int>(it - subgraphs.begin());
}

namespace {

std::vector<std::vector<int>> build_member_index(int n, const std::vector<LambdaSubgraph>& subs) {
  std::vector<std::vector<int>> index(n);
  for (int j = 0; j < static_cast<int>(subs.size()); ++j)
    for (int v : subs[j].vertices) index[v].push_back(j);
  return index;
}

std::string subgraph_to_string(const LambdaSubgraph& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.vertices.size(); ++i) {
    if (i) out << ' ';
    out << s.vertices[i];
  }
  out << '}';
  return out.str();
}

// Reverse-search growth a la ESU: per root v, sets with minimum vertex v are
// grown by pulling candidates off an extension list; a candidate's exclusive
// neighbors (not yet adjacent to the growing set) join the list for its
// branch only. Each connected lambda-set is produced exactly once.
class Enumerator {
 public:
  Enumerator(const Graph& g, int lambda, std::size_t cap)
      : g_(g), lambda_(lambda), cap_(cap), marked_(g.vertex_count(), 0) {}

  std::vector<LambdaSubgraph> run() {
    int n = g_.vertex_count();
    for (int v = 0; v + lambda_ <= n; ++v) {
      root_ = v;
      marked_[v] = 1;
      current_.assign(1, v);
      std::vector<int> ext;
      for (int u : g_.neighbors(v))
        if (u > v) {
          marked_[u] = 1;
          ext.push_back(u);
        }
      extend(ext);
      marked_[v] = 0;
      for (int u : ext) marked_[u] = 0;
    }
    return std::move(results_);
  }

 private:
  void extend(std::vector<int> ext) {
    if (static_cast<int>(current_.size()) == lambda_) {
      if (results_.size() >= cap_)
        throw GuardrailError("action set exceeds cap of " + std::to_string(cap_) +
                             " subgraphs; raise the cap to enumerate this instance");
      LambdaSubgraph s{current_};
      std::sort(s.vertices.begin(), s.vertices.end());
      results_.push_back(std::move(s));
      return;
    }
    while (!ext.empty()) {
      int w = ext.back();
      ext.pop_back();
      std::vector<int> branch_ext = ext;
      std::vector<int> added;
      for (int u : g_.neighbors(w))
        if (u > root_ && !marked_[u]) {
          marked_[u] = 1;
          added.push_back(u);
          branch_ext.push_back(u);
        }
      current_.push_back(w);
      extend(std::move(branch_ext));
      current_.pop_back();
      for (int u : added) marked_[u] = 0;
      // w stays marked: sets containing both w and a later sibling were
      // already produced inside w's branch.
    }
  }

  const Graph& g_;
  int lambda_;
  std::size_t cap_;
  int root_ = 0;
  std::vector<char> marked_;
  std::vector<int> current_;
  std::vector<LambdaSubgraph> results_;
};

}  // namespace

ActionSet enumerate_action_set(const Graph& g, int lambda, std::size_t theta_cap) {
  int n = g.vertex_count();
  if (lambda < 1 || lambda > n)
    throw std::invalid_argument("lambda " + std::to_string(lambda) + " outside [1, " +
                                std::to_string(n) + "]");
  ActionSet out;
  out.n = n;
  out.lambda = lambda;
  out.subgraphs = Enumerator(g, lambda, theta_cap).run();
  std::sort(out.subgraphs.begin(), out.subgraphs.end());
  out.member_index = build_member_index(n, out.subgraphs);
  return out;
}

ActionSet make_action_set(const Graph& g, int lambda, std::vector<LambdaSubgraph> subgraphs) {
  int n = g.vertex_count();
  if (lambda < 1 || lambda > n)
    throw std::invalid_argument("lambda " + std::to_string(lambda) + " outside [1, " +
                                std::to_string(n) + "]");
  if (subgraphs.empty()) throw std::invalid_argument("action set has no subgraphs");
  for (const auto& s : subgraphs) {
    if (s.size() != lambda)
      throw std::invalid_argument("subgraph " + subgraph_to_string(s) + " has " +
                                  std::to_string(s.size()) + " vertices, expected " +
                                  std::to_string(lambda));
    if (!std::is_sorted(s.vertices.begin(), s.vertices.end()) ||
        std::adjacent_find(s.vertices.begin(), s.vertices.end()) != s.vertices.end())
      throw std::invalid_argument("subgraph " + subgraph_to_string(s) +
                                  " is not strictly ascending");
    if (!is_connected_subset(g, s.vertices))
      throw std::invalid_argument("subgraph " + subgraph_to_string(s) + " is not connected");
  }
  std::sort(subgraphs.begin(), subgraphs.end());
  if (std::adjacent_find(subgraphs.begin(), subgraphs.end()) != subgraphs.end())
    throw std::invalid_argument("duplicate subgraph in collection");
  ActionSet out;
  out.n = n;
  out.lambda = lambda;
  out.subgraphs = std::move(subgraphs);
  out.member_index = build_member_index(n, out.subgraphs);
  return out;
}

std::vector<int> coverage_counts(const ActionSet& actions, std::span<const int> collection) {
  std::vector<int> counts(actions.n, 0);
  for (int j : collection) {
    if (j < 0 || j >= actions.theta())
      throw std::invalid_argument("subgraph id " + std::to_string(j) + " out of range [0, " +
                                  std::to_string(actions.theta()) + ")");
    for (int v : actions.subgraphs[j].vertices) ++counts[v];
  }
  return counts;
}

std::string serialize_subgraphs(const ActionSet& actions) {
  std::ostringstream out;
  for (const auto& s : actions.subgraphs) {
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
      if (i) out << ' ';
      out << s.vertices[i];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace csd
