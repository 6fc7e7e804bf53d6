#include "support.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace csd::testing {

namespace {

// Rooted trees as canonical level sequences (root at level 1, children one
// deeper, depth-first order). The successor rule finds the last entry above
// level 2 and repeats the block that starts at its would-be parent; iterating
// from the path (1, 2, ..., n) to the star (1, 2, 2, ..., 2) visits every
// rooted tree on n vertices exactly once.
bool next_level_sequence(std::vector<int>& levels) {
  int n = static_cast<int>(levels.size());
  int p = -1;
  for (int i = n - 1; i >= 0; --i)
    if (levels[i] > 2) {
      p = i;
      break;
    }
  if (p < 0) return false;
  int q = -1;
  for (int i = p - 1; i >= 0; --i)
    if (levels[i] == levels[p] - 1) {
      q = i;
      break;
    }
  for (int i = p; i < n; ++i) levels[i] = levels[i - (p - q)];
  return true;
}

Graph tree_from_levels(const std::vector<int>& levels) {
  int n = static_cast<int>(levels.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) {
    int parent = -1;
    for (int j = i - 1; j >= 0; --j)
      if (levels[j] == levels[i] - 1) {
        parent = j;
        break;
      }
    edges.emplace_back(parent, i);
  }
  return Graph::from_edges(n, std::move(edges));
}

// Tree center(s) by peeling leaves; one or two vertices, and isomorphisms
// map centers to centers, so rooting there canonicalizes the free tree.
std::vector<int> tree_centers(const Graph& g) {
  int n = g.vertex_count();
  if (n == 1) return {0};
  std::vector<int> degree(n), alive(n, 1);
  for (int v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::vector<int> frontier;
  for (int v = 0; v < n; ++v)
    if (degree[v] <= 1) frontier.push_back(v);
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : frontier) {
      alive[v] = 0;
      --remaining;
      for (int u : g.neighbors(v))
        if (alive[u] && --degree[u] == 1) next.push_back(u);
    }
    frontier = std::move(next);
  }
  std::vector<int> centers;
  for (int v = 0; v < n; ++v)
    if (alive[v]) centers.push_back(v);
  return centers;
}

std::string rooted_code(const Graph& g, int v, int parent) {
  std::vector<std::string> child_codes;
  for (int u : g.neighbors(v))
    if (u != parent) child_codes.push_back(rooted_code(g, u, v));
  std::sort(child_codes.begin(), child_codes.end());
  std::string code = "(";
  for (const auto& c : child_codes) code += c;
  code += ")";
  return code;
}

}  // namespace

std::vector<Graph> all_free_trees(int n) {
  if (n < 1) throw std::invalid_argument("all_free_trees: n must be positive");
  std::vector<int> levels(n);
  std::iota(levels.begin(), levels.end(), 1);
  std::map<std::string, Graph> canonical;
  do {
    Graph tree = tree_from_levels(levels);
    std::string best;
    for (int c : tree_centers(tree)) {
      std::string code = rooted_code(tree, c, -1);
      if (best.empty() || code < best) best = std::move(code);
    }
    canonical.emplace(std::move(best), std::move(tree));
  } while (next_level_sequence(levels));
  std::vector<Graph> trees;
  trees.reserve(canonical.size());
  for (auto& [code, tree] : canonical) trees.push_back(std::move(tree));
  return trees;
}

bool subset_connected_bruteforce(const Graph& g, const std::vector<int>& subset) {
  if (subset.empty()) return false;
  std::vector<char> in_subset(g.vertex_count(), 0), seen(g.vertex_count(), 0);
  for (int v : subset) in_subset[v] = 1;
  std::vector<int> stack{subset[0]};
  seen[subset[0]] = 1;
  int reached = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++reached;
    for (int u : g.neighbors(v))
      if (in_subset[u] && !seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
  }
  int distinct = 0;
  for (int v = 0; v < g.vertex_count(); ++v) distinct += in_subset[v];
  return reached == distinct;
}

std::vector<std::vector<int>> all_connected_subsets(const Graph& g, int lambda) {
  std::vector<std::vector<int>> result;
  int n = g.vertex_count();
  std::vector<int> pick(lambda);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    if (subset_connected_bruteforce(g, pick)) result.push_back(pick);
    // next lexicographic combination of {0..n-1} choose lambda
    int i = lambda - 1;
    while (i >= 0 && pick[i] == n - lambda + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < lambda; ++j) pick[j] = pick[j - 1] + 1;
  }
  return result;
}

namespace {

bool place_triples(std::vector<int>& a, std::vector<int>& sum, std::vector<int>& count,
                   std::size_t next, int target) {
  if (next == a.size()) return true;
  for (std::size_t t = 0; t < sum.size(); ++t) {
    if (count[t] == 3 || sum[t] + a[next] > target) continue;
    sum[t] += a[next];
    ++count[t];
    if (place_triples(a, sum, count, next + 1, target)) return true;
    sum[t] -= a[next];
    --count[t];
    if (count[t] == 0) break;  // empty triples are interchangeable
  }
  return false;
}

}  // namespace

bool three_partition_bruteforce(const std::vector<int>& a, int m) {
  if (m < 1 || a.size() != static_cast<std::size_t>(3 * m)) return false;
  long long total = std::accumulate(a.begin(), a.end(), 0LL);
  if (total % m != 0) return false;
  int target = static_cast<int>(total / m);
  std::vector<int> sorted = a;
  std::sort(sorted.rbegin(), sorted.rend());
  if (!sorted.empty() && sorted.front() > target) return false;
  std::vector<int> sum(m, 0), count(m, 0);
  return place_triples(sorted, sum, count, 0, target);
}

CliResult run_cli(const std::string& cli_path, const std::string& args) {
  CliResult result;
  std::string cmd = cli_path + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string write_temp(const std::string& stem, const std::string& content) {
  static std::atomic<int> counter{0};
  auto dir = std::filesystem::temp_directory_path() / "csd-tests";
  std::filesystem::create_directories(dir);
  auto path = dir / (stem + "-" + std::to_string(::getpid()) + "-" +
                     std::to_string(counter++));
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write temp file " + path.string());
  out << content;
  return path.string();
}

}  // namespace csd::testing
