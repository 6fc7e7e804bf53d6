#include "csd/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace csd {

Graph gen_path(int n) {
  if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, std::move(edges));
}

Graph gen_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return Graph::from_edges(n, std::move(edges));
}

namespace {

void check_lambda_range(int lambda, int n) {
  if (lambda < 1 || lambda > n)
    throw std::invalid_argument("lambda " + std::to_string(lambda) + " outside [1, " +
                                std::to_string(n) + "]");
}

}  // namespace

GeneratedInstance make_path_instance(int n, std::optional<int> lambda) {
  GeneratedInstance inst{gen_path(n), lambda, std::nullopt, std::nullopt, "path", {{"n", n}}};
  if (lambda) {
    check_lambda_range(*lambda, n);
    inst.params["lambda"] = *lambda;
    if (n % *lambda == 0) inst.predicted_pstar = Rational(*lambda) / n;
  }
  return inst;
}

GeneratedInstance make_cycle_instance(int n, std::optional<int> lambda) {
  GeneratedInstance inst{gen_cycle(n), lambda, std::nullopt, std::nullopt, "cycle", {{"n", n}}};
  if (lambda) {
    check_lambda_range(*lambda, n);
    inst.params["lambda"] = *lambda;
    inst.predicted_pstar = Rational(*lambda) / n;  // cycles are always defense-optimal
  }
  return inst;
}

GeneratedInstance gen_star_of_lines(int n, int lambda) {
  if (lambda < 2 || lambda > n - 1)
    throw std::invalid_argument("star-of-lines needs 2 <= lambda <= n-1");
  const int sigma = (lambda + 1) / 2;  // segment length: ceil(lambda/2)
  const int b = (n - 1) / sigma;       // complete segments
  const int leftover = (n - 1) - b * sigma;

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  int next = 1;
  auto add_segment = [&](int len) {
    edges.emplace_back(0, next);
    for (int j = 1; j < len; ++j) edges.emplace_back(next + j - 1, next + j);
    next += len;
  };
  for (int i = 0; i < b; ++i) add_segment(sigma);
  if (leftover > 0) add_segment(leftover);

  GeneratedInstance inst{Graph::from_edges(n, std::move(edges)),
                         lambda,
                         std::nullopt,
                         std::nullopt,
                         "star-of-lines",
                         {{"n", n},
                          {"lambda", lambda},
                          {"sigma", sigma},
                          {"segments", b},
                          {"leftover", leftover}}};
  // Even lambda always gives 1/b; odd lambda loses one more segment's worth
  // exactly when the leftover is one vertex short of complete.
  if (lambda % 2 == 0)
    inst.predicted_pstar = Rational(1) / b;
  else
    inst.predicted_pstar = Rational(1) / (leftover == sigma - 1 ? b + 1 : b);
  return inst;
}

GeneratedInstance gen_three_partition_tree(const std::vector<int>& a, int m) {
  if (m < 1) throw std::invalid_argument("need at least one part");
  if (static_cast<int>(a.size()) != 3 * m)
    throw std::invalid_argument("need exactly 3m integers, got " + std::to_string(a.size()));
  long long s = 0;
  for (int x : a) {
    if (x < 1) throw std::invalid_argument("integers must be positive");
    s += x;
  }
  if (s % m != 0)
    throw std::invalid_argument("sum " + std::to_string(s) + " not divisible by " +
                                std::to_string(m));
  const long long target = s / m;
  for (int x : a)
    if (x >= target)
      throw std::invalid_argument("integer " + std::to_string(x) + " not below s/m = " +
                                  std::to_string(target));

  const int n = static_cast<int>(s) + 1;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  int next = 1;
  for (int len : a) {
    edges.emplace_back(0, next);
    for (int j = 1; j < len; ++j) edges.emplace_back(next + j - 1, next + j);
    next += len;
  }

  GeneratedInstance inst{Graph::from_edges(n, std::move(edges)),
                         static_cast<int>(target) + 1,
                         std::nullopt,
                         Rational(1) / m,
                         "three-partition",
                         {{"m", m}, {"sum", s}, {"lambda", target + 1}}};
  for (std::size_t i = 0; i < a.size(); ++i) inst.params["a" + std::to_string(i)] = a[i];
  return inst;
}

GeneratedInstance gen_fig1_graph() {
  // Path 0-1-2 attached through 2-3 to the clique {3,4,5,6}.
  std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5},
                                            {3, 6}, {4, 5}, {4, 6}, {5, 6}};
  return GeneratedInstance{Graph::from_edges(7, std::move(edges)),
                           3,
                           Rational(3) / 7,
                           std::nullopt,
                           "fig1",
                           {{"n", 7}, {"lambda", 3}}};
}

Graph gen_random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("tree needs at least 1 vertex");
  std::mt19937_64 eng(seed);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  // uniform attachment; raw engine output keeps this reproducible everywhere
  for (int v = 1; v < n; ++v)
    edges.emplace_back(static_cast<int>(eng() % static_cast<std::uint64_t>(v)), v);
  return Graph::from_edges(n, std::move(edges));
}

Graph gen_random_connected(int n, int m, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("graph needs at least 1 vertex");
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  if (m < n - 1 || m > max_edges)
    throw std::invalid_argument("edge count " + std::to_string(m) + " outside [" +
                                std::to_string(n - 1) + ", " + std::to_string(max_edges) + "]");
  std::mt19937_64 eng(seed);
  std::set<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v)
    edges.emplace(static_cast<int>(eng() % static_cast<std::uint64_t>(v)), v);
  while (static_cast<int>(edges.size()) < m) {
    int u = static_cast<int>(eng() % static_cast<std::uint64_t>(n));
    int v = static_cast<int>(eng() % static_cast<std::uint64_t>(n));
    if (u == v) continue;
    edges.emplace(std::min(u, v), std::max(u, v));
  }
  return Graph::from_edges(n, {edges.begin(), edges.end()});
}

}  // namespace csd
