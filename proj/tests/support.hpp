// Shared test machinery: exhaustive free-tree enumeration, brute-force
// oracles kept independent of the library's own algorithms, and helpers for
// driving the installed CLI binary.
#pragma once

#include <csd/graph.hpp>

#include <string>
#include <vector>

namespace csd::testing {

// Every unlabeled tree on n vertices, one representative each (canonical
// dedup of rooted level sequences). Counts 1, 1, 1, 2, 3, 6, 11, 23, 47
// for n = 1..9.
std::vector<Graph> all_free_trees(int n);

// Independent connectivity check over an induced subset (BFS written from
// scratch so enumeration tests do not lean on the library's oracle).
bool subset_connected_bruteforce(const Graph& g, const std::vector<int>& subset);

// All connected lambda-subsets by filtering every combination; the oracle
// that enumerate_action_set is compared against.
std::vector<std::vector<int>> all_connected_subsets(const Graph& g, int lambda);

// Can the multiset split into m triples of equal sum? Backtracking; meant
// for tiny inputs (|a| = 3m, m <= 4).
bool three_partition_bruteforce(const std::vector<int>& a, int m);

struct CliResult {
  int exit_code = -1;
  std::string out;  // captured stdout
};

// Run `cli_path args...` through the shell, capture stdout and the exit
// status. stderr flows through to the test log.
CliResult run_cli(const std::string& cli_path, const std::string& args);

// Write content to a fresh file under the system temp dir; returns its path.
std::string write_temp(const std::string& stem, const std::string& content);

}  // namespace csd::testing
