#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lcnet/labelcover.hpp"
#include "lcnet/rational.hpp"

namespace lcnet {

// Densest-k-subgraph input: a simple undirected graph on vertices 1..n and a
// target size k.
struct DksInstance {
  int n = 0;
  int k = 1;
  std::set<std::pair<int, int>> edges;  // stored with first < second

  bool has_edge(int u, int v) const;
  int edges_within(const std::vector<int>& s) const;
};

std::string serialize(const DksInstance& g);
DksInstance parse_dks(const std::string& text);

// Label cover built from a seeded balanced partition of the vertices into k
// parts: complete bipartite (k,k) shape, diagonal constraints force equal
// positions, off-diagonal constraints allow exactly the adjacent position
// pairs. parts[i-1][a-1] is the graph vertex named by label a at part i.
struct DksReduction {
  LabelCoverInstance instance;
  std::vector<std::vector<int>> parts;
};

// The partition deals a Fisher-Yates shuffle round-robin. When `separate` is
// given (k distinct vertices) part i is seeded with separate[i-1] before the
// deal, so those vertices end up in pairwise distinct parts.
DksReduction dks_to_labelcover(const DksInstance& g, uint64_t seed,
                               const std::vector<int>* separate = nullptr);

// Labeling that selects, on both sides, the position of the clique vertex
// lying in each part. Demands a k-clique with one vertex per part; the result
// covers every constraint at cost exactly 2k.
Multilabeling clique_labeling(const DksReduction& red, const std::vector<int>& clique);

struct DenseSubgraph {
  std::vector<int> vertices;  // ascending
  int edge_count = 0;
};

// Exhaustive densest k-subgraph; ties resolve to the lexicographically
// smallest vertex set. Rejects instances with more than `budget` subsets.
DenseSubgraph brute_densest_k_subgraph(const DksInstance& g, long long budget = 2000000);

// Lexicographically smallest clique of size k, if one exists within the node
// budget of the backtracking search.
std::optional<std::vector<int>> brute_clique_of_size(const DksInstance& g, int size,
                                                     long long budget = 5000000);

// Edges captured by a uniform random k-subset of `pool`. The exact mean is
// k(k-1) / (|pool| (|pool|-1)) times the edges inside the pool.
struct SamplerReport {
  int trials = 0;
  double mean = 0.0;
  double std_error = 0.0;
  Rational expected;
};

SamplerReport sample_spanned_edges(const DksInstance& g, const std::vector<int>& pool, int k,
                                   uint64_t seed, int trials);
Rational expected_spanned_edges(const DksInstance& g, const std::vector<int>& pool, int k);
// Exact average over every k-subset of the pool; rejects more than `budget`
// subsets.
Rational exhaustive_spanned_average(const DksInstance& g, const std::vector<int>& pool, int k,
                                    long long budget = 2000000);

}  // namespace lcnet
