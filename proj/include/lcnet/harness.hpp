#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcnet/network.hpp"

namespace lcnet {

struct NetworkOptimum {
  Multigraph subgraph;          // every zero-cost record plus the chosen ones
  Rational cost;                // number of chosen records
  std::vector<EdgeKey> chosen;  // sorted unit-cost records
};

// Exhaustive cheapest feasible sub-network. The zero-cost floor is always
// taken; the search decides each unit-cost record, visiting exclusions first,
// so ties resolve to the subset whose characteristic vector over the sorted
// records is smallest. Feasibility is monotone in the record set, which
// prunes any branch whose remaining records cannot restore feasibility.
// Requires every positive-cost record to have cost one and multiplicity one;
// rejects more than budget_bits records. nullopt means no feasible choice at
// or below upper_bound exists (with no bound: the full network is infeasible).
std::optional<NetworkOptimum> brute_min_network(const NetworkInstance& net, int budget_bits = 24,
                                                std::optional<int> upper_bound = std::nullopt);

// Ordered key=value lines; the canonical text is deterministic, so reports
// diff cleanly across runs and machines.
struct ExperimentReport {
  std::vector<std::pair<std::string, std::string>> lines;

  void put(const std::string& key, const std::string& value) { lines.emplace_back(key, value); }
  void put(const std::string& key, long long value) { put(key, std::to_string(value)); }
  std::string text() const;
};

// Both transport directions on one instance. Solves the label cover side
// exhaustively, maps the optimum forward and checks k-feasibility and equal
// cost; solves the network side exhaustively, maps the optimum backward and
// checks coverage and equal cost. Any broken leg raises an assertion error
// naming it; the report exists only when the whole cycle holds.
ExperimentReport roundtrip_experiment(const NetworkInstance& net, int budget_bits = 24);

}  // namespace lcnet
