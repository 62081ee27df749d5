#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lcnet/labelcover.hpp"

namespace lcnet {

enum class PartitionKind { matching, induced_matching };

// Partition of the constraint edge set. Classes hold sorted edges and are
// ordered by their lexicographically smallest edge; no class is empty.
struct EdgePartition {
  PartitionKind kind = PartitionKind::matching;
  std::vector<std::vector<std::pair<int, int>>> classes;

  int class_count() const { return static_cast<int>(classes.size()); }
  // 1-based class index of an edge, 0 if the edge is in no class.
  int class_of(std::pair<int, int> edge) const;
};

// At most max-degree classes, each a matching; the bound is met by coloring
// edges with alternating-chain repairs, so the count equals the max degree
// whenever the edge set is nonempty.
EdgePartition partition_matchings(const LabelCoverInstance& inst);

// At most 2*max_degree^2 classes, each an induced matching of the constraint
// graph; greedy first-fit over lexicographically ordered edges.
EdgePartition partition_induced_matchings(const LabelCoverInstance& inst);

bool is_matching(const std::vector<std::pair<int, int>>& edges);
bool is_induced_matching(const std::vector<std::pair<int, int>>& edges,
                         const LabelCoverInstance& inst);

std::string serialize(const EdgePartition& part);

}  // namespace lcnet
