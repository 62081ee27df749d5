#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lcnet/labelcover.hpp"
#include "lcnet/multigraph.hpp"

namespace lcnet::testing {

// Maximum number of pairwise edge-disjoint src->dst paths by exhaustive
// packing of vertex-simple paths. Deliberately independent of the flow
// module; exponential, so keep graphs at or below 8 vertices and 12 records.
int exhaustive_edge_disjoint(const Multigraph& g, const VertexId& src, const VertexId& dst);

// Naive re-checks of the partition class properties.
bool matching_oracle(const std::vector<std::pair<int, int>>& edges);
bool induced_matching_oracle(const std::vector<std::pair<int, int>>& edges,
                             const LabelCoverInstance& inst);

// Seeded directed multigraph with 4..8 vertices and at most 12 records, some
// of them doubled; node(1) is the source and node(n) the sink.
struct RandomGraph {
  Multigraph graph{true};
  VertexId src;
  VertexId dst;
};
RandomGraph random_multigraph(uint64_t seed);

// Twenty seeded desk-scale instances within |U|,|V| <= 4, degree <= 3,
// alphabet <= 3; the same family backs the acceptance checks.
struct TinyCase {
  std::string name;
  LabelCoverInstance instance;
};
std::vector<TinyCase> tiny_suite();

}  // namespace lcnet::testing
