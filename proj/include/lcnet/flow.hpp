#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lcnet/multigraph.hpp"

namespace lcnet {

// Maximum value plus an explicit decomposition into that many paths. Usage is
// keyed by traversal direction for directed graphs and by the normalized
// endpoint pair for undirected ones; counts never exceed the stored
// multiplicity between the endpoints.
struct FlowWitness {
  int value = 0;
  std::vector<std::vector<VertexId>> paths;
  std::map<std::pair<VertexId, VertexId>, int> arc_use;
};

// Edge-disjoint counting multiplicity. Undirected edges are realized as the
// standard antiparallel arc pair whose capacities share one budget, so a
// single edge is never consumed in both directions at once.
FlowWitness max_edge_disjoint_paths(const Multigraph& g, const VertexId& src, const VertexId& dst);

// Openly vertex-disjoint, via vertex splitting; source and sink stay whole, so
// parallel src-dst edges count as internally disjoint routes.
FlowWitness max_vertex_disjoint_paths(const Multigraph& g, const VertexId& src, const VertexId& dst);

// Edge-disjoint paths from src into the group, with up to cap paths allowed to
// end at each member (fresh super sink behind the group).
int max_group_connectivity(const Multigraph& g, const VertexId& src,
                           const std::vector<VertexId>& group, int cap);

// Independent re-check of a witness against the graph: endpoints, edge
// existence, multiplicity budgets, and (optionally) open vertex disjointness.
bool verify_witness(const Multigraph& g, const VertexId& src, const VertexId& dst,
                    const FlowWitness& witness, bool vertex_disjoint, std::string* why = nullptr);

}  // namespace lcnet
