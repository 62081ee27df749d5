#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lcnet/labelcover.hpp"
#include "lcnet/multigraph.hpp"
#include "lcnet/partition.hpp"

namespace lcnet {

enum class ReductionKind { dst_terminals, dst_connectivity, kst, kgst };

const char* reduction_token(ReductionKind kind);
ReductionKind parse_reduction_kind(const std::string& token);

struct LabelRef {
  Side side = Side::left;
  int vertex = 0;
  int label = 0;

  auto operator<=>(const LabelRef&) const = default;
};

// Bookkeeping tying the built graph back to label cover symbols: the source
// instance, the edge partition that shaped terminals or groups, the structural
// parameters, and the bijection between unit-cost edges and (vertex, label)
// pairs. This is what makes the solution maps total functions.
struct ReductionCertificate {
  ReductionKind kind = ReductionKind::dst_terminals;
  LabelCoverInstance source;
  EdgePartition partition;
  int max_degree = 0;   // max degree of the source constraint graph
  int num_classes = 0;  // matching count, or induced-matching count
  int arity = 0;        // arborescence arity d, connectivity reduction only
  int height = 0;       // arborescence height h, connectivity reduction only
  bool layered = false; // arborescence built at worst-case height, jumps chained
  int boost = 0;        // extra root-to-terminal filler added on top of k
  std::map<EdgeKey, LabelRef> one_cost;  // unit-cost edge <-> (vertex, label)
};

struct GroupSpec {
  std::vector<std::vector<VertexId>> members;  // sorted ids per group
  std::vector<int> requirements;               // as-built demand per group
  bool uniform_applied = false;                // every demand raised to k
};

// A built hardness instance: directed or undirected graph, root, connectivity
// requirement k, and either terminals (per-terminal demand k) or groups.
struct NetworkInstance {
  Multigraph graph{true};
  VertexId root;
  int k = 1;
  std::vector<VertexId> terminals;
  GroupSpec groups;
  ReductionCertificate cert;

  bool grouped() const { return cert.kind == ReductionKind::kgst; }
};

struct VerificationOutcome {
  bool feasible = true;
  // One entry per terminal or group: demand target and measured flow.
  struct Entry {
    std::string name;
    int required = 0;
    int flow = 0;
  };
  std::vector<Entry> entries;
};

// Measures the appropriate connectivity of candidate: edge-disjoint paths per
// terminal for the directed reductions, openly vertex-disjoint for the
// undirected terminal reduction, group connectivity for the group reduction.
VerificationOutcome verify_network(const NetworkInstance& net, const Multigraph& candidate);

// All vertices plus every zero-cost record; feasibility of any edge subset is
// monotone, so searches and maps start from this floor.
Multigraph zero_cost_subgraph(const NetworkInstance& net);

// Canonical solution transport. Forward: feasible multilabeling to a subgraph
// of equal cost (all zero-cost edges plus the unit-cost edges its labels
// select). Backward: read the labels off the unit-cost edges present; the
// candidate must contain every zero-cost edge.
Multigraph labeling_to_subgraph(const NetworkInstance& net, const Multilabeling& sigma);
Multilabeling subgraph_to_labeling(const NetworkInstance& net, const Multigraph& candidate);

// Levels by BFS from root. Result is the common length of all root-to-sink
// paths when every arc joins consecutive levels; nullopt when some reachable
// arc skips a level.
std::optional<int> strict_layer_height(const Multigraph& g, const VertexId& root);

// Longest path from root for DAGs, BFS eccentricity for undirected graphs.
int graph_height(const Multigraph& g, const VertexId& root);

std::string serialize(const NetworkInstance& net);
NetworkInstance parse_network(const std::string& text);

}  // namespace lcnet
