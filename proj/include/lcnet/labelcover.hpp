#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lcnet/vertex.hpp"

namespace lcnet {

// Constraint on one edge (u_i, v_j): either a projection from the left
// alphabet onto the right one, or an arbitrary relation of allowed pairs.
struct Constraint {
  bool projection = true;
  std::vector<int> image;                    // projection: image[a-1] = b
  std::vector<std::pair<int, int>> pairs;    // relation: sorted, unique

  bool satisfied(int a, int b) const;
  bool empty_relation() const { return !projection && pairs.empty(); }
  bool operator==(const Constraint&) const = default;

  static Constraint projection_of(std::vector<int> image);
  static Constraint relation_of(std::vector<std::pair<int, int>> pairs);
};

// Bipartite instance over vertex sets u_1..u_n and v_1..v_m with a common
// alphabet 1..g. Edges are the keys of the constraint map.
struct LabelCoverInstance {
  int left_count = 0;
  int right_count = 0;
  int alphabet = 1;
  std::map<std::pair<int, int>, Constraint> constraints;

  int degree(Side side, int vertex) const;
  int max_degree() const;
  bool all_projections() const;
  bool has_edge(int i, int j) const { return constraints.count({i, j}) > 0; }
  bool operator==(const LabelCoverInstance&) const = default;
};

// Multilabeling: a set of labels per vertex; cost is the total count.
struct Multilabeling {
  std::vector<std::set<int>> left;
  std::vector<std::set<int>> right;

  static Multilabeling empty(const LabelCoverInstance& inst);
  std::set<int>& at(Side side, int vertex);
  const std::set<int>& at(Side side, int vertex) const;
  int cost() const;
  bool operator==(const Multilabeling&) const = default;
};

// Does sigma cover the edge: some chosen left label maps (relates) to some
// chosen right label. The edge must exist.
bool covers(const LabelCoverInstance& inst, const Multilabeling& sigma, std::pair<int, int> edge);
bool is_feasible(const LabelCoverInstance& inst, const Multilabeling& sigma);

// Exhaustive minimum multilabeling. Search states are characteristic vectors
// over (vertex, label) slots, visited in nondecreasing cost and, within one
// cost, in lexicographic order of the vector; the first feasible hit wins.
// Instances whose slot count exceeds budget_bits are rejected; raising the
// budget is the explicit override. nullopt means some edge has an empty
// relation, the only way an instance can be infeasible.
std::optional<std::pair<Multilabeling, int>> brute_min_multilabeling(
    const LabelCoverInstance& inst, int budget_bits = 24);

struct RandomLabelCover {
  LabelCoverInstance instance;
  Multilabeling planted;  // meaningful only when planted mode was requested
};

// Degree-regular-ish random instance: `degree` rounds of random matchings
// between the sides (duplicates skipped), projections drawn uniformly. In
// planted mode every vertex first receives one hidden label and each
// projection is forced to agree on the hidden pair.
RandomLabelCover random_instance(uint64_t seed, int left_count, int right_count, int degree,
                                 int alphabet, bool planted);

// Two-vertex fixture: one edge with the identity projection over {1,2}.
LabelCoverInstance lc1();
// Three-vertex fixture: u_1 and u_2 share v_1; identity and swap projections.
LabelCoverInstance lc2();

std::string serialize(const LabelCoverInstance& inst);
LabelCoverInstance parse_labelcover(const std::string& text);
std::string serialize(const Multilabeling& sigma);
Multilabeling parse_multilabeling(const std::string& text);

}  // namespace lcnet
