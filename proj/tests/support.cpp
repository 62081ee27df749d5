#include "support.hpp"

#include <algorithm>
#include <map>

#include "lcnet/errors.hpp"
#include "lcnet/rng.hpp"

namespace lcnet::testing {
namespace {

using Remaining = std::map<EdgeKey, int>;
using Path = std::vector<EdgeKey>;

void collect_paths(bool directed, const Remaining& rem, const VertexId& cur, const VertexId& dst,
                   std::vector<VertexId>& seen, Path& walk, std::vector<Path>& out) {
  if (cur == dst) {
    out.push_back(walk);
    return;
  }
  for (const auto& [key, mult] : rem) {
    if (mult <= 0) continue;
    VertexId next;
    if (key.from == cur)
      next = key.to;
    else if (!directed && key.to == cur)
      next = key.from;
    else
      continue;
    if (std::find(seen.begin(), seen.end(), next) != seen.end()) continue;
    seen.push_back(next);
    walk.push_back(key);
    collect_paths(directed, rem, next, dst, seen, walk, out);
    walk.pop_back();
    seen.pop_back();
  }
}

int pack(bool directed, Remaining& rem, const VertexId& src, const VertexId& dst, long long& nodes) {
  if (++nodes > 5000000) fail(Errc::search_space_too_large, "path packing oracle exploded");
  std::vector<Path> paths;
  std::vector<VertexId> seen{src};
  Path walk;
  collect_paths(directed, rem, src, dst, seen, walk, paths);
  int best = 0;
  for (const auto& path : paths) {
    for (const auto& key : path) --rem[key];
    best = std::max(best, 1 + pack(directed, rem, src, dst, nodes));
    for (const auto& key : path) ++rem[key];
  }
  return best;
}

}  // namespace

int exhaustive_edge_disjoint(const Multigraph& g, const VertexId& src, const VertexId& dst) {
  Remaining rem = g.records();
  long long nodes = 0;
  return pack(g.directed(), rem, src, dst, nodes);
}

bool matching_oracle(const std::vector<std::pair<int, int>>& edges) {
  for (size_t a = 0; a < edges.size(); ++a)
    for (size_t b = a + 1; b < edges.size(); ++b)
      if (edges[a].first == edges[b].first || edges[a].second == edges[b].second) return false;
  return true;
}

bool induced_matching_oracle(const std::vector<std::pair<int, int>>& edges,
                             const LabelCoverInstance& inst) {
  if (!matching_oracle(edges)) return false;
  for (size_t a = 0; a < edges.size(); ++a)
    for (size_t b = 0; b < edges.size(); ++b) {
      if (a == b) continue;
      if (inst.has_edge(edges[a].first, edges[b].second)) return false;
    }
  return true;
}

RandomGraph random_multigraph(uint64_t seed) {
  Rng rng(seed);
  RandomGraph out;
  int n = 4 + rng.below(5);
  for (int i = 1; i <= n; ++i) out.graph.add_vertex(VertexId::node(i));
  int draws = 6 + rng.below(7);
  for (int e = 0; e < draws; ++e) {
    int u = 1 + rng.below(n);
    int v = 1 + rng.below(n);
    if (u == v) continue;
    int mult = rng.below(4) == 0 ? 2 : 1;
    out.graph.add_edge(VertexId::node(u), VertexId::node(v), Rational(0), mult);
  }
  out.src = VertexId::node(1);
  out.dst = VertexId::node(n);
  return out;
}

std::vector<TinyCase> tiny_suite() {
  const int table[5][4] = {{2, 2, 2, 2}, {3, 2, 2, 2}, {3, 3, 2, 3}, {4, 3, 3, 2}, {4, 4, 3, 3}};
  std::vector<TinyCase> out;
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    const int* p = table[(seed - 1) % 5];
    auto drawn = random_instance(seed, p[0], p[1], p[2], p[3], seed % 2 == 1);
    out.push_back({"seed" + std::to_string(seed), drawn.instance});
  }
  return out;
}

}  // namespace lcnet::testing
