#include "lcnet/partition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "lcnet/errors.hpp"

namespace lcnet {
namespace {

std::vector<std::pair<int, int>> sorted_edges(const LabelCoverInstance& inst) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(inst.constraints.size());
  for (const auto& [edge, c] : inst.constraints) edges.push_back(edge);
  return edges;  // map iteration is already lexicographic
}

EdgePartition gather(PartitionKind kind, const std::vector<std::pair<int, int>>& edges,
                     const std::vector<int>& color, int classes) {
  std::vector<std::vector<std::pair<int, int>>> buckets(classes);
  for (size_t e = 0; e < edges.size(); ++e) buckets[color[e] - 1].push_back(edges[e]);
  for (auto& bucket : buckets) std::sort(bucket.begin(), bucket.end());
  buckets.erase(std::remove_if(buckets.begin(), buckets.end(),
                               [](const auto& b) { return b.empty(); }),
                buckets.end());
  std::sort(buckets.begin(), buckets.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  EdgePartition part;
  part.kind = kind;
  part.classes = std::move(buckets);
  return part;
}

void check_partition(const EdgePartition& part, const LabelCoverInstance& inst, int bound) {
  if (part.class_count() > bound)
    fail(Errc::assertion_failure, "partition exceeds its class bound");
  size_t placed = 0;
  for (const auto& cls : part.classes) {
    placed += cls.size();
    bool good = part.kind == PartitionKind::matching ? is_matching(cls)
                                                     : is_induced_matching(cls, inst);
    if (!good) fail(Errc::assertion_failure, "partition class violates its matching property");
  }
  if (placed != inst.constraints.size())
    fail(Errc::assertion_failure, "partition does not cover the edge set exactly");
}

}  // namespace

int EdgePartition::class_of(std::pair<int, int> edge) const {
  for (size_t m = 0; m < classes.size(); ++m)
    if (std::binary_search(classes[m].begin(), classes[m].end(), edge))
      return static_cast<int>(m) + 1;
  return 0;
}

EdgePartition partition_matchings(const LabelCoverInstance& inst) {
  const auto edges = sorted_edges(inst);
  const int delta = inst.max_degree();
  // at[side][vertex][color] = edge index holding that color, or -1.
  auto table = [&](int verts) {
    return std::vector<std::vector<int>>(verts + 1, std::vector<int>(delta + 1, -1));
  };
  std::vector<std::vector<int>> left_at = table(inst.left_count);
  std::vector<std::vector<int>> right_at = table(inst.right_count);
  std::vector<int> color(edges.size(), 0);

  auto slot = [&](Side side, int vertex) -> std::vector<int>& {
    return side == Side::left ? left_at[vertex] : right_at[vertex];
  };
  auto free_color = [&](Side side, int vertex) {
    auto& used = slot(side, vertex);
    for (int c = 1; c <= delta; ++c)
      if (used[c] == -1) return c;
    fail(Errc::assertion_failure, "no free color at a vertex within max degree");
  };
  auto assign = [&](int e, int c) {
    color[e] = c;
    left_at[edges[e].first][c] = e;
    right_at[edges[e].second][c] = e;
  };

  for (size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    int cu = free_color(Side::left, u);
    int cv = free_color(Side::right, v);
    if (cu != cv) {
      // Walk the cu/cv alternating chain that starts at v with color cu. In a
      // bipartite graph it cannot reach u, so swapping the two colors along it
      // frees cu at v while keeping cu free at u.
      std::vector<int> chain;
      Side side = Side::right;
      int at = v, want = cu;
      while (true) {
        int f = slot(side, at)[want];
        if (f == -1) break;
        chain.push_back(f);
        at = side == Side::right ? edges[f].first : edges[f].second;
        side = side == Side::right ? Side::left : Side::right;
        want = want == cu ? cv : cu;
      }
      for (int f : chain) {
        left_at[edges[f].first][color[f]] = -1;
        right_at[edges[f].second][color[f]] = -1;
      }
      for (int f : chain) {
        assign(f, color[f] == cu ? cv : cu);
      }
    }
    assign(static_cast<int>(e), cu);
  }

  EdgePartition part = gather(PartitionKind::matching, edges, color, delta == 0 ? 0 : delta);
  check_partition(part, inst, delta);
  return part;
}

EdgePartition partition_induced_matchings(const LabelCoverInstance& inst) {
  const auto edges = sorted_edges(inst);
  const int delta = inst.max_degree();
  const int bound = 2 * delta * delta;
  std::vector<std::vector<int>> members(bound);  // edge indices per class
  std::vector<int> color(edges.size(), 0);

  // Conflict in the bipartite constraint graph: shared endpoint, or an edge of
  // the instance joining an endpoint of one to an endpoint of the other.
  auto conflicts = [&](int e, int f) {
    auto [i, j] = edges[e];
    auto [fi, fj] = edges[f];
    return i == fi || j == fj || inst.has_edge(i, fj) || inst.has_edge(fi, j);
  };

  for (size_t e = 0; e < edges.size(); ++e) {
    int chosen = 0;
    for (int c = 0; c < bound && !chosen; ++c) {
      bool clean = true;
      for (int f : members[c])
        if (conflicts(static_cast<int>(e), f)) {
          clean = false;
          break;
        }
      if (clean) chosen = c + 1;
    }
    if (!chosen)
      fail(Errc::assertion_failure, "greedy induced partition exceeded 2*delta^2 classes");
    color[e] = chosen;
    members[chosen - 1].push_back(static_cast<int>(e));
  }

  EdgePartition part = gather(PartitionKind::induced_matching, edges, color, bound);
  check_partition(part, inst, bound);
  return part;
}

bool is_matching(const std::vector<std::pair<int, int>>& edges) {
  std::set<int> lefts, rights;
  for (const auto& [i, j] : edges)
    if (!lefts.insert(i).second || !rights.insert(j).second) return false;
  return true;
}

bool is_induced_matching(const std::vector<std::pair<int, int>>& edges,
                         const LabelCoverInstance& inst) {
  if (!is_matching(edges)) return false;
  for (size_t e = 0; e < edges.size(); ++e)
    for (size_t f = e + 1; f < edges.size(); ++f)
      if (inst.has_edge(edges[e].first, edges[f].second) ||
          inst.has_edge(edges[f].first, edges[e].second))
        return false;
  return true;
}

std::string serialize(const EdgePartition& part) {
  std::ostringstream out;
  out << "partition kind=" << (part.kind == PartitionKind::matching ? "matching" : "induced")
      << " classes=" << part.class_count() << "\n";
  for (size_t m = 0; m < part.classes.size(); ++m)
    for (const auto& [i, j] : part.classes[m])
      out << "P " << (m + 1) << " " << i << " " << j << "\n";
  return out.str();
}

}  // namespace lcnet
