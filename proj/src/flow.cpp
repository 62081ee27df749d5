#include "lcnet/flow.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <set>
#include <sstream>

#include "lcnet/errors.hpp"

namespace lcnet {
namespace {

// Residual network over integer node ids. Arcs are stored in pairs (2i, 2i+1)
// that act as each other's residuals; adjacency keeps insertion order, which
// callers make deterministic by inserting in sorted order.
struct ResidualNet {
  std::vector<int> to;
  std::vector<long long> cap;
  std::vector<std::vector<int>> adj;

  int add_node() {
    adj.emplace_back();
    return static_cast<int>(adj.size()) - 1;
  }

  int add_pair(int u, int v, long long cap_uv, long long cap_vu) {
    int id = static_cast<int>(to.size());
    to.push_back(v);
    cap.push_back(cap_uv);
    adj[u].push_back(id);
    to.push_back(u);
    cap.push_back(cap_vu);
    adj[v].push_back(id + 1);
    return id;
  }

  long long max_flow(int s, int t) {
    long long total = 0;
    std::vector<int> pre(adj.size());
    for (;;) {
      std::fill(pre.begin(), pre.end(), -1);
      pre[s] = -2;
      std::deque<int> queue{s};
      while (!queue.empty() && pre[t] == -1) {
        int u = queue.front();
        queue.pop_front();
        for (int a : adj[u]) {
          if (cap[a] > 0 && pre[to[a]] == -1) {
            pre[to[a]] = a;
            queue.push_back(to[a]);
          }
        }
      }
      if (pre[t] == -1) break;
      long long push = LLONG_MAX;
      for (int v = t; v != s;) {
        int a = pre[v];
        push = std::min(push, cap[a]);
        v = to[a ^ 1];
      }
      for (int v = t; v != s;) {
        int a = pre[v];
        cap[a] -= push;
        cap[a ^ 1] += push;
        v = to[a ^ 1];
      }
      total += push;
    }
    return total;
  }
};

// Per-direction usage graph extracted from a solved residual net, then peeled
// into paths by repeated BFS (shortest first, sorted-id tie break).
struct UsageGraph {
  std::vector<std::map<int, long long>> out;

  explicit UsageGraph(int n) : out(n) {}

  void add(int u, int v, long long units) {
    if (units > 0) out[u][v] += units;
  }

  // One path from s to t through positive usage; decrements what it uses.
  std::vector<int> peel(int s, int t) {
    std::vector<int> pre(out.size(), -1);
    pre[s] = s;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      if (u == t) break;
      for (const auto& [v, units] : out[u]) {
        if (units > 0 && pre[v] == -1) {
          pre[v] = u;
          queue.push_back(v);
        }
      }
    }
    if (pre[t] == -1) fail(Errc::assertion_failure, "flow decomposition lost a path");
    std::vector<int> path;
    for (int v = t; v != s; v = pre[v]) path.push_back(v);
    path.push_back(s);
    std::reverse(path.begin(), path.end());
    for (size_t p = 0; p + 1 < path.size(); ++p) out[path[p]][path[p + 1]] -= 1;
    return path;
  }
};

struct Indexer {
  std::map<VertexId, int> ids;
  std::vector<VertexId> names;

  int of(const VertexId& v) {
    auto it = ids.find(v);
    if (it != ids.end()) return it->second;
    int id = static_cast<int>(names.size());
    ids.emplace(v, id);
    names.push_back(v);
    return id;
  }
};

void require_vertex(const Multigraph& g, const VertexId& v, const char* what) {
  if (!g.has_vertex(v)) fail(Errc::unknown_vertex, std::string(what) + ": " + v.str());
}

}  // namespace

FlowWitness max_edge_disjoint_paths(const Multigraph& g, const VertexId& src, const VertexId& dst) {
  require_vertex(g, src, "flow source");
  require_vertex(g, dst, "flow sink");
  FlowWitness w;
  if (src == dst) fail(Errc::precondition, "flow source equals sink");

  Indexer ix;
  ResidualNet net;
  for (const auto& [v, role] : g.vertices()) {
    ix.of(v);
    net.add_node();
  }
  struct ArcRef {
    int pair_id;
    int u, v;
    int mult;
  };
  std::vector<ArcRef> refs;
  for (const auto& rec : g.edges()) {
    int u = ix.of(rec.from), v = ix.of(rec.to);
    int id = g.directed() ? net.add_pair(u, v, rec.mult, 0) : net.add_pair(u, v, rec.mult, rec.mult);
    refs.push_back({id, u, v, rec.mult});
  }

  int s = ix.of(src), t = ix.of(dst);
  w.value = static_cast<int>(net.max_flow(s, t));

  UsageGraph usage(static_cast<int>(ix.names.size()));
  for (const auto& ref : refs) {
    usage.add(ref.u, ref.v, ref.mult - net.cap[ref.pair_id]);
    if (!g.directed()) usage.add(ref.v, ref.u, ref.mult - net.cap[ref.pair_id ^ 1]);
  }
  for (int p = 0; p < w.value; ++p) {
    auto path = usage.peel(s, t);
    std::vector<VertexId> named;
    named.reserve(path.size());
    for (int v : path) named.push_back(ix.names[v]);
    for (size_t q = 0; q + 1 < named.size(); ++q) {
      VertexId a = named[q], b = named[q + 1];
      if (!g.directed() && b < a) std::swap(a, b);
      w.arc_use[{a, b}] += 1;
    }
    w.paths.push_back(std::move(named));
  }
  return w;
}

FlowWitness max_vertex_disjoint_paths(const Multigraph& g, const VertexId& src, const VertexId& dst) {
  require_vertex(g, src, "flow source");
  require_vertex(g, dst, "flow sink");
  if (src == dst) fail(Errc::precondition, "flow source equals sink");
  FlowWitness w;

  // Node layout: endpoints stay whole, every other vertex splits into an
  // in half (even offset) and an out half (odd offset) joined by capacity 1.
  std::map<VertexId, std::pair<int, int>> half;  // vertex -> (in, out)
  ResidualNet net;
  std::vector<VertexId> name_of_node;
  auto fresh = [&](const VertexId& v) {
    int id = net.add_node();
    name_of_node.push_back(v);
    return id;
  };
  for (const auto& [v, role] : g.vertices()) {
    if (v == src || v == dst) {
      int id = fresh(v);
      half[v] = {id, id};
    } else {
      int in = fresh(v);
      int out = fresh(v);
      half[v] = {in, out};
      net.add_pair(in, out, 1, 0);
    }
  }
  for (const auto& rec : g.edges()) {
    int uo = half[rec.from].second, vi = half[rec.to].first;
    net.add_pair(uo, vi, rec.mult, 0);
    if (!g.directed()) net.add_pair(half[rec.to].second, half[rec.from].first, rec.mult, 0);
  }

  int s = half[src].first, t = half[dst].first;
  w.value = static_cast<int>(net.max_flow(s, t));

  UsageGraph usage(static_cast<int>(name_of_node.size()));
  for (size_t a = 0; a < net.to.size(); a += 2) {
    // Initial forward capacity is recoverable from the pair sum.
    long long initial_fwd = net.cap[a] + net.cap[a + 1];
    long long used = initial_fwd - net.cap[a];
    // Internal split arcs have initial reverse 0, as do edge arcs; the sum is
    // the initial forward capacity for every pair built above.
    int u = net.to[a + 1], v = net.to[a];
    usage.add(u, v, used);
  }
  for (int p = 0; p < w.value; ++p) {
    auto path = usage.peel(s, t);
    std::vector<VertexId> named;
    for (int node : path) {
      if (named.empty() || !(name_of_node[node] == named.back()))
        named.push_back(name_of_node[node]);
    }
    for (size_t q = 0; q + 1 < named.size(); ++q) {
      VertexId a = named[q], b = named[q + 1];
      if (!g.directed() && b < a) std::swap(a, b);
      w.arc_use[{a, b}] += 1;
    }
    w.paths.push_back(std::move(named));
  }
  return w;
}

int max_group_connectivity(const Multigraph& g, const VertexId& src,
                           const std::vector<VertexId>& group, int cap) {
  require_vertex(g, src, "group source");
  if (group.empty()) fail(Errc::precondition, "empty group");
  if (cap < 1) fail(Errc::precondition, "group cap < 1");
  std::set<VertexId> members;
  for (const auto& m : group) {
    require_vertex(g, m, "group member");
    if (m == src) fail(Errc::precondition, "group contains the source");
    members.insert(m);
  }

  Indexer ix;
  ResidualNet net;
  for (const auto& [v, role] : g.vertices()) {
    ix.of(v);
    net.add_node();
  }
  for (const auto& rec : g.edges()) {
    int u = ix.of(rec.from), v = ix.of(rec.to);
    if (g.directed())
      net.add_pair(u, v, rec.mult, 0);
    else
      net.add_pair(u, v, rec.mult, rec.mult);
  }
  int sink = net.add_node();
  for (const auto& m : members) net.add_pair(ix.of(m), sink, cap, 0);
  return static_cast<int>(net.max_flow(ix.of(src), sink));
}

bool verify_witness(const Multigraph& g, const VertexId& src, const VertexId& dst,
                    const FlowWitness& witness, bool vertex_disjoint, std::string* why) {
  auto reject = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (static_cast<int>(witness.paths.size()) != witness.value)
    return reject("value does not match path count");

  std::map<std::pair<VertexId, VertexId>, int> tally;
  std::set<VertexId> interior_seen;
  for (const auto& path : witness.paths) {
    if (path.size() < 2) return reject("path with fewer than two vertices");
    if (!(path.front() == src) || !(path.back() == dst)) return reject("path endpoints wrong");
    for (size_t q = 0; q + 1 < path.size(); ++q) {
      VertexId a = path[q], b = path[q + 1];
      if (!g.has_vertex(a) || !g.has_vertex(b)) return reject("path leaves the graph");
      if (g.multiplicity_between(a, b) == 0)
        return reject("missing edge " + a.str() + " - " + b.str());
      if (!g.directed() && b < a) std::swap(a, b);
      tally[{a, b}] += 1;
    }
    if (vertex_disjoint) {
      for (size_t q = 1; q + 1 < path.size(); ++q) {
        if (path[q] == src || path[q] == dst) return reject("endpoint used as interior vertex");
        if (!interior_seen.insert(path[q]).second)
          return reject("interior vertex reused: " + path[q].str());
      }
    }
  }
  for (const auto& [pair, used] : tally) {
    int budget = g.multiplicity_between(pair.first, pair.second);
    if (used > budget) {
      std::ostringstream msg;
      msg << "edge " << pair.first.str() << " - " << pair.second.str() << " used " << used
          << " > multiplicity " << budget;
      return reject(msg.str());
    }
  }
  if (tally != witness.arc_use) return reject("arc usage table inconsistent with paths");
  return true;
}

}  // namespace lcnet
