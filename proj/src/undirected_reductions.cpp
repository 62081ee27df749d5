#include "lcnet/undirected_reductions.hpp"

#include <algorithm>
#include <set>

#include "lcnet/errors.hpp"

namespace lcnet {
namespace {

const Rational kZero(0);
const Rational kOne(1);

void require_projections(const LabelCoverInstance& inst) {
  if (!inst.all_projections())
    fail(Errc::relation_constraint, "reduction requires projection constraints");
}

// Unit-cost label edges r -- ua(i,a) and vb(j,b) -- v(j). Both pairs are
// already in stored order (root sorts first, right slots before right bases),
// so the one_cost keys match the stored records.
void add_label_edges(NetworkInstance& net, const LabelCoverInstance& inst) {
  Multigraph& g = net.graph;
  for (int i = 1; i <= inst.left_count; ++i)
    for (int a = 1; a <= inst.alphabet; ++a) {
      VertexId slot = VertexId::left_slot(i, a);
      g.add_vertex(slot, VertexRole::label_slot(Side::left, i, a));
      g.add_edge(VertexId::root(), slot, kOne);
      net.cert.one_cost.emplace(EdgeKey{VertexId::root(), slot, kOne}, LabelRef{Side::left, i, a});
    }
  for (int j = 1; j <= inst.right_count; ++j) {
    VertexId base = VertexId::right_base(j);
    g.add_vertex(base);
    for (int b = 1; b <= inst.alphabet; ++b) {
      VertexId slot = VertexId::right_slot(j, b);
      g.add_vertex(slot, VertexRole::label_slot(Side::right, j, b));
      g.add_edge(slot, base, kOne);
      net.cert.one_cost.emplace(EdgeKey{slot, base, kOne}, LabelRef{Side::right, j, b});
    }
  }
}

}  // namespace

NetworkInstance build_kst(const LabelCoverInstance& inst) {
  require_projections(inst);
  NetworkInstance net;
  net.graph = Multigraph(false);
  net.cert.kind = ReductionKind::kst;
  net.cert.source = inst;
  net.cert.partition = partition_matchings(inst);
  net.cert.max_degree = inst.max_degree();
  net.cert.num_classes = net.cert.partition.class_count();

  Multigraph& g = net.graph;
  g.add_vertex(VertexId::root(), VertexRole::root());
  net.root = VertexId::root();

  add_label_edges(net, inst);
  for (const auto& [edge, c] : inst.constraints) {
    auto [i, j] = edge;
    for (int a = 1; a <= inst.alphabet; ++a) {
      int b = c.image[a - 1];
      VertexId w = VertexId::mid(i, j, a, b);
      VertexId x = VertexId::pad(i, j, a, b);
      g.add_vertex(w, VertexRole::mid_slot());
      g.add_vertex(x, VertexRole::mid_slot());
      g.add_edge(VertexId::left_slot(i, a), w, kZero);
      g.add_edge(w, VertexId::right_slot(j, b), kZero);
      g.add_edge(VertexId::root(), x, kZero);
      g.add_edge(x, w, kZero);
    }
  }

  // One terminal per matching class. Its neighbors: the base copy of every
  // right endpoint in the class, the padding vertex of every satisfying pair
  // of class edges, and the mid vertex of every other satisfying pair. Those
  // neighborhoods are what the openly disjoint path count is measured against.
  for (int m = 1; m <= net.cert.num_classes; ++m) {
    const auto& cls = net.cert.partition.classes[m - 1];
    VertexId t = VertexId::terminal(m);
    g.add_vertex(t, VertexRole::terminal(m));
    net.terminals.push_back(t);
    for (const auto& [i, j] : cls) g.add_edge(VertexId::right_base(j), t, kZero);
    for (const auto& [edge, c] : inst.constraints) {
      auto [i, j] = edge;
      bool in_class = std::binary_search(cls.begin(), cls.end(), edge);
      for (int a = 1; a <= inst.alphabet; ++a) {
        int b = c.image[a - 1];
        if (in_class)
          g.add_edge(VertexId::pad(i, j, a, b), t, kZero);
        else
          g.add_edge(VertexId::mid(i, j, a, b), t, kZero);
      }
    }
  }

  int k = 1;
  for (const auto& t : net.terminals) k = std::max(k, g.degree(t));
  for (const auto& t : net.terminals) {
    int filler = k - g.degree(t);
    if (filler > 0) g.add_edge(VertexId::root(), t, kZero, filler);
  }
  net.k = k;
  return net;
}

NetworkInstance build_kgst(const LabelCoverInstance& inst) {
  require_projections(inst);
  NetworkInstance net;
  net.graph = Multigraph(false);
  net.cert.kind = ReductionKind::kgst;
  net.cert.source = inst;
  net.cert.partition = partition_matchings(inst);
  net.cert.max_degree = inst.max_degree();
  net.cert.num_classes = net.cert.partition.class_count();

  Multigraph& g = net.graph;
  g.add_vertex(VertexId::root(), VertexRole::root());
  net.root = VertexId::root();

  add_label_edges(net, inst);
  for (int j = 1; j <= inst.right_count; ++j) {
    g.add_vertex(VertexId::pendant(j));
    g.add_edge(VertexId::right_base(j), VertexId::pendant(j), kZero);
  }

  // Per satisfying pair, two five-vertex halves. Tips 4 and 5 end up with
  // degree one: 4 hangs off the root tap at 3, 5 hangs off the connector
  // entry at 1, so reaching 5 from the root spends two interior edges of the
  // half while reaching 4 spends none.
  const std::pair<int, int> half[] = {{1, 2}, {2, 3}, {3, 4}, {1, 5}};
  for (const auto& [edge, c] : inst.constraints) {
    auto [i, j] = edge;
    for (int a = 1; a <= inst.alphabet; ++a) {
      int b = c.image[a - 1];
      for (int f = 1; f <= 5; ++f) {
        g.add_vertex(VertexId::gadget(Side::left, i, j, a, b, f));
        g.add_vertex(VertexId::gadget(Side::right, i, j, a, b, f));
      }
      auto gx = [&](int f) { return VertexId::gadget(Side::left, i, j, a, b, f); };
      auto gy = [&](int f) { return VertexId::gadget(Side::right, i, j, a, b, f); };
      for (const auto& [p, q] : half) {
        g.add_edge(gx(p), gx(q), kZero);
        g.add_edge(gy(p), gy(q), kZero);
      }
      g.add_edge(VertexId::left_slot(i, a), gx(1), kZero);
      g.add_edge(gx(2), gy(2), kZero);
      g.add_edge(gy(1), VertexId::right_slot(j, b), kZero);
      g.add_edge(VertexId::root(), gx(3), kZero);
      g.add_edge(VertexId::root(), gy(3), kZero);
    }
  }

  // Group of class m: the pendant of every right endpoint in the class, tip 4
  // of every satisfying pair of class edges, tip 5 of every other pair.
  for (int m = 1; m <= net.cert.num_classes; ++m) {
    const auto& cls = net.cert.partition.classes[m - 1];
    std::set<VertexId> members;
    for (const auto& [i, j] : cls) members.insert(VertexId::pendant(j));
    for (const auto& [edge, c] : inst.constraints) {
      auto [i, j] = edge;
      bool in_class = std::binary_search(cls.begin(), cls.end(), edge);
      int tip = in_class ? 4 : 5;
      for (int a = 1; a <= inst.alphabet; ++a) {
        int b = c.image[a - 1];
        members.insert(VertexId::gadget(Side::left, i, j, a, b, tip));
        members.insert(VertexId::gadget(Side::right, i, j, a, b, tip));
      }
    }
    for (const auto& v : members) g.set_role(v, VertexRole::group_member(m));
    net.groups.members.emplace_back(members.begin(), members.end());
    net.groups.requirements.push_back(static_cast<int>(members.size()));
  }

  int k = 1;
  for (int req : net.groups.requirements) k = std::max(k, req);
  net.k = k;
  return net;
}

NetworkInstance with_uniform_groups(const NetworkInstance& net) {
  if (!net.grouped()) fail(Errc::precondition, "uniform demands apply to group instances only");
  NetworkInstance out = net;
  for (size_t m = 0; m < out.groups.members.size(); ++m) {
    int shortfall = out.k - out.groups.requirements[m];
    if (shortfall > 0)
      out.graph.add_edge(out.root, out.groups.members[m].front(), kZero, shortfall);
    out.groups.requirements[m] = out.k;
  }
  out.groups.uniform_applied = true;
  return out;
}

}  // namespace lcnet
