#include "lcnet/dst_reductions.hpp"

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

// Unit-cost label arcs shared by both directed reductions: arcs selecting a
// left label a at u_i (from `left_from`) and arcs selecting a right label b at
// v_j (into its base copy).
void add_label_arcs(NetworkInstance& net, const LabelCoverInstance& inst,
                    bool left_from_root) {
  Multigraph& g = net.graph;
  for (int i = 1; i <= inst.left_count; ++i) {
    VertexId from = left_from_root ? VertexId::root() : VertexId::left_base(i);
    if (!left_from_root) g.add_vertex(VertexId::left_base(i));
    for (int a = 1; a <= inst.alphabet; ++a) {
      VertexId slot = VertexId::left_slot(i, a);
      g.add_vertex(slot, VertexRole::label_slot(Side::left, i, a));
      g.add_edge(from, slot, kOne);
      net.cert.one_cost.emplace(EdgeKey{from, slot, kOne}, LabelRef{Side::left, i, a});
    }
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

int ceil_log(int base, long long x) {
  int h = 0;
  long long reach = 1;
  while (reach < x) {
    reach *= base;
    ++h;
  }
  return h;
}

}  // namespace

NetworkInstance build_dst_terminals(const LabelCoverInstance& inst) {
  require_projections(inst);
  NetworkInstance net;
  net.cert.kind = ReductionKind::dst_terminals;
  net.cert.source = inst;
  net.cert.partition = partition_matchings(inst);
  net.cert.max_degree = inst.max_degree();
  net.cert.num_classes = net.cert.partition.class_count();

  Multigraph& g = net.graph;
  g.add_vertex(VertexId::root(), VertexRole::root());
  net.root = VertexId::root();

  add_label_arcs(net, inst, /*left_from_root=*/true);
  // deg(u_i) zero-cost copies of each root arc; the unit-cost copy above makes
  // the total deg(u_i)+1, which the terminal padding below saturates exactly.
  for (int i = 1; i <= inst.left_count; ++i) {
    int deg = inst.degree(Side::left, i);
    if (deg > 0)
      for (int a = 1; a <= inst.alphabet; ++a)
        g.add_edge(VertexId::root(), VertexId::left_slot(i, a), kZero, deg);
  }
  for (const auto& [edge, c] : inst.constraints) {
    auto [i, j] = edge;
    for (int a = 1; a <= inst.alphabet; ++a) {
      int b = c.image[a - 1];
      VertexId m = VertexId::mid(i, j, a, b);
      g.add_vertex(m, VertexRole::mid_slot());
      g.add_edge(VertexId::left_slot(i, a), m, kZero);
      g.add_edge(m, VertexId::right_slot(j, b), kZero);
    }
  }

  for (int m = 1; m <= net.cert.num_classes; ++m) {
    const auto& cls = net.cert.partition.classes[m - 1];
    VertexId t = VertexId::terminal(m);
    g.add_vertex(t, VertexRole::terminal(m));
    net.terminals.push_back(t);
    for (const auto& [i, j] : cls) g.add_edge(VertexId::right_base(j), t, kZero);
    std::set<int> matched_left;
    for (const auto& [i, j] : cls) matched_left.insert(i);
    for (const auto& [edge, c] : inst.constraints) {
      auto [i, j] = edge;
      bool in_class = std::binary_search(cls.begin(), cls.end(), edge);
      for (int a = 1; a <= inst.alphabet; ++a) {
        int b = c.image[a - 1];
        if (in_class)
          g.add_edge(VertexId::left_slot(i, a), t, kZero);
        else
          g.add_edge(VertexId::mid(i, j, a, b), t, kZero);
      }
    }
  }

  int k = 1;
  for (const auto& t : net.terminals) k = std::max(k, g.in_degree(t));
  for (const auto& t : net.terminals) {
    int filler = k - g.in_degree(t);
    if (filler > 0) g.add_edge(VertexId::root(), t, kZero, filler);
  }
  net.k = k;
  return net;
}

NetworkInstance build_dst_connectivity(const LabelCoverInstance& inst,
                                       const ConnectivityOptions& options) {
  require_projections(inst);
  if (options.arity < 2) fail(Errc::invalid_arity, "arborescence arity must be at least 2");
  if (options.boost < 0) fail(Errc::infeasible_parameters, "negative boost");

  NetworkInstance net;
  net.cert.kind = ReductionKind::dst_connectivity;
  net.cert.source = inst;
  net.cert.partition = partition_induced_matchings(inst);
  net.cert.max_degree = inst.max_degree();
  net.cert.num_classes = net.cert.partition.class_count();
  net.cert.arity = options.arity;
  net.cert.layered = options.pad_layers;
  net.cert.boost = options.boost;

  const int d = options.arity;
  const int classes = net.cert.num_classes;
  const int delta = net.cert.max_degree;
  const int h = classes == 0 ? 0 : ceil_log(d, classes);
  // Layer padding leaves the tree and k alone; a dummy chain above the tree
  // top stretches every route to the worst-case height 2*ceil_log(2*delta^2).
  const int target = classes == 0 ? 0 : ceil_log(d, 2LL * delta * delta);
  const int offset = options.pad_layers ? target - h : 0;
  if (offset < 0) fail(Errc::assertion_failure, "class count above the worst-case bound");
  net.cert.height = h;
  const int k = h * (d - 1) + 1 + options.boost;
  net.k = k;

  Multigraph& g = net.graph;
  g.add_vertex(VertexId::root(), VertexRole::root());
  net.root = VertexId::root();

  add_label_arcs(net, inst, /*left_from_root=*/false);
  for (const auto& [edge, c] : inst.constraints) {
    auto [i, j] = edge;
    for (int a = 1; a <= inst.alphabet; ++a)
      g.add_edge(VertexId::left_slot(i, a), VertexId::right_slot(j, c.image[a - 1]), kZero);
  }

  VertexId tree_top = VertexId::root();
  if (offset > 0) {
    VertexId prev = VertexId::root();
    for (int p = 1; p <= 2 * offset - 1; ++p) {
      VertexId link = VertexId::chain_root(0, 1, 0, p);
      g.add_vertex(link, VertexRole::mid_slot());
      g.add_edge(prev, link, kZero);
      prev = link;
    }
    tree_top = VertexId::tree_node(0, 1);
    g.add_vertex(tree_top);
    g.add_edge(prev, tree_top, kZero);
  }
  auto tree_vertex = [&](int level, int pos) {
    return level == 0 ? tree_top : VertexId::tree_node(level, pos);
  };

  // Complete d-ary arborescence of height h with every arc split in two.
  long long width = 1;
  for (int level = 0; level < h; ++level) {
    for (int pos = 1; pos <= width; ++pos) {
      for (int c = 0; c < d; ++c) {
        int child = (pos - 1) * d + c + 1;
        VertexId split = VertexId::tree_split(level, pos, child);
        VertexId down = VertexId::tree_node(level + 1, child);
        g.add_vertex(split, VertexRole::mid_slot());
        g.add_vertex(down);
        g.add_edge(tree_vertex(level, pos), split, kZero);
        g.add_edge(split, down, kZero);
      }
    }
    width *= d;
  }
  // d-1 duplicates of every root shortcut into levels 1..h-1, chained through
  // dummy vertices when the instance must stay layered; a displaced tree top
  // needs its own duplicates, since sibling routes can no longer start at r.
  for (int level = offset > 0 ? 0 : 1; level < h; ++level) {
    long long count = 1;
    for (int l = 0; l < level; ++l) count *= d;
    for (int pos = 1; pos <= count; ++pos) {
      if (!options.pad_layers) {
        g.add_edge(VertexId::root(), VertexId::tree_node(level, pos), kZero, d - 1);
        continue;
      }
      for (int copy = 1; copy <= d - 1; ++copy) {
        VertexId prev = VertexId::root();
        for (int p = 1; p <= 2 * (offset + level) - 1; ++p) {
          VertexId link = VertexId::chain_root(level, pos, copy, p);
          g.add_vertex(link, VertexRole::mid_slot());
          g.add_edge(prev, link, kZero);
          prev = link;
        }
        g.add_edge(prev, tree_vertex(level, pos), kZero);
      }
    }
  }
  // Leaves 1..classes carry the left side of their induced matching class.
  for (int m = 1; m <= classes; ++m) {
    std::set<int> lefts;
    for (const auto& [i, j] : net.cert.partition.classes[m - 1]) lefts.insert(i);
    for (int i : lefts) g.add_edge(tree_vertex(h, m), VertexId::left_base(i), kZero);
  }

  int ordinal = 0;
  for (const auto& [edge, c] : inst.constraints) {
    auto [i, j] = edge;
    VertexId t = VertexId::edge_terminal(i, j);
    g.add_vertex(t, VertexRole::terminal(++ordinal));
    net.terminals.push_back(t);
    g.add_edge(VertexId::right_base(j), t, kZero);

    int m = net.cert.partition.class_of(edge);
    // Leaf-to-root positions of the class leaf; pad from every sibling split.
    std::vector<int> position(h + 1);
    position[h] = m;
    for (int level = h; level >= 1; --level) position[level - 1] = (position[level] + d - 1) / d;
    for (int level = 1; level <= h; ++level) {
      int parent = position[level - 1];
      for (int c = 0; c < d; ++c) {
        int child = (parent - 1) * d + c + 1;
        if (child == position[level]) continue;
        VertexId split = VertexId::tree_split(level - 1, parent, child);
        if (!options.pad_layers) {
          g.add_edge(split, t, kZero);
          continue;
        }
        VertexId prev = split;
        for (int p = 1; p <= 2 * (h - level) + 5; ++p) {
          VertexId link = VertexId::chain_pad(i, j, level, child, p);
          g.add_vertex(link, VertexRole::mid_slot());
          g.add_edge(prev, link, kZero);
          prev = link;
        }
        g.add_edge(prev, t, kZero);
      }
    }
    if (options.boost > 0) g.add_edge(VertexId::root(), t, kZero, options.boost);
    if (g.in_degree(t) != k)
      fail(Errc::assertion_failure, "terminal in-degree disagrees with k");
  }
  return net;
}

}  // namespace lcnet
