#include <doctest.h>

#include <algorithm>
#include <map>

#include "lcnet/errors.hpp"
#include "lcnet/flow.hpp"
#include "lcnet/harness.hpp"
#include "lcnet/network.hpp"
#include "lcnet/undirected_reductions.hpp"
#include "support.hpp"

using namespace lcnet;
using namespace lcnet::testing;

TEST_SUITE("undirected") {
  TEST_CASE("vertex-disjoint reduction census") {
    auto one = build_kst(lc1());
    CHECK_FALSE(one.graph.directed());
    CHECK(one.k == 3);
    CHECK(one.terminals.size() == 1);
    CHECK(one.graph.vertex_count() == 11);
    CHECK(one.graph.record_count() == 15);

    auto two = build_kst(lc2());
    CHECK(two.k == 5);
    CHECK(two.terminals.size() == 2);
    CHECK(two.graph.vertex_count() == 18);
    CHECK(two.graph.record_count() == 32);
    for (const auto& t : two.terminals) CHECK(two.graph.degree(t) == two.k);
  }

  TEST_CASE("single-demand instances transport the optimum") {
    auto net = build_kst(lc1());
    auto best = brute_min_network(net);
    REQUIRE(best.has_value());
    CHECK(best->cost == Rational(2));
    CHECK(is_feasible(lc1(), subgraph_to_labeling(net, best->subgraph)));
  }

  TEST_CASE("terminals conduct foreign routes once demands multiply") {
    // A terminal sits between its base vertices and the root filler, so a
    // route may pass through one terminal on its way to another; the cheapest
    // feasible sub-network then costs one instead of the labeling optimum.
    auto net = build_kst(lc2());
    auto best = brute_min_network(net);
    REQUIRE(best.has_value());
    CHECK(best->cost == Rational(1));
    CHECK(best->chosen.size() == 1);
    auto read_back = subgraph_to_labeling(net, best->subgraph);
    CHECK_FALSE(is_feasible(lc2(), read_back));
    // The full graph is feasible either way.
    CHECK(verify_network(net, net.graph).feasible);
  }

  TEST_CASE("labelings still move forward at equal cost") {
    for (int which : {1, 2}) {
      const LabelCoverInstance& inst = which == 1 ? lc1() : lc2();
      auto net = build_kst(inst);
      auto best = brute_min_multilabeling(inst);
      REQUIRE(best.has_value());
      auto sub = labeling_to_subgraph(net, best->first);
      CHECK(verify_network(net, sub).feasible);
      CHECK(sub.total_cost() == Rational(best->second));
    }
  }

  TEST_CASE("group reduction census") {
    auto net = build_kgst(lc2());
    CHECK_FALSE(net.graph.directed());
    CHECK(net.grouped());
    CHECK(net.k == 9);
    CHECK(net.graph.vertex_count() == 49);
    CHECK(net.graph.record_count() == 59);
    REQUIRE(net.groups.members.size() == 2);
    CHECK(net.groups.members[0].size() == 9);
    CHECK(net.groups.members[1].size() == 9);
    CHECK(net.groups.requirements == std::vector<int>{9, 9});
    CHECK_FALSE(net.groups.uniform_applied);
    for (const auto& group : net.groups.members)
      for (const auto& v : group) CHECK(net.graph.degree(v) == 1);
  }

  TEST_CASE("each satisfying pair carries one ten-vertex gadget") {
    auto net = build_kgst(lc2());
    int gadget_vertices = 0, taps = 0, connectors = 0, inner = 0;
    for (const auto& entry : net.graph.vertices()) {
      VertexKind kind = entry.first.kind;
      if (kind == VertexKind::gadget_x || kind == VertexKind::gadget_y) ++gadget_vertices;
    }
    for (const auto& [key, mult] : net.graph.records()) {
      bool gx_from = key.from.kind == VertexKind::gadget_x || key.from.kind == VertexKind::gadget_y;
      bool gx_to = key.to.kind == VertexKind::gadget_x || key.to.kind == VertexKind::gadget_y;
      if (key.from.kind == VertexKind::root && gx_to)
        taps += mult;
      else if (gx_from && gx_to && key.from.kind == key.to.kind)
        inner += mult;
      else if (gx_from || gx_to)
        ++connectors;
    }
    // Four satisfying pairs: 2 edges x alphabet 2.
    CHECK(gadget_vertices == 4 * 10);
    CHECK(taps == 4 * 2);
    CHECK(inner == 4 * 8);
    CHECK(connectors == 4 * 3);
  }

  TEST_CASE("group optimum transports both ways") {
    auto net = build_kgst(lc2());
    auto best = brute_min_network(net);
    REQUIRE(best.has_value());
    CHECK(best->cost == Rational(3));
    CHECK(is_feasible(lc2(), subgraph_to_labeling(net, best->subgraph)));

    auto fwd = labeling_to_subgraph(net, brute_min_multilabeling(lc2())->first);
    CHECK(verify_network(net, fwd).feasible);
    CHECK(fwd.total_cost() == Rational(3));
  }

  TEST_CASE("uniform demands add root filler onto the smallest members") {
    // Path-shaped constraint graph: matching classes of sizes 2 and 1, so the
    // group demands differ and conversion has work to do.
    LabelCoverInstance path;
    path.left_count = 2;
    path.right_count = 2;
    path.alphabet = 2;
    path.constraints.emplace(std::make_pair(1, 1), Constraint::projection_of({1, 2}));
    path.constraints.emplace(std::make_pair(2, 1), Constraint::projection_of({1, 2}));
    path.constraints.emplace(std::make_pair(2, 2), Constraint::projection_of({2, 1}));

    auto base = build_kgst(path);
    bool unequal = false;
    for (int req : base.groups.requirements) unequal = unequal || req != base.k;
    REQUIRE(unequal);

    auto uni = with_uniform_groups(base);
    CHECK(uni.groups.uniform_applied);
    // Anchors can coincide when classes share a right endpoint, so expected
    // filler multiplicities accumulate per vertex.
    std::map<VertexId, int> filler;
    for (size_t m = 0; m < uni.groups.requirements.size(); ++m) {
      CHECK(uni.groups.requirements[m] == uni.k);
      filler[base.groups.members[m].front()] += uni.k - base.groups.requirements[m];
    }
    for (const auto& [anchor, extra] : filler)
      CHECK(uni.graph.multiplicity_between(uni.root, anchor) ==
            base.graph.multiplicity_between(base.root, anchor) + extra);
    CHECK(verify_network(uni, uni.graph).feasible);
    CHECK_THROWS_AS(with_uniform_groups(build_kst(lc1())), Error);
  }

  TEST_CASE("group demands follow class sizes") {
    for (const auto& [name, inst] : tiny_suite()) {
      CAPTURE(name);
      auto net = build_kgst(inst);
      REQUIRE(net.groups.members.size() == (size_t)net.cert.num_classes);
      int top = 0;
      for (size_t m = 0; m < net.groups.members.size(); ++m) {
        CHECK(net.groups.requirements[m] == (int)net.groups.members[m].size());
        top = std::max(top, net.groups.requirements[m]);
      }
      CHECK(net.k == top);
    }
  }

  TEST_CASE("undirected builds are deterministic") {
    auto inst = random_instance(14, 3, 3, 2, 2, false).instance;
    CHECK(serialize(build_kst(inst)) == serialize(build_kst(inst)));
    CHECK(serialize(build_kgst(inst)) == serialize(build_kgst(inst)));
  }
}
