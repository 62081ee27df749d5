#include <doctest.h>

#include <string>

#include "lcnet/dst_reductions.hpp"
#include "lcnet/errors.hpp"
#include "lcnet/network.hpp"
#include "lcnet/undirected_reductions.hpp"
#include "support.hpp"

using namespace lcnet;
using namespace lcnet::testing;

namespace {

void check_reserialization(const NetworkInstance& net) {
  auto text = serialize(net);
  auto back = parse_network(text);
  CHECK(serialize(back) == text);
  CHECK(back.k == net.k);
  CHECK(back.root == net.root);
  CHECK(back.terminals == net.terminals);
  CHECK(back.groups.members == net.groups.members);
  CHECK(back.groups.requirements == net.groups.requirements);
  CHECK(back.groups.uniform_applied == net.groups.uniform_applied);
  CHECK(back.cert.kind == net.cert.kind);
  CHECK(back.cert.num_classes == net.cert.num_classes);
  CHECK(back.cert.height == net.cert.height);
  CHECK(back.cert.arity == net.cert.arity);
  CHECK(back.cert.layered == net.cert.layered);
  CHECK(back.cert.one_cost == net.cert.one_cost);
  CHECK(serialize(back.cert.source) == serialize(net.cert.source));
  CHECK(back.graph.records() == net.graph.records());
  CHECK(back.graph.vertices() == net.graph.vertices());
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("label cover text roundtrip") {
    auto text = serialize(lc2());
    CHECK(text.substr(0, 15) == "labelcover g=2\n");
    CHECK(text.find("E 1 1 proj 1->1,2->2\n") != std::string::npos);
    CHECK(text.find("E 2 1 proj 1->2,2->1\n") != std::string::npos);
    auto back = parse_labelcover(text);
    CHECK(serialize(back) == text);
    CHECK(back.left_count == 2);
    CHECK(back.right_count == 1);
    CHECK(back.alphabet == 2);
  }

  TEST_CASE("relation constraints keep their pair lists") {
    LabelCoverInstance inst;
    inst.left_count = 1;
    inst.right_count = 1;
    inst.alphabet = 2;
    inst.constraints.emplace(std::make_pair(1, 1),
                             Constraint::relation_of({{1, 2}, {2, 1}}));
    auto text = serialize(inst);
    CHECK(text.find("E 1 1 rel (1,2),(2,1)\n") != std::string::npos);
    CHECK(serialize(parse_labelcover(text)) == text);

    LabelCoverInstance empty = inst;
    empty.constraints.clear();
    empty.constraints.emplace(std::make_pair(1, 1), Constraint::relation_of({}));
    auto empty_text = serialize(empty);
    CHECK(empty_text.find("E 1 1 rel\n") != std::string::npos);
    auto back = parse_labelcover(empty_text);
    CHECK(back.constraints.at({1, 1}).pairs.empty());
    CHECK_FALSE(back.constraints.at({1, 1}).projection);
  }

  TEST_CASE("labeling text roundtrip") {
    Multilabeling sigma = Multilabeling::empty(lc2());
    sigma.at(Side::left, 1).insert(2);
    sigma.at(Side::left, 2).insert(1);
    sigma.at(Side::right, 1).insert(2);
    auto text = serialize(sigma);
    CHECK(text == "labeling nu=2 nv=1\nU 1 2\nU 2 1\nV 1 2\n");
    auto back = parse_multilabeling(text);
    CHECK(back.left == sigma.left);
    CHECK(back.right == sigma.right);
    CHECK(back.cost() == 3);

    auto blank = parse_multilabeling("labeling nu=1 nv=1\nU 1\nV 1\n");
    CHECK(blank.cost() == 0);
  }

  TEST_CASE("network text reserializes for every reduction") {
    check_reserialization(build_dst_terminals(lc2()));
    ConnectivityOptions d2;
    d2.arity = 2;
    check_reserialization(build_dst_connectivity(lc2(), d2));
    d2.pad_layers = true;
    check_reserialization(build_dst_connectivity(lc2(), d2));
    check_reserialization(build_kst(lc2()));
    check_reserialization(build_kgst(lc2()));
    check_reserialization(with_uniform_groups(build_kgst(lc2())));
  }

  TEST_CASE("vertex and role tokens parse back") {
    std::vector<VertexId> ids{
        VertexId::root(),
        VertexId::node(7),
        VertexId::left_slot(2, 3),
        VertexId::mid(1, 2, 3, 4),
        VertexId::tree_split(1, 2, 3),
        VertexId::chain_pad(1, 2, 3, 4, 5),
        VertexId::gadget(Side::right, 1, 2, 1, 2, 5),
        VertexId::edge_terminal(2, 1),
    };
    for (const auto& v : ids) CHECK(VertexId::parse(v.str()) == v);
    CHECK_THROWS_AS(VertexId::parse("zz(1)"), Error);

    std::vector<VertexRole> roles{
        VertexRole::plain(),        VertexRole::root(),
        VertexRole::terminal(4),    VertexRole::group_member(2),
        VertexRole::mid_slot(),     VertexRole::label_slot(Side::right, 3, 1),
    };
    for (const auto& role : roles) CHECK(VertexRole::parse(role.str()) == role);
  }

  TEST_CASE("reduction tokens roundtrip") {
    for (auto kind : {ReductionKind::dst_terminals, ReductionKind::dst_connectivity,
                      ReductionKind::kst, ReductionKind::kgst})
      CHECK(parse_reduction_kind(reduction_token(kind)) == kind);
    CHECK_THROWS_AS(parse_reduction_kind("steiner"), Error);
  }

  TEST_CASE("dot export marks direction and roles") {
    auto directed = build_dst_terminals(lc1());
    auto dot = directed.graph.to_dot();
    CHECK(dot.substr(0, 12) == "digraph G {\n");
    CHECK(dot.find(" -> ") != std::string::npos);
    CHECK(dot.find("fillcolor=black") != std::string::npos);   // root
    CHECK(dot.find("shape=doublecircle") != std::string::npos);  // terminal

    auto undirected = build_kst(lc1());
    auto flat = undirected.graph.to_dot();
    CHECK(flat.substr(0, 10) == "graph G {\n");
    CHECK(flat.find(" -- ") != std::string::npos);
    CHECK(flat.find(" -> ") == std::string::npos);
  }

  TEST_CASE("corrupt text is rejected with a parse error") {
    auto code = [](auto fn) {
      try {
        fn();
      } catch (const Error& e) {
        return e.code();
      }
      return Errc::unknown_vertex;
    };
    CHECK(code([] { parse_labelcover("labelcover g=0\n"); }) == Errc::parse_error);
    CHECK(code([] { parse_labelcover("U 1\n"); }) == Errc::parse_error);
    CHECK(code([] { parse_labelcover("labelcover g=2\nU 1\nV 1\nE 1 1 proj 1->1\n"); }) ==
          Errc::parse_error);
    CHECK(code([] { parse_multilabeling("labeling nu=1 nv=1\nU 9 1\n"); }) == Errc::parse_error);
    CHECK(code([] { parse_network("V r root\n"); }) == Errc::parse_error);
    CHECK(code([] { parse_network("network sideways k=1\n"); }) == Errc::parse_error);
    auto net = build_dst_terminals(lc1());
    auto text = serialize(net);
    CHECK(code([&] { parse_network(text + "X oops\n"); }) == Errc::parse_error);
  }
}
