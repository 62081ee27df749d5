#include <doctest.h>

#include "lcnet/dst_reductions.hpp"
#include "lcnet/errors.hpp"
#include "lcnet/harness.hpp"
#include "lcnet/undirected_reductions.hpp"
#include "support.hpp"

using namespace lcnet;
using namespace lcnet::testing;

namespace {

template <typename F>
Errc thrown_code(F fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::parse_error;
}

}  // namespace

TEST_SUITE("harness") {
  TEST_CASE("exhaustive search takes the lexicographically first optimum") {
    auto net = build_dst_terminals(lc1());
    auto best = brute_min_network(net);
    REQUIRE(best.has_value());
    CHECK(best->cost == Rational(2));
    // Two label pairs tie at cost two; exclusion-first search settles on the
    // one whose records sort later, i.e. characteristic vector 0101 over the
    // four sorted unit records.
    std::vector<EdgeKey> want{
        {VertexId::root(), VertexId::left_slot(1, 2), Rational(1)},
        {VertexId::right_slot(1, 2), VertexId::right_base(1), Rational(1)},
    };
    CHECK(best->chosen == want);
    CHECK(best->subgraph.total_cost() == Rational(2));
    CHECK(verify_network(net, best->subgraph).feasible);
    CHECK(net.graph.contains(best->subgraph));
  }

  TEST_CASE("upper bound gates the search") {
    auto net = build_dst_terminals(lc1());
    CHECK_FALSE(brute_min_network(net, 24, 1).has_value());
    auto capped = brute_min_network(net, 24, 2);
    REQUIRE(capped.has_value());
    CHECK(capped->cost == Rational(2));
  }

  TEST_CASE("infeasible networks report no optimum") {
    NetworkInstance bare;
    bare.graph.add_vertex(VertexId::root(), VertexRole::root());
    bare.graph.add_vertex(VertexId::node(1), VertexRole::terminal(1));
    bare.root = VertexId::root();
    bare.k = 1;
    bare.terminals.push_back(VertexId::node(1));
    CHECK_FALSE(brute_min_network(bare).has_value());
  }

  TEST_CASE("search preconditions") {
    auto net = build_dst_terminals(lc1());
    CHECK(thrown_code([&] { brute_min_network(net, 3); }) == Errc::search_space_too_large);

    NetworkInstance priced;
    priced.graph.add_vertex(VertexId::root(), VertexRole::root());
    priced.graph.add_vertex(VertexId::node(1), VertexRole::terminal(1));
    priced.root = VertexId::root();
    priced.k = 1;
    priced.terminals.push_back(VertexId::node(1));

    auto doubled = priced;
    priced.graph.add_edge(VertexId::root(), VertexId::node(1), Rational(2));
    CHECK_THROWS_WITH_AS(brute_min_network(priced),
                         "searchable records must be unit cost with multiplicity one", Error);

    doubled.graph.add_edge(VertexId::root(), VertexId::node(1), Rational(1), 2);
    CHECK_THROWS_WITH_AS(brute_min_network(doubled),
                         "searchable records must be unit cost with multiplicity one", Error);
  }

  TEST_CASE("roundtrip report freezes the terminal reduction numbers") {
    auto report = roundtrip_experiment(build_dst_terminals(lc2()));
    CHECK(report.text() ==
          "reduction=dst-t\n"
          "k=5\n"
          "vertices=14\n"
          "records=28\n"
          "multiplicity=28\n"
          "lc_opt=3\n"
          "net_opt=3\n"
          "forward_cost=3\n"
          "agree=1\n");
  }

  TEST_CASE("roundtrip holds for the other sound fixtures") {
    ConnectivityOptions d2;
    d2.arity = 2;
    auto tree = roundtrip_experiment(build_dst_connectivity(lc2(), d2));
    CHECK(tree.lines.front().second == "dst-k");
    CHECK(tree.lines.back().first == "agree");

    auto groups = roundtrip_experiment(build_kgst(lc2()));
    CHECK(groups.lines.front().second == "kgst");
    bool saw = false;
    for (const auto& [key, value] : groups.lines)
      if (key == "net_opt") {
        CHECK(value == "3");
        saw = true;
      }
    CHECK(saw);
  }

  TEST_CASE("broken transport names the failing leg") {
    CHECK_THROWS_WITH_AS(roundtrip_experiment(build_kst(lc2())),
                         "backward leg broke: sub-network strictly cheaper than the labeling optimum",
                         Error);
  }
}
