#pragma once

#include "lcnet/network.hpp"

namespace lcnet {

// Directed instance with one terminal per matching class. Each left slot
// ua(i,a) hangs off the root by one unit-cost arc plus deg(u_i) zero-cost
// copies; satisfying pairs route through mid vertices; terminals absorb the
// base via per-class padding arcs and are filled with root arcs up to a
// common in-degree k. Requires projection constraints.
NetworkInstance build_dst_terminals(const LabelCoverInstance& inst);

struct ConnectivityOptions {
  int arity = 2;           // arborescence arity d >= 2
  bool pad_layers = false; // build the arborescence at worst-case height and
                           // chain every level-skipping arc through dummies,
                           // making the instance strictly layered
  int boost = 0;           // extra zero-cost root arcs per terminal; raises k
};

// Directed instance with one terminal per constraint edge and demand
// k = h(d-1)+1 enforced by a split d-ary arborescence over the induced
// matching classes. Requires projection constraints.
NetworkInstance build_dst_connectivity(const LabelCoverInstance& inst,
                                       const ConnectivityOptions& options = {});

}  // namespace lcnet
