#pragma once

#include "lcnet/network.hpp"

namespace lcnet {

// Undirected instance with one terminal per matching class and openly
// vertex-disjoint demands. Satisfying pairs route through mid vertices, each
// doubled by a padding vertex hanging off the root; terminals are filled with
// parallel root edges up to a common degree k. Requires projections.
NetworkInstance build_kst(const LabelCoverInstance& inst);

// Undirected group instance: one group per matching class, demand |T_m|.
// Every satisfying pair carries a ten-vertex gadget (two five-vertex halves
// joined in the middle and tapped from the root) whose degree-1 tips either
// join the group of their own class or of every other class. Requires
// projections.
NetworkInstance build_kgst(const LabelCoverInstance& inst);

// Copy with every group demand raised to the maximum by parallel zero-cost
// root edges onto the smallest member of each short group.
NetworkInstance with_uniform_groups(const NetworkInstance& net);

}  // namespace lcnet
