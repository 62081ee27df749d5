#pragma once

#include <array>
#include <compare>
#include <string>

namespace lcnet {

enum class Side { left, right };

inline const char* side_token(Side s) { return s == Side::left ? "U" : "V"; }

// Structured vertex identities. Every vertex created by a reduction carries
// the indices that produced it, so serialized instances are self-describing
// and iteration order (sorted ids) is deterministic.
enum class VertexKind {
  root,        // r
  node,        // n(i)            generic vertex for ad-hoc graphs
  left_base,   // u(i)            base copy of a left vertex
  left_slot,   // ua(i,a)         label slot of a left vertex
  right_slot,  // vb(j,b)         label slot of a right vertex
  right_base,  // v(j)            base copy of a right vertex
  pendant,     // vt(j)           pendant group vertex attached to v(j)
  mid,         // w(i,j,a,b)      mid vertex of a satisfying pair
  pad,         // x(i,j,a,b)      padding vertex of a satisfying pair
  tree_node,   // q(l,j)          arborescence vertex, level l >= 1
  tree_split,  // wq(l,j,c)       split vertex on the arc q(l,j) -> q(l+1,c)
  chain_root,  // cr(l,j,c,p)     chain replacing copy c of the arc r -> q(l,j)
  chain_pad,   // cp(i,j,l,s,p)   chain replacing a padding arc into t(i,j)
  gadget_x,    // gx(i,j,a,b,f)   x side of a connectivity gadget, f in 1..5
  gadget_y,    // gy(i,j,a,b,f)   y side of a connectivity gadget, f in 1..5
  terminal,    // t(m)            terminal of matching class m
  edge_terminal,  // t(i,j)       terminal of constraint edge (i,j)
};

int vertex_kind_arity(VertexKind kind);

struct VertexId {
  VertexKind kind = VertexKind::root;
  std::array<int, 5> ix{0, 0, 0, 0, 0};

  auto operator<=>(const VertexId&) const = default;

  std::string str() const;
  static VertexId parse(const std::string& token);

  static VertexId root() { return {}; }
  static VertexId node(int i) { return make(VertexKind::node, {i}); }
  static VertexId left_base(int i) { return make(VertexKind::left_base, {i}); }
  static VertexId left_slot(int i, int a) { return make(VertexKind::left_slot, {i, a}); }
  static VertexId right_slot(int j, int b) { return make(VertexKind::right_slot, {j, b}); }
  static VertexId right_base(int j) { return make(VertexKind::right_base, {j}); }
  static VertexId pendant(int j) { return make(VertexKind::pendant, {j}); }
  static VertexId mid(int i, int j, int a, int b) { return make(VertexKind::mid, {i, j, a, b}); }
  static VertexId pad(int i, int j, int a, int b) { return make(VertexKind::pad, {i, j, a, b}); }
  static VertexId tree_node(int level, int j) { return make(VertexKind::tree_node, {level, j}); }
  static VertexId tree_split(int level, int j, int child) {
    return make(VertexKind::tree_split, {level, j, child});
  }
  static VertexId chain_root(int level, int j, int copy, int pos) {
    return make(VertexKind::chain_root, {level, j, copy, pos});
  }
  static VertexId chain_pad(int i, int j, int level, int sibling, int pos) {
    return make(VertexKind::chain_pad, {i, j, level, sibling, pos});
  }
  static VertexId gadget(Side side, int i, int j, int a, int b, int f) {
    return make(side == Side::left ? VertexKind::gadget_x : VertexKind::gadget_y, {i, j, a, b, f});
  }
  static VertexId terminal(int m) { return make(VertexKind::terminal, {m}); }
  static VertexId edge_terminal(int i, int j) { return make(VertexKind::edge_terminal, {i, j}); }

 private:
  static VertexId make(VertexKind kind, std::initializer_list<int> indices) {
    VertexId v;
    v.kind = kind;
    int p = 0;
    for (int x : indices) v.ix[p++] = x;
    return v;
  }
};

enum class RoleKind { plain, root, terminal, group_member, label_slot, mid_slot };

struct VertexRole {
  RoleKind kind = RoleKind::plain;
  Side side = Side::left;  // label_slot only
  int index = 0;           // terminal ordinal, group index, or label-slot vertex index
  int label = 0;           // label_slot only

  bool operator==(const VertexRole&) const = default;

  std::string str() const;
  static VertexRole parse(const std::string& text);

  static VertexRole plain() { return {}; }
  static VertexRole root() { return {RoleKind::root}; }
  static VertexRole terminal(int ordinal) { return {RoleKind::terminal, Side::left, ordinal}; }
  static VertexRole group_member(int group) { return {RoleKind::group_member, Side::left, group}; }
  static VertexRole label_slot(Side side, int vertex, int label) {
    return {RoleKind::label_slot, side, vertex, label};
  }
  static VertexRole mid_slot() { return {RoleKind::mid_slot}; }
};

}  // namespace lcnet
