#include "lcnet/vertex.hpp"

#include <sstream>
#include <vector>

#include "lcnet/errors.hpp"

namespace lcnet {
namespace {

struct KindInfo {
  VertexKind kind;
  const char* prefix;
  int arity;
};

// Order matters only for parse disambiguation of the shared "t" prefix.
constexpr KindInfo kKinds[] = {
    {VertexKind::root, "r", 0},
    {VertexKind::node, "n", 1},
    {VertexKind::left_base, "u", 1},
    {VertexKind::left_slot, "ua", 2},
    {VertexKind::right_slot, "vb", 2},
    {VertexKind::right_base, "v", 1},
    {VertexKind::pendant, "vt", 1},
    {VertexKind::mid, "w", 4},
    {VertexKind::pad, "x", 4},
    {VertexKind::tree_node, "q", 2},
    {VertexKind::tree_split, "wq", 3},
    {VertexKind::chain_root, "cr", 4},
    {VertexKind::chain_pad, "cp", 5},
    {VertexKind::gadget_x, "gx", 5},
    {VertexKind::gadget_y, "gy", 5},
    {VertexKind::terminal, "t", 1},
    {VertexKind::edge_terminal, "t", 2},
};

const KindInfo& info_for(VertexKind kind) {
  for (const auto& k : kKinds)
    if (k.kind == kind) return k;
  fail(Errc::parse_error, "unknown vertex kind");
}

}  // namespace

int vertex_kind_arity(VertexKind kind) { return info_for(kind).arity; }

std::string VertexId::str() const {
  const KindInfo& k = info_for(kind);
  if (k.arity == 0) return k.prefix;
  std::ostringstream out;
  out << k.prefix << '(';
  for (int p = 0; p < k.arity; ++p) {
    if (p) out << ',';
    out << ix[p];
  }
  out << ')';
  return out.str();
}

VertexId VertexId::parse(const std::string& token) {
  auto open = token.find('(');
  std::string prefix = open == std::string::npos ? token : token.substr(0, open);
  std::vector<int> args;
  if (open != std::string::npos) {
    if (token.back() != ')') fail(Errc::parse_error, "bad vertex id: " + token);
    std::string inner = token.substr(open + 1, token.size() - open - 2);
    std::istringstream in(inner);
    std::string piece;
    while (std::getline(in, piece, ',')) {
      try {
        args.push_back(std::stoi(piece));
      } catch (const std::logic_error&) {
        fail(Errc::parse_error, "bad vertex id: " + token);
      }
    }
  }
  for (const auto& k : kKinds) {
    if (prefix == k.prefix && static_cast<int>(args.size()) == k.arity) {
      VertexId v;
      v.kind = k.kind;
      for (int p = 0; p < k.arity; ++p) v.ix[p] = args[p];
      return v;
    }
  }
  fail(Errc::parse_error, "bad vertex id: " + token);
}

std::string VertexRole::str() const {
  switch (kind) {
    case RoleKind::plain:
      return "plain";
    case RoleKind::root:
      return "root";
    case RoleKind::terminal:
      return "terminal " + std::to_string(index);
    case RoleKind::group_member:
      return "group " + std::to_string(index);
    case RoleKind::label_slot:
      return std::string("label ") + side_token(side) + " " + std::to_string(index) + " " +
             std::to_string(label);
    case RoleKind::mid_slot:
      return "mid";
  }
  fail(Errc::parse_error, "unknown role kind");
}

VertexRole VertexRole::parse(const std::string& text) {
  std::istringstream in(text);
  std::string head;
  in >> head;
  try {
    if (head == "plain") return plain();
    if (head == "root") return root();
    if (head == "mid") return mid_slot();
    if (head == "terminal") {
      int ordinal;
      if (in >> ordinal) return terminal(ordinal);
    } else if (head == "group") {
      int group;
      if (in >> group) return group_member(group);
    } else if (head == "label") {
      std::string side;
      int vertex, label;
      if (in >> side >> vertex >> label && (side == "U" || side == "V"))
        return label_slot(side == "U" ? Side::left : Side::right, vertex, label);
    }
  } catch (const std::logic_error&) {
  }
  fail(Errc::parse_error, "bad vertex role: " + text);
}

}  // namespace lcnet
