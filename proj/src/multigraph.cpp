#include "lcnet/multigraph.hpp"

#include <sstream>

#include "lcnet/errors.hpp"

namespace lcnet {

void Multigraph::add_vertex(const VertexId& v, VertexRole role) {
  auto [it, fresh] = vertices_.emplace(v, role);
  if (!fresh && role != VertexRole::plain()) it->second = role;
}

void Multigraph::set_role(const VertexId& v, VertexRole role) {
  auto it = vertices_.find(v);
  if (it == vertices_.end()) fail(Errc::unknown_vertex, "set_role: " + v.str());
  it->second = role;
}

const VertexRole& Multigraph::role(const VertexId& v) const {
  auto it = vertices_.find(v);
  if (it == vertices_.end()) fail(Errc::unknown_vertex, "role: " + v.str());
  return it->second;
}

EdgeKey Multigraph::normalized(VertexId u, VertexId v, Rational cost) const {
  if (!directed_ && v < u) std::swap(u, v);
  return EdgeKey{u, v, cost};
}

void Multigraph::add_edge(VertexId u, VertexId v, Rational cost, int mult) {
  if (u == v) fail(Errc::bad_edge, "self loop at " + u.str());
  if (mult < 1) fail(Errc::bad_edge, "multiplicity < 1 on " + u.str() + " -> " + v.str());
  if (cost.is_negative()) fail(Errc::bad_edge, "negative cost on " + u.str() + " -> " + v.str());
  if (!has_vertex(u)) fail(Errc::unknown_vertex, "edge endpoint " + u.str());
  if (!has_vertex(v)) fail(Errc::unknown_vertex, "edge endpoint " + v.str());
  records_[normalized(u, v, cost)] += mult;
}

void Multigraph::remove_record(const EdgeKey& key) {
  auto it = records_.find(normalized(key.from, key.to, key.cost));
  if (it == records_.end()) fail(Errc::unknown_edge, "remove: " + key.from.str() + " -> " + key.to.str());
  records_.erase(it);
}

int Multigraph::multiplicity(const EdgeKey& key) const {
  auto it = records_.find(normalized(key.from, key.to, key.cost));
  return it == records_.end() ? 0 : it->second;
}

int Multigraph::multiplicity_between(const VertexId& u, const VertexId& v) const {
  int total = 0;
  for (const auto& [key, mult] : records_) {
    if ((key.from == u && key.to == v) || (!directed_ && key.from == v && key.to == u))
      total += mult;
  }
  return total;
}

std::vector<EdgeRec> Multigraph::edges() const {
  std::vector<EdgeRec> out;
  out.reserve(records_.size());
  for (const auto& [key, mult] : records_) out.push_back({key.from, key.to, key.cost, mult});
  return out;
}

long long Multigraph::multiplicity_total() const {
  long long total = 0;
  for (const auto& [key, mult] : records_) total += mult;
  return total;
}

Rational Multigraph::total_cost() const {
  Rational total;
  for (const auto& [key, mult] : records_) total = total + key.cost * mult;
  return total;
}

int Multigraph::in_degree(const VertexId& v) const {
  int total = 0;
  for (const auto& [key, mult] : records_)
    if (key.to == v || (!directed_ && key.from == v)) total += mult;
  return total;
}

int Multigraph::out_degree(const VertexId& v) const {
  int total = 0;
  for (const auto& [key, mult] : records_)
    if (key.from == v || (!directed_ && key.to == v)) total += mult;
  return total;
}

int Multigraph::degree(const VertexId& v) const {
  int total = 0;
  for (const auto& [key, mult] : records_)
    if (key.from == v || key.to == v) total += mult;
  return total;
}

bool Multigraph::contains(const Multigraph& sub) const {
  for (const auto& [v, role] : sub.vertices_)
    if (!has_vertex(v)) return false;
  for (const auto& [key, mult] : sub.records_)
    if (multiplicity(key) < mult) return false;
  return true;
}

std::string Multigraph::to_dot() const {
  std::ostringstream out;
  out << (directed_ ? "digraph" : "graph") << " G {\n";
  for (const auto& [v, role] : vertices_) {
    out << "  \"" << v.str() << "\"";
    switch (role.kind) {
      case RoleKind::root:
        out << " [shape=circle,style=filled,fillcolor=black,fontcolor=white]";
        break;
      case RoleKind::terminal:
        out << " [shape=doublecircle,style=filled,fillcolor=gray75]";
        break;
      case RoleKind::group_member:
        out << " [style=filled,fillcolor=lightblue]";
        break;
      case RoleKind::label_slot:
        out << " [shape=box]";
        break;
      case RoleKind::mid_slot:
        out << " [shape=point,width=0.12]";
        break;
      case RoleKind::plain:
        break;
    }
    out << ";\n";
  }
  const char* arrow = directed_ ? " -> " : " -- ";
  for (const auto& [key, mult] : records_) {
    out << "  \"" << key.from.str() << "\"" << arrow << "\"" << key.to.str() << "\" [style="
        << (key.cost.is_zero() ? "dashed" : "solid");
    if (mult > 1) out << ",label=\"x" << mult << "\"";
    if (!key.cost.is_zero() && !(key.cost == Rational(1))) out << ",xlabel=\"" << key.cost.str() << "\"";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace lcnet
