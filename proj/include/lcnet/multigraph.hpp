#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "lcnet/rational.hpp"
#include "lcnet/vertex.hpp"

namespace lcnet {

// Records with equal endpoints and equal cost are one entry with summed
// multiplicity; equal endpoints with different costs stay separate records.
struct EdgeKey {
  VertexId from;
  VertexId to;
  Rational cost;

  auto operator<=>(const EdgeKey&) const = default;
};

struct EdgeRec {
  VertexId from;
  VertexId to;
  Rational cost;
  int mult = 1;
};

class Multigraph {
 public:
  explicit Multigraph(bool directed = true) : directed_(directed) {}

  bool directed() const { return directed_; }

  void add_vertex(const VertexId& v, VertexRole role = {});
  void set_role(const VertexId& v, VertexRole role);
  bool has_vertex(const VertexId& v) const { return vertices_.count(v) > 0; }
  const VertexRole& role(const VertexId& v) const;

  // Self loops are rejected; endpoints must exist. For undirected graphs the
  // stored key has from <= to.
  void add_edge(VertexId u, VertexId v, Rational cost, int mult = 1);
  void remove_record(const EdgeKey& key);
  int multiplicity(const EdgeKey& key) const;
  // Total multiplicity between two endpoints across all cost classes.
  int multiplicity_between(const VertexId& u, const VertexId& v) const;

  const std::map<VertexId, VertexRole>& vertices() const { return vertices_; }
  const std::map<EdgeKey, int>& records() const { return records_; }
  std::vector<EdgeRec> edges() const;

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int record_count() const { return static_cast<int>(records_.size()); }
  long long multiplicity_total() const;
  Rational total_cost() const;

  int in_degree(const VertexId& v) const;
  int out_degree(const VertexId& v) const;
  int degree(const VertexId& v) const;

  // True when every record of sub is present here with at least its multiplicity
  // and every vertex of sub exists here.
  bool contains(const Multigraph& sub) const;

  std::string to_dot() const;

 private:
  EdgeKey normalized(VertexId u, VertexId v, Rational cost) const;

  bool directed_;
  std::map<VertexId, VertexRole> vertices_;
  std::map<EdgeKey, int> records_;
};

}  // namespace lcnet
