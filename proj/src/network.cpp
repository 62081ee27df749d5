#include "lcnet/network.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "lcnet/errors.hpp"
#include "lcnet/flow.hpp"

namespace lcnet {

const char* reduction_token(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::dst_terminals:
      return "dst-t";
    case ReductionKind::dst_connectivity:
      return "dst-k";
    case ReductionKind::kst:
      return "kst";
    case ReductionKind::kgst:
      return "kgst";
  }
  fail(Errc::parse_error, "unknown reduction kind");
}

ReductionKind parse_reduction_kind(const std::string& token) {
  if (token == "dst-t") return ReductionKind::dst_terminals;
  if (token == "dst-k") return ReductionKind::dst_connectivity;
  if (token == "kst") return ReductionKind::kst;
  if (token == "kgst") return ReductionKind::kgst;
  fail(Errc::parse_error, "unknown reduction kind: " + token);
}

VerificationOutcome verify_network(const NetworkInstance& net, const Multigraph& candidate) {
  VerificationOutcome out;
  if (net.grouped()) {
    for (size_t m = 0; m < net.groups.members.size(); ++m) {
      int required = net.groups.uniform_applied ? net.k : net.groups.requirements[m];
      int flow = max_group_connectivity(candidate, net.root, net.groups.members[m], required);
      out.entries.push_back({"T" + std::to_string(m + 1), required, flow});
      if (flow < required) out.feasible = false;
    }
    return out;
  }
  const bool vertex_mode = net.cert.kind == ReductionKind::kst;
  for (const auto& t : net.terminals) {
    FlowWitness w = vertex_mode ? max_vertex_disjoint_paths(candidate, net.root, t)
                                : max_edge_disjoint_paths(candidate, net.root, t);
    out.entries.push_back({t.str(), net.k, w.value});
    if (w.value < net.k) out.feasible = false;
  }
  return out;
}

Multigraph zero_cost_subgraph(const NetworkInstance& net) {
  Multigraph h(net.graph.directed());
  for (const auto& [v, role] : net.graph.vertices()) h.add_vertex(v, role);
  for (const auto& [key, mult] : net.graph.records())
    if (key.cost.is_zero()) h.add_edge(key.from, key.to, key.cost, mult);
  return h;
}

Multigraph labeling_to_subgraph(const NetworkInstance& net, const Multilabeling& sigma) {
  if (!is_feasible(net.cert.source, sigma))
    fail(Errc::infeasible_labeling, "labeling does not cover every constraint");
  Multigraph h = zero_cost_subgraph(net);
  for (const auto& [key, ref] : net.cert.one_cost)
    if (sigma.at(ref.side, ref.vertex).count(ref.label))
      h.add_edge(key.from, key.to, key.cost, net.graph.multiplicity(key));
  return h;
}

Multilabeling subgraph_to_labeling(const NetworkInstance& net, const Multigraph& candidate) {
  for (const auto& [key, mult] : net.graph.records())
    if (key.cost.is_zero() && candidate.multiplicity(key) < mult)
      fail(Errc::missing_zero_cost,
           "candidate lacks zero-cost edge " + key.from.str() + " -> " + key.to.str());
  Multilabeling sigma = Multilabeling::empty(net.cert.source);
  for (const auto& [key, ref] : net.cert.one_cost)
    if (candidate.multiplicity(key) >= 1) sigma.at(ref.side, ref.vertex).insert(ref.label);
  return sigma;
}

std::optional<int> strict_layer_height(const Multigraph& g, const VertexId& root) {
  if (!g.has_vertex(root)) fail(Errc::unknown_vertex, "layer check root");
  std::map<VertexId, int> level;
  level[root] = 0;
  std::deque<VertexId> queue{root};
  std::map<VertexId, std::vector<VertexId>> out;
  for (const auto& [key, mult] : g.records()) out[key.from].push_back(key.to);
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (const auto& v : out[u])
      if (!level.count(v)) {
        level[v] = level[u] + 1;
        queue.push_back(v);
      }
  }
  int height = 0;
  for (const auto& [key, mult] : g.records()) {
    auto lu = level.find(key.from);
    if (lu == level.end()) continue;  // unreachable fringe is not layered against anything
    if (level[key.to] != lu->second + 1) return std::nullopt;
    height = std::max(height, level[key.to]);
  }
  return height;
}

int graph_height(const Multigraph& g, const VertexId& root) {
  if (!g.has_vertex(root)) fail(Errc::unknown_vertex, "height root");
  std::map<VertexId, std::vector<VertexId>> out;
  for (const auto& [key, mult] : g.records()) {
    out[key.from].push_back(key.to);
    if (!g.directed()) out[key.to].push_back(key.from);
  }
  if (!g.directed()) {
    std::map<VertexId, int> dist;
    dist[root] = 0;
    std::deque<VertexId> queue{root};
    int best = 0;
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      for (const auto& v : out[u])
        if (!dist.count(v)) {
          dist[v] = dist[u] + 1;
          best = std::max(best, dist[v]);
          queue.push_back(v);
        }
    }
    return best;
  }
  // Longest path from root; the directed constructions are DAGs.
  std::map<VertexId, int> memo;
  std::map<VertexId, int> state;  // 1 = on stack, 2 = done
  struct Frame {
    VertexId v;
    size_t next = 0;
  };
  std::vector<Frame> stack{{root}};
  state[root] = 1;
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto& succ = out[f.v];
    if (f.next < succ.size()) {
      VertexId w = succ[f.next++];
      if (state[w] == 1) fail(Errc::precondition, "height of a cyclic directed graph");
      if (state[w] != 2) {
        state[w] = 1;
        stack.push_back({w});
      }
    } else {
      int best = 0;
      for (const auto& w : succ) best = std::max(best, memo[w] + 1);
      memo[f.v] = best;
      state[f.v] = 2;
      stack.pop_back();
    }
  }
  return memo[root];
}

std::string serialize(const NetworkInstance& net) {
  std::ostringstream out;
  out << "network " << (net.graph.directed() ? "directed" : "undirected") << " k=" << net.k
      << "\n";
  for (const auto& [v, role] : net.graph.vertices())
    out << "V " << v.str() << " " << role.str() << "\n";
  for (const auto& [key, mult] : net.graph.records())
    out << "A " << key.from.str() << " " << key.to.str() << " cost=" << key.cost.str()
        << " mult=" << mult << "\n";
  for (const auto& t : net.terminals) out << "T " << t.str() << "\n";
  for (size_t m = 0; m < net.groups.members.size(); ++m) {
    out << "G " << (m + 1) << " k=" << net.groups.requirements[m];
    for (const auto& v : net.groups.members[m]) out << ' ' << v.str();
    out << "\n";
  }
  const auto& cert = net.cert;
  out << "cert params kind=" << reduction_token(cert.kind) << " delta=" << cert.max_degree
      << " classes=" << cert.num_classes << " d=" << cert.arity << " h=" << cert.height
      << " pad=" << (cert.layered ? 1 : 0) << " boost=" << cert.boost << " partition="
      << (cert.partition.kind == PartitionKind::matching ? "matching" : "induced")
      << " uniform=" << (net.groups.uniform_applied ? 1 : 0) << "\n";
  for (size_t m = 0; m < cert.partition.classes.size(); ++m)
    for (const auto& [i, j] : cert.partition.classes[m])
      out << "cert class " << (m + 1) << " " << i << " " << j << "\n";
  for (const auto& [key, ref] : cert.one_cost)
    out << "cert onecost " << key.from.str() << " " << key.to.str() << " " << side_token(ref.side)
        << " " << ref.vertex << " " << ref.label << "\n";
  std::istringstream lc(serialize(cert.source));
  std::string line;
  while (std::getline(lc, line)) out << "cert lc " << line << "\n";
  return out.str();
}

NetworkInstance parse_network(const std::string& text) {
  NetworkInstance net;
  std::istringstream in(text);
  std::string line;
  bool header = false;
  bool directed = true;
  int header_k = 1;
  std::vector<std::string> lc_lines;
  std::map<int, std::vector<std::pair<int, int>>> classes;
  std::string partition_token = "matching";
  std::vector<std::pair<EdgeKey, LabelRef>> one_cost;
  int line_no = 0;
  auto bad = [&](const std::string& msg) {
    fail(Errc::parse_error, "network line " + std::to_string(line_no) + ": " + msg);
  };
  auto field = [&](const std::string& token, const char* name) {
    std::string prefix = std::string(name) + "=";
    if (token.rfind(prefix, 0) != 0) bad("expected " + prefix + "<value>, got " + token);
    return token.substr(prefix.size());
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "network") {
      std::string dir, kfield;
      ls >> dir >> kfield;
      if (dir != "directed" && dir != "undirected") bad("bad direction: " + dir);
      directed = dir == "directed";
      header_k = std::stoi(field(kfield, "k"));
      net.graph = Multigraph(directed);
      header = true;
    } else if (tag == "V") {
      if (!header) bad("vertex before header");
      std::string id;
      ls >> id;
      std::string role_text;
      std::getline(ls, role_text);
      if (!role_text.empty() && role_text.front() == ' ') role_text.erase(0, 1);
      VertexId v = VertexId::parse(id);
      VertexRole role = VertexRole::parse(role_text);
      net.graph.add_vertex(v, role);
      if (role.kind == RoleKind::root) net.root = v;
    } else if (tag == "A") {
      std::string from, to, cost, mult;
      if (!(ls >> from >> to >> cost >> mult)) bad("bad arc line");
      net.graph.add_edge(VertexId::parse(from), VertexId::parse(to),
                         Rational::parse(field(cost, "cost")), std::stoi(field(mult, "mult")));
    } else if (tag == "T") {
      std::string id;
      ls >> id;
      net.terminals.push_back(VertexId::parse(id));
    } else if (tag == "G") {
      int m;
      std::string kfield;
      if (!(ls >> m >> kfield)) bad("bad group line");
      if (m != static_cast<int>(net.groups.members.size()) + 1) bad("group indices must be 1,2,...");
      net.groups.requirements.push_back(std::stoi(field(kfield, "k")));
      std::vector<VertexId> ids;
      std::string id;
      while (ls >> id) ids.push_back(VertexId::parse(id));
      net.groups.members.push_back(std::move(ids));
    } else if (tag == "cert") {
      std::string what;
      ls >> what;
      if (what == "params") {
        std::string token;
        while (ls >> token) {
          auto eq = token.find('=');
          if (eq == std::string::npos) bad("bad cert param: " + token);
          std::string key = token.substr(0, eq), value = token.substr(eq + 1);
          if (key == "kind")
            net.cert.kind = parse_reduction_kind(value);
          else if (key == "delta")
            net.cert.max_degree = std::stoi(value);
          else if (key == "classes")
            net.cert.num_classes = std::stoi(value);
          else if (key == "d")
            net.cert.arity = std::stoi(value);
          else if (key == "h")
            net.cert.height = std::stoi(value);
          else if (key == "pad")
            net.cert.layered = value == "1";
          else if (key == "boost")
            net.cert.boost = std::stoi(value);
          else if (key == "partition")
            partition_token = value;
          else if (key == "uniform")
            net.groups.uniform_applied = value == "1";
          else
            bad("unknown cert param: " + key);
        }
      } else if (what == "class") {
        int m, i, j;
        if (!(ls >> m >> i >> j)) bad("bad cert class line");
        classes[m].emplace_back(i, j);
      } else if (what == "onecost") {
        std::string from, to, side;
        int vertex, label;
        if (!(ls >> from >> to >> side >> vertex >> label)) bad("bad cert onecost line");
        EdgeKey key{VertexId::parse(from), VertexId::parse(to), Rational(1)};
        one_cost.push_back({key, LabelRef{side == "U" ? Side::left : Side::right, vertex, label}});
      } else if (what == "lc") {
        std::string rest;
        std::getline(ls, rest);
        if (!rest.empty() && rest.front() == ' ') rest.erase(0, 1);
        lc_lines.push_back(rest);
      } else {
        bad("unknown cert line: " + what);
      }
    } else {
      bad("unknown tag: " + tag);
    }
  }
  if (!header) fail(Errc::parse_error, "missing network header");
  net.k = header_k;
  net.cert.partition.kind =
      partition_token == "matching" ? PartitionKind::matching : PartitionKind::induced_matching;
  for (auto& [m, edges] : classes) {
    if (m != static_cast<int>(net.cert.partition.classes.size()) + 1)
      fail(Errc::parse_error, "cert class indices must be 1,2,...");
    std::sort(edges.begin(), edges.end());
    net.cert.partition.classes.push_back(edges);
  }
  for (const auto& [key, ref] : one_cost) net.cert.one_cost.emplace(key, ref);
  std::ostringstream lc_text;
  for (const auto& l : lc_lines) lc_text << l << "\n";
  net.cert.source = parse_labelcover(lc_text.str());
  return net;
}

}  // namespace lcnet
