#include "lcnet/harness.hpp"

#include <climits>
#include <sstream>

#include "lcnet/errors.hpp"

namespace lcnet {
namespace {

bool k_feasible(const NetworkInstance& net, const Multigraph& candidate) {
  return verify_network(net, candidate).feasible;
}

}  // namespace

std::optional<NetworkOptimum> brute_min_network(const NetworkInstance& net, int budget_bits,
                                                std::optional<int> upper_bound) {
  std::vector<EdgeKey> keys;
  for (const auto& [key, mult] : net.graph.records()) {
    if (key.cost.is_zero()) continue;
    if (key.cost != Rational(1) || mult != 1)
      fail(Errc::precondition, "searchable records must be unit cost with multiplicity one");
    keys.push_back(key);
  }
  if (static_cast<int>(keys.size()) > budget_bits)
    fail(Errc::search_space_too_large,
         "network search over " + std::to_string(keys.size()) + " records exceeds budget " +
             std::to_string(budget_bits));

  // work holds the optimistic graph: the floor, every undecided record, every
  // included record. Each node of the search is entered only when work is
  // feasible, so reaching depth == keys.size() always records a solution.
  Multigraph work = net.graph;
  if (!k_feasible(net, work)) return std::nullopt;

  int best = upper_bound ? *upper_bound + 1 : INT_MAX;
  std::optional<std::vector<char>> best_mask;
  std::vector<char> included(keys.size(), 0);

  auto search = [&](auto&& self, size_t depth, int chosen) -> void {
    if (chosen >= best) return;
    if (depth == keys.size()) {
      best = chosen;
      best_mask = included;
      return;
    }
    const EdgeKey& key = keys[depth];
    work.remove_record(key);
    if (k_feasible(net, work)) self(self, depth + 1, chosen);
    work.add_edge(key.from, key.to, key.cost, 1);
    included[depth] = 1;
    self(self, depth + 1, chosen + 1);
    included[depth] = 0;
  };
  search(search, 0, 0);

  if (!best_mask) return std::nullopt;
  NetworkOptimum out;
  out.subgraph = zero_cost_subgraph(net);
  for (size_t p = 0; p < keys.size(); ++p)
    if ((*best_mask)[p]) {
      out.subgraph.add_edge(keys[p].from, keys[p].to, keys[p].cost, 1);
      out.chosen.push_back(keys[p]);
    }
  out.cost = Rational(best);
  return out;
}

std::string ExperimentReport::text() const {
  std::ostringstream out;
  for (const auto& [key, value] : lines) out << key << "=" << value << "\n";
  return out.str();
}

ExperimentReport roundtrip_experiment(const NetworkInstance& net, int budget_bits) {
  auto leg = [&](const std::string& name, bool holds, const std::string& detail) {
    if (!holds) fail(Errc::assertion_failure, name + " leg broke: " + detail);
  };

  auto lc = brute_min_multilabeling(net.cert.source, budget_bits);
  leg("forward", lc.has_value(), "source instance has an empty relation");
  const auto& [sigma, lc_opt] = *lc;

  Multigraph forward = labeling_to_subgraph(net, sigma);
  leg("forward", k_feasible(net, forward), "optimal labeling maps to an infeasible sub-network");
  Rational forward_cost = forward.total_cost();
  leg("forward", forward_cost == Rational(lc_opt), "mapped cost differs from the labeling cost");

  auto opt = brute_min_network(net, budget_bits, lc_opt);
  leg("backward", opt.has_value(), "no sub-network at or below the labeling optimum");
  leg("backward", opt->cost == Rational(lc_opt),
      "sub-network strictly cheaper than the labeling optimum");

  Multilabeling pulled = subgraph_to_labeling(net, opt->subgraph);
  leg("backward", is_feasible(net.cert.source, pulled),
      "optimal sub-network reads back an infeasible labeling");
  leg("backward", pulled.cost() == lc_opt, "read-back labeling cost differs");

  ExperimentReport report;
  report.put("reduction", reduction_token(net.cert.kind));
  report.put("k", net.k);
  report.put("vertices", net.graph.vertex_count());
  report.put("records", net.graph.record_count());
  report.put("multiplicity", net.graph.multiplicity_total());
  report.put("lc_opt", lc_opt);
  report.put("net_opt", opt->cost.str());
  report.put("forward_cost", forward_cost.str());
  report.put("agree", "1");
  return report;
}

}  // namespace lcnet
