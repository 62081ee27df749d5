#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lcnet/dks.hpp"
#include "lcnet/dst_reductions.hpp"
#include "lcnet/errors.hpp"
#include "lcnet/harness.hpp"
#include "lcnet/undirected_reductions.hpp"

namespace {

using namespace lcnet;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) fail(Errc::parse_error, "cannot write " + out_path);
  out << text;
}

NetworkInstance reduce_instance(const LabelCoverInstance& inst, const std::string& to, int arity,
                                bool pad_layers, int boost) {
  switch (parse_reduction_kind(to)) {
    case ReductionKind::dst_terminals:
      return build_dst_terminals(inst);
    case ReductionKind::dst_connectivity:
      return build_dst_connectivity(inst, {arity, pad_layers, boost});
    case ReductionKind::kst:
      return build_kst(inst);
    case ReductionKind::kgst:
      return build_kgst(inst);
  }
  fail(Errc::parse_error, "unknown reduction: " + to);
}

std::string outcome_text(const VerificationOutcome& outcome) {
  std::ostringstream out;
  for (const auto& entry : outcome.entries)
    out << entry.name << " required=" << entry.required << " flow=" << entry.flow << "\n";
  out << (outcome.feasible ? "feasible" : "infeasible") << "\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"label cover hardness constructions: generators, reductions, maps, verifiers"};
  app.require_subcommand(1);

  // gen-lc
  uint64_t seed = 1;
  int left = 2, right = 2, degree = 2, alphabet = 2;
  bool planted = false;
  std::string out_path, planted_out;
  auto* gen = app.add_subcommand("gen-lc", "generate a seeded random label cover instance");
  gen->add_option("--seed", seed);
  gen->add_option("--left", left);
  gen->add_option("--right", right);
  gen->add_option("--degree", degree);
  gen->add_option("--alphabet", alphabet);
  gen->add_flag("--planted", planted, "force a hidden satisfying labeling");
  gen->add_option("-o,--out", out_path);
  gen->add_option("--planted-out", planted_out, "write the hidden labeling here");

  // partition
  std::string part_in, part_kind = "matching";
  auto* part = app.add_subcommand("partition", "partition constraint edges");
  part->add_option("-i,--in", part_in)->required();
  part->add_option("--kind", part_kind)->check(CLI::IsMember({"matching", "induced"}));
  part->add_option("-o,--out", out_path);

  // reduce
  std::string reduce_in, reduce_to;
  int arity = 2, boost = 0;
  bool pad_layers = false, uniform = false;
  auto* red = app.add_subcommand("reduce", "build a network instance from a label cover file");
  red->add_option("-i,--in", reduce_in)->required();
  red->add_option("--to", reduce_to)->required()->check(
      CLI::IsMember({"dst-t", "dst-k", "kst", "kgst"}));
  red->add_option("--d", arity, "arborescence arity (dst-k)");
  red->add_flag("--pad-layers", pad_layers, "layer the dst-k output at worst-case height");
  red->add_option("--boost-k", boost, "extra root filler on top of k (dst-k)");
  red->add_flag("--uniform", uniform, "raise every group demand to k (kgst)");
  red->add_option("-o,--out", out_path);

  // map
  std::string map_net, map_in, map_dir;
  auto* map_cmd = app.add_subcommand("map", "transport a solution across a reduction");
  map_cmd->add_option("--net", map_net)->required();
  map_cmd->add_option("-i,--in", map_in)->required();
  map_cmd->add_option("--dir", map_dir)->required()->check(CLI::IsMember({"fwd", "bwd"}));
  map_cmd->add_option("-o,--out", out_path);

  // verify
  std::string verify_net, verify_cand;
  auto* ver = app.add_subcommand("verify", "check connectivity requirements");
  ver->add_option("--net", verify_net)->required();
  ver->add_option("--candidate", verify_cand, "candidate sub-network (default: the instance)");

  // solve
  std::string solve_net, solve_lc;
  int budget = 24;
  bool brute = false;
  auto* sol = app.add_subcommand("solve", "exhaustive optimum");
  sol->add_flag("--brute", brute, "accepted for compatibility; the solver is always exhaustive");
  sol->add_option("--net", solve_net);
  sol->add_option("--lc", solve_lc);
  sol->add_option("--budget", budget, "search budget in bits");
  sol->add_option("-o,--out", out_path);

  // roundtrip
  std::string rt_in, rt_to;
  auto* rt = app.add_subcommand("roundtrip", "optimum transport experiment on one instance");
  rt->add_option("-i,--in", rt_in)->required();
  rt->add_option("--to", rt_to)->required()->check(
      CLI::IsMember({"dst-t", "dst-k", "kst", "kgst"}));
  rt->add_option("--d", arity);
  rt->add_flag("--pad-layers", pad_layers);
  rt->add_option("--boost-k", boost);
  rt->add_option("--budget", budget);

  // dks-reduce
  std::string dks_in, parts_out;
  bool force_separating = false;
  auto* dks = app.add_subcommand("dks-reduce", "densest-k-subgraph to label cover");
  dks->add_option("-i,--in", dks_in)->required();
  dks->add_option("--seed", seed);
  dks->add_flag("--force-separating", force_separating,
                "plant a k-clique's vertices into pairwise distinct parts");
  dks->add_option("-o,--out", out_path);
  dks->add_option("--parts-out", parts_out, "write the vertex partition here");

  // export-dot
  std::string dot_in;
  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of a network file");
  dot->add_option("-i,--in", dot_in)->required();
  dot->add_option("-o,--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) {
      auto drawn = random_instance(seed, left, right, degree, alphabet, planted);
      emit(out_path, serialize(drawn.instance));
      if (!planted_out.empty()) emit(planted_out, serialize(drawn.planted));
    } else if (part->parsed()) {
      auto inst = parse_labelcover(slurp(part_in));
      auto partition = part_kind == "matching" ? partition_matchings(inst)
                                               : partition_induced_matchings(inst);
      emit(out_path, serialize(partition));
    } else if (red->parsed()) {
      auto inst = parse_labelcover(slurp(reduce_in));
      auto net = reduce_instance(inst, reduce_to, arity, pad_layers, boost);
      if (uniform && net.grouped()) net = with_uniform_groups(net);
      emit(out_path, serialize(net));
    } else if (map_cmd->parsed()) {
      auto net = parse_network(slurp(map_net));
      if (map_dir == "fwd") {
        auto sigma = parse_multilabeling(slurp(map_in));
        NetworkInstance image = net;
        image.graph = labeling_to_subgraph(net, sigma);
        emit(out_path, serialize(image));
      } else {
        auto candidate = parse_network(slurp(map_in));
        emit(out_path, serialize(subgraph_to_labeling(net, candidate.graph)));
      }
    } else if (ver->parsed()) {
      auto net = parse_network(slurp(verify_net));
      Multigraph candidate =
          verify_cand.empty() ? net.graph : parse_network(slurp(verify_cand)).graph;
      auto outcome = verify_network(net, candidate);
      std::cout << outcome_text(outcome);
      return outcome.feasible ? 0 : 1;
    } else if (sol->parsed()) {
      if (solve_net.empty() == solve_lc.empty())
        fail(Errc::parse_error, "solve needs exactly one of --net or --lc");
      if (!solve_lc.empty()) {
        auto inst = parse_labelcover(slurp(solve_lc));
        auto best = brute_min_multilabeling(inst, budget);
        if (!best) {
          std::cout << "infeasible\n";
          return 1;
        }
        std::cout << "cost=" << best->second << "\n";
        emit(out_path, serialize(best->first));
      } else {
        auto net = parse_network(slurp(solve_net));
        auto best = brute_min_network(net, budget);
        if (!best) {
          std::cout << "infeasible\n";
          return 1;
        }
        std::cout << "cost=" << best->cost.str() << "\n";
        NetworkInstance image = net;
        image.graph = best->subgraph;
        emit(out_path, serialize(image));
      }
    } else if (rt->parsed()) {
      auto inst = parse_labelcover(slurp(rt_in));
      auto net = reduce_instance(inst, rt_to, arity, pad_layers, boost);
      std::cout << roundtrip_experiment(net, budget).text();
    } else if (dks->parsed()) {
      auto g = parse_dks(slurp(dks_in));
      std::optional<std::vector<int>> clique;
      if (force_separating) {
        clique = brute_clique_of_size(g, g.k);
        if (!clique) {
          std::cerr << "no clique of size " << g.k << " to separate\n";
          return 1;
        }
      }
      auto red2 = dks_to_labelcover(g, seed, clique ? &*clique : nullptr);
      emit(out_path, serialize(red2.instance));
      if (!parts_out.empty()) {
        std::ostringstream parts;
        for (size_t m = 0; m < red2.parts.size(); ++m) {
          parts << "P " << (m + 1);
          for (int v : red2.parts[m]) parts << ' ' << v;
          parts << "\n";
        }
        emit(parts_out, parts.str());
      }
    } else if (dot->parsed()) {
      emit(out_path, parse_network(slurp(dot_in)).graph.to_dot());
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::parse_error ? 2 : 1;
  }
  return 0;
}
