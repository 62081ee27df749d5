#include "lcnet/dks.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "lcnet/errors.hpp"
#include "lcnet/rng.hpp"

namespace lcnet {
namespace {

void validate(const DksInstance& g) {
  if (g.n < 1) fail(Errc::infeasible_parameters, "graph needs at least one vertex");
  if (g.k < 1 || g.k > g.n) fail(Errc::infeasible_parameters, "subgraph size out of range");
  for (const auto& [u, v] : g.edges)
    if (u < 1 || v <= u || v > g.n) fail(Errc::bad_edge, "edge endpoints out of range");
}

void validate_pool(const DksInstance& g, const std::vector<int>& pool, int k) {
  std::set<int> seen;
  for (int v : pool) {
    if (v < 1 || v > g.n) fail(Errc::unknown_vertex, "pool vertex out of range");
    if (!seen.insert(v).second) fail(Errc::precondition, "pool vertex repeated");
  }
  if (k < 1 || k > static_cast<int>(pool.size()))
    fail(Errc::infeasible_parameters, "subset size out of range for the pool");
}

long long count_combinations(long long n, long long k, long long cap) {
  long long result = 1;
  for (long long step = 1; step <= k; ++step) {
    result = result * (n - k + step) / step;  // exact: partial products are binomials
    if (result > cap) return cap + 1;
  }
  return result;
}

// Calls visit(subset) for every k-subset of pool in lexicographic order.
template <typename F>
void for_each_subset(const std::vector<int>& pool, int k, F visit) {
  std::vector<int> ix(k);
  std::iota(ix.begin(), ix.end(), 0);
  const int n = static_cast<int>(pool.size());
  std::vector<int> subset(k);
  while (true) {
    for (int p = 0; p < k; ++p) subset[p] = pool[ix[p]];
    visit(subset);
    int p = k - 1;
    while (p >= 0 && ix[p] == n - k + p) --p;
    if (p < 0) return;
    ++ix[p];
    for (int q = p + 1; q < k; ++q) ix[q] = ix[q - 1] + 1;
  }
}

}  // namespace

bool DksInstance::has_edge(int u, int v) const {
  if (u == v) return false;
  if (u > v) std::swap(u, v);
  return edges.count({u, v}) > 0;
}

int DksInstance::edges_within(const std::vector<int>& s) const {
  int count = 0;
  for (size_t p = 0; p < s.size(); ++p)
    for (size_t q = p + 1; q < s.size(); ++q)
      if (has_edge(s[p], s[q])) ++count;
  return count;
}

std::string serialize(const DksInstance& g) {
  std::ostringstream out;
  out << "dks n=" << g.n << " k=" << g.k << "\n";
  for (const auto& [u, v] : g.edges) out << "E " << u << " " << v << "\n";
  return out.str();
}

DksInstance parse_dks(const std::string& text) {
  DksInstance g;
  std::istringstream in(text);
  std::string line;
  bool header = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "dks") {
      std::string fn, fk;
      ls >> fn >> fk;
      if (fn.rfind("n=", 0) != 0 || fk.rfind("k=", 0) != 0)
        fail(Errc::parse_error, "bad dks header");
      g.n = std::stoi(fn.substr(2));
      g.k = std::stoi(fk.substr(2));
      header = true;
    } else if (tag == "E") {
      if (!header) fail(Errc::parse_error, "dks edge before header");
      int u, v;
      if (!(ls >> u >> v))
        fail(Errc::parse_error, "bad dks edge at line " + std::to_string(line_no));
      if (u == v) fail(Errc::bad_edge, "self loop in dks input");
      if (u > v) std::swap(u, v);
      g.edges.insert({u, v});
    } else {
      fail(Errc::parse_error, "unknown dks tag: " + tag);
    }
  }
  if (!header) fail(Errc::parse_error, "missing dks header");
  validate(g);
  return g;
}

DksReduction dks_to_labelcover(const DksInstance& g, uint64_t seed,
                               const std::vector<int>* separate) {
  validate(g);
  const int k = g.k;
  std::vector<std::vector<int>> parts(k);
  std::vector<int> order(g.n);
  std::iota(order.begin(), order.end(), 1);
  Rng rng(seed);
  rng.shuffle(order);
  std::set<int> planted;
  if (separate) {
    if (static_cast<int>(separate->size()) != k)
      fail(Errc::infeasible_parameters, "need exactly one vertex to plant per part");
    for (size_t m = 0; m < separate->size(); ++m) {
      int v = (*separate)[m];
      if (v < 1 || v > g.n) fail(Errc::unknown_vertex, "planted vertex out of range");
      if (!planted.insert(v).second) fail(Errc::precondition, "planted vertex repeated");
      parts[m].push_back(v);
    }
  }
  int next = 0;
  for (int v : order) {
    if (planted.count(v)) continue;
    parts[next % k].push_back(v);
    ++next;
  }

  DksReduction red;
  red.parts = parts;
  LabelCoverInstance& inst = red.instance;
  inst.left_count = k;
  inst.right_count = k;
  inst.alphabet = (g.n + k - 1) / k;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) {
      std::vector<std::pair<int, int>> pairs;
      if (i == j) {
        for (int a = 1; a <= static_cast<int>(parts[i - 1].size()); ++a) pairs.emplace_back(a, a);
      } else {
        for (int a = 1; a <= static_cast<int>(parts[i - 1].size()); ++a)
          for (int b = 1; b <= static_cast<int>(parts[j - 1].size()); ++b)
            if (g.has_edge(parts[i - 1][a - 1], parts[j - 1][b - 1])) pairs.emplace_back(a, b);
      }
      inst.constraints.emplace(std::make_pair(i, j), Constraint::relation_of(std::move(pairs)));
    }
  return red;
}

Multilabeling clique_labeling(const DksReduction& red, const std::vector<int>& clique) {
  const int k = red.instance.left_count;
  if (static_cast<int>(clique.size()) != k)
    fail(Errc::infeasible_parameters, "clique size disagrees with the part count");
  Multilabeling sigma = Multilabeling::empty(red.instance);
  for (int i = 1; i <= k; ++i) {
    int position = 0;
    const auto& part = red.parts[i - 1];
    for (int v : clique) {
      auto at = std::find(part.begin(), part.end(), v);
      if (at == part.end()) continue;
      if (position != 0) fail(Errc::precondition, "two clique vertices share a part");
      position = static_cast<int>(at - part.begin()) + 1;
    }
    if (position == 0) fail(Errc::precondition, "a part contains no clique vertex");
    sigma.at(Side::left, i).insert(position);
    sigma.at(Side::right, i).insert(position);
  }
  if (!is_feasible(red.instance, sigma))
    fail(Errc::precondition, "planted set is not a clique");
  return sigma;
}

DenseSubgraph brute_densest_k_subgraph(const DksInstance& g, long long budget) {
  validate(g);
  if (count_combinations(g.n, g.k, budget) > budget)
    fail(Errc::search_space_too_large, "too many candidate subgraphs");
  std::vector<int> pool(g.n);
  std::iota(pool.begin(), pool.end(), 1);
  DenseSubgraph best;
  best.edge_count = -1;
  for_each_subset(pool, g.k, [&](const std::vector<int>& s) {
    int count = g.edges_within(s);
    if (count > best.edge_count) best = {s, count};
  });
  return best;
}

std::optional<std::vector<int>> brute_clique_of_size(const DksInstance& g, int size,
                                                     long long budget) {
  validate(g);
  if (size < 1 || size > g.n) return std::nullopt;
  long long nodes = 0;
  std::vector<int> current;
  std::optional<std::vector<int>> found;
  auto extend = [&](auto&& self, int from) -> void {
    if (found) return;
    if (++nodes > budget) fail(Errc::search_space_too_large, "clique search budget exhausted");
    if (static_cast<int>(current.size()) == size) {
      found = current;
      return;
    }
    for (int v = from; v <= g.n && !found; ++v) {
      bool ok = true;
      for (int u : current)
        if (!g.has_edge(u, v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      current.push_back(v);
      self(self, v + 1);
      current.pop_back();
    }
  };
  extend(extend, 1);
  return found;
}

SamplerReport sample_spanned_edges(const DksInstance& g, const std::vector<int>& pool, int k,
                                   uint64_t seed, int trials) {
  validate_pool(g, pool, k);
  if (trials < 2) fail(Errc::infeasible_parameters, "need at least two trials");
  Rng rng(seed);
  std::vector<int> deck = pool;
  std::vector<int> subset(k);
  double sum = 0.0, sum_sq = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    for (int p = 0; p < k; ++p) {
      int other = p + rng.below(static_cast<int>(deck.size()) - p);
      std::swap(deck[p], deck[other]);
      subset[p] = deck[p];
    }
    double hit = g.edges_within(subset);
    sum += hit;
    sum_sq += hit * hit;
  }
  SamplerReport report;
  report.trials = trials;
  report.mean = sum / trials;
  double variance = (sum_sq - sum * sum / trials) / (trials - 1);
  if (variance < 0) variance = 0;
  report.std_error = std::sqrt(variance / trials);
  report.expected = expected_spanned_edges(g, pool, k);
  return report;
}

Rational expected_spanned_edges(const DksInstance& g, const std::vector<int>& pool, int k) {
  validate_pool(g, pool, k);
  const long long p = static_cast<long long>(pool.size());
  if (k < 2 || p < 2) return Rational(0);
  return Rational(static_cast<long long>(k) * (k - 1) * g.edges_within(pool), p * (p - 1));
}

Rational exhaustive_spanned_average(const DksInstance& g, const std::vector<int>& pool, int k,
                                    long long budget) {
  validate_pool(g, pool, k);
  long long total = count_combinations(static_cast<long long>(pool.size()), k, budget);
  if (total > budget) fail(Errc::search_space_too_large, "too many subsets to average");
  long long sum = 0;
  for_each_subset(pool, k, [&](const std::vector<int>& s) { sum += g.edges_within(s); });
  return Rational(sum, total);
}

}  // namespace lcnet
