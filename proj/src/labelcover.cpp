#include "lcnet/labelcover.hpp"

#include <algorithm>
#include <sstream>

#include "lcnet/errors.hpp"
#include "lcnet/rng.hpp"

namespace lcnet {

bool Constraint::satisfied(int a, int b) const {
  if (projection) {
    if (a < 1 || a > static_cast<int>(image.size())) return false;
    return image[a - 1] == b;
  }
  return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(a, b));
}

Constraint Constraint::projection_of(std::vector<int> image) {
  Constraint c;
  c.projection = true;
  c.image = std::move(image);
  return c;
}

Constraint Constraint::relation_of(std::vector<std::pair<int, int>> pairs) {
  Constraint c;
  c.projection = false;
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  c.pairs = std::move(pairs);
  return c;
}

int LabelCoverInstance::degree(Side side, int vertex) const {
  int total = 0;
  for (const auto& [edge, c] : constraints)
    if ((side == Side::left ? edge.first : edge.second) == vertex) ++total;
  return total;
}

int LabelCoverInstance::max_degree() const {
  std::vector<int> left_deg(left_count + 1, 0), right_deg(right_count + 1, 0);
  int best = 0;
  for (const auto& [edge, c] : constraints) {
    best = std::max(best, ++left_deg[edge.first]);
    best = std::max(best, ++right_deg[edge.second]);
  }
  return best;
}

bool LabelCoverInstance::all_projections() const {
  for (const auto& [edge, c] : constraints)
    if (!c.projection) return false;
  return true;
}

Multilabeling Multilabeling::empty(const LabelCoverInstance& inst) {
  Multilabeling sigma;
  sigma.left.resize(inst.left_count);
  sigma.right.resize(inst.right_count);
  return sigma;
}

std::set<int>& Multilabeling::at(Side side, int vertex) {
  auto& pool = side == Side::left ? left : right;
  if (vertex < 1 || vertex > static_cast<int>(pool.size()))
    fail(Errc::unknown_vertex, "multilabeling vertex out of range");
  return pool[vertex - 1];
}

const std::set<int>& Multilabeling::at(Side side, int vertex) const {
  return const_cast<Multilabeling*>(this)->at(side, vertex);
}

int Multilabeling::cost() const {
  int total = 0;
  for (const auto& s : left) total += static_cast<int>(s.size());
  for (const auto& s : right) total += static_cast<int>(s.size());
  return total;
}

bool covers(const LabelCoverInstance& inst, const Multilabeling& sigma, std::pair<int, int> edge) {
  auto it = inst.constraints.find(edge);
  if (it == inst.constraints.end())
    fail(Errc::unknown_edge,
         "no edge (" + std::to_string(edge.first) + "," + std::to_string(edge.second) + ")");
  const auto& lu = sigma.at(Side::left, edge.first);
  const auto& rv = sigma.at(Side::right, edge.second);
  const Constraint& c = it->second;
  if (c.projection) {
    for (int a : lu)
      if (a >= 1 && a <= static_cast<int>(c.image.size()) && rv.count(c.image[a - 1])) return true;
    return false;
  }
  for (int a : lu)
    for (int b : rv)
      if (c.satisfied(a, b)) return true;
  return false;
}

bool is_feasible(const LabelCoverInstance& inst, const Multilabeling& sigma) {
  for (const auto& [edge, c] : inst.constraints)
    if (!covers(inst, sigma, edge)) return false;
  return true;
}

std::optional<std::pair<Multilabeling, int>> brute_min_multilabeling(
    const LabelCoverInstance& inst, int budget_bits) {
  const int verts = inst.left_count + inst.right_count;
  const int bits = verts * inst.alphabet;
  if (bits > budget_bits)
    fail(Errc::search_space_too_large,
         "labeling search over " + std::to_string(bits) + " slots exceeds budget " +
             std::to_string(budget_bits));
  if (bits > 62) fail(Errc::search_space_too_large, "labeling search beyond 62 slots");

  for (const auto& [edge, c] : inst.constraints)
    if (c.empty_relation()) return std::nullopt;

  // Slot p encodes (vertex-position p / g, label p % g + 1) with all left
  // vertices first. Lexicographic order of characteristic vectors equals
  // numeric order when slot 0 is the most significant bit.
  const int g = inst.alphabet;
  auto bit_of_slot = [&](int slot) { return uint64_t(1) << (bits - 1 - slot); };
  struct EdgeNeed {
    std::vector<std::pair<uint64_t, uint64_t>> options;  // (left bit, right bit)
  };
  std::vector<EdgeNeed> needs;
  for (const auto& [edge, c] : inst.constraints) {
    EdgeNeed need;
    for (int a = 1; a <= g; ++a)
      for (int b = 1; b <= g; ++b)
        if (c.satisfied(a, b))
          need.options.emplace_back(bit_of_slot((edge.first - 1) * g + (a - 1)),
                                    bit_of_slot((inst.left_count + edge.second - 1) * g + (b - 1)));
    needs.push_back(std::move(need));
  }

  auto feasible_mask = [&](uint64_t mask) {
    for (const auto& need : needs) {
      bool hit = false;
      for (const auto& [lbit, rbit] : need.options)
        if ((mask & lbit) && (mask & rbit)) {
          hit = true;
          break;
        }
      if (!hit) return false;
    }
    return true;
  };
  auto decode = [&](uint64_t mask) {
    Multilabeling sigma = Multilabeling::empty(inst);
    for (int slot = 0; slot < bits; ++slot) {
      if (mask & bit_of_slot(slot)) {
        int vertex_pos = slot / g, label = slot % g + 1;
        if (vertex_pos < inst.left_count)
          sigma.left[vertex_pos].insert(label);
        else
          sigma.right[vertex_pos - inst.left_count].insert(label);
      }
    }
    return sigma;
  };

  const uint64_t limit = bits >= 63 ? 0 : (uint64_t(1) << bits);
  for (int cost = 0; cost <= bits; ++cost) {
    if (cost == 0) {
      if (feasible_mask(0)) return std::make_pair(decode(0), 0);
      continue;
    }
    uint64_t mask = (uint64_t(1) << cost) - 1;
    while (mask < limit) {
      if (feasible_mask(mask)) return std::make_pair(decode(mask), cost);
      uint64_t low = mask & (~mask + 1);
      uint64_t ripple = mask + low;
      if (ripple >= limit || ripple == 0) break;
      mask = ripple | (((mask ^ ripple) / low) >> 2);
    }
  }
  fail(Errc::assertion_failure, "full labeling rejected although no relation is empty");
}

RandomLabelCover random_instance(uint64_t seed, int left_count, int right_count, int degree,
                                 int alphabet, bool planted) {
  if (left_count < 1 || right_count < 1 || alphabet < 1 || degree < 0)
    fail(Errc::infeasible_parameters, "nonpositive instance dimensions");
  if (degree > left_count || degree > right_count)
    fail(Errc::infeasible_parameters, "degree exceeds a side, no simple regular-ish graph");

  Rng rng(seed);
  std::set<std::pair<int, int>> edges;
  const bool left_small = left_count <= right_count;
  const int small = left_small ? left_count : right_count;
  const int large = left_small ? right_count : left_count;
  for (int round = 0; round < degree; ++round) {
    std::vector<int> perm(large);
    for (int p = 0; p < large; ++p) perm[p] = p + 1;
    std::vector<std::pair<int, int>> batch;
    for (int attempt = 0; attempt < 64; ++attempt) {
      rng.shuffle(perm);
      batch.clear();
      bool clean = true;
      for (int p = 0; p < small; ++p) {
        auto edge = left_small ? std::make_pair(p + 1, perm[p]) : std::make_pair(perm[p], p + 1);
        if (edges.count(edge)) clean = false;
        batch.push_back(edge);
      }
      if (clean) break;
    }
    for (const auto& edge : batch) edges.insert(edge);
  }

  RandomLabelCover out;
  out.instance.left_count = left_count;
  out.instance.right_count = right_count;
  out.instance.alphabet = alphabet;
  out.planted = Multilabeling::empty(out.instance);

  std::vector<int> hidden_left(left_count + 1), hidden_right(right_count + 1);
  for (int i = 1; i <= left_count; ++i) {
    hidden_left[i] = rng.below(alphabet) + 1;
    if (planted) out.planted.left[i - 1].insert(hidden_left[i]);
  }
  for (int j = 1; j <= right_count; ++j) {
    hidden_right[j] = rng.below(alphabet) + 1;
    if (planted) out.planted.right[j - 1].insert(hidden_right[j]);
  }

  for (const auto& edge : edges) {
    std::vector<int> image(alphabet);
    for (int a = 0; a < alphabet; ++a) image[a] = rng.below(alphabet) + 1;
    if (planted) image[hidden_left[edge.first] - 1] = hidden_right[edge.second];
    out.instance.constraints.emplace(edge, Constraint::projection_of(std::move(image)));
  }
  return out;
}

LabelCoverInstance lc1() {
  LabelCoverInstance inst;
  inst.left_count = 1;
  inst.right_count = 1;
  inst.alphabet = 2;
  inst.constraints.emplace(std::make_pair(1, 1), Constraint::projection_of({1, 2}));
  return inst;
}

LabelCoverInstance lc2() {
  LabelCoverInstance inst;
  inst.left_count = 2;
  inst.right_count = 1;
  inst.alphabet = 2;
  inst.constraints.emplace(std::make_pair(1, 1), Constraint::projection_of({1, 2}));
  inst.constraints.emplace(std::make_pair(2, 1), Constraint::projection_of({2, 1}));
  return inst;
}

std::string serialize(const LabelCoverInstance& inst) {
  std::ostringstream out;
  out << "labelcover g=" << inst.alphabet << "\n";
  for (int i = 1; i <= inst.left_count; ++i) out << "U " << i << "\n";
  for (int j = 1; j <= inst.right_count; ++j) out << "V " << j << "\n";
  for (const auto& [edge, c] : inst.constraints) {
    out << "E " << edge.first << " " << edge.second << " ";
    if (c.projection) {
      out << "proj ";
      for (size_t a = 0; a < c.image.size(); ++a) {
        if (a) out << ',';
        out << (a + 1) << "->" << c.image[a];
      }
    } else {
      out << "rel";
      if (!c.pairs.empty()) out << ' ';
      for (size_t p = 0; p < c.pairs.size(); ++p) {
        if (p) out << ',';
        out << '(' << c.pairs[p].first << ',' << c.pairs[p].second << ')';
      }
    }
    out << "\n";
  }
  return out.str();
}

LabelCoverInstance parse_labelcover(const std::string& text) {
  LabelCoverInstance inst;
  inst.alphabet = 0;
  std::istringstream in(text);
  std::string line;
  std::set<int> lefts, rights;
  bool header = false;
  int line_no = 0;
  auto bad = [&](const std::string& msg) {
    fail(Errc::parse_error, "labelcover line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "labelcover") {
      std::string field;
      ls >> field;
      if (field.rfind("g=", 0) != 0) bad("expected g=<alphabet>");
      inst.alphabet = std::stoi(field.substr(2));
      if (inst.alphabet < 1) bad("alphabet must be positive");
      header = true;
    } else if (tag == "U" || tag == "V") {
      if (!header) bad("vertex before header");
      int idx;
      if (!(ls >> idx) || idx < 1) bad("bad vertex index");
      (tag == "U" ? lefts : rights).insert(idx);
    } else if (tag == "E") {
      if (!header) bad("edge before header");
      int i, j;
      std::string kind;
      if (!(ls >> i >> j >> kind)) bad("bad edge line");
      std::string body;
      ls >> body;
      if (kind == "proj") {
        std::vector<int> image(inst.alphabet, 0);
        std::istringstream items(body);
        std::string item;
        int seen = 0;
        while (std::getline(items, item, ',')) {
          auto arrow = item.find("->");
          if (arrow == std::string::npos) bad("bad projection entry: " + item);
          int a = std::stoi(item.substr(0, arrow));
          int b = std::stoi(item.substr(arrow + 2));
          if (a < 1 || a > inst.alphabet || b < 1 || b > inst.alphabet)
            bad("projection label out of range");
          image[a - 1] = b;
          ++seen;
        }
        if (seen != inst.alphabet) bad("projection must list every label once");
        inst.constraints.emplace(std::make_pair(i, j), Constraint::projection_of(std::move(image)));
      } else if (kind == "rel") {
        std::vector<std::pair<int, int>> pairs;
        std::istringstream items(body);
        std::string item;
        while (std::getline(items, item, ')')) {
          auto open = item.find('(');
          if (open == std::string::npos) {
            if (item.empty() || item == ",") continue;
            bad("bad relation entry: " + item);
          }
          std::string inner = item.substr(open + 1);
          auto comma = inner.find(',');
          if (comma == std::string::npos) bad("bad relation pair: " + item);
          int a = std::stoi(inner.substr(0, comma));
          int b = std::stoi(inner.substr(comma + 1));
          if (a < 1 || a > inst.alphabet || b < 1 || b > inst.alphabet)
            bad("relation label out of range");
          pairs.emplace_back(a, b);
        }
        inst.constraints.emplace(std::make_pair(i, j), Constraint::relation_of(std::move(pairs)));
      } else {
        bad("unknown constraint kind: " + kind);
      }
    } else {
      bad("unknown tag: " + tag);
    }
  }
  if (!header) fail(Errc::parse_error, "missing labelcover header");
  inst.left_count = static_cast<int>(lefts.size());
  inst.right_count = static_cast<int>(rights.size());
  for (int i = 1; i <= inst.left_count; ++i)
    if (!lefts.count(i)) fail(Errc::parse_error, "left vertices must be 1..n");
  for (int j = 1; j <= inst.right_count; ++j)
    if (!rights.count(j)) fail(Errc::parse_error, "right vertices must be 1..m");
  for (const auto& [edge, c] : inst.constraints)
    if (edge.first < 1 || edge.first > inst.left_count || edge.second < 1 ||
        edge.second > inst.right_count)
      fail(Errc::parse_error, "edge endpoint out of range");
  return inst;
}

std::string serialize(const Multilabeling& sigma) {
  std::ostringstream out;
  out << "labeling nu=" << sigma.left.size() << " nv=" << sigma.right.size() << "\n";
  for (size_t i = 0; i < sigma.left.size(); ++i) {
    out << "U " << (i + 1);
    for (int a : sigma.left[i]) out << ' ' << a;
    out << "\n";
  }
  for (size_t j = 0; j < sigma.right.size(); ++j) {
    out << "V " << (j + 1);
    for (int b : sigma.right[j]) out << ' ' << b;
    out << "\n";
  }
  return out.str();
}

Multilabeling parse_multilabeling(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Multilabeling sigma;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "labeling") {
      std::string fu, fv;
      ls >> fu >> fv;
      if (fu.rfind("nu=", 0) != 0 || fv.rfind("nv=", 0) != 0)
        fail(Errc::parse_error, "bad labeling header");
      sigma.left.resize(std::stoi(fu.substr(3)));
      sigma.right.resize(std::stoi(fv.substr(3)));
      header = true;
    } else if (tag == "U" || tag == "V") {
      if (!header) fail(Errc::parse_error, "labeling line before header");
      int idx;
      if (!(ls >> idx)) fail(Errc::parse_error, "bad labeling line: " + line);
      auto& pool = tag == "U" ? sigma.left : sigma.right;
      if (idx < 1 || idx > static_cast<int>(pool.size()))
        fail(Errc::parse_error, "labeling vertex out of range");
      int label;
      while (ls >> label) pool[idx - 1].insert(label);
    } else {
      fail(Errc::parse_error, "unknown labeling tag: " + tag);
    }
  }
  if (!header) fail(Errc::parse_error, "missing labeling header");
  return sigma;
}

}  // namespace lcnet
