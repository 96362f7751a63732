#include "qconv/lab/families.hpp"

#include <memory>

#include "qconv/error.hpp"
#include "qconv/matroid.hpp"

namespace qconv::lab {

using nlohmann::ordered_json;

std::vector<std::string> family_names() {
  return {"complete_cycle", "gf_space", "gf_matrix", "alternating_trees", "blowup", "tau", "cutcap"};
}

SimpleGraph alternating_trees_graph(int n) {
  if (n < 1) throw InvalidArgumentError("alternating_trees members start at n = 1");
  if (n % 2 == 1 || n == 2) return SimpleGraph::path(n);
  // path 0-1-...-(n-1) plus {0-2, 0-3, ..., 0-(n-1), 1-(n-1)}
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  for (int j = 2; j < n; ++j) edges.emplace_back(0, j);
  edges.emplace_back(1, n - 1);
  return SimpleGraph(n, std::move(edges));
}

std::pair<std::uint64_t, std::uint64_t> spanning_tree_pair(const SimpleGraph& g) {
  const int n = g.node_count();
  std::uint64_t path = 0;
  for (int i = 0; i + 1 < n; ++i) path |= std::uint64_t{1} << g.edge_index(i, i + 1);
  return {path, SubsetMask::full(g.edge_count()).bits & ~path};
}

namespace {

ordered_json edges_json(const SimpleGraph& g, std::uint64_t bits) {
  ordered_json arr = ordered_json::array();
  for (int e = 0; e < g.edge_count(); ++e)
    if ((bits >> e) & 1u) arr.push_back({g.edge(e).first, g.edge(e).second});
  return arr;
}

SimpleGraph require_base(const SequenceSpec& spec, int n) {
  if (!spec.base) throw InvalidArgumentError("family '" + spec.family + "' needs a base graph (--base)");
  return blow_up(*spec.base, n).graph;
}

}  // namespace

FamilyMember make_member(const SequenceSpec& spec, int n) {
  if (n < 1) throw InvalidArgumentError("sequence indices must be positive");
  ordered_json info;
  info["family"] = spec.family;
  info["n"] = n;

  if (spec.family == "complete_cycle") {
    const SimpleGraph g = SimpleGraph::complete(n + 1);
    if (g.edge_count() > 64) throw GroundTooLargeError(g.edge_count(), 64, "complete_cycle ground set");
    auto m = std::make_shared<GraphicMatroid>(g);
    info["description"] = m->describe() + ", normalized by total rank";
    return {normalized_rank_oracle(m), info};
  }
  if (spec.family == "gf_space") {
    auto m = std::make_shared<LinearMatroid>(LinearMatroid::full_space(spec.q, n));
    info["q"] = spec.q;
    info["description"] = m->describe() + " (all vectors, zero vector a loop), normalized by total rank";
    return {normalized_rank_oracle(m), info};
  }
  if (spec.family == "alternating_trees") {
    const SimpleGraph g = alternating_trees_graph(n);
    auto m = std::make_shared<GraphicMatroid>(g);
    info["description"] = m->describe() + ", normalized by node count";
    info["edges"] = edges_json(g, SubsetMask::full(g.edge_count()).bits);
    if (n % 2 == 0 && n >= 4) {
      const auto [t1, t2] = spanning_tree_pair(g);
      const bool spanning1 = __builtin_popcountll(t1) == n - 1 && g.components(t1) == 1;
      const bool spanning2 = __builtin_popcountll(t2) == n - 1 && g.components(t2) == 1;
      info["certificate"] = {{"tree_a", edges_json(g, t1)},
                             {"tree_b", edges_json(g, t2)},
                             {"edge_disjoint", (t1 & t2) == 0},
                             {"both_spanning", spanning1 && spanning2}};
    } else {
      info["certificate"] = {{"tree", true},
                             {"edge_count", g.edge_count()},
                             {"connected", g.components(SubsetMask::full(g.edge_count()).bits) == 1}};
    }
    return {rank_oracle(m, n), info};
  }
  if (spec.family == "blowup") {
    const SimpleGraph g = require_base(spec, n);
    info["base"] = spec.base_name;
    info["normalization"] = std::string(normalization_name(spec.norm));
    info["description"] = "cut capacity of " + spec.base_name + "(" + std::to_string(n) + ")";
    return {cut_capacity_oracle(g, spec.norm), info};
  }
  if (spec.family == "tau") {
    const SimpleGraph g = spec.base ? require_base(spec, n) : SimpleGraph::complete(n);
    const TauFunction tau = tau_oracle(spec.pattern, g);
    info["pattern"] = spec.pattern_name;
    info["graph"] = spec.base ? spec.base_name + "(" + std::to_string(n) + ")" : "K" + std::to_string(n);
    info["description"] = "tau minus its value at the empty set";
    info["tau_at_empty"] = tau.at_empty.to_string();
    return {tau.grounded, info};
  }
  if (spec.family == "gf_matrix") {
    if (n < 1 || n > static_cast<int>(spec.matrices.size())) {
      throw InvalidArgumentError("gf_matrix index " + std::to_string(n) + " outside the " +
                                 std::to_string(spec.matrices.size()) + " supplied matrices");
    }
    const auto& m = spec.matrices[static_cast<std::size_t>(n - 1)];
    info["description"] = m->describe() + ", normalized by total rank";
    info["rank"] = m->total_rank();
    return {normalized_rank_oracle(m), info};
  }
  if (spec.family == "cutcap") {
    if (n > static_cast<int>(spec.graphs.size())) {
      throw InvalidArgumentError("cutcap index " + std::to_string(n) + " past the " +
                                 std::to_string(spec.graphs.size()) + " supplied graphs");
    }
    const SimpleGraph& g = spec.graphs[static_cast<std::size_t>(n - 1)];
    info["normalization"] = std::string(normalization_name(spec.norm));
    info["description"] = "cut capacity of supplied " + describe(g);
    return {cut_capacity_oracle(g, spec.norm), info};
  }
  std::string names;
  for (const auto& f : family_names()) names += (names.empty() ? "" : ", ") + f;
  throw InvalidArgumentError("unknown family '" + spec.family + "' (available: " + names + ")");
}

}  // namespace qconv::lab
