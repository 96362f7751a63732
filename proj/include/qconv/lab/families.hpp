#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qconv/graph.hpp"
#include "qconv/graphlim.hpp"
#include "qconv/matroid.hpp"
#include "qconv/setfn.hpp"

namespace qconv::lab {

/// Named setfunction sequences indexed by n.
///
///   complete_cycle     normalized cycle-matroid rank of K_{n+1}
///   gf_space           normalized rank of the full linear space GF(q)^n
///   gf_matrix          normalized rank of the n-th supplied GF(q) matrix (1-based)
///   alternating_trees  cycle-matroid rank / |V| of G_n: a path for odd n (and
///                      n = 1, 2), two edge-disjoint spanning trees for even n >= 4
///   blowup             cut capacity of base(n)
///   tau                grounded tau_{F, K_n}, or tau_{F, base(n)} when a base is set
///   cutcap             cut capacity of the n-th graph of a user-supplied list (1-based)
struct SequenceSpec {
  std::string family = "gf_space";
  int q = 2;
  std::optional<SimpleGraph> base;
  std::string base_name;
  SimpleGraph pattern = SimpleGraph::complete(2);
  std::string pattern_name = "K2";
  std::vector<SimpleGraph> graphs;
  std::vector<std::shared_ptr<const LinearMatroid>> matrices;
  CutNormalization norm = CutNormalization::Edges;
};

std::vector<std::string> family_names();

struct FamilyMember {
  SetFunctionOracle oracle;
  nlohmann::ordered_json info;  ///< description plus any construction certificate
};

FamilyMember make_member(const SequenceSpec& spec, int n);

/// The graph of the alternating_trees family at n.
SimpleGraph alternating_trees_graph(int n);
/// The two edge-disjoint spanning trees of an even member (n >= 4), as edge-index masks.
std::pair<std::uint64_t, std::uint64_t> spanning_tree_pair(const SimpleGraph& g);

}  // namespace qconv::lab
