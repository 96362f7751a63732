#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qconv {

using Edge = std::pair<int, int>;

/// Simple undirected graph on nodes 0..n-1 with at most 64 nodes.
///
/// Edges are stored as (u, v) with u < v, sorted lexicographically; that
/// order is the ground-set order of the cycle matroid and of edge-set
/// setfunctions.
class SimpleGraph {
 public:
  static constexpr int kMaxNodes = 64;

  SimpleGraph() = default;
  /// Throws InvalidArgumentError on loops, repeated edges or out-of-range nodes.
  SimpleGraph(int n, std::vector<Edge> edges);

  static SimpleGraph empty(int n) { return SimpleGraph(n, {}); }
  static SimpleGraph complete(int n);
  static SimpleGraph cycle(int n);
  static SimpleGraph path(int n);
  static SimpleGraph complete_bipartite(int a, int b);

  int node_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[static_cast<std::size_t>(index)]; }
  bool has_edge(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1u; }
  std::uint64_t neighbours(int u) const { return adj_[static_cast<std::size_t>(u)]; }
  int degree(int u) const { return __builtin_popcountll(adj_[static_cast<std::size_t>(u)]); }
  /// Position of edge {u, v} in edges(), or -1.
  int edge_index(int u, int v) const;

  /// Spanning subgraph keeping the edges whose indices are set in `edge_bits`.
  SimpleGraph edge_subgraph(std::uint64_t edge_bits) const;
  /// Relabel node u as perm[u].
  SimpleGraph relabeled(const std::vector<int>& perm) const;

  /// Number of connected components of (V, edges in edge_bits).
  int components(std::uint64_t edge_bits) const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adj_;
};

std::string describe(const SimpleGraph& g);

}  // namespace qconv
