#include "qconv/graph.hpp"

#include <algorithm>
#include <numeric>

#include "qconv/error.hpp"

namespace qconv {

SimpleGraph::SimpleGraph(int n, std::vector<Edge> edges) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
  if (n < 0 || n > kMaxNodes) {
    throw InvalidArgumentError("graph node count must lie in [0, 64], got " + std::to_string(n));
  }
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InvalidArgumentError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                 ") out of range for " + std::to_string(n) + " nodes");
    }
    if (u == v) throw InvalidArgumentError("loop at node " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw InvalidArgumentError("repeated edge in simple graph");
  }
  for (const auto& [u, v] : edges) {
    adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  }
  edges_ = std::move(edges);
}

SimpleGraph SimpleGraph::complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return SimpleGraph(n, std::move(e));
}

SimpleGraph SimpleGraph::cycle(int n) {
  std::vector<Edge> e;
  if (n >= 3) {
    for (int u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
  } else if (n == 2) {
    e.emplace_back(0, 1);
  }
  return SimpleGraph(n, std::move(e));
}

SimpleGraph SimpleGraph::path(int n) {
  std::vector<Edge> e;
  for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return SimpleGraph(n, std::move(e));
}

SimpleGraph SimpleGraph::complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return SimpleGraph(a + b, std::move(e));
}

int SimpleGraph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return -1;
  return static_cast<int>(it - edges_.begin());
}

SimpleGraph SimpleGraph::edge_subgraph(std::uint64_t edge_bits) const {
  std::vector<Edge> kept;
  for (std::uint64_t b = edge_bits; b; b &= b - 1) {
    kept.push_back(edges_[static_cast<std::size_t>(__builtin_ctzll(b))]);
  }
  return SimpleGraph(n_, std::move(kept));
}

SimpleGraph SimpleGraph::relabeled(const std::vector<int>& perm) const {
  std::vector<Edge> e;
  e.reserve(edges_.size());
  for (const auto& [u, v] : edges_) {
    e.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  }
  return SimpleGraph(n_, std::move(e));
}

int SimpleGraph::components(std::uint64_t edge_bits) const {
  std::vector<int> parent(static_cast<std::size_t>(n_));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  };
  int count = n_;
  for (std::uint64_t b = edge_bits; b; b &= b - 1) {
    const auto& [u, v] = edges_[static_cast<std::size_t>(__builtin_ctzll(b))];
    int ru = find(u), rv = find(v);
    if (ru != rv) {
      parent[static_cast<std::size_t>(ru)] = rv;
      --count;
    }
  }
  return count;
}

std::string describe(const SimpleGraph& g) {
  return "graph(n=" + std::to_string(g.node_count()) + ", m=" + std::to_string(g.edge_count()) + ")";
}

}  // namespace qconv
