#pragma once

// Brute-force reference implementations. They share no code with the
// library beyond the input types: every value is recomputed from first
// principles with the slowest obvious method.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qconv/graph.hpp"
#include "qconv/rational.hpp"
#include "qconv/setfn.hpp"

namespace oracle {

using Big = boost::multiprecision::cpp_rational;
using BigPoint = std::vector<Big>;

inline Big big(const qconv::Rational& r) { return Big(r.num()) / Big(r.den()); }

inline BigPoint big(const qconv::QuotientPoint& p) {
  BigPoint out;
  for (const auto& c : p.coords) out.push_back(big(c));
  return out;
}

inline std::set<BigPoint> big(const std::vector<qconv::QuotientPoint>& pts) {
  std::set<BigPoint> out;
  for (const auto& p : pts) out.insert(big(p));
  return out;
}

/// Rank over the prime field GF(p) as log_p of the size of the span,
/// enumerating every linear combination of the chosen columns.
inline int gf_prime_rank(int p, int dim, const std::vector<std::vector<int>>& cols, std::uint64_t subset) {
  std::vector<std::vector<int>> chosen;
  for (std::size_t j = 0; j < cols.size(); ++j)
    if ((subset >> j) & 1u) chosen.push_back(cols[j]);
  std::set<std::vector<int>> span;
  std::vector<int> coef(chosen.size(), 0);
  while (true) {
    std::vector<int> v(static_cast<std::size_t>(dim), 0);
    for (std::size_t j = 0; j < chosen.size(); ++j)
      for (int i = 0; i < dim; ++i) v[i] = (v[i] + coef[j] * chosen[j][i]) % p;
    span.insert(v);
    std::size_t pos = 0;
    while (pos < coef.size() && ++coef[pos] == p) coef[pos++] = 0;
    if (pos == coef.size()) break;
  }
  int r = 0;
  for (std::size_t s = span.size(); s > 1; s /= static_cast<std::size_t>(p)) ++r;
  return r;
}

/// Cycle-matroid rank = nodes minus components, components by DFS.
inline int forest_rank(const qconv::SimpleGraph& g, std::uint64_t edges) {
  const int n = g.node_count();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int e = 0; e < g.edge_count(); ++e)
    if ((edges >> e) & 1u) {
      adj[g.edge(e).first].push_back(g.edge(e).second);
      adj[g.edge(e).second].push_back(g.edge(e).first);
    }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  int components = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++components;
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : adj[u])
        if (!seen[v]) seen[v] = true, stack.push_back(v);
    }
  }
  return n - components;
}

/// Homomorphisms F -> G by enumerating all |V(G)|^|V(F)| maps.
inline std::uint64_t hom_count(const qconv::SimpleGraph& f, const qconv::SimpleGraph& g) {
  const int a = f.node_count(), b = g.node_count();
  std::vector<int> map(static_cast<std::size_t>(a), 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (const auto& [u, v] : f.edges()) ok = ok && g.has_edge(map[u], map[v]);
    count += ok ? 1 : 0;
    int pos = 0;
    while (pos < a && ++map[pos] == b) map[pos++] = 0;
    if (pos == a) break;
  }
  return count;
}

inline Big hom_density(const qconv::SimpleGraph& f, const qconv::SimpleGraph& g) {
  Big total = 1;
  for (int i = 0; i < f.node_count(); ++i) total *= g.node_count();
  return Big(hom_count(f, g)) / total;
}

/// Cut distance by all 4^n pairs (S, T); e(S, T) counts ordered adjacent pairs.
inline Big cut_distance(const qconv::SimpleGraph& g, const qconv::SimpleGraph& h) {
  const int n = g.node_count();
  std::int64_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << n); ++t) {
      std::int64_t d = 0;
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (((s >> u) & 1u) && ((t >> v) & 1u)) d += (g.has_edge(u, v) ? 1 : 0) - (h.has_edge(u, v) ? 1 : 0);
      best = std::max(best, d < 0 ? -d : d);
    }
  return Big(best) / Big(n * n);
}

/// Same quantity with T chosen per node: once S is fixed, the best T takes
/// every node whose column sum over S has the sign being maximized.
inline Big cut_distance_by_columns(const qconv::SimpleGraph& g, const qconv::SimpleGraph& h) {
  const int n = g.node_count();
  std::int64_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    std::int64_t pos = 0, neg = 0;
    for (int v = 0; v < n; ++v) {
      std::int64_t col = 0;
      for (int u = 0; u < n; ++u)
        if ((s >> u) & 1u) col += (g.has_edge(u, v) ? 1 : 0) - (h.has_edge(u, v) ? 1 : 0);
      (col > 0 ? pos : neg) += col;
    }
    best = std::max({best, pos, -neg});
  }
  return Big(best) / Big(n * n);
}

inline Big linf(const BigPoint& a, const BigPoint& b) {
  Big m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, Big(boost::multiprecision::abs(a[i] - b[i])));
  return m;
}

inline Big directed(const std::vector<BigPoint>& a, const std::vector<BigPoint>& b) {
  Big sup = 0;
  for (const auto& p : a) {
    Big inf = linf(p, b.front());
    for (const auto& q : b) inf = std::min(inf, linf(p, q));
    sup = std::max(sup, inf);
  }
  return sup;
}

inline Big hausdorff(const std::vector<BigPoint>& a, const std::vector<BigPoint>& b) {
  return std::max(directed(a, b), directed(b, a));
}

enum class Mode { Q, T, TDelta, TNabla };

/// Profile set by enumerating every k-tuple of subsets (2^(kn) tuples) and
/// keeping those the mode allows; values come from `value`.
inline std::set<BigPoint> profile(int n, int k, Mode mode, const std::function<Big(std::uint64_t)>& value) {
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::set<BigPoint> out;
  std::vector<std::uint64_t> tuple(static_cast<std::size_t>(k), 0);
  while (true) {
    std::uint64_t uni = 0;
    bool disjoint = true;
    for (auto a : tuple) {
      disjoint = disjoint && (uni & a) == 0;
      uni |= a;
    }
    const bool covers = uni == full;
    const bool keep = mode == Mode::T || (mode == Mode::TDelta && disjoint) || (mode == Mode::TNabla && covers) ||
                      (mode == Mode::Q && disjoint && covers);
    if (keep) {
      BigPoint p;
      for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << k); ++idx) {
        std::uint64_t x = 0;
        for (int i = 0; i < k; ++i)
          if ((idx >> i) & 1u) x |= tuple[static_cast<std::size_t>(i)];
        p.push_back(value(x));
      }
      out.insert(p);
    }
    int pos = 0;
    while (pos < k && tuple[pos] == full) tuple[pos++] = 0;
    if (pos == k) break;
    ++tuple[pos];
  }
  return out;
}

inline std::vector<BigPoint> as_vector(const std::set<BigPoint>& s) { return {s.begin(), s.end()}; }

}  // namespace oracle
