#include "qconv/graphlim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "qconv/error.hpp"
#include "qconv/matroid.hpp"
#include "qconv/metric.hpp"
#include "qconv/random.hpp"

namespace qconv {

BlowUp blow_up(const SimpleGraph& g, int t) {
  if (t < 1) throw InvalidArgumentError("blow-up factor must be at least 1");
  const long nodes = static_cast<long>(g.node_count()) * t;
  if (nodes > SimpleGraph::kMaxNodes) {
    throw GroundTooLargeError(static_cast<int>(nodes), SimpleGraph::kMaxNodes, "blow-up");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(g.edge_count() * t * t));
  for (const auto& [u, v] : g.edges())
    for (int a = 0; a < t; ++a)
      for (int b = 0; b < t; ++b) edges.emplace_back(u * t + a, v * t + b);
  BlowUp out{SimpleGraph(static_cast<int>(nodes), std::move(edges)), t, {}};
  out.class_of.resize(static_cast<std::size_t>(nodes));
  for (int v = 0; v < nodes; ++v) out.class_of[static_cast<std::size_t>(v)] = v / t;
  return out;
}

std::int64_t cut_discrepancy(const SimpleGraph& g, const SimpleGraph& h, kernels::Backend backend,
                             const Limits& limits) {
  const int n = g.node_count();
  if (h.node_count() != n) {
    throw DimensionMismatchError("cut distance needs a common node set, got " + std::to_string(n) +
                                 " and " + std::to_string(h.node_count()) + " nodes");
  }
  if (n > limits.cut_dist_cap) throw GroundTooLargeError(n, limits.cut_dist_cap, "exact cut distance");
  const std::size_t stride = kernels::cut_stride(n);
  std::vector<std::int32_t> d(static_cast<std::size_t>(n) * stride, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      d[static_cast<std::size_t>(u) * stride + static_cast<std::size_t>(v)] =
          static_cast<std::int32_t>(g.has_edge(u, v)) - static_cast<std::int32_t>(h.has_edge(u, v));
  return kernels::cut_norm_max(d, n, backend);
}

Rational cut_dist_labeled(const SimpleGraph& g, const SimpleGraph& h, kernels::Backend backend,
                          const Limits& limits) {
  const std::int64_t n = g.node_count();
  if (n == 0) return Rational();
  return Rational(cut_discrepancy(g, h, backend, limits), n * n);
}

UnlabeledCutBound cut_dist_unlabeled_upper(const SimpleGraph& g, const SimpleGraph& h, int t_max,
                                           int trials, std::uint64_t seed, const Limits& limits) {
  if (t_max < 1) throw InvalidArgumentError("t_max must be at least 1");
  const int m = g.node_count();
  const int n = h.node_count();
  if (m == 0 || n == 0) throw InvalidArgumentError("unlabeled cut distance needs nonempty graphs");
  Rng rng(seed);
  UnlabeledCutBound best;
  bool have = false;
  // Budget on labeled evaluations spent in local search per t.
  constexpr std::uint64_t kSearchBudget = 4000;

  for (int t = 1; t <= t_max; ++t) {
    const long common = std::lcm(static_cast<long>(m), static_cast<long>(n));
    const long nodes = common * t;
    if (nodes > limits.unlabeled_node_cap) {
      if (t == 1) {
        throw GroundTooLargeError(static_cast<int>(nodes), limits.unlabeled_node_cap,
                                  "aligned blow-ups for the unlabeled cut distance");
      }
      break;
    }
    const int N = static_cast<int>(nodes);
    const SimpleGraph gb = blow_up(g, static_cast<int>(common / m) * t).graph;
    const SimpleGraph hb = blow_up(h, static_cast<int>(common / n) * t).graph;
    auto eval = [&](const std::vector<int>& perm) {
      ++best.evaluations;
      return cut_discrepancy(gb, hb.relabeled(perm), kernels::active_backend(), limits);
    };
    auto consider = [&](std::int64_t raw, const std::vector<int>& perm, bool exhaustive) {
      const Rational value(raw, static_cast<std::int64_t>(N) * N);
      if (!have || value < best.upper_bound) {
        best.upper_bound = value;
        best.t = t;
        best.nodes = N;
        best.bijection = perm;
        best.exhaustive = exhaustive;
        have = true;
      }
    };

    std::vector<int> perm(static_cast<std::size_t>(N));
    std::iota(perm.begin(), perm.end(), 0);
    if (N <= 8) {
      std::int64_t lowest = -1;
      std::vector<int> arg = perm;
      do {
        const std::int64_t v = eval(perm);
        if (lowest < 0 || v < lowest) {
          lowest = v;
          arg = perm;
        }
      } while (lowest != 0 && std::next_permutation(perm.begin(), perm.end()));
      consider(lowest, arg, true);
    } else {
      std::uint64_t spent = 0;
      for (int trial = 0; trial <= trials; ++trial) {
        if (trial > 0) rng.shuffle(perm);
        std::int64_t current = eval(perm);
        bool improved = N <= 12;
        while (improved && current > 0 && spent < kSearchBudget) {
          improved = false;
          for (int a = 0; a < N && !improved && spent < kSearchBudget; ++a)
            for (int b = a + 1; b < N && !improved && spent < kSearchBudget; ++b) {
              std::swap(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
              const std::int64_t v = eval(perm);
              ++spent;
              if (v < current) {
                current = v;
                improved = true;
              } else {
                std::swap(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
              }
            }
        }
        consider(current, perm, false);
        if (current == 0) break;
      }
    }
    if (best.upper_bound.is_zero()) break;
  }
  return best;
}

std::string_view normalization_name(CutNormalization n) {
  switch (n) {
    case CutNormalization::Edges: return "edges";
    case CutNormalization::TwiceEdges: return "twice-edges";
    case CutNormalization::NodesSquared: return "nodes-squared";
  }
  return "?";
}

CutNormalization parse_normalization(std::string_view text) {
  if (text == "edges") return CutNormalization::Edges;
  if (text == "twice-edges") return CutNormalization::TwiceEdges;
  if (text == "nodes-squared") return CutNormalization::NodesSquared;
  throw InvalidArgumentError("unknown normalization '" + std::string(text) +
                             "' (expected edges, twice-edges or nodes-squared)");
}

SetFunctionOracle cut_capacity_oracle(const SimpleGraph& g, CutNormalization norm) {
  const std::int64_t n = g.node_count();
  const std::int64_t m = g.edge_count();
  std::int64_t scale = 0;
  switch (norm) {
    case CutNormalization::Edges: scale = m; break;
    case CutNormalization::TwiceEdges: scale = 2 * m; break;
    case CutNormalization::NodesSquared: scale = n * n; break;
  }
  if (scale == 0) {
    throw DegenerateNormalizationError("cut capacity of " + describe(g) + " under " +
                                       std::string(normalization_name(norm)) +
                                       " normalization divides by zero");
  }
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) adj[static_cast<std::size_t>(u)] = g.neighbours(u);
  return SetFunctionOracle(
      GroundSet(static_cast<int>(n)), scale,
      [adj](std::uint64_t x) {
        std::int64_t crossing = 0;
        for (std::uint64_t b = x; b; b &= b - 1) crossing += __builtin_popcountll(adj[static_cast<std::size_t>(__builtin_ctzll(b))] & ~x);
        return crossing;
      },
      "cut capacity [" + std::string(normalization_name(norm)) + "] of " + describe(g));
}

// ---------------------------------------------------------------------------
// Step graphons

StepGraphon::StepGraphon(std::vector<Rational> breakpoints, std::vector<std::vector<Rational>> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  const std::size_t r = breakpoints_.size();
  if (r == 0) throw InvalidArgumentError("step graphon needs at least one step");
  Rational prev;
  for (const auto& b : breakpoints_) {
    if (b <= prev) throw InvalidArgumentError("step graphon breakpoints must increase strictly from 0");
    prev = b;
  }
  if (breakpoints_.back() != Rational(1)) throw InvalidArgumentError("last breakpoint must be 1");
  if (values_.size() != r) throw InvalidArgumentError("step graphon needs an r x r value matrix");
  for (const auto& row : values_)
    if (row.size() != r) throw InvalidArgumentError("step graphon needs an r x r value matrix");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (values_[i][j] != values_[j][i]) throw InvalidArgumentError("step graphon values must be symmetric");
      if (values_[i][j] < Rational(0) || values_[i][j] > Rational(1)) {
        throw InvalidArgumentError("step graphon values must lie in [0, 1]");
      }
    }
}

StepGraphon StepGraphon::from_graph(const SimpleGraph& g) {
  const int n = g.node_count();
  if (n == 0) throw InvalidArgumentError("graphon of the empty graph is undefined");
  std::vector<Rational> b;
  for (int i = 1; i <= n; ++i) b.emplace_back(i, n);
  std::vector<std::vector<Rational>> v(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (const auto& [x, y] : g.edges()) {
    v[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = 1;
    v[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = 1;
  }
  return StepGraphon(std::move(b), std::move(v));
}

StepGraphon StepGraphon::constant(const Rational& p) { return StepGraphon({Rational(1)}, {{p}}); }

Rational StepGraphon::width(int i) const {
  return i == 0 ? breakpoints_[0] : breakpoints_[static_cast<std::size_t>(i)] - breakpoints_[static_cast<std::size_t>(i - 1)];
}

StepGraphon StepGraphon::refine(const std::vector<Rational>& extra) const {
  std::vector<Rational> b = breakpoints_;
  for (const auto& e : extra) {
    if (e <= Rational(0) || e > Rational(1)) throw InvalidArgumentError("refinement point outside (0, 1]");
    b.push_back(e);
  }
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  std::vector<std::size_t> owner(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    owner[i] = static_cast<std::size_t>(std::lower_bound(breakpoints_.begin(), breakpoints_.end(), b[i]) - breakpoints_.begin());
  }
  std::vector<std::vector<Rational>> v(b.size(), std::vector<Rational>(b.size()));
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) v[i][j] = values_[owner[i]][owner[j]];
  return StepGraphon(std::move(b), std::move(v));
}

namespace {

std::vector<std::vector<Rational>> step_masses(const StepGraphon& w) {
  const int r = w.steps();
  std::vector<std::vector<Rational>> mass(static_cast<std::size_t>(r), std::vector<Rational>(static_cast<std::size_t>(r)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) mass[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = w.width(i) * w.width(j) * w.value(i, j);
  return mass;
}

void check_step_mask(const StepGraphon& w, std::uint64_t steps) {
  if (w.steps() < 64 && (steps >> w.steps()) != 0) throw InvalidArgumentError("step set names a step past the last one");
}

}  // namespace

Rational graphon_cut_capacity(const StepGraphon& w, std::uint64_t steps) {
  check_step_mask(w, steps);
  const auto mass = step_masses(w);
  Rational total, cut;
  for (int i = 0; i < w.steps(); ++i)
    for (int j = 0; j < w.steps(); ++j) {
      const Rational& m = mass[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      total += m;
      if (((steps >> i) & 1u) && !((steps >> j) & 1u)) cut += m;
    }
  if (total.is_zero()) throw DegenerateNormalizationError("graphon has zero total weight");
  return cut / total;
}

SetFunctionOracle graphon_cut_capacity_oracle(const StepGraphon& w) {
  const int r = w.steps();
  if (r > 64) throw GroundTooLargeError(r, 64, "graphon cut capacity oracle");
  const auto mass = step_masses(w);
  std::int64_t scale = 1;
  Rational total;
  for (const auto& row : mass)
    for (const auto& m : row) {
      scale = lcm_checked(scale, m.den());
      total += m;
    }
  if (total.is_zero()) throw DegenerateNormalizationError("graphon has zero total weight");
  auto table = std::make_shared<std::vector<std::int64_t>>();
  for (const auto& row : mass)
    for (const auto& m : row) table->push_back((m * Rational(scale)).num());
  const std::int64_t norm = (total * Rational(scale)).num();
  return SetFunctionOracle(
      GroundSet(r), norm,
      [table, r](std::uint64_t x) {
        std::int64_t s = 0;
        for (int i = 0; i < r; ++i) {
          if (!((x >> i) & 1u)) continue;
          for (int j = 0; j < r; ++j)
            if (!((x >> j) & 1u)) s += (*table)[static_cast<std::size_t>(i * r + j)];
        }
        return s;
      },
      "graphon cut capacity (" + std::to_string(r) + " steps)");
}

// ---------------------------------------------------------------------------
// Homomorphisms

namespace {

void check_hom_caps(int pattern, int target, const Limits& limits) {
  if (pattern > limits.hom_pattern_cap) {
    throw GroundTooLargeError(pattern, limits.hom_pattern_cap, "homomorphism pattern");
  }
  const long double maps = std::pow(static_cast<long double>(target), pattern);
  if (maps > static_cast<long double>(limits.hom_map_cap)) {
    throw CapError("homomorphism enumeration needs " + format_count(maps) +
                   " maps, above hom_map_cap = " + std::to_string(limits.hom_map_cap));
  }
}

std::uint64_t count_from(const SimpleGraph& f, const SimpleGraph& g, std::vector<int>& image, int v) {
  const int k = f.node_count();
  std::uint64_t cand = SubsetMask::full(g.node_count()).bits;
  for (int w = 0; w < v; ++w)
    if (f.has_edge(v, w)) cand &= g.neighbours(image[static_cast<std::size_t>(w)]);
  if (v == k - 1) return static_cast<std::uint64_t>(__builtin_popcountll(cand));
  std::uint64_t total = 0;
  for (; cand; cand &= cand - 1) {
    image[static_cast<std::size_t>(v)] = __builtin_ctzll(cand);
    total += count_from(f, g, image, v + 1);
  }
  return total;
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

std::uint64_t hom_count(const SimpleGraph& f, const SimpleGraph& g, const Limits& limits) {
  check_hom_caps(f.node_count(), g.node_count(), limits);
  if (f.node_count() == 0) return 1;
  std::vector<int> image(static_cast<std::size_t>(f.node_count()), 0);
  return count_from(f, g, image, 0);
}

Rational hom_density(const SimpleGraph& f, const SimpleGraph& g, const Limits& limits) {
  if (g.node_count() == 0 && f.node_count() > 0) throw InvalidArgumentError("hom density into the empty graph");
  const std::uint64_t hom = hom_count(f, g, limits);
  return Rational(static_cast<std::int64_t>(hom), ipow(g.node_count(), f.node_count()));
}

Rational hom_density_step(const SimpleGraph& f, const StepGraphon& w, const Limits& limits) {
  using boost::multiprecision::cpp_rational;
  const int k = f.node_count();
  const int r = w.steps();
  check_hom_caps(k, r, limits);
  auto big = [](const Rational& x) { return cpp_rational(x.num(), x.den()); };
  std::vector<cpp_rational> width(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) width[static_cast<std::size_t>(i)] = big(w.width(i));

  cpp_rational sum = 0;
  std::vector<int> phi(static_cast<std::size_t>(k), 0);
  const std::int64_t maps = ipow(r, k);
  for (std::int64_t code = 0; code < maps; ++code) {
    std::int64_t c = code;
    for (int v = 0; v < k; ++v, c /= r) phi[static_cast<std::size_t>(v)] = static_cast<int>(c % r);
    cpp_rational term = 1;
    for (const auto& [a, b] : f.edges()) {
      const Rational& val = w.value(phi[static_cast<std::size_t>(a)], phi[static_cast<std::size_t>(b)]);
      if (val.is_zero()) {
        term = 0;
        break;
      }
      term *= big(val);
    }
    if (term == 0) continue;
    for (int v = 0; v < k; ++v) term *= width[static_cast<std::size_t>(phi[static_cast<std::size_t>(v)])];
    sum += term;
  }
  const auto num = boost::multiprecision::numerator(sum);
  const auto den = boost::multiprecision::denominator(sum);
  if (num > INT64_MAX || den > INT64_MAX) throw RationalOverflowError();
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

TauFunction tau_oracle(const SimpleGraph& f, const SimpleGraph& g, const Limits& limits) {
  const int m = g.edge_count();
  if (m > 64) throw GroundTooLargeError(m, 64, "tau oracle edge set");
  check_hom_caps(f.node_count(), g.node_count(), limits);
  const std::int64_t maps = ipow(g.node_count(), f.node_count());
  const std::uint64_t full = SubsetMask::full(m).bits;
  const auto base = static_cast<std::int64_t>(hom_count(f, g, limits));
  // tau(X) - tau(empty) = (hom(F, G) - hom(F, G_{E \ X})) / maps
  SetFunctionOracle grounded(
      GroundSet(m), maps,
      [f, g, full, base, limits](std::uint64_t x) {
        return base - static_cast<std::int64_t>(hom_count(f, g.edge_subgraph(full & ~x), limits));
      },
      "tau(F=" + describe(f) + ") of " + describe(g) + ", grounded");
  return TauFunction{std::move(grounded), Rational(maps - base, maps)};
}

// ---------------------------------------------------------------------------
// Weighted quotients

namespace {

void check_partition(int n, const std::vector<int>& class_of, int k) {
  if (k < 1) throw InvalidArgumentError("partition needs at least one class");
  if (static_cast<int>(class_of.size()) != n) {
    throw InvalidArgumentError("partition lists " + std::to_string(class_of.size()) + " nodes, graph has " +
                               std::to_string(n));
  }
  for (int c : class_of)
    if (c < 0 || c >= k) throw InvalidArgumentError("partition class " + std::to_string(c) + " outside [0, k)");
}

}  // namespace

std::vector<SubsetMask> partition_masks(int n, const std::vector<int>& class_of, int k) {
  check_partition(n, class_of, k);
  std::vector<SubsetMask> masks(static_cast<std::size_t>(k), SubsetMask::empty(n));
  for (int v = 0; v < n; ++v) {
    auto& m = masks[static_cast<std::size_t>(class_of[static_cast<std::size_t>(v)])];
    m = m.with(v);
  }
  return masks;
}

WeightedQuotient weighted_quotient(const SimpleGraph& g, const std::vector<int>& class_of, int k) {
  const int n = g.node_count();
  check_partition(n, class_of, k);
  if (n == 0) throw InvalidArgumentError("weighted quotient of the empty graph");
  const auto K = static_cast<std::size_t>(k);
  std::vector<std::int64_t> size(K, 0);
  for (int c : class_of) ++size[static_cast<std::size_t>(c)];
  std::vector<std::vector<std::int64_t>> e(K, std::vector<std::int64_t>(K, 0));
  for (const auto& [u, v] : g.edges()) {
    const auto a = static_cast<std::size_t>(class_of[static_cast<std::size_t>(u)]);
    const auto b = static_cast<std::size_t>(class_of[static_cast<std::size_t>(v)]);
    ++e[a][b];
    ++e[b][a];
  }
  WeightedQuotient wq;
  wq.k = k;
  const std::int64_t nn = static_cast<std::int64_t>(n) * n;
  wq.beta.assign(K, std::vector<Rational>(K));
  wq.gamma.assign(K, std::vector<Rational>(K));
  for (std::size_t i = 0; i < K; ++i) {
    wq.alpha.emplace_back(size[i], n);
    for (std::size_t j = 0; j < K; ++j) {
      if (size[i] > 0 && size[j] > 0) wq.beta[i][j] = Rational(e[i][j], size[i] * size[j]);
      wq.gamma[i][j] = Rational(e[i][j], nn);
    }
  }
  return wq;
}

QuotientPoint kappa_from_gamma(const WeightedQuotient& wq) {
  const std::size_t dim = std::size_t{1} << wq.k;
  std::vector<Rational> coords(dim);
  for (std::size_t a = 1; a < dim; ++a) {
    Rational s;
    for (int i = 0; i < wq.k; ++i) {
      if (!((a >> i) & 1u)) continue;
      for (int j = 0; j < wq.k; ++j)
        if (!((a >> j) & 1u)) s += wq.gamma[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    coords[a] = s;
  }
  return QuotientPoint(wq.k, std::move(coords));
}

std::vector<std::vector<Rational>> gamma_from_kappa(const QuotientPoint& kappa) {
  const auto k = static_cast<std::size_t>(kappa.k);
  std::vector<std::vector<Rational>> gamma(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      const std::size_t a = std::size_t{1} << i, b = std::size_t{1} << j;
      gamma[i][j] = (kappa.coords[a] + kappa.coords[b] - kappa.coords[a | b]) * Rational(1, 2);
    }
  return gamma;
}

RoundingResult rounding_partition(const BlowUp& gt, const std::vector<int>& class_of, int k,
                                  std::uint64_t seed) {
  const int nodes = gt.graph.node_count();
  if (static_cast<int>(gt.class_of.size()) != nodes || gt.t < 1) {
    throw InvalidArgumentError("rounding needs the blow-up class structure");
  }
  check_partition(nodes, class_of, k);
  const int base = nodes / gt.t;
  std::vector<std::vector<int>> members(static_cast<std::size_t>(base));
  for (int v = 0; v < nodes; ++v) members[static_cast<std::size_t>(gt.class_of[static_cast<std::size_t>(v)])].push_back(v);

  Rng rng(seed);
  RoundingResult out;
  out.partition = class_of;
  for (const auto& cls : members) {
    const auto draw = static_cast<int>(rng.below(cls.size()));
    // The draw-th member's part is chosen with probability |P_i & V_u| / t.
    std::vector<int> parts;
    for (int v : cls) parts.push_back(class_of[static_cast<std::size_t>(v)]);
    std::sort(parts.begin(), parts.end());
    const int chosen = parts[static_cast<std::size_t>(draw)];
    for (int v : cls) out.partition[static_cast<std::size_t>(v)] = chosen;
  }
  const SetFunctionOracle kappa = cut_capacity_oracle(gt.graph, CutNormalization::NodesSquared);
  const auto before = partition_masks(nodes, class_of, k);
  const auto after = partition_masks(nodes, out.partition, k);
  out.before = quotient_point(kappa, before);
  out.after = quotient_point(kappa, after);
  out.deviation = linf_distance(out.before, out.after);
  return out;
}

EdgeColoringQuotient edge_coloring_quotient(const SimpleGraph& g, const std::vector<int>& colour,
                                            int colours, const Limits& limits) {
  const int m = g.edge_count();
  const int n = g.node_count();
  if (colours < 1 || colours > limits.k_cap) throw KTooLargeError(colours, limits.k_cap);
  if (static_cast<int>(colour.size()) != m) {
    throw InvalidArgumentError("colouring lists " + std::to_string(colour.size()) + " edges, graph has " +
                               std::to_string(m));
  }
  if (n == 0) throw DegenerateNormalizationError("edge colouring quotient of the empty graph");
  std::vector<SubsetMask> parts(static_cast<std::size_t>(colours), SubsetMask::empty(m));
  for (int e = 0; e < m; ++e) {
    const int c = colour[static_cast<std::size_t>(e)];
    if (c < 0 || c >= colours) throw InvalidArgumentError("edge colour " + std::to_string(c) + " outside [0, colours)");
    parts[static_cast<std::size_t>(c)] = parts[static_cast<std::size_t>(c)].with(e);
  }
  auto matroid = std::make_shared<GraphicMatroid>(g);
  EdgeColoringQuotient out;
  out.point = quotient_point(rank_oracle(matroid, n), parts, limits);

  out.component_size.assign(static_cast<std::size_t>(colours), std::vector<int>(static_cast<std::size_t>(n), 1));
  for (int c = 0; c < colours; ++c) {
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    for (int e : parts[static_cast<std::size_t>(c)].elements()) {
      const auto [u, v] = g.edge(e);
      parent[static_cast<std::size_t>(find(u))] = find(v);
    }
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) ++count[static_cast<std::size_t>(find(v))];
    for (int v = 0; v < n; ++v) out.component_size[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)] = count[static_cast<std::size_t>(find(v))];
  }
  return out;
}

}  // namespace qconv
