#include "qconv/matroid.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "qconv/error.hpp"

namespace qconv {

int Matroid::rank(const SubsetMask& x) const {
  if (x.width != ground_size()) throw MaskWidthError(x.width, ground_size());
  return rank_bits(x.bits);
}

int Matroid::total_rank() const { return rank_bits(full_bits()); }

// ---------------------------------------------------------------------------
// Graphic

GraphicMatroid::GraphicMatroid(SimpleGraph graph) : graph_(std::move(graph)) {}

int GraphicMatroid::rank_bits(std::uint64_t bits) const {
  return graph_.node_count() - graph_.components(bits);
}

std::string GraphicMatroid::describe() const { return "cycle matroid of " + qconv::describe(graph_); }

// ---------------------------------------------------------------------------
// Linear

LinearMatroid::LinearMatroid(int q, int dim, std::vector<std::vector<int>> columns)
    : field_(q), dim_(dim), columns_(std::move(columns)) {
  if (dim < 0) throw InvalidArgumentError("negative dimension");
  if (columns_.size() > static_cast<std::size_t>(GroundSet::kMaxWidth)) {
    throw InvalidArgumentError("linear matroid supports at most 64 columns");
  }
  for (const auto& col : columns_) {
    if (static_cast<int>(col.size()) != dim) {
      throw InvalidArgumentError("column length does not match dimension " + std::to_string(dim));
    }
    for (int c : col) {
      if (c < 0 || c >= q) throw InvalidArgumentError("column entry outside GF(" + std::to_string(q) + ")");
    }
  }
  if (q == 2 && dim <= 64) {
    packed_.reserve(columns_.size());
    for (const auto& col : columns_) {
      std::uint64_t w = 0;
      for (int i = 0; i < dim; ++i)
        if (col[static_cast<std::size_t>(i)]) w |= std::uint64_t{1} << i;
      packed_.push_back(w);
    }
  }
  label_ = "linear matroid over GF(" + std::to_string(q) + ")^" + std::to_string(dim) + " with " +
           std::to_string(columns_.size()) + " columns";
}

LinearMatroid LinearMatroid::full_space(int q, int n) {
  std::uint64_t count = 1;
  for (int i = 0; i < n; ++i) {
    count *= static_cast<std::uint64_t>(q);
    if (count > static_cast<std::uint64_t>(GroundSet::kMaxWidth)) {
      throw InvalidArgumentError("GF(" + std::to_string(q) + ")^" + std::to_string(n) +
                                 " has more than 64 vectors");
    }
  }
  std::vector<std::vector<int>> cols;
  for (std::uint64_t index = 0; index < count; ++index) cols.push_back(vector_of_index(q, n, index));
  LinearMatroid m(q, n, std::move(cols));
  m.label_ = "GF(" + std::to_string(q) + ")^" + std::to_string(n);
  return m;
}

std::vector<int> LinearMatroid::vector_of_index(int q, int n, std::uint64_t index) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i, index /= static_cast<std::uint64_t>(q)) {
    v[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::uint64_t>(q));
  }
  return v;
}

std::uint64_t LinearMatroid::index_of_vector(int q, std::span<const int> v) {
  std::uint64_t index = 0;
  for (std::size_t i = v.size(); i-- > 0;) index = index * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(v[i]);
  return index;
}

int LinearMatroid::rank_bits(std::uint64_t bits) const {
  if (!packed_.empty() || (columns_.empty() && field_.order() == 2)) {
    // xor basis indexed by leading bit
    std::uint64_t basis[64] = {};
    int r = 0;
    for (std::uint64_t b = bits; b; b &= b - 1) {
      std::uint64_t v = packed_[static_cast<std::size_t>(__builtin_ctzll(b))];
      while (v) {
        const int lead = 63 - __builtin_clzll(v);
        if (!basis[lead]) {
          basis[lead] = v;
          ++r;
          break;
        }
        v ^= basis[lead];
      }
    }
    return r;
  }
  // Echelon basis with normalized pivots.
  std::vector<std::vector<int>> basis;
  std::vector<int> pivots;
  for (std::uint64_t b = bits; b; b &= b - 1) {
    std::vector<int> v = columns_[static_cast<std::size_t>(__builtin_ctzll(b))];
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const int coef = v[static_cast<std::size_t>(pivots[j])];
      if (coef == 0) continue;
      for (int i = 0; i < dim_; ++i) {
        auto& vi = v[static_cast<std::size_t>(i)];
        vi = field_.sub(vi, field_.mul(coef, basis[j][static_cast<std::size_t>(i)]));
      }
    }
    auto it = std::find_if(v.begin(), v.end(), [](int c) { return c != 0; });
    if (it == v.end()) continue;
    const int inv = field_.inv(*it);
    for (auto& c : v) c = field_.mul(c, inv);
    pivots.push_back(static_cast<int>(it - v.begin()));
    basis.push_back(std::move(v));
    if (static_cast<int>(basis.size()) == dim_) break;
  }
  return static_cast<int>(basis.size());
}

std::string LinearMatroid::describe() const { return label_; }

// ---------------------------------------------------------------------------
// Direct sum and restriction

DirectSumMatroid::DirectSumMatroid(std::vector<MatroidPtr> parts) : parts_(std::move(parts)) {
  for (const auto& p : parts_) {
    offsets_.push_back(size_);
    size_ += p->ground_size();
  }
  if (size_ > GroundSet::kMaxWidth) throw InvalidArgumentError("direct sum exceeds 64 elements");
}

int DirectSumMatroid::rank_bits(std::uint64_t bits) const {
  int r = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const int w = parts_[i]->ground_size();
    const std::uint64_t mask = w == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << w) - 1;
    r += parts_[i]->rank_bits((bits >> offsets_[i]) & mask);
  }
  return r;
}

std::string DirectSumMatroid::describe() const {
  std::string s = "direct sum of [";
  for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "; " : "") + parts_[i]->describe();
  return s + "]";
}

RestrictedMatroid::RestrictedMatroid(MatroidPtr base, SubsetMask keep)
    : base_(std::move(base)), keep_(keep) {
  if (keep_.width != base_->ground_size()) throw MaskWidthError(keep_.width, base_->ground_size());
}

std::string RestrictedMatroid::describe() const { return base_->describe() + " restricted"; }

SetFunctionOracle rank_oracle(MatroidPtr matroid, std::int64_t normalization) {
  const Matroid* raw = matroid.get();
  std::string desc = matroid->describe() + " rank / " + std::to_string(normalization);
  SetFunctionOracle oracle(GroundSet(matroid->ground_size()), normalization,
                           [raw, keep = matroid](std::uint64_t bits) -> std::int64_t {
                             return raw->rank_bits(bits);
                           },
                           std::move(desc));
  return oracle.with_matroid(std::move(matroid));
}

SetFunctionOracle normalized_rank_oracle(MatroidPtr matroid) {
  const int total = matroid->total_rank();
  if (total == 0) throw DegenerateNormalizationError("matroid of rank 0 cannot be normalized");
  return rank_oracle(std::move(matroid), total);
}

// ---------------------------------------------------------------------------
// Closure and flats

int rank(const Matroid& m, const SubsetMask& x) { return m.rank(x); }

SubsetMask closure(const Matroid& m, const SubsetMask& x) {
  const int r = m.rank(x);
  SubsetMask out = x;
  for (int e = 0; e < m.ground_size(); ++e) {
    if (x.contains(e)) continue;
    if (m.rank_bits(x.bits | (std::uint64_t{1} << e)) == r) out = out.with(e);
  }
  return out;
}

bool is_flat(const Matroid& m, const SubsetMask& x) { return closure(m, x) == x; }

std::vector<Flat> enumerate_flats(const Matroid& m, const Limits& limits) {
  const int n = m.ground_size();
  if (n > limits.flat_ground_cap) throw GroundTooLargeError(n, limits.flat_ground_cap, "enumerate_flats");
  std::vector<Flat> flats;
  std::unordered_set<std::uint64_t> seen;
  std::deque<SubsetMask> queue;
  const SubsetMask bottom = closure(m, SubsetMask::empty(n));
  seen.insert(bottom.bits);
  queue.push_back(bottom);
  while (!queue.empty()) {
    const SubsetMask f = queue.front();
    queue.pop_front();
    const int r = m.rank_bits(f.bits);
    flats.push_back({f, r});
    std::uint64_t covered = f.bits;
    for (int e = 0; e < n; ++e) {
      if ((covered >> e) & 1u) continue;
      const SubsetMask g = closure(m, f.with(e));
      // every element of g \ f generates the same cover of f
      covered |= g.bits;
      if (seen.insert(g.bits).second) {
        if (seen.size() > limits.flat_cap) throw FlatExplosionError(limits.flat_cap);
        queue.push_back(g);
      }
    }
  }
  std::sort(flats.begin(), flats.end(), [](const Flat& a, const Flat& b) {
    return a.rank != b.rank ? a.rank < b.rank : a.mask.bits < b.mask.bits;
  });
  return flats;
}

RichnessResult check_richness(const Matroid& matroid, int k, int m, const Limits& limits) {
  if (k < 1 || m < 0) throw InvalidArgumentError("richness needs k >= 1 and m >= 0");
  RichnessResult result;
  if (m > matroid.total_rank()) return result;  // no flat reaches rank m
  const auto flats = enumerate_flats(matroid, limits);
  for (const auto& outer : flats) {
    if (outer.rank < m) continue;
    for (const auto& inner : flats) {
      if (inner.rank > outer.rank) break;
      if (!inner.mask.is_subset_of(outer.mask)) continue;
      const int gap = outer.mask.minus(inner.mask).count();
      if (gap < k * (outer.rank - inner.rank)) {
        result.holds = false;
        result.inner = inner;
        result.outer = outer;
        return result;
      }
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Matroid union

namespace {

void require_common_ground(std::span<const MatroidPtr> matroids) {
  if (matroids.empty()) throw InvalidArgumentError("matroid union of an empty family");
  const int n = matroids.front()->ground_size();
  for (const auto& m : matroids) {
    if (m->ground_size() != n) throw MaskWidthError(m->ground_size(), n);
  }
}

}  // namespace

UnionPartition matroid_union(std::span<const MatroidPtr> matroids) {
  require_common_ground(matroids);
  const int n = matroids.front()->ground_size();
  const int k = static_cast<int>(matroids.size());
  std::vector<std::uint64_t> parts(static_cast<std::size_t>(k), 0);
  std::vector<int> owner(static_cast<std::size_t>(n), -1);

  auto independent_with = [&](int i, std::uint64_t set) {
    return matroids[static_cast<std::size_t>(i)]->rank_bits(set) == __builtin_popcountll(set);
  };

  // Breadth-first search in the exchange graph from the given sources.
  // parent[z] = y when z was reached through y (z in part(z) swapped out
  // for y). Returns the sink element and the part it can be inserted into.
  struct Search {
    std::vector<int> parent;
    std::vector<bool> reached;
    int sink = -1;
    int sink_part = -1;
  };
  auto search = [&](const std::vector<int>& sources) {
    Search s;
    s.parent.assign(static_cast<std::size_t>(n), -1);
    s.reached.assign(static_cast<std::size_t>(n), false);
    std::deque<int> queue;
    for (int x : sources) {
      s.reached[static_cast<std::size_t>(x)] = true;
      queue.push_back(x);
    }
    while (!queue.empty()) {
      const int y = queue.front();
      queue.pop_front();
      const std::uint64_t ybit = std::uint64_t{1} << y;
      for (int i = 0; i < k; ++i) {
        if (owner[static_cast<std::size_t>(y)] == i) continue;
        const std::uint64_t part = parts[static_cast<std::size_t>(i)];
        if (independent_with(i, part | ybit)) {
          s.sink = y;
          s.sink_part = i;
          return s;
        }
        for (std::uint64_t b = part; b; b &= b - 1) {
          const int z = __builtin_ctzll(b);
          if (s.reached[static_cast<std::size_t>(z)]) continue;
          if (independent_with(i, (part & ~(std::uint64_t{1} << z)) | ybit)) {
            s.reached[static_cast<std::size_t>(z)] = true;
            s.parent[static_cast<std::size_t>(z)] = y;
            queue.push_back(z);
          }
        }
      }
    }
    return s;
  };

  for (int x = 0; x < n; ++x) {
    const Search s = search({x});
    if (s.sink < 0) continue;
    // Walk back: the sink joins sink_part, each predecessor takes the
    // place its successor vacates.
    int y = s.sink;
    int target = s.sink_part;
    while (true) {
      const int previous_owner = owner[static_cast<std::size_t>(y)];
      if (previous_owner >= 0) parts[static_cast<std::size_t>(previous_owner)] &= ~(std::uint64_t{1} << y);
      parts[static_cast<std::size_t>(target)] |= std::uint64_t{1} << y;
      owner[static_cast<std::size_t>(y)] = target;
      const int pred = s.parent[static_cast<std::size_t>(y)];
      if (pred < 0) break;
      target = previous_owner;
      y = pred;
    }
  }

  UnionPartition result;
  std::vector<int> uncovered;
  for (int e = 0; e < n; ++e) {
    if (owner[static_cast<std::size_t>(e)] < 0) uncovered.push_back(e);
  }
  const Search final_search = search(uncovered);
  std::uint64_t reachable = 0;
  for (int e = 0; e < n; ++e) {
    if (final_search.reached[static_cast<std::size_t>(e)]) reachable |= std::uint64_t{1} << e;
  }
  for (auto p : parts) {
    result.parts.push_back({p, n});
    result.rank += __builtin_popcountll(p);
  }
  result.certificate = SubsetMask{reachable, n}.complement();
  return result;
}

int matroid_union_rank(std::span<const MatroidPtr> matroids) { return matroid_union(matroids).rank; }

int matroid_union_rank_min_formula(std::span<const MatroidPtr> matroids, const Limits& limits) {
  require_common_ground(matroids);
  const int n = matroids.front()->ground_size();
  if (n > limits.union_brute_force_cap) {
    throw GroundTooLargeError(n, limits.union_brute_force_cap, "matroid union min formula");
  }
  const std::uint64_t full = SubsetMask::full(n).bits;
  int best = n;
  for (std::uint64_t y = 0; y <= full; ++y) {
    int value = __builtin_popcountll(y);
    for (const auto& m : matroids) value += m->rank_bits(full & ~y);
    best = std::min(best, value);
    if (y == full) break;
  }
  return best;
}

DisjointBases disjoint_bases(const MatroidPtr& matroid, std::span<const SubsetMask> flats) {
  std::vector<MatroidPtr> restricted;
  DisjointBases out;
  for (const auto& a : flats) {
    restricted.push_back(std::make_shared<RestrictedMatroid>(matroid, a));
    out.required += matroid->rank(a);
  }
  const UnionPartition u = matroid_union(restricted);
  out.union_rank = u.rank;
  if (u.rank == out.required) {
    out.bases = u.parts;
    out.deficiency = SubsetMask::empty(matroid->ground_size());
  } else {
    out.deficiency = u.certificate;
  }
  return out;
}

// ---------------------------------------------------------------------------
// GF(q)^n embeddings

namespace {

std::uint64_t ipow(int q, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= static_cast<std::uint64_t>(q);
  return r;
}

void require_space_flat(int q, int m, const SubsetMask& flat) {
  const LinearMatroid space = LinearMatroid::full_space(q, m);
  if (flat.width != space.ground_size()) throw MaskWidthError(flat.width, space.ground_size());
  if (!is_flat(space, flat)) throw InvalidArgumentError("embedding input is not a flat of GF(q)^m");
}

}  // namespace

SubsetMask gfqn_rank_preserving_embed(int q, int m, int n, const SubsetMask& flat) {
  if (m > n) {
    throw InvalidArgumentError("rank-preserving embedding needs m <= n, got m = " + std::to_string(m) +
                               ", n = " + std::to_string(n));
  }
  require_space_flat(q, m, flat);
  const auto width = static_cast<int>(ipow(q, n));
  if (width > GroundSet::kMaxWidth) throw InvalidArgumentError("target space exceeds 64 vectors");
  // Appending zero coordinates keeps the base-q index unchanged.
  return SubsetMask{flat.bits, width};
}

SubsetMask gfqn_stretch_embed(int q, int m, int n, const SubsetMask& flat) {
  if (m <= 0 || n % m != 0) throw DivisibilityError(m, n);
  require_space_flat(q, m, flat);
  const auto width = static_cast<int>(ipow(q, n));
  if (width > GroundSet::kMaxWidth) throw InvalidArgumentError("target space exceeds 64 vectors");
  const std::uint64_t block = ipow(q, m);
  std::vector<std::uint64_t> image{0};
  for (int copy = 0; copy < n / m; ++copy) {
    std::vector<std::uint64_t> next;
    const std::uint64_t shift = ipow(q, m * copy);
    for (std::uint64_t base : image) {
      for (std::uint64_t b = flat.bits; b; b &= b - 1) {
        next.push_back(base + static_cast<std::uint64_t>(__builtin_ctzll(b)) * shift);
      }
    }
    image = std::move(next);
  }
  (void)block;
  SubsetMask out = SubsetMask::empty(width);
  for (auto idx : image) out = out.with(static_cast<int>(idx));
  return out;
}

SubsetMask gfqn_direct_sum_embed(int q, int a, int b, const SubsetMask& flat_of_sum) {
  const std::uint64_t size_a = ipow(q, a);
  const std::uint64_t size_b = ipow(q, b);
  if (flat_of_sum.width != static_cast<int>(size_a + size_b)) {
    throw MaskWidthError(flat_of_sum.width, static_cast<int>(size_a + size_b));
  }
  const auto width = static_cast<int>(ipow(q, a + b));
  if (width > GroundSet::kMaxWidth) throw InvalidArgumentError("target space exceeds 64 vectors");
  const SubsetMask f1{flat_of_sum.bits & ((std::uint64_t{1} << size_a) - 1), static_cast<int>(size_a)};
  const SubsetMask f2{(flat_of_sum.bits >> size_a) & ((std::uint64_t{1} << size_b) - 1),
                      static_cast<int>(size_b)};
  require_space_flat(q, a, f1);
  require_space_flat(q, b, f2);
  SubsetMask out = SubsetMask::empty(width);
  for (int x : f1.elements())
    for (int y : f2.elements()) out = out.with(static_cast<int>(static_cast<std::uint64_t>(x) + size_a * static_cast<std::uint64_t>(y)));
  return out;
}

}  // namespace qconv
