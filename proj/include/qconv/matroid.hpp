#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qconv/gf.hpp"
#include "qconv/graph.hpp"
#include "qconv/limits.hpp"
#include "qconv/setfn.hpp"

namespace qconv {

/// Matroid given by its rank function. Implementations are immutable.
class Matroid {
 public:
  virtual ~Matroid() = default;

  virtual int ground_size() const = 0;
  /// Rank of the subset encoded by `bits` (no width check).
  virtual int rank_bits(std::uint64_t bits) const = 0;
  virtual std::string describe() const = 0;

  int rank(const SubsetMask& x) const;
  int total_rank() const;
  std::uint64_t full_bits() const { return SubsetMask::full(ground_size()).bits; }
};

using MatroidPtr = std::shared_ptr<const Matroid>;

/// Cycle matroid of a graph; ground set = edges in canonical order.
class GraphicMatroid final : public Matroid {
 public:
  explicit GraphicMatroid(SimpleGraph graph);
  const SimpleGraph& graph() const { return graph_; }

  int ground_size() const override { return graph_.edge_count(); }
  int rank_bits(std::uint64_t bits) const override;
  std::string describe() const override;

 private:
  SimpleGraph graph_;
};

/// Column matroid of vectors in GF(q)^dim.
class LinearMatroid final : public Matroid {
 public:
  LinearMatroid(int q, int dim, std::vector<std::vector<int>> columns);

  /// All q^n vectors of GF(q)^n (zero vector included, as a loop). Vector
  /// index = sum_i c_i q^i, so coordinate 0 is the least significant digit.
  static LinearMatroid full_space(int q, int n);
  static std::vector<int> vector_of_index(int q, int n, std::uint64_t index);
  static std::uint64_t index_of_vector(int q, std::span<const int> v);

  int field_order() const { return field_.order(); }
  int dimension() const { return dim_; }
  const std::vector<std::vector<int>>& columns() const { return columns_; }

  int ground_size() const override { return static_cast<int>(columns_.size()); }
  int rank_bits(std::uint64_t bits) const override;
  std::string describe() const override;

 private:
  GaloisField field_;
  int dim_;
  std::vector<std::vector<int>> columns_;
  std::vector<std::uint64_t> packed_;  // GF(2) fast path
  std::string label_;
};

/// Direct sum; ground = parts laid out consecutively.
class DirectSumMatroid final : public Matroid {
 public:
  explicit DirectSumMatroid(std::vector<MatroidPtr> parts);
  const std::vector<MatroidPtr>& parts() const { return parts_; }
  int offset(std::size_t part) const { return offsets_[part]; }

  int ground_size() const override { return size_; }
  int rank_bits(std::uint64_t bits) const override;
  std::string describe() const override;

 private:
  std::vector<MatroidPtr> parts_;
  std::vector<int> offsets_;
  int size_ = 0;
};

/// X -> r(X & A): the matroid restricted to A with the rest turned into loops.
class RestrictedMatroid final : public Matroid {
 public:
  RestrictedMatroid(MatroidPtr base, SubsetMask keep);

  int ground_size() const override { return base_->ground_size(); }
  int rank_bits(std::uint64_t bits) const override { return base_->rank_bits(bits & keep_.bits); }
  std::string describe() const override;

 private:
  MatroidPtr base_;
  SubsetMask keep_;
};

/// Rank oracle scaled by `normalization` (the matroid is attached for
/// flat-based enumeration).
SetFunctionOracle rank_oracle(MatroidPtr matroid, std::int64_t normalization);
/// rho = r / r(E).
SetFunctionOracle normalized_rank_oracle(MatroidPtr matroid);

struct Flat {
  SubsetMask mask;
  int rank = 0;
  friend bool operator==(const Flat&, const Flat&) = default;
};

int rank(const Matroid& m, const SubsetMask& x);
SubsetMask closure(const Matroid& m, const SubsetMask& x);
bool is_flat(const Matroid& m, const SubsetMask& x);

/// All flats, sorted by (rank, mask bits). Breadth-first closure of
/// single-element extensions starting from the closure of the empty set.
std::vector<Flat> enumerate_flats(const Matroid& m, const Limits& limits = default_limits());

struct RichnessResult {
  bool holds = true;
  std::optional<Flat> inner;  ///< F of a violating pair F <= A
  std::optional<Flat> outer;  ///< A of a violating pair
};

/// Condition R(k, m): flats F <= A with r(A) >= m satisfy |A \ F| >= k (r(A) - r(F)).
RichnessResult check_richness(const Matroid& matroid, int k, int m,
                              const Limits& limits = default_limits());

/// Maximum-size disjoint family of independent sets, one per matroid.
struct UnionPartition {
  std::vector<SubsetMask> parts;  ///< parts[i] independent in matroid i, pairwise disjoint
  int rank = 0;                   ///< total size, the union rank
  SubsetMask certificate;         ///< Y attaining |Y| + sum_i r_i(E \ Y) = rank
};

/// Matroid partition by shortest augmenting paths in the exchange graph.
UnionPartition matroid_union(std::span<const MatroidPtr> matroids);
int matroid_union_rank(std::span<const MatroidPtr> matroids);
/// min over Y of |Y| + sum_i r_i(E \ Y), by enumeration of Y.
int matroid_union_rank_min_formula(std::span<const MatroidPtr> matroids,
                                   const Limits& limits = default_limits());

struct DisjointBases {
  std::optional<std::vector<SubsetMask>> bases;  ///< B_i basis of A_i, pairwise disjoint
  SubsetMask deficiency;  ///< on failure: Y with |Y| + sum r(A_i \ Y) < sum r(A_i)
  int union_rank = 0;
  int required = 0;       ///< sum r(A_i)
};

DisjointBases disjoint_bases(const MatroidPtr& matroid, std::span<const SubsetMask> flats);

/// A -> A + 0: flat of GF(q)^m to flat of GF(q)^n, m <= n (rank preserving).
SubsetMask gfqn_rank_preserving_embed(int q, int m, int n, const SubsetMask& flat);
/// A -> A + ... + A with n/m summands (ranks scale by n/m).
SubsetMask gfqn_stretch_embed(int q, int m, int n, const SubsetMask& flat);
/// (F1, F2) flat of GF(q)^a (+) GF(q)^b as a direct sum -> F1 x F2 in GF(q)^(a+b);
/// both zero vectors go to the common zero.
SubsetMask gfqn_direct_sum_embed(int q, int a, int b, const SubsetMask& flat_of_sum);

}  // namespace qconv
