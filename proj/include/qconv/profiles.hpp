#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qconv/limits.hpp"
#include "qconv/matroid.hpp"
#include "qconv/setfn.hpp"

namespace qconv {

/// Which tuples (A_1, ..., A_k) generate the points phi/A.
enum class ProfileMode {
  Q,       ///< partitions of the ground set (parts may be empty)
  T,       ///< arbitrary tuples (crops)
  TDelta,  ///< pairwise disjoint tuples
  TNabla,  ///< tuples covering the ground set
};

std::string_view mode_name(ProfileMode mode);
ProfileMode parse_mode(std::string_view text);

struct EnumStrategy {
  enum class Kind { Exact, Sampled, FlatsOnly };
  Kind kind = Kind::Exact;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;

  static EnumStrategy exact() { return {Kind::Exact, 0, 0}; }
  static EnumStrategy sampled(std::uint64_t seed, std::uint64_t samples) {
    return {Kind::Sampled, seed, samples};
  }
  static EnumStrategy flats_only() { return {Kind::FlatsOnly, 0, 0}; }

  friend bool operator==(const EnumStrategy&, const EnumStrategy&) = default;
};

std::string_view strategy_name(EnumStrategy::Kind kind);
EnumStrategy::Kind parse_strategy_kind(std::string_view text);

/// Deduplicated, canonically sorted set of quotient points.
class ProfileSet {
 public:
  ProfileSet(int k, ProfileMode mode, EnumStrategy strategy, std::vector<QuotientPoint> points,
             std::string source);

  int k() const { return k_; }
  ProfileMode mode() const { return mode_; }
  const EnumStrategy& strategy() const { return strategy_; }
  const std::vector<QuotientPoint>& points() const { return points_; }
  const std::string& source() const { return source_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

  bool contains(const QuotientPoint& p) const;
  bool is_subset_of(const ProfileSet& other) const;
  /// First point of this set missing from `other`.
  std::optional<QuotientPoint> first_missing_from(const ProfileSet& other) const;
  bool same_points(const ProfileSet& other) const { return points_ == other.points_; }

 private:
  int k_;
  ProfileMode mode_;
  EnumStrategy strategy_;
  std::vector<QuotientPoint> points_;
  std::string source_;
};

/// Number of labeled assignments exact enumeration visits for (n, k, mode).
long double exact_iteration_count(int n, int k, ProfileMode mode);

/// Q_k, T_k, T_k^Delta or T_k^Nabla of the oracle.
///
/// Exact visits every element-to-parts assignment allowed by the mode.
/// Sampled draws uniform assignments plus a fixed portfolio of structured
/// tuples and is an inner approximation. FlatsOnly draws tuples from the
/// flat lattice of the oracle's matroid; it is exact for T and T-Nabla of a
/// rank function and rejected for Q and T-Delta.
ProfileSet profile(const SetFunctionOracle& oracle, int k, ProfileMode mode, EnumStrategy strategy,
                   const Limits& limits = default_limits());

/// Profile of a quotient point read as a setfunction on [m].
ProfileSet derived_profile(const QuotientPoint& point, int k, ProfileMode mode,
                           const Limits& limits = default_limits());

/// Union of derived profiles (outer mode, outer k) over the inner profile.
ProfileSet compose(const SetFunctionOracle& oracle, int outer_k, int inner_m, ProfileMode outer_mode,
                   ProfileMode inner_mode, EnumStrategy inner_strategy = EnumStrategy::exact(),
                   const Limits& limits = default_limits());

struct InclusionLink {
  std::string relation;                  ///< e.g. "Q <= TDelta"
  bool holds = true;
  std::optional<QuotientPoint> witness;  ///< point of the smaller set missing from the larger
};

struct InclusionReport {
  int k = 0;
  std::vector<InclusionLink> links;  ///< Q<=TDelta, TDelta<=T, Q<=TNabla, TNabla<=T
  std::size_t q_size = 0, tdelta_size = 0, tnabla_size = 0, t_size = 0;
  bool all_hold() const;
};

/// Both inclusion chains Q <= T^Delta <= T and Q <= T^Nabla <= T by exact enumeration.
InclusionReport verify_inclusions(const SetFunctionOracle& oracle, int k,
                                  const Limits& limits = default_limits());

struct DeltaBoundReport {
  bool precondition_met = false;
  RichnessResult richness;
  Rational bound;  ///< k m / r(E)
  std::optional<Rational> t_vs_tdelta;
  std::optional<Rational> tnabla_vs_q;
  bool holds = false;  ///< both distances within the bound (only when the precondition holds)
};

/// Under R(k, m): d(T_k, T_k^Delta) <= k m / r(E) and d(T_k^Nabla, Q_k) <= k m / r(E)
/// for rho = r / r(E).
DeltaBoundReport delta_approx_bound_check(const MatroidPtr& matroid, int k, int m,
                                          const Limits& limits = default_limits());

/// Points with max_i psi({i}) >= 1 - log_q(k) / n, compared exactly.
ProfileSet limit_set_filter(const ProfileSet& tset, int q, int n);
/// Points with max_i psi({i}) >= 1 (the limiting description).
ProfileSet limit_set_filter_exact(const ProfileSet& tset);

}  // namespace qconv
