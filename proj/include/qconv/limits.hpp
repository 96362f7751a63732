#pragma once

#include <cstdint>

namespace qconv {

/// Enumeration caps. Every exhaustive routine takes one of these; the
/// defaults are the desk-scale values the tool is tuned for.
struct Limits {
  int ground_cap = 24;                ///< exact subset iteration over the ground set
  int k_cap = 8;                      ///< parts in a quotient tuple (points have 2^k coords)
  int tabulate_cap = 22;              ///< largest ground tabulated into a dense value table
  int submodular_exhaustive_cap = 12; ///< 4^n ordered pairs
  int flat_ground_cap = 20;           ///< ground size accepted by flat enumeration
  std::uint64_t flat_cap = 100000;
  std::uint64_t iteration_cap = std::uint64_t{1} << 26;
  int union_brute_force_cap = 16;
  std::uint64_t hom_map_cap = 248832;  ///< |V(G)|^|V(F)| maps, 12^5
  int hom_pattern_cap = 5;
  int cut_dist_cap = 24;               ///< nodes for the exact labeled cut distance
  int unlabeled_node_cap = 20;         ///< nodes of the aligned blow-ups
  std::size_t max_violations = 64;     ///< violations reported by the checkers
};

inline const Limits& default_limits() {
  static const Limits limits{};
  return limits;
}

}  // namespace qconv
