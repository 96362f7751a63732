#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qconv/graph.hpp"
#include "qconv/kernels.hpp"
#include "qconv/limits.hpp"
#include "qconv/rational.hpp"
#include "qconv/setfn.hpp"

namespace qconv {

/// G(t): node u becomes the class {u t, ..., u t + t - 1}.
struct BlowUp {
  SimpleGraph graph;
  int t = 1;
  std::vector<int> class_of;  ///< blow-up node -> original node
};

BlowUp blow_up(const SimpleGraph& g, int t);

/// max over S, T of |e_G(S,T) - e_H(S,T)|, with e(S,T) counting ordered pairs.
std::int64_t cut_discrepancy(const SimpleGraph& g, const SimpleGraph& h,
                             kernels::Backend backend = kernels::active_backend(),
                             const Limits& limits = default_limits());
/// d_box(G, H) = cut_discrepancy / |V|^2 on a common node set.
Rational cut_dist_labeled(const SimpleGraph& g, const SimpleGraph& h,
                          kernels::Backend backend = kernels::active_backend(),
                          const Limits& limits = default_limits());

struct UnlabeledCutBound {
  Rational upper_bound;       ///< never a claim about the infimum itself
  int t = 1;                  ///< blow-up factor of the best alignment
  int nodes = 0;              ///< nodes of the aligned blow-ups
  std::vector<int> bijection; ///< node of H(mt) -> node of G(nt)
  bool exhaustive = false;    ///< every bijection at that t was tried
  std::uint64_t evaluations = 0;
};

/// Upper bound on the unlabeled cut distance from blow-ups of G and H onto
/// lcm(|G|, |H|) t common nodes,
/// t = 1..t_max, over exhaustive (<= 8 nodes) or sampled and locally
/// improved bijections.
UnlabeledCutBound cut_dist_unlabeled_upper(const SimpleGraph& g, const SimpleGraph& h, int t_max,
                                           int trials, std::uint64_t seed,
                                           const Limits& limits = default_limits());

enum class CutNormalization { Edges, TwiceEdges, NodesSquared };
std::string_view normalization_name(CutNormalization n);
CutNormalization parse_normalization(std::string_view text);

/// kappa(X) = e(X, V \ X) / N over node subsets.
SetFunctionOracle cut_capacity_oracle(const SimpleGraph& g, CutNormalization norm);

/// Symmetric step function; step i covers (b_{i-1}, b_i] with b_0 = 0, b_r = 1.
class StepGraphon {
 public:
  StepGraphon(std::vector<Rational> breakpoints, std::vector<std::vector<Rational>> values);

  static StepGraphon from_graph(const SimpleGraph& g);
  static StepGraphon constant(const Rational& p);

  int steps() const { return static_cast<int>(breakpoints_.size()); }
  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<std::vector<Rational>>& values() const { return values_; }
  Rational width(int i) const;
  const Rational& value(int i, int j) const {
    return values_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  /// Same function with the extra breakpoints inserted.
  StepGraphon refine(const std::vector<Rational>& extra) const;

 private:
  std::vector<Rational> breakpoints_;
  std::vector<std::vector<Rational>> values_;
};

/// kappa_W(X) for X a union of steps (bit i = step i).
Rational graphon_cut_capacity(const StepGraphon& w, std::uint64_t steps);
/// The same as a setfunction on the steps.
SetFunctionOracle graphon_cut_capacity_oracle(const StepGraphon& w);

/// Number of homomorphisms F -> G by backtracking.
std::uint64_t hom_count(const SimpleGraph& f, const SimpleGraph& g,
                        const Limits& limits = default_limits());
Rational hom_density(const SimpleGraph& f, const SimpleGraph& g,
                     const Limits& limits = default_limits());
Rational hom_density_step(const SimpleGraph& f, const StepGraphon& w,
                          const Limits& limits = default_limits());

/// tau(X) = 1 - t(F, G with edge set E \ X).
///
/// tau does not vanish on the empty set, so the oracle holds the grounded
/// function tau(X) - tau(empty) (same increments, hence the same
/// submodularity and monotonicity) and `at_empty` keeps the offset.
struct TauFunction {
  SetFunctionOracle grounded;
  Rational at_empty;
  Rational value(const SubsetMask& x) const { return at_empty + grounded.evaluate(x); }
};

TauFunction tau_oracle(const SimpleGraph& f, const SimpleGraph& g,
                       const Limits& limits = default_limits());

struct WeightedQuotient {
  int k = 0;
  std::vector<Rational> alpha;               ///< |V_i| / |V|
  std::vector<std::vector<Rational>> beta;   ///< e(V_i, V_j) / (|V_i| |V_j|), 0 for empty classes
  std::vector<std::vector<Rational>> gamma;  ///< e(V_i, V_j) / |V|^2
};

/// class_of[v] in [0, k) for every node.
WeightedQuotient weighted_quotient(const SimpleGraph& g, const std::vector<int>& class_of, int k);
/// kappa/P(A) = sum over i in A, j not in A of gamma_ij.
QuotientPoint kappa_from_gamma(const WeightedQuotient& wq);
/// gamma_ij = (kappa(i) + kappa(j) - kappa(ij)) / 2 off the diagonal; the diagonal is left 0.
std::vector<std::vector<Rational>> gamma_from_kappa(const QuotientPoint& kappa);

/// Node masks of the classes of a partition.
std::vector<SubsetMask> partition_masks(int n, const std::vector<int>& class_of, int k);

struct RoundingResult {
  std::vector<int> partition;  ///< constant on every blow-up class
  QuotientPoint before;        ///< kappa/P under NodesSquared
  QuotientPoint after;         ///< kappa/P'
  Rational deviation;          ///< l-infinity distance of the two
};

/// Moves each blow-up class V_u wholly into part i with probability |P_i & V_u| / t.
RoundingResult rounding_partition(const BlowUp& gt, const std::vector<int>& class_of, int k,
                                  std::uint64_t seed);

struct EdgeColoringQuotient {
  QuotientPoint point;
  /// component_size[c][u]: size of the component of u in the colour-c subgraph
  std::vector<std::vector<int>> component_size;
};

/// rho_G / c for rho_G = r_G / |V| and the colour classes of `colour` (one entry per edge).
EdgeColoringQuotient edge_coloring_quotient(const SimpleGraph& g, const std::vector<int>& colour,
                                            int colours, const Limits& limits = default_limits());

}  // namespace qconv
