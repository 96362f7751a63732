#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qconv/kernels.hpp"
#include "qconv/profiles.hpp"
#include "qconv/rational.hpp"
#include "qconv/setfn.hpp"

namespace qconv {

/// max_I |p_I - q_I|.
Rational linf_distance(const QuotientPoint& p, const QuotientPoint& q);

struct DirectedDistance {
  Rational distance;
  std::size_t witness = 0;  ///< index into the source set of a point attaining it
};

struct HausdorffReport {
  Rational distance;
  Rational directed_ab;  ///< sup over a of inf over b
  Rational directed_ba;
  QuotientPoint witness_ab;  ///< point of A farthest from B
  QuotientPoint witness_ba;  ///< point of B farthest from A
};

/// sup_{a in A} inf_{b in B} |a - b|. Points are scaled to a common integer
/// lattice and handed to the integer kernel; if the lattice would overflow,
/// the rational brute force runs instead. Both paths are exact.
DirectedDistance directed_distance(std::span<const QuotientPoint> a, std::span<const QuotientPoint> b,
                                   kernels::Backend backend = kernels::active_backend());
/// Reference path: plain rational max-min.
DirectedDistance directed_distance_rational(std::span<const QuotientPoint> a,
                                            std::span<const QuotientPoint> b);

HausdorffReport hausdorff(std::span<const QuotientPoint> a, std::span<const QuotientPoint> b,
                          kernels::Backend backend = kernels::active_backend());
HausdorffReport hausdorff(const ProfileSet& a, const ProfileSet& b,
                          kernels::Backend backend = kernels::active_backend());

struct EpsContainment {
  bool holds = true;
  std::optional<QuotientPoint> witness;  ///< point of A farther than eps from B
};

/// Every point of A within eps of some point of B.
EpsContainment eps_contained(const ProfileSet& a, const ProfileSet& b, const Rational& eps);

enum class Verdict { ConsistentWithCauchy, Inconclusive, Diverging };
std::string verdict_name(Verdict v);

struct ConvergenceDiagnostic {
  std::vector<std::vector<Rational>> pairwise;
  std::vector<Rational> tail_sup;  ///< tail_sup[s] = max over s <= i < j of pairwise[i][j], s < n - 1
  Verdict verdict = Verdict::Inconclusive;
  Rational decrease_factor;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  ///< pair keeping the tail up
};

/// Pairwise distances over a finite prefix plus a heuristic verdict:
/// consistent when the last tail supremum is at most f times the first,
/// diverging when it keeps at least (1 + f) / 2 of the first (less than half
/// of the required decrease happened), inconclusive in between. Fewer than two sets give an empty matrix and
/// an inconclusive verdict.
ConvergenceDiagnostic cauchy_diagnostic(std::span<const ProfileSet> sets,
                                        const Rational& decrease_factor = Rational(1, 2));

}  // namespace qconv
