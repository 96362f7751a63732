#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "qconv/limits.hpp"
#include "qconv/rational.hpp"

namespace qconv {

class Matroid;

/// Finite ground set {0, ..., size-1}, optionally labelled.
class GroundSet {
 public:
  static constexpr int kMaxWidth = 64;

  GroundSet() = default;
  explicit GroundSet(int size, std::vector<std::string> labels = {});

  int size() const { return size_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int i) const;
  /// Bit pattern of the whole ground set.
  std::uint64_t full_bits() const;

 private:
  int size_ = 0;
  std::vector<std::string> labels_;
};

/// Subset of a ground set; element i is in the subset iff bit i is set.
struct SubsetMask {
  std::uint64_t bits = 0;
  int width = 0;

  static SubsetMask empty(int width) { return {0, width}; }
  static SubsetMask full(int width);
  static SubsetMask of(int width, std::initializer_list<int> elements);

  bool contains(int i) const { return (bits >> i) & 1u; }
  int count() const { return __builtin_popcountll(bits); }
  bool is_empty() const { return bits == 0; }
  bool is_subset_of(const SubsetMask& o) const { return (bits & ~o.bits) == 0; }
  SubsetMask with(int i) const { return {bits | (std::uint64_t{1} << i), width}; }
  SubsetMask without(int i) const { return {bits & ~(std::uint64_t{1} << i), width}; }
  SubsetMask complement() const;
  SubsetMask operator|(const SubsetMask& o) const { return {bits | o.bits, width}; }
  SubsetMask operator&(const SubsetMask& o) const { return {bits & o.bits, width}; }
  SubsetMask minus(const SubsetMask& o) const { return {bits & ~o.bits, width}; }
  std::vector<int> elements() const;

  friend bool operator==(const SubsetMask&, const SubsetMask&) = default;
  friend auto operator<=>(const SubsetMask&, const SubsetMask&) = default;
};

/// Exact setfunction on the full power set of a ground set.
///
/// The evaluator returns an integer numerator; the value of a subset is
/// raw(X) / normalization. Every setfunction this library builds on a finite
/// object has this form, which lets enumeration work on integers and keeps
/// all values exact. Oracles are immutable and safe to share across threads.
class SetFunctionOracle {
 public:
  using RawFn = std::function<std::int64_t(std::uint64_t)>;

  /// Throws InvalidArgumentError unless raw(empty) == 0 and normalization > 0.
  SetFunctionOracle(GroundSet ground, std::int64_t normalization, RawFn raw,
                    std::string description);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  std::int64_t normalization() const { return normalization_; }
  const std::string& description() const { return description_; }

  Rational evaluate(const SubsetMask& x) const;
  std::int64_t raw(const SubsetMask& x) const;
  /// Hot path: no width check, bits must stay within the ground set.
  std::int64_t raw_bits(std::uint64_t bits) const {
    return table_ ? (*table_)[bits] : raw_fn_(bits);
  }

  bool is_tabulated() const { return table_ != nullptr; }
  /// Copy backed by a dense 2^n table. Throws GroundTooLargeError past the cap.
  SetFunctionOracle tabulated(const Limits& limits = default_limits()) const;

  /// Source matroid when this is a (scaled) rank function; enables flat-based enumeration.
  const std::shared_ptr<const Matroid>& matroid() const { return matroid_; }
  SetFunctionOracle with_matroid(std::shared_ptr<const Matroid> m) const;

 private:
  GroundSet ground_;
  std::int64_t normalization_;
  RawFn raw_fn_;
  std::string description_;
  std::shared_ptr<const std::vector<std::int64_t>> table_;
  std::shared_ptr<const Matroid> matroid_;
};

/// phi/A: coordinate I holds phi(union of A_i, i in I), with the subset index
/// convention I = sum over i in I of 2^(i-1) (parts numbered from 1).
struct QuotientPoint {
  int k = 0;
  std::vector<Rational> coords;

  QuotientPoint() = default;
  QuotientPoint(int k, std::vector<Rational> coords);
  static QuotientPoint zero(int k);

  std::size_t dimension() const { return coords.size(); }
  const Rational& operator[](std::size_t index) const { return coords[index]; }
  /// Coordinate of a subset of [k] given as 1-based part numbers.
  const Rational& at(std::initializer_list<int> parts) const;

  friend bool operator==(const QuotientPoint&, const QuotientPoint&) = default;
  friend std::strong_ordering operator<=>(const QuotientPoint& a, const QuotientPoint& b);
};

std::string to_string(const QuotientPoint& p);

Rational evaluate(const SetFunctionOracle& oracle, const SubsetMask& x);

QuotientPoint quotient_point(const SetFunctionOracle& oracle, std::span<const SubsetMask> tuple,
                             const Limits& limits = default_limits());

/// Builds the setfunction on [m] whose values are the coordinates of the point.
SetFunctionOracle point_oracle(const QuotientPoint& point);

struct SubmodularViolation {
  SubsetMask x;
  SubsetMask y;
  Rational slack;  ///< f(X) + f(Y) - f(X & Y) - f(X | Y), negative on violation
};

struct MonotoneViolation {
  SubsetMask smaller;
  SubsetMask larger;
  Rational drop;  ///< f(smaller) - f(larger) > 0
};

/// Exhaustive over all ordered pairs; ground must be at most submodular_exhaustive_cap.
std::vector<SubmodularViolation> check_submodular(const SetFunctionOracle& oracle,
                                                  const Limits& limits = default_limits());
std::vector<SubmodularViolation> check_submodular_sampled(const SetFunctionOracle& oracle,
                                                          std::uint64_t seed,
                                                          std::uint64_t samples,
                                                          const Limits& limits = default_limits());
/// Single-element extensions X < X+e suffice: any violating chain contains one.
std::vector<MonotoneViolation> check_monotone(const SetFunctionOracle& oracle,
                                              const Limits& limits = default_limits());
std::vector<MonotoneViolation> check_monotone_sampled(const SetFunctionOracle& oracle,
                                                      std::uint64_t seed, std::uint64_t samples,
                                                      const Limits& limits = default_limits());

}  // namespace qconv
