#include "qconv/profiles.hpp"

#include <algorithm>
#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

#include "qconv/error.hpp"
#include "qconv/metric.hpp"
#include "qconv/random.hpp"

namespace qconv {

std::string_view mode_name(ProfileMode mode) {
  switch (mode) {
    case ProfileMode::Q: return "Q";
    case ProfileMode::T: return "T";
    case ProfileMode::TDelta: return "TDelta";
    case ProfileMode::TNabla: return "TNabla";
  }
  return "?";
}

ProfileMode parse_mode(std::string_view text) {
  if (text == "Q" || text == "q") return ProfileMode::Q;
  if (text == "T" || text == "t") return ProfileMode::T;
  if (text == "TDelta" || text == "tdelta" || text == "Tdelta") return ProfileMode::TDelta;
  if (text == "TNabla" || text == "tnabla" || text == "Tnabla") return ProfileMode::TNabla;
  throw InvalidArgumentError("unknown profile mode '" + std::string(text) +
                             "' (expected Q, T, TDelta or TNabla)");
}

std::string_view strategy_name(EnumStrategy::Kind kind) {
  switch (kind) {
    case EnumStrategy::Kind::Exact: return "exact";
    case EnumStrategy::Kind::Sampled: return "sampled";
    case EnumStrategy::Kind::FlatsOnly: return "flats";
  }
  return "?";
}

EnumStrategy::Kind parse_strategy_kind(std::string_view text) {
  if (text == "exact") return EnumStrategy::Kind::Exact;
  if (text == "sampled") return EnumStrategy::Kind::Sampled;
  if (text == "flats" || text == "flats-only" || text == "flatsonly") return EnumStrategy::Kind::FlatsOnly;
  throw InvalidArgumentError("unknown strategy '" + std::string(text) +
                             "' (expected exact, sampled or flats)");
}

// ---------------------------------------------------------------------------
// ProfileSet

ProfileSet::ProfileSet(int k, ProfileMode mode, EnumStrategy strategy,
                       std::vector<QuotientPoint> points, std::string source)
    : k_(k), mode_(mode), strategy_(strategy), points_(std::move(points)), source_(std::move(source)) {
  for (const auto& p : points_) {
    if (p.k != k_) throw DimensionMismatchError("profile point has k = " + std::to_string(p.k));
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool ProfileSet::contains(const QuotientPoint& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

bool ProfileSet::is_subset_of(const ProfileSet& other) const {
  return std::includes(other.points_.begin(), other.points_.end(), points_.begin(), points_.end());
}

std::optional<QuotientPoint> ProfileSet::first_missing_from(const ProfileSet& other) const {
  for (const auto& p : points_) {
    if (!other.contains(p)) return p;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Enumeration engine

namespace {

/// Open-addressing set of fixed-length integer vectors.
class PointTable {
 public:
  explicit PointTable(std::size_t dim) : dim_(dim), slots_(1024, 0) {}

  void insert(const std::int64_t* p) {
    if ((count_ + 1) * 2 > slots_.size()) grow();
    std::size_t h = hash(p) & (slots_.size() - 1);
    while (true) {
      const std::uint32_t s = slots_[h];
      if (s == 0) {
        storage_.insert(storage_.end(), p, p + dim_);
        slots_[h] = static_cast<std::uint32_t>(++count_);
        return;
      }
      if (std::equal(p, p + dim_, storage_.data() + (s - 1) * dim_)) return;
      h = (h + 1) & (slots_.size() - 1);
    }
  }

  std::size_t size() const { return count_; }
  const std::int64_t* row(std::size_t i) const { return storage_.data() + i * dim_; }

 private:
  std::size_t hash(const std::int64_t* p) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (std::size_t i = 0; i < dim_; ++i) {
      h ^= static_cast<std::uint64_t>(p[i]) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    h ^= h >> 31;
    h *= 0xbf58476d1ce4e5b9ull;
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }

  void grow() {
    std::vector<std::uint32_t> next(slots_.size() * 2, 0);
    for (std::size_t i = 0; i < count_; ++i) {
      std::size_t h = hash(row(i)) & (next.size() - 1);
      while (next[h] != 0) h = (h + 1) & (next.size() - 1);
      next[h] = static_cast<std::uint32_t>(i + 1);
    }
    slots_ = std::move(next);
  }

  std::size_t dim_;
  std::vector<std::int64_t> storage_;
  std::vector<std::uint32_t> slots_;
  std::size_t count_ = 0;
};

/// Evaluates tuples and accumulates distinct integer points.
class Accumulator {
 public:
  Accumulator(const SetFunctionOracle& oracle, int k)
      : oracle_(oracle), k_(k), dim_(std::size_t{1} << k), unions_(dim_, 0), scratch_(dim_, 0), table_(dim_) {}

  void add(const std::uint64_t* parts) {
    for (std::size_t index = 1; index < dim_; ++index) {
      unions_[index] = unions_[index & (index - 1)] | parts[__builtin_ctzll(index)];
      scratch_[index] = oracle_.raw_bits(unions_[index]);
    }
    table_.insert(scratch_.data());
  }

  std::vector<QuotientPoint> points() const {
    std::vector<QuotientPoint> out;
    out.reserve(table_.size());
    for (std::size_t i = 0; i < table_.size(); ++i) {
      const std::int64_t* row = table_.row(i);
      std::vector<Rational> coords;
      coords.reserve(dim_);
      for (std::size_t c = 0; c < dim_; ++c) coords.emplace_back(row[c], oracle_.normalization());
      out.emplace_back(k_, std::move(coords));
    }
    return out;
  }

 private:
  const SetFunctionOracle& oracle_;
  int k_;
  std::size_t dim_;
  std::vector<std::uint64_t> unions_;
  std::vector<std::int64_t> scratch_;
  PointTable table_;
};

/// Part-membership choices an element may take under each mode.
std::vector<std::uint32_t> choices_for(ProfileMode mode, int k) {
  std::vector<std::uint32_t> c;
  const std::uint32_t all = (std::uint32_t{1} << k);
  switch (mode) {
    case ProfileMode::Q:
      for (int p = 0; p < k; ++p) c.push_back(std::uint32_t{1} << p);
      break;
    case ProfileMode::TDelta:
      c.push_back(0);
      for (int p = 0; p < k; ++p) c.push_back(std::uint32_t{1} << p);
      break;
    case ProfileMode::TNabla:
      for (std::uint32_t s = 1; s < all; ++s) c.push_back(s);
      break;
    case ProfileMode::T:
      for (std::uint32_t s = 0; s < all; ++s) c.push_back(s);
      break;
  }
  return c;
}

std::string profile_label(int k, ProfileMode mode, const SetFunctionOracle& oracle) {
  return std::string(mode_name(mode)) + "_" + std::to_string(k) + " of " + oracle.description();
}

void check_k(int k, const Limits& limits) {
  if (k < 1) throw InvalidArgumentError("k must be at least 1");
  if (k > limits.k_cap) throw KTooLargeError(k, limits.k_cap);
}

SetFunctionOracle maybe_tabulate(const SetFunctionOracle& oracle, long double iterations,
                                 const Limits& limits) {
  const int n = oracle.size();
  if (!oracle.is_tabulated() && n <= limits.tabulate_cap &&
      iterations >= std::ldexp(1.0L, n)) {
    return oracle.tabulated(limits);
  }
  return oracle;
}

std::vector<QuotientPoint> enumerate_exact(const SetFunctionOracle& source, int k, ProfileMode mode,
                                           const Limits& limits) {
  const int n = source.size();
  if (n > limits.ground_cap) throw GroundTooLargeError(n, limits.ground_cap, "exact enumeration");
  const long double iterations = exact_iteration_count(n, k, mode);
  if (iterations > static_cast<long double>(limits.iteration_cap)) {
    throw EnumCapError(iterations, limits.iteration_cap);
  }
  const SetFunctionOracle oracle = maybe_tabulate(source, iterations, limits);
  const auto choices = choices_for(mode, k);
  const std::size_t radix = choices.size();

  Accumulator acc(oracle, k);
  std::vector<std::uint64_t> parts(static_cast<std::size_t>(k), 0);
  std::vector<std::size_t> digit(static_cast<std::size_t>(n), 0);
  auto apply = [&](int element, std::uint32_t delta) {
    for (; delta; delta &= delta - 1) parts[static_cast<std::size_t>(__builtin_ctz(delta))] ^= std::uint64_t{1} << element;
  };
  for (int e = 0; e < n; ++e) apply(e, choices[0]);

  while (true) {
    acc.add(parts.data());
    int e = 0;
    for (; e < n; ++e) {
      auto& d = digit[static_cast<std::size_t>(e)];
      const std::uint32_t before = choices[d];
      d = d + 1 == radix ? 0 : d + 1;
      apply(e, before ^ choices[d]);
      if (d != 0) break;
    }
    if (e == n) break;
  }
  return acc.points();
}

std::vector<QuotientPoint> enumerate_sampled(const SetFunctionOracle& oracle, int k, ProfileMode mode,
                                             const EnumStrategy& strategy, const Limits& limits) {
  const int n = oracle.size();
  const auto choices = choices_for(mode, k);
  const std::uint64_t full = oracle.ground().full_bits();
  Rng rng(strategy.seed);
  Accumulator acc(oracle, k);
  std::vector<std::uint64_t> parts(static_cast<std::size_t>(k), 0);

  auto clear = [&] { std::fill(parts.begin(), parts.end(), 0); };

  // Structured portfolio.
  if (mode != ProfileMode::TDelta || true) {
    for (int p = 0; p < k; ++p) {
      clear();
      parts[static_cast<std::size_t>(p)] = full;  // everything in one part
      acc.add(parts.data());
    }
  }
  if (mode == ProfileMode::T || mode == ProfileMode::TDelta) {
    clear();
    acc.add(parts.data());  // all empty
  }
  if (mode == ProfileMode::T || mode == ProfileMode::TNabla) {
    std::fill(parts.begin(), parts.end(), full);
    acc.add(parts.data());
  }
  {
    // balanced: a random order dealt round-robin
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int e = 0; e < n; ++e) order[static_cast<std::size_t>(e)] = e;
    rng.shuffle(order);
    clear();
    for (std::size_t i = 0; i < order.size(); ++i) parts[i % static_cast<std::size_t>(k)] |= std::uint64_t{1} << order[i];
    acc.add(parts.data());
  }
  if (oracle.matroid() && (mode == ProfileMode::T || mode == ProfileMode::TNabla) &&
      oracle.size() <= limits.flat_ground_cap) {
    const auto flats = enumerate_flats(*oracle.matroid(), limits);
    const std::uint64_t draws = std::min<std::uint64_t>(strategy.samples, 64);
    for (std::uint64_t s = 0; s < draws; ++s) {
      std::uint64_t covered = 0;
      for (auto& part : parts) {
        part = flats[rng.below(flats.size())].mask.bits;
        covered |= part;
      }
      if (mode == ProfileMode::TNabla) parts[0] |= full & ~covered;
      acc.add(parts.data());
    }
  }

  for (std::uint64_t s = 0; s < strategy.samples; ++s) {
    clear();
    for (int e = 0; e < n; ++e) {
      std::uint32_t c = choices[rng.below(choices.size())];
      for (; c; c &= c - 1) parts[static_cast<std::size_t>(__builtin_ctz(c))] |= std::uint64_t{1} << e;
    }
    acc.add(parts.data());
  }
  return acc.points();
}

std::vector<QuotientPoint> enumerate_flats_only(const SetFunctionOracle& oracle, int k,
                                                ProfileMode mode, const Limits& limits) {
  if (!oracle.matroid()) {
    throw InvalidArgumentError("FlatsOnly strategy needs a matroid rank oracle");
  }
  if (mode != ProfileMode::T && mode != ProfileMode::TNabla) {
    throw InvalidArgumentError("FlatsOnly strategy is valid only for T and TNabla modes, not " +
                               std::string(mode_name(mode)));
  }
  const auto flats = enumerate_flats(*oracle.matroid(), limits);
  const long double iterations = std::pow(static_cast<long double>(flats.size()), k);
  if (iterations > static_cast<long double>(limits.iteration_cap)) {
    throw EnumCapError(iterations, limits.iteration_cap);
  }
  const std::uint64_t full = oracle.ground().full_bits();
  Accumulator acc(oracle, k);
  std::vector<std::size_t> digit(static_cast<std::size_t>(k), 0);
  std::vector<std::uint64_t> parts(static_cast<std::size_t>(k), flats.front().mask.bits);
  while (true) {
    if (mode == ProfileMode::T) {
      acc.add(parts.data());
    } else {
      std::uint64_t covered = 0;
      for (auto p : parts) covered |= p;
      if (covered == full) acc.add(parts.data());
    }
    int i = 0;
    for (; i < k; ++i) {
      auto& d = digit[static_cast<std::size_t>(i)];
      d = d + 1 == flats.size() ? 0 : d + 1;
      parts[static_cast<std::size_t>(i)] = flats[d].mask.bits;
      if (d != 0) break;
    }
    if (i == k) break;
  }
  return acc.points();
}

}  // namespace

long double exact_iteration_count(int n, int k, ProfileMode mode) {
  const long double radix = static_cast<long double>(choices_for(mode, k).size());
  return std::pow(radix, static_cast<long double>(n));
}

ProfileSet profile(const SetFunctionOracle& oracle, int k, ProfileMode mode, EnumStrategy strategy,
                   const Limits& limits) {
  check_k(k, limits);
  std::vector<QuotientPoint> points;
  switch (strategy.kind) {
    case EnumStrategy::Kind::Exact: points = enumerate_exact(oracle, k, mode, limits); break;
    case EnumStrategy::Kind::Sampled: points = enumerate_sampled(oracle, k, mode, strategy, limits); break;
    case EnumStrategy::Kind::FlatsOnly: points = enumerate_flats_only(oracle, k, mode, limits); break;
  }
  return ProfileSet(k, mode, strategy, std::move(points), profile_label(k, mode, oracle));
}

ProfileSet derived_profile(const QuotientPoint& point, int k, ProfileMode mode, const Limits& limits) {
  if (point.k > limits.k_cap) throw KTooLargeError(point.k, limits.k_cap);
  return profile(point_oracle(point), k, mode, EnumStrategy::exact(), limits);
}

ProfileSet compose(const SetFunctionOracle& oracle, int outer_k, int inner_m, ProfileMode outer_mode,
                   ProfileMode inner_mode, EnumStrategy inner_strategy, const Limits& limits) {
  const ProfileSet inner = profile(oracle, inner_m, inner_mode, inner_strategy, limits);
  std::vector<QuotientPoint> points;
  for (const auto& psi : inner.points()) {
    const ProfileSet outer = derived_profile(psi, outer_k, outer_mode, limits);
    points.insert(points.end(), outer.points().begin(), outer.points().end());
  }
  std::string label = std::string(mode_name(outer_mode)) + "_" + std::to_string(outer_k) + " o " +
                      std::string(mode_name(inner_mode)) + "_" + std::to_string(inner_m) + " of " +
                      oracle.description();
  return ProfileSet(outer_k, outer_mode, inner_strategy, std::move(points), std::move(label));
}

// ---------------------------------------------------------------------------
// Inclusions and bounds

namespace {

/// Exact point set, using flats when full enumeration is over the cap and
/// the flat reduction is valid for the mode.
ProfileSet complete_profile(const SetFunctionOracle& oracle, int k, ProfileMode mode,
                            const Limits& limits) {
  const long double iterations = exact_iteration_count(oracle.size(), k, mode);
  const bool flats_valid = oracle.matroid() && (mode == ProfileMode::T || mode == ProfileMode::TNabla);
  if (flats_valid && (iterations > static_cast<long double>(limits.iteration_cap) ||
                      oracle.size() > limits.ground_cap)) {
    return profile(oracle, k, mode, EnumStrategy::flats_only(), limits);
  }
  return profile(oracle, k, mode, EnumStrategy::exact(), limits);
}

InclusionLink link(const std::string& relation, const ProfileSet& smaller, const ProfileSet& larger) {
  InclusionLink l;
  l.relation = relation;
  l.witness = smaller.first_missing_from(larger);
  l.holds = !l.witness.has_value();
  return l;
}

}  // namespace

bool InclusionReport::all_hold() const {
  return std::all_of(links.begin(), links.end(), [](const InclusionLink& l) { return l.holds; });
}

InclusionReport verify_inclusions(const SetFunctionOracle& oracle, int k, const Limits& limits) {
  const ProfileSet q = complete_profile(oracle, k, ProfileMode::Q, limits);
  const ProfileSet td = complete_profile(oracle, k, ProfileMode::TDelta, limits);
  const ProfileSet tn = complete_profile(oracle, k, ProfileMode::TNabla, limits);
  const ProfileSet t = complete_profile(oracle, k, ProfileMode::T, limits);
  InclusionReport r;
  r.k = k;
  r.q_size = q.size();
  r.tdelta_size = td.size();
  r.tnabla_size = tn.size();
  r.t_size = t.size();
  r.links.push_back(link("Q <= TDelta", q, td));
  r.links.push_back(link("TDelta <= T", td, t));
  r.links.push_back(link("Q <= TNabla", q, tn));
  r.links.push_back(link("TNabla <= T", tn, t));
  return r;
}

DeltaBoundReport delta_approx_bound_check(const MatroidPtr& matroid, int k, int m,
                                          const Limits& limits) {
  DeltaBoundReport report;
  const int total = matroid->total_rank();
  if (total == 0) throw DegenerateNormalizationError("matroid of rank 0 cannot be normalized");
  report.bound = Rational(static_cast<std::int64_t>(k) * m, total);
  report.richness = check_richness(*matroid, k, m, limits);
  report.precondition_met = report.richness.holds && m >= k;
  if (!report.precondition_met) return report;

  const SetFunctionOracle rho = normalized_rank_oracle(matroid);
  const ProfileSet t = complete_profile(rho, k, ProfileMode::T, limits);
  const ProfileSet td = complete_profile(rho, k, ProfileMode::TDelta, limits);
  const ProfileSet tn = complete_profile(rho, k, ProfileMode::TNabla, limits);
  const ProfileSet q = complete_profile(rho, k, ProfileMode::Q, limits);
  report.t_vs_tdelta = hausdorff(t, td).distance;
  report.tnabla_vs_q = hausdorff(tn, q).distance;
  report.holds = *report.t_vs_tdelta <= report.bound && *report.tnabla_vs_q <= report.bound;
  return report;
}

// ---------------------------------------------------------------------------
// Limit-set filter

namespace {

Rational max_singleton(const QuotientPoint& p) {
  Rational best = p.coords[1];
  for (int i = 1; i < p.k; ++i) best = std::max(best, p.coords[std::size_t{1} << i]);
  return best;
}

}  // namespace

ProfileSet limit_set_filter(const ProfileSet& tset, int q, int n) {
  using boost::multiprecision::cpp_int;
  if (q < 2 || n < 1) throw InvalidArgumentError("limit_set_filter needs q >= 2 and n >= 1");
  const int k = tset.k();
  std::vector<QuotientPoint> kept;
  for (const auto& p : tset.points()) {
    const Rational m = max_singleton(p);
    if (m >= Rational(1)) {
      kept.push_back(p);
      continue;
    }
    // m >= 1 - log_q(k)/n  <=>  q^(n (1 - m)) <= k  <=>  q^(n (b - a)) <= k^b for m = a/b
    const auto a = m.num();
    const auto b = m.den();
    // Decide by logarithms when clearly separated; the exact power comparison
    // only runs when the two sides are close.
    const long double lhs_log = static_cast<long double>(n) * static_cast<long double>(b - a) * std::log2l(q);
    const long double rhs_log = static_cast<long double>(b) * std::log2l(k);
    const long double margin = 1e-9L * std::max(lhs_log, rhs_log) + 1e-6L;
    if (lhs_log > rhs_log + margin) continue;
    if (lhs_log < rhs_log - margin) {
      kept.push_back(p);
      continue;
    }
    if (lhs_log > 1e6L) throw CapError("limit_set_filter: exact comparison needs more than 2^1000000");
    const auto lhs_exp = static_cast<unsigned>(static_cast<std::int64_t>(n) * (b - a));
    const cpp_int lhs = boost::multiprecision::pow(cpp_int(q), lhs_exp);
    const cpp_int rhs = boost::multiprecision::pow(cpp_int(k), static_cast<unsigned>(b));
    if (lhs <= rhs) kept.push_back(p);
  }
  return ProfileSet(k, tset.mode(), tset.strategy(), std::move(kept),
                    "limit filter (q=" + std::to_string(q) + ", n=" + std::to_string(n) + ") of " +
                        tset.source());
}

ProfileSet limit_set_filter_exact(const ProfileSet& tset) {
  std::vector<QuotientPoint> kept;
  for (const auto& p : tset.points()) {
    if (max_singleton(p) >= Rational(1)) kept.push_back(p);
  }
  return ProfileSet(tset.k(), tset.mode(), tset.strategy(), std::move(kept),
                    "limit filter (threshold 1) of " + tset.source());
}

}  // namespace qconv
