#include "qconv/setfn.hpp"

#include <sstream>

#include "qconv/error.hpp"
#include "qconv/random.hpp"

namespace qconv {

GroundSet::GroundSet(int size, std::vector<std::string> labels)
    : size_(size), labels_(std::move(labels)) {
  if (size < 0 || size > kMaxWidth) {
    throw InvalidArgumentError("ground size must lie in [0, 64], got " + std::to_string(size));
  }
  if (!labels_.empty() && static_cast<int>(labels_.size()) != size) {
    throw InvalidArgumentError("ground set has " + std::to_string(size) + " elements but " +
                               std::to_string(labels_.size()) + " labels");
  }
}

std::string GroundSet::label(int i) const {
  return labels_.empty() ? std::to_string(i) : labels_[static_cast<std::size_t>(i)];
}

std::uint64_t GroundSet::full_bits() const {
  return size_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size_) - 1;
}

SubsetMask SubsetMask::full(int width) {
  return {width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1, width};
}

SubsetMask SubsetMask::of(int width, std::initializer_list<int> elements) {
  SubsetMask m = empty(width);
  for (int e : elements) {
    if (e < 0 || e >= width) throw InvalidArgumentError("element out of range");
    m = m.with(e);
  }
  return m;
}

SubsetMask SubsetMask::complement() const { return full(width).minus(*this); }

std::vector<int> SubsetMask::elements() const {
  std::vector<int> out;
  for (std::uint64_t b = bits; b; b &= b - 1) out.push_back(__builtin_ctzll(b));
  return out;
}

SetFunctionOracle::SetFunctionOracle(GroundSet ground, std::int64_t normalization, RawFn raw,
                                     std::string description)
    : ground_(std::move(ground)),
      normalization_(normalization),
      raw_fn_(std::move(raw)),
      description_(std::move(description)) {
  if (normalization_ <= 0) {
    throw DegenerateNormalizationError("setfunction normalization must be positive");
  }
  if (raw_fn_(0) != 0) {
    throw InvalidArgumentError("setfunction must vanish on the empty set: " + description_);
  }
}

std::int64_t SetFunctionOracle::raw(const SubsetMask& x) const {
  if (x.width != ground_.size()) throw MaskWidthError(x.width, ground_.size());
  return raw_bits(x.bits);
}

Rational SetFunctionOracle::evaluate(const SubsetMask& x) const {
  return Rational(raw(x), normalization_);
}

SetFunctionOracle SetFunctionOracle::tabulated(const Limits& limits) const {
  if (table_) return *this;
  const int n = ground_.size();
  if (n > limits.tabulate_cap) throw GroundTooLargeError(n, limits.tabulate_cap, "tabulate");
  auto table = std::make_shared<std::vector<std::int64_t>>(std::size_t{1} << n);
  for (std::uint64_t bits = 0; bits < table->size(); ++bits) (*table)[bits] = raw_fn_(bits);
  SetFunctionOracle copy = *this;
  copy.table_ = std::move(table);
  return copy;
}

SetFunctionOracle SetFunctionOracle::with_matroid(std::shared_ptr<const Matroid> m) const {
  SetFunctionOracle copy = *this;
  copy.matroid_ = std::move(m);
  return copy;
}

QuotientPoint::QuotientPoint(int k_, std::vector<Rational> coords_)
    : k(k_), coords(std::move(coords_)) {
  if (k < 0 || k >= 31 || coords.size() != (std::size_t{1} << k)) {
    throw DimensionMismatchError("quotient point for k = " + std::to_string(k_) + " needs 2^k = " +
                                 std::to_string(std::size_t{1} << std::min(k_, 30)) +
                                 " coordinates, got " + std::to_string(coords.size()));
  }
  if (!coords[0].is_zero()) throw InvalidArgumentError("quotient point must vanish on the empty set");
}

QuotientPoint QuotientPoint::zero(int k) {
  return QuotientPoint(k, std::vector<Rational>(std::size_t{1} << k));
}

const Rational& QuotientPoint::at(std::initializer_list<int> parts) const {
  std::size_t index = 0;
  for (int p : parts) {
    if (p < 1 || p > k) throw InvalidArgumentError("part index out of range");
    index |= std::size_t{1} << (p - 1);
  }
  return coords[index];
}

std::strong_ordering operator<=>(const QuotientPoint& a, const QuotientPoint& b) {
  if (auto c = a.k <=> b.k; c != 0) return c;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (auto c = a.coords[i] <=> b.coords[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const QuotientPoint& p) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i) out << ", ";
    out << p.coords[i].to_string();
  }
  out << ")";
  return out.str();
}

Rational evaluate(const SetFunctionOracle& oracle, const SubsetMask& x) {
  return oracle.evaluate(x);
}

QuotientPoint quotient_point(const SetFunctionOracle& oracle, std::span<const SubsetMask> tuple,
                             const Limits& limits) {
  const int k = static_cast<int>(tuple.size());
  if (k < 1) throw InvalidArgumentError("quotient tuple must have at least one part");
  if (k > limits.k_cap) throw KTooLargeError(k, limits.k_cap);
  for (const auto& m : tuple) {
    if (m.width != oracle.size()) throw MaskWidthError(m.width, oracle.size());
  }
  const std::size_t dim = std::size_t{1} << k;
  std::vector<std::uint64_t> unions(dim, 0);
  std::vector<Rational> coords(dim);
  for (std::size_t index = 1; index < dim; ++index) {
    const int low = __builtin_ctzll(index);
    unions[index] = unions[index & (index - 1)] | tuple[static_cast<std::size_t>(low)].bits;
    coords[index] = Rational(oracle.raw_bits(unions[index]), oracle.normalization());
  }
  return QuotientPoint(k, std::move(coords));
}

SetFunctionOracle point_oracle(const QuotientPoint& point) {
  std::int64_t scale = 1;
  for (const auto& c : point.coords) scale = lcm_checked(scale, c.den());
  auto table = std::make_shared<std::vector<std::int64_t>>();
  table->reserve(point.coords.size());
  for (const auto& c : point.coords) {
    const __int128 v = static_cast<__int128>(c.num()) * (scale / c.den());
    if (v > INT64_MAX || v < INT64_MIN) throw RationalOverflowError();
    table->push_back(static_cast<std::int64_t>(v));
  }
  return SetFunctionOracle(
      GroundSet(point.k), scale,
      [table](std::uint64_t bits) { return (*table)[bits]; },
      "point " + to_string(point));
}

namespace {

Rational submodular_slack(const SetFunctionOracle& f, std::uint64_t x, std::uint64_t y) {
  const std::int64_t s = f.raw_bits(x) + f.raw_bits(y) - f.raw_bits(x & y) - f.raw_bits(x | y);
  return Rational(s, f.normalization());
}

}  // namespace

std::vector<SubmodularViolation> check_submodular(const SetFunctionOracle& oracle,
                                                  const Limits& limits) {
  const int n = oracle.size();
  if (n > limits.submodular_exhaustive_cap) {
    throw GroundTooLargeError(n, limits.submodular_exhaustive_cap,
                              "check_submodular (use check_submodular_sampled)");
  }
  const SetFunctionOracle f = oracle.tabulated(limits);
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<SubmodularViolation> out;
  for (std::uint64_t x = 0; x < count; ++x) {
    for (std::uint64_t y = 0; y < count; ++y) {
      const std::int64_t s = f.raw_bits(x) + f.raw_bits(y) - f.raw_bits(x & y) - f.raw_bits(x | y);
      if (s < 0) {
        out.push_back({{x, n}, {y, n}, Rational(s, f.normalization())});
        if (out.size() >= limits.max_violations) return out;
      }
    }
  }
  return out;
}

std::vector<SubmodularViolation> check_submodular_sampled(const SetFunctionOracle& oracle,
                                                          std::uint64_t seed,
                                                          std::uint64_t samples,
                                                          const Limits& limits) {
  const int n = oracle.size();
  const std::uint64_t full = oracle.ground().full_bits();
  Rng rng(seed);
  std::vector<SubmodularViolation> out;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const std::uint64_t x = rng.next() & full;
    const std::uint64_t y = rng.next() & full;
    Rational slack = submodular_slack(oracle, x, y);
    if (slack < Rational(0)) {
      out.push_back({{x, n}, {y, n}, slack});
      if (out.size() >= limits.max_violations) break;
    }
  }
  return out;
}

std::vector<MonotoneViolation> check_monotone(const SetFunctionOracle& oracle,
                                              const Limits& limits) {
  const int n = oracle.size();
  if (n > limits.ground_cap) throw GroundTooLargeError(n, limits.ground_cap, "check_monotone");
  const SetFunctionOracle f = n <= limits.tabulate_cap ? oracle.tabulated(limits) : oracle;
  std::vector<MonotoneViolation> out;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < count; ++x) {
    const std::int64_t fx = f.raw_bits(x);
    for (int e = 0; e < n; ++e) {
      const std::uint64_t y = x | (std::uint64_t{1} << e);
      if (y == x) continue;
      const std::int64_t fy = f.raw_bits(y);
      if (fx > fy) {
        out.push_back({{x, n}, {y, n}, Rational(fx - fy, f.normalization())});
        if (out.size() >= limits.max_violations) return out;
      }
    }
  }
  return out;
}

std::vector<MonotoneViolation> check_monotone_sampled(const SetFunctionOracle& oracle,
                                                      std::uint64_t seed, std::uint64_t samples,
                                                      const Limits& limits) {
  const int n = oracle.size();
  const std::uint64_t full = oracle.ground().full_bits();
  Rng rng(seed);
  std::vector<MonotoneViolation> out;
  for (std::uint64_t s = 0; s < samples && n > 0; ++s) {
    const std::uint64_t y = rng.next() & full;
    const std::uint64_t x = y & rng.next();
    const std::int64_t fx = oracle.raw_bits(x);
    const std::int64_t fy = oracle.raw_bits(y);
    if (fx > fy) {
      out.push_back({{x, n}, {y, n}, Rational(fx - fy, oracle.normalization())});
      if (out.size() >= limits.max_violations) break;
    }
  }
  return out;
}

}  // namespace qconv
