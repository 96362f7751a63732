#include "qconv/metric.hpp"

#include <algorithm>
#include <numeric>

#include "qconv/error.hpp"

namespace qconv {

Rational linf_distance(const QuotientPoint& p, const QuotientPoint& q) {
  if (p.k != q.k || p.coords.size() != q.coords.size()) {
    throw DimensionMismatchError("linf_distance: points have k = " + std::to_string(p.k) + " and " +
                                 std::to_string(q.k));
  }
  Rational best;
  for (std::size_t i = 0; i < p.coords.size(); ++i) best = std::max(best, abs(p.coords[i] - q.coords[i]));
  return best;
}

namespace {

void check_sets(std::span<const QuotientPoint> a, std::span<const QuotientPoint> b) {
  if (a.empty() || b.empty()) throw EmptyProfileError();
  const int k = a.front().k;
  for (const auto& p : a)
    if (p.k != k) throw DimensionMismatchError("point set mixes different k");
  for (const auto& p : b)
    if (p.k != k) throw DimensionMismatchError("point sets have different k");
}

// Coordinates may differ by up to twice this bound without overflowing int64.
constexpr std::int64_t kLatticeBound = std::int64_t{1} << 61;

struct Lattice {
  std::int64_t scale = 1;
  std::size_t stride = 0;
  std::vector<std::int64_t> a, b;
};

std::optional<Lattice> to_lattice(std::span<const QuotientPoint> a, std::span<const QuotientPoint> b) {
  Lattice lat;
  try {
    for (auto set : {a, b})
      for (const auto& p : set)
        for (const auto& c : p.coords) lat.scale = lcm_checked(lat.scale, c.den());
  } catch (const RationalOverflowError&) {
    return std::nullopt;
  }
  const std::size_t dim = a.front().coords.size();
  lat.stride = kernels::lane_stride(dim);
  auto fill = [&](std::span<const QuotientPoint> set, std::vector<std::int64_t>& out) {
    out.assign(set.size() * lat.stride, 0);
    for (std::size_t i = 0; i < set.size(); ++i) {
      for (std::size_t c = 0; c < dim; ++c) {
        const Rational& r = set[i].coords[c];
        const __int128 v = static_cast<__int128>(r.num()) * (lat.scale / r.den());
        if (v >= kLatticeBound || v <= -kLatticeBound) return false;
        out[i * lat.stride + c] = static_cast<std::int64_t>(v);
      }
    }
    return true;
  };
  if (!fill(a, lat.a) || !fill(b, lat.b)) return std::nullopt;
  return lat;
}

}  // namespace

DirectedDistance directed_distance_rational(std::span<const QuotientPoint> a,
                                            std::span<const QuotientPoint> b) {
  check_sets(a, b);
  DirectedDistance out;
  bool first = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::optional<Rational> best;
    for (const auto& q : b) {
      const Rational d = linf_distance(a[i], q);
      if (!best || d < *best) best = d;
      if (!first && *best <= out.distance) break;
    }
    if (first || *best > out.distance) {
      out.distance = *best;
      out.witness = i;
      first = false;
    }
  }
  return out;
}

DirectedDistance directed_distance(std::span<const QuotientPoint> a, std::span<const QuotientPoint> b,
                                   kernels::Backend backend) {
  check_sets(a, b);
  const auto lat = to_lattice(a, b);
  if (!lat) return directed_distance_rational(a, b);
  const auto r = kernels::directed_linf(lat->a, lat->b, lat->stride, backend);
  return {Rational(r.distance, lat->scale), r.witness};
}

HausdorffReport hausdorff(std::span<const QuotientPoint> a, std::span<const QuotientPoint> b,
                          kernels::Backend backend) {
  const DirectedDistance ab = directed_distance(a, b, backend);
  const DirectedDistance ba = directed_distance(b, a, backend);
  HausdorffReport r;
  r.directed_ab = ab.distance;
  r.directed_ba = ba.distance;
  r.distance = std::max(ab.distance, ba.distance);
  r.witness_ab = a[ab.witness];
  r.witness_ba = b[ba.witness];
  return r;
}

HausdorffReport hausdorff(const ProfileSet& a, const ProfileSet& b, kernels::Backend backend) {
  if (a.k() != b.k()) throw DimensionMismatchError("hausdorff: profile sets have different k");
  return hausdorff(std::span<const QuotientPoint>(a.points()), std::span<const QuotientPoint>(b.points()),
                   backend);
}

EpsContainment eps_contained(const ProfileSet& a, const ProfileSet& b, const Rational& eps) {
  if (a.k() != b.k()) throw DimensionMismatchError("eps_contained: profile sets have different k");
  EpsContainment out;
  if (a.empty()) return out;
  if (b.empty()) {
    out.holds = false;
    out.witness = a.points().front();
    return out;
  }
  const DirectedDistance d = directed_distance(a.points(), b.points());
  if (d.distance > eps) {
    out.holds = false;
    out.witness = a.points()[d.witness];
  }
  return out;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::ConsistentWithCauchy: return "consistent";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::Diverging: return "diverging";
  }
  return "?";
}

ConvergenceDiagnostic cauchy_diagnostic(std::span<const ProfileSet> sets, const Rational& decrease_factor) {
  if (decrease_factor < Rational(0) || decrease_factor >= Rational(1))
    throw InvalidArgumentError("decrease factor must lie in [0, 1), got " + decrease_factor.to_string());
  ConvergenceDiagnostic diag;
  diag.decrease_factor = decrease_factor;
  const std::size_t n = sets.size();
  for (std::size_t i = 1; i < n; ++i) {
    if (sets[i].k() != sets[0].k()) throw DimensionMismatchError("cauchy_diagnostic: mixed k");
  }
  if (n < 2) return diag;
  diag.pairwise.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      diag.pairwise[i][j] = hausdorff(sets[i], sets[j]).distance;
      diag.pairwise[j][i] = diag.pairwise[i][j];
    }
  // Only tails with at least two members; a one-set tail is trivially 0.
  diag.tail_sup.assign(n - 1, Rational());
  for (std::size_t s = n - 1; s-- > 0;) {
    Rational m = s + 2 < n ? diag.tail_sup[s + 1] : Rational();
    for (std::size_t j = s + 1; j < n; ++j) m = std::max(m, diag.pairwise[s][j]);
    diag.tail_sup[s] = m;
  }
  const Rational first = diag.tail_sup.front();
  const Rational last = diag.tail_sup.back();
  const Rational keep = (Rational(1) + decrease_factor) / Rational(2);
  if (first.is_zero() || last <= decrease_factor * first) {
    diag.verdict = Verdict::ConsistentWithCauchy;
  } else if (last >= keep * first) {
    diag.verdict = Verdict::Diverging;
    diag.witness = std::make_pair(n - 2, n - 1);
  }
  return diag;
}

}  // namespace qconv
