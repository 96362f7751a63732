#include <doctest.h>

#include "gen.hpp"
#include "oracles.hpp"
#include "qconv/error.hpp"
#include "qconv/matroid.hpp"
#include "qconv/metric.hpp"

using namespace qconv;

namespace {

std::vector<oracle::BigPoint> bigv(const std::vector<QuotientPoint>& pts) {
  std::vector<oracle::BigPoint> out;
  for (const auto& p : pts) out.push_back(oracle::big(p));
  return out;
}

ProfileSet set_of(int k, std::vector<QuotientPoint> pts) {
  return ProfileSet(k, ProfileMode::Q, EnumStrategy::exact(), std::move(pts), "test");
}

}  // namespace

TEST_SUITE("metric") {
  TEST_CASE("linf distance") {
    const QuotientPoint a(1, {0, Rational(1, 3)}), b(1, {0, Rational(-1, 2)});
    CHECK(linf_distance(a, b) == Rational(5, 6));
    CHECK_THROWS_AS(linf_distance(a, QuotientPoint::zero(2)), DimensionMismatchError);
  }

  TEST_CASE("hausdorff matches the big-rational oracle on every backend") {
    Rng rng(61);
    for (int trial = 0; trial < 300; ++trial) {
      const int k = 1 + static_cast<int>(rng.below(3));
      const auto a = gen::cloud(rng, k, 30), b = gen::cloud(rng, k, 30);
      const auto expect = oracle::hausdorff(bigv(a), bigv(b));
      for (auto backend : {kernels::Backend::Scalar, kernels::Backend::Avx2}) {
        if (!kernels::backend_available(backend)) continue;
        const auto h = hausdorff(a, b, backend);
        REQUIRE(oracle::big(h.distance) == expect);
        REQUIRE(oracle::big(h.directed_ab) == oracle::directed(bigv(a), bigv(b)));
        // the witness attains the directed distance
        const auto w = directed_distance(std::vector<QuotientPoint>{h.witness_ab}, b, backend);
        REQUIRE(w.distance == h.directed_ab);
      }
      REQUIRE(directed_distance_rational(a, b).distance == directed_distance(a, b).distance);
    }
  }

  TEST_CASE("huge denominators fall back to the rational path") {
    const std::int64_t p1 = 1000000007, p2 = 998244353, p3 = 1000000009;
    const std::vector<QuotientPoint> a = {QuotientPoint(1, {0, Rational(1, p1)}), QuotientPoint(1, {0, Rational(1, p2)})};
    const std::vector<QuotientPoint> b = {QuotientPoint(1, {0, Rational(1, p3)})};
    const auto h = hausdorff(a, b);
    CHECK(oracle::big(h.distance) == oracle::hausdorff(bigv(a), bigv(b)));
  }

  TEST_CASE("empty and mismatched sets are errors") {
    const std::vector<QuotientPoint> none;
    const std::vector<QuotientPoint> one{QuotientPoint::zero(2)};
    CHECK_THROWS_AS(hausdorff(none, one), EmptyProfileError);
    CHECK_THROWS_AS(hausdorff(one, std::vector<QuotientPoint>{QuotientPoint::zero(1)}), DimensionMismatchError);
  }

  TEST_CASE("eps containment is exact at the directed distance") {
    Rng rng(71);
    for (int trial = 0; trial < 100; ++trial) {
      const auto a = set_of(2, gen::cloud(rng, 2, 10)), b = set_of(2, gen::cloud(rng, 2, 10));
      const Rational d = directed_distance(a.points(), b.points()).distance;
      REQUIRE(eps_contained(a, b, d).holds);
      if (!d.is_zero()) {
        const auto below = eps_contained(a, b, d - Rational(1, 1000000));
        REQUIRE_FALSE(below.holds);
        REQUIRE(below.witness);
      }
    }
    const auto x = set_of(1, {QuotientPoint(1, {0, 1})});
    const auto y = set_of(1, {QuotientPoint(1, {0, 0})});
    const auto r = eps_contained(x, y, Rational(1, 2));
    CHECK_FALSE(r.holds);
    CHECK(*r.witness == QuotientPoint(1, {0, 1}));
  }

  TEST_CASE("Q2 of GF(2)^2 lies within 1/2 of Q2 of GF(2)^4") {
    const auto s2 = profile(normalized_rank_oracle(std::make_shared<LinearMatroid>(LinearMatroid::full_space(2, 2))), 2,
                            ProfileMode::Q, EnumStrategy::exact());
    const auto s4 = profile(normalized_rank_oracle(std::make_shared<LinearMatroid>(LinearMatroid::full_space(2, 4))), 2,
                            ProfileMode::Q, EnumStrategy::exact());
    CHECK(eps_contained(s2, s4, Rational(1, 2)).holds);
  }

  TEST_CASE("cauchy diagnostic verdicts") {
    const auto a = set_of(1, {QuotientPoint(1, {0, 1})});
    const std::vector<ProfileSet> same(4, a);
    const auto d = cauchy_diagnostic(same);
    CHECK(d.verdict == Verdict::ConsistentWithCauchy);
    for (const auto& row : d.pairwise)
      for (const auto& v : row) CHECK(v.is_zero());

    const auto single = cauchy_diagnostic(std::vector<ProfileSet>{a});
    CHECK(single.pairwise.empty());
    CHECK(single.verdict == Verdict::Inconclusive);

    auto at = [](Rational x) { return set_of(1, {QuotientPoint(1, {0, x})}); };
    // alternating between 0 and 1: the tail never shrinks
    const std::vector<ProfileSet> alt = {at(0), at(1), at(0), at(1)};
    const auto da = cauchy_diagnostic(alt);
    CHECK(da.verdict == Verdict::Diverging);
    REQUIRE(da.witness);
    CHECK(da.witness->first == 2);
    // 0, 1/2, 3/4, 7/8: the tail supremum falls from 7/8 to 1/8
    const std::vector<ProfileSet> conv = {at(0), at(Rational(1, 2)), at(Rational(3, 4)), at(Rational(7, 8))};
    CHECK(cauchy_diagnostic(conv).verdict == Verdict::ConsistentWithCauchy);
    // tail goes from 1 to 0.6: between the two thresholds
    const std::vector<ProfileSet> mid = {at(0), at(1), at(Rational(2, 5))};
    CHECK(cauchy_diagnostic(mid).verdict == Verdict::Inconclusive);
    CHECK_THROWS_AS(cauchy_diagnostic(alt, Rational(1)), InvalidArgumentError);
  }

  TEST_CASE("cauchy matrix transposes under reversal") {
    Rng rng(83);
    std::vector<ProfileSet> sets;
    for (int i = 0; i < 5; ++i) sets.push_back(set_of(2, gen::cloud(rng, 2, 6)));
    const auto d = cauchy_diagnostic(sets);
    std::vector<ProfileSet> rev(sets.rbegin(), sets.rend());
    const auto r = cauchy_diagnostic(rev);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) CHECK(d.pairwise[i][j] == r.pairwise[4 - i][4 - j]);
  }
}
