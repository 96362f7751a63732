#include <doctest.h>

#include "gen.hpp"
#include "oracles.hpp"
#include "qconv/error.hpp"
#include "qconv/matroid.hpp"
#include "qconv/profiles.hpp"

using namespace qconv;

namespace {

oracle::Mode to_oracle(ProfileMode m) {
  switch (m) {
    case ProfileMode::Q: return oracle::Mode::Q;
    case ProfileMode::T: return oracle::Mode::T;
    case ProfileMode::TDelta: return oracle::Mode::TDelta;
    case ProfileMode::TNabla: return oracle::Mode::TNabla;
  }
  return oracle::Mode::T;
}

std::set<oracle::BigPoint> brute(const SetFunctionOracle& f, int k, ProfileMode mode) {
  return oracle::profile(f.size(), k, to_oracle(mode),
                         [&](std::uint64_t x) { return oracle::Big(f.raw_bits(x)) / oracle::Big(f.normalization()); });
}

constexpr ProfileMode kModes[] = {ProfileMode::Q, ProfileMode::T, ProfileMode::TDelta, ProfileMode::TNabla};

MatroidPtr space(int q, int n) { return std::make_shared<LinearMatroid>(LinearMatroid::full_space(q, n)); }

}  // namespace

TEST_SUITE("profiles") {
  TEST_CASE("mode and strategy names round trip") {
    for (auto m : kModes) CHECK(parse_mode(mode_name(m)) == m);
    CHECK(parse_mode("tdelta") == ProfileMode::TDelta);
    CHECK_THROWS_AS(parse_mode("X"), InvalidArgumentError);
    for (auto k : {EnumStrategy::Kind::Exact, EnumStrategy::Kind::Sampled, EnumStrategy::Kind::FlatsOnly})
      CHECK(parse_strategy_kind(strategy_name(k)) == k);
  }

  TEST_CASE("exact profiles equal direct tuple enumeration") {
    Rng rng(101);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 1 + static_cast<int>(rng.below(4));
      const int k = 1 + static_cast<int>(rng.below(3));
      const auto f = gen::setfunction(rng, n);
      for (auto mode : kModes) {
        const ProfileSet p = profile(f, k, mode, EnumStrategy::exact());
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(mode_name(mode));
        REQUIRE(oracle::big(p.points()) == brute(f, k, mode));
        REQUIRE(std::is_sorted(p.points().begin(), p.points().end()));
      }
    }
  }

  TEST_CASE("matroid profiles equal direct tuple enumeration") {
    const std::vector<MatroidPtr> ms = {space(2, 2), std::make_shared<GraphicMatroid>(SimpleGraph::complete(3)),
                                        std::make_shared<GraphicMatroid>(SimpleGraph::cycle(4))};
    for (const auto& m : ms) {
      const auto f = normalized_rank_oracle(m);
      for (auto mode : kModes)
        REQUIRE(oracle::big(profile(f, 2, mode, EnumStrategy::exact()).points()) == brute(f, 2, mode));
    }
  }

  TEST_CASE("flats-only equals exact for T and T-Nabla of rank functions") {
    for (const auto& m : {space(2, 2), space(2, 3), space(3, 2)}) {
      const auto f = normalized_rank_oracle(m);
      for (int k = 1; k <= 2; ++k)
        for (auto mode : {ProfileMode::T, ProfileMode::TNabla})
          REQUIRE(profile(f, k, mode, EnumStrategy::flats_only()).same_points(profile(f, k, mode, EnumStrategy::exact())));
    }
  }

  TEST_CASE("flats-only is rejected where it is not exact") {
    const auto f = normalized_rank_oracle(space(2, 2));
    CHECK_THROWS_AS(profile(f, 2, ProfileMode::Q, EnumStrategy::flats_only()), InvalidArgumentError);
    CHECK_THROWS_AS(profile(f, 2, ProfileMode::TDelta, EnumStrategy::flats_only()), InvalidArgumentError);
    Rng rng(2);
    CHECK_THROWS_AS(profile(gen::setfunction(rng, 3), 2, ProfileMode::T, EnumStrategy::flats_only()), InvalidArgumentError);
  }

  TEST_CASE("sampled profiles are inner approximations and reproducible") {
    Rng rng(55);
    for (int trial = 0; trial < 30; ++trial) {
      const auto f = gen::setfunction(rng, 5);
      for (auto mode : kModes) {
        const auto exact = profile(f, 2, mode, EnumStrategy::exact());
        const auto a = profile(f, 2, mode, EnumStrategy::sampled(trial, 40));
        const auto b = profile(f, 2, mode, EnumStrategy::sampled(trial, 40));
        REQUIRE(a.is_subset_of(exact));
        REQUIRE(a.same_points(b));
        REQUIRE_FALSE(a.empty());
      }
    }
  }

  TEST_CASE("iteration counts and the cap") {
    CHECK(exact_iteration_count(4, 2, ProfileMode::Q) == doctest::Approx(16));
    CHECK(exact_iteration_count(4, 2, ProfileMode::TDelta) == doctest::Approx(81));
    CHECK(exact_iteration_count(4, 2, ProfileMode::TNabla) == doctest::Approx(81));
    CHECK(exact_iteration_count(4, 2, ProfileMode::T) == doctest::Approx(256));
    Limits small;
    small.iteration_cap = 100;
    Rng rng(1);
    const auto f = gen::setfunction(rng, 4);
    CHECK_THROWS_AS(profile(f, 2, ProfileMode::T, EnumStrategy::exact(), small), EnumCapError);
    CHECK_NOTHROW(profile(f, 2, ProfileMode::Q, EnumStrategy::exact(), small));
  }

  TEST_CASE("composition identities on a random setfunction") {
    Rng rng(77);
    const auto f = gen::setfunction(rng, 3, 4);
    const auto t2 = profile(f, 2, ProfileMode::T, EnumStrategy::exact());
    CHECK(compose(f, 2, 3, ProfileMode::Q, ProfileMode::T).same_points(t2));
    CHECK(compose(f, 2, 3, ProfileMode::T, ProfileMode::T).same_points(t2));
    CHECK(compose(f, 2, 4, ProfileMode::T, ProfileMode::Q).same_points(t2));
    CHECK(compose(f, 2, 3, ProfileMode::Q, ProfileMode::Q).same_points(profile(f, 2, ProfileMode::Q, EnumStrategy::exact())));
  }

  TEST_CASE("inclusion chains hold on random setfunctions") {
    Rng rng(9);
    for (int trial = 0; trial < 40; ++trial) {
      const auto r = verify_inclusions(gen::setfunction(rng, 1 + static_cast<int>(rng.below(4))), 2);
      REQUIRE(r.links.size() == 4);
      REQUIRE(r.all_hold());
    }
  }

  TEST_CASE("profile set membership helpers") {
    const auto f = normalized_rank_oracle(space(2, 2));
    const auto q = profile(f, 2, ProfileMode::Q, EnumStrategy::exact());
    const auto t = profile(f, 2, ProfileMode::T, EnumStrategy::exact());
    CHECK(q.is_subset_of(t));
    CHECK_FALSE(t.is_subset_of(q));
    const auto missing = t.first_missing_from(q);
    REQUIRE(missing);
    CHECK_FALSE(q.contains(*missing));
    CHECK(t.contains(*missing));
  }

  TEST_CASE("delta bound precondition") {
    const auto r = delta_approx_bound_check(space(2, 3), 2, 4);
    CHECK(r.precondition_met);
    CHECK(r.bound == Rational(8, 3));
    CHECK(r.holds);
    const auto k3 = delta_approx_bound_check(std::make_shared<GraphicMatroid>(SimpleGraph::complete(3)), 2, 1);
    CHECK_FALSE(k3.precondition_met);
    CHECK_FALSE(k3.t_vs_tdelta);
  }

  TEST_CASE("limit set filters compare exactly") {
    const std::vector<QuotientPoint> pts = {
        QuotientPoint(2, {0, Rational(1, 5), Rational(1, 5), Rational(1)}),
        QuotientPoint(2, {0, Rational(21, 100), Rational(0), Rational(1)}),
        QuotientPoint(2, {0, Rational(1), Rational(0), Rational(1)}),
    };
    const ProfileSet s(2, ProfileMode::T, EnumStrategy::exact(), pts, "hand");
    CHECK(limit_set_filter(s, 2, 2).size() == 1);  // threshold 1/2
    CHECK(limit_set_filter(s, 2, 10).size() == 1);  // threshold 9/10
    // threshold 1 - log_3(2) ~ 0.369 keeps only the last point
    CHECK(limit_set_filter(s, 3, 1).size() == 1);
    // q = 2, n = 1: threshold 0, everything passes
    CHECK(limit_set_filter(s, 2, 1).size() == 3);
    const ProfileSet edge(2, ProfileMode::T, EnumStrategy::exact(), {QuotientPoint(2, {0, Rational(4, 5), 0, Rational(1)})}, "edge");
    CHECK(limit_set_filter(edge, 2, 5).size() == 1);  // 1 - 1/5 = 4/5 exactly
    CHECK(limit_set_filter(edge, 2, 6).empty());
    const auto kept3 = limit_set_filter(ProfileSet(3, ProfileMode::T, EnumStrategy::exact(), {}, "e"), 2, 2);
    CHECK(kept3.empty());
    CHECK(limit_set_filter_exact(s).size() == 1);
  }
}
