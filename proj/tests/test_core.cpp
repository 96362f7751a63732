#include <doctest.h>

#include "gen.hpp"
#include "oracles.hpp"
#include "qconv/error.hpp"
#include "qconv/setfn.hpp"

using namespace qconv;

TEST_SUITE("rational") {
  TEST_CASE("lowest terms with positive denominator") {
    CHECK(Rational(6, -8) == Rational(-3, 4));
    CHECK(Rational(6, -8).den() == 4);
    CHECK(Rational(0, 5).to_string() == "0/1");
    CHECK(Rational(2).to_string() == "2/1");
    CHECK_THROWS_AS(Rational(1, 0), InvalidArgumentError);
  }

  TEST_CASE("parse and print round trip") {
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("10/4").to_string() == "5/2");
    CHECK_THROWS(Rational::parse("1/x"));
    CHECK_THROWS(Rational::parse(""));
  }

  TEST_CASE("overflow is an error, never a rounded value") {
    const Rational big(INT64_MAX);
    CHECK_THROWS_AS(big + Rational(1), RationalOverflowError);
    CHECK_THROWS_AS(big * Rational(2), RationalOverflowError);
    CHECK_THROWS_AS(lcm_checked(INT64_MAX, INT64_MAX - 1), RationalOverflowError);
    CHECK(Rational(INT64_MAX, 3) * Rational(3, INT64_MAX) == Rational(1));
  }

  TEST_CASE("arithmetic and order agree with big rationals") {
    Rng rng(11);
    for (int i = 0; i < 2000; ++i) {
      const Rational a = gen::rational(rng, 1000, 1000), b = gen::rational(rng, 1000, 1000);
      const auto ba = oracle::big(a), bb = oracle::big(b);
      REQUIRE(oracle::big(a + b) == ba + bb);
      REQUIRE(oracle::big(a - b) == ba - bb);
      REQUIRE(oracle::big(a * b) == ba * bb);
      if (!b.is_zero()) REQUIRE(oracle::big(a / b) == ba / bb);
      REQUIRE((a < b) == (ba < bb));
      REQUIRE((a == b) == (ba == bb));
    }
  }
}

TEST_SUITE("setfn") {
  TEST_CASE("oracles must vanish on the empty set") {
    CHECK_THROWS_AS(SetFunctionOracle(GroundSet(2), 1, [](std::uint64_t) { return std::int64_t{1}; }, "c"),
                    InvalidArgumentError);
    CHECK_THROWS_AS(SetFunctionOracle(GroundSet(2), 0, [](std::uint64_t) { return std::int64_t{0}; }, "z"),
                    DegenerateNormalizationError);
  }

  TEST_CASE("mask width is checked") {
    const SetFunctionOracle f(GroundSet(3), 1, [](std::uint64_t x) { return static_cast<std::int64_t>(x); }, "id");
    CHECK_THROWS_AS(f.evaluate(SubsetMask::full(4)), MaskWidthError);
    CHECK(f.evaluate(SubsetMask::of(3, {0, 2})) == Rational(5));
  }

  TEST_CASE("subset index convention: I = sum of 2^(i-1)") {
    // phi(X) = 1 + 10 * [0 in X] + 100 * [1 in X] - 1 on nonempty X
    const SetFunctionOracle f(GroundSet(3), 1, [](std::uint64_t x) {
      return static_cast<std::int64_t>((x & 1 ? 1 : 0) + (x & 2 ? 10 : 0) + (x & 4 ? 100 : 0));
    }, "weights");
    const std::vector<SubsetMask> tuple{SubsetMask::of(3, {1}), SubsetMask::of(3, {0, 2})};
    const QuotientPoint p = quotient_point(f, tuple);
    REQUIRE(p.dimension() == 4);
    CHECK(p[0] == Rational(0));
    CHECK(p[1] == Rational(10));   // part 1
    CHECK(p[2] == Rational(101));  // part 2
    CHECK(p[3] == Rational(111));
    CHECK(p.at({2}) == Rational(101));
    CHECK(p.at({1, 2}) == Rational(111));
  }

  TEST_CASE("quotient points match direct evaluation on random setfunctions") {
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 1 + static_cast<int>(rng.below(6));
      const int k = 1 + static_cast<int>(rng.below(3));
      const auto f = gen::setfunction(rng, n);
      std::vector<SubsetMask> tuple;
      for (int i = 0; i < k; ++i) tuple.push_back({rng.next() & SubsetMask::full(n).bits, n});
      const QuotientPoint p = quotient_point(f, tuple);
      for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << k); ++idx) {
        std::uint64_t x = 0;
        for (int i = 0; i < k; ++i)
          if ((idx >> i) & 1u) x |= tuple[static_cast<std::size_t>(i)].bits;
        REQUIRE(p[idx] == Rational(f.raw_bits(x), f.normalization()));
      }
    }
  }

  TEST_CASE("point oracle reads a point back as a setfunction") {
    Rng rng(8);
    for (int trial = 0; trial < 100; ++trial) {
      const QuotientPoint p = gen::point(rng, 3);
      const auto f = point_oracle(p);
      REQUIRE(f.size() == 3);
      for (std::uint64_t x = 0; x < 8; ++x) REQUIRE(f.evaluate({x, 3}) == p[x]);
    }
  }

  TEST_CASE("submodularity and monotonicity checkers agree with brute force") {
    Rng rng(21);
    for (int trial = 0; trial < 150; ++trial) {
      const int n = 1 + static_cast<int>(rng.below(4));
      const auto f = gen::setfunction(rng, n, 3);
      const std::uint64_t full = SubsetMask::full(n).bits;
      bool submodular = true, monotone = true;
      for (std::uint64_t x = 0; x <= full; ++x)
        for (std::uint64_t y = 0; y <= full; ++y) {
          if (f.raw_bits(x) + f.raw_bits(y) < f.raw_bits(x & y) + f.raw_bits(x | y)) submodular = false;
          if ((x & ~y) == 0 && f.raw_bits(x) > f.raw_bits(y)) monotone = false;
        }
      const auto sv = check_submodular(f);
      REQUIRE(sv.empty() == submodular);
      for (const auto& v : sv) REQUIRE(v.slack < Rational(0));
      const auto mv = check_monotone(f);
      REQUIRE(mv.empty() == monotone);
      for (const auto& v : mv) {
        REQUIRE(v.smaller.is_subset_of(v.larger));
        REQUIRE(v.drop > Rational(0));
      }
    }
  }

  TEST_CASE("tabulated copy returns the same values") {
    Rng rng(3);
    const auto f = gen::setfunction(rng, 5);
    const auto t = f.tabulated();
    CHECK(t.is_tabulated());
    for (std::uint64_t x = 0; x < 32; ++x) CHECK(t.raw_bits(x) == f.raw_bits(x));
    Limits small;
    small.tabulate_cap = 4;
    CHECK_THROWS_AS(f.tabulated(small), GroundTooLargeError);
  }

  TEST_CASE("k above the cap is a cap error") {
    const SetFunctionOracle f(GroundSet(2), 1, [](std::uint64_t x) { return static_cast<std::int64_t>(x != 0); }, "one");
    std::vector<SubsetMask> nine(9, SubsetMask::empty(2));
    CHECK_THROWS_AS(quotient_point(f, nine), KTooLargeError);
  }
}
