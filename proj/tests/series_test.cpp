#include <gtest/gtest.h>

#include "gvpt/series.hpp"
#include "support.hpp"

namespace gvpt {
namespace {

using testing::dense;
using testing::ints;
using testing::random_series;
using testing::univariate;

LaurentSeries windowed(LaurentSeries s, const std::string& var, int lo, int hi) {
  s.set_window(var, lo, hi);
  return s;
}

TEST(Series, BinomPowNegativeExponent) {
  auto base = windowed(univariate("q", {1, 1}), "q", 0, 4);
  auto s = binom_pow(base, -2);
  EXPECT_EQ(dense(s, 0, 4), ints({1, -2, 3, -4, 5}));
}

TEST(Series, BinomPowStopsAtWindow) {
  auto base = windowed(univariate("Q", {1, 0, 0, -1}), "Q", 0, 3);
  auto s = binom_pow(base, 10);
  EXPECT_EQ(dense(s, 0, 3), ints({1, 0, 0, -10}));
}

TEST(Series, BinomPowTwoVariables) {
  VarContext ctx({"q", "Q"});
  LaurentSeries base = LaurentSeries::constant(ctx, 1);
  base.add_term(Monomial(std::vector<int>{1, 1}), 1);
  base.set_window("Q", 0, 2);
  auto s = binom_pow(base, 3);
  LaurentSeries expected = LaurentSeries::constant(ctx, 1);
  expected.add_term(Monomial(std::vector<int>{1, 1}), 3);
  expected.add_term(Monomial(std::vector<int>{2, 2}), 3);
  expected.set_window("Q", 0, 2);
  EXPECT_EQ(s, expected);
}

TEST(Series, HilbertSchemeCoefficients) {
  VarContext ctx({"q"});
  LaurentSeries prod = windowed(LaurentSeries::constant(ctx, 1), "q", 0, 4);
  for (int k = 1; k <= 4; ++k) {
    LaurentSeries base = LaurentSeries::constant(ctx, 1);
    base.add_term(Monomial(std::vector<int>{k}), -1);
    base.set_window("q", 0, 4);
    prod = prod * binom_pow(base, -3);
  }
  EXPECT_EQ(dense(prod, 0, 4), ints({1, 3, 9, 22, 51}));
}

TEST(Series, Errors) {
  auto bad_constant = windowed(univariate("q", {2, 1}), "q", 0, 3);
  EXPECT_THROW(binom_pow(bad_constant, 2), std::domain_error);
  // Unwindowed, so a negative power never terminates.
  EXPECT_THROW(binom_pow(univariate("q", {1, 1}), -1), std::domain_error);
  auto w = windowed(univariate("q", {1, 1}), "q", 0, 3);
  EXPECT_THROW(w.coefficient({4}), WindowError);
  EXPECT_THROW(univariate("q", {1}) + univariate("x", {1}), ContextMismatch);
  auto a = windowed(univariate("q", {1}), "q", 0, 1);
  auto b = windowed(univariate("q", {1}), "q", 3, 5);
  EXPECT_THROW(a * b, WindowError);
}

TEST(Series, NonnegativePowerNeedsNoWindow) {
  auto s = binom_pow(univariate("q", {1, 1}), 3);
  EXPECT_EQ(dense(s, 0, 3), ints({1, 3, 3, 1}));
}

TEST(Series, LaurentExponents) {
  auto a = univariate("q", {1, 2, 1}, -1);
  EXPECT_TRUE(symmetry_check(a, "q"));
  EXPECT_FALSE(symmetry_check(univariate("q", {1, 2}, -1), "q"));
  auto sq = a * a;
  EXPECT_EQ(dense(sq, -2, 2), ints({1, 4, 6, 4, 1}));
  int e[] = {3};
  EXPECT_EQ(dense(shift(a, e), 2, 4), ints({1, 2, 1}));
}

TEST(Series, SpecializeSign) {
  VarContext ctx({"q", "s"}, {"s"});
  LaurentSeries a(ctx);
  a.add_term(Monomial(std::vector<int>{1, 1}), 2);
  a.add_term(Monomial(std::vector<int>{1, -2}), 5);
  a.add_term(Monomial(std::vector<int>{0, 3}), 1);
  auto plus = specialize(a, "s", 1);
  auto minus = specialize(a, "s", -1);
  EXPECT_EQ(dense(plus, 0, 1), ints({1, 7}));
  EXPECT_EQ(dense(minus, 0, 1), ints({-1, 3}));
}

TEST(Series, JsonRoundTripAndOrder) {
  VarContext ctx({"q", "s"}, {"s"});
  LaurentSeries a(ctx);
  a.add_term(Monomial(std::vector<int>{1, -1}), Integer("123456789012345678901234567890"));
  a.add_term(Monomial(std::vector<int>{-2, 3}), -4);
  a.set_window("q", -3, 3);
  auto j = to_json(a);
  EXPECT_EQ(j.dump(),
            R"({"doubled":["s"],"terms":[{"c":"-4","e":[-2,3]},{"c":"123456789012345678901234567890","e":[1,-1]}],"vars":["q","s"],"window":{"q":[-3,3]}})");
  EXPECT_EQ(series_from_json(j), a);
}

class SeriesProperty : public ::testing::Test {
 protected:
  std::mt19937 rng{20240611};
  VarContext ctx{std::vector<std::string>{"x", "y"}};
};

TEST_F(SeriesProperty, RingAxioms) {
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_series(rng, ctx, -3, 3);
    auto b = random_series(rng, ctx, -3, 3);
    auto c = random_series(rng, ctx, -3, 3);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, LaurentSeries(ctx));
    EXPECT_EQ(a * LaurentSeries::constant(ctx, 1), a);
    EXPECT_EQ(Integer(3) * a, a + a + a);
  }
}

TEST_F(SeriesProperty, BinomPowExponentsAdd) {
  for (int trial = 0; trial < 60; ++trial) {
    LaurentSeries u = random_series(rng, ctx, 0, 3, 3);
    LaurentSeries base = LaurentSeries::constant(ctx, 1);
    for (const auto& [m, c] : u.terms()) {
      if (m[1] > 0) base.add_term(m, c);
    }
    base.set_window("y", 0, 5);
    base.set_window("x", 0, 6);
    int e1 = testing::uniform(rng, -4, 4);
    int e2 = testing::uniform(rng, -4, 4);
    EXPECT_EQ(binom_pow(base, e1) * binom_pow(base, e2), binom_pow(base, e1 + e2));
    EXPECT_EQ(binom_pow(base, e1) * binom_pow(base, -e1), binom_pow(base, 0));
    if (e1 >= 0) {
      LaurentSeries power = binom_pow(base, 0);
      for (int i = 0; i < e1; ++i) power = power * base;
      EXPECT_EQ(binom_pow(base, e1), power);
    }
  }
}

TEST_F(SeriesProperty, TruncationCoherence) {
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_series(rng, ctx, 0, 6);
    auto b = random_series(rng, ctx, 0, 6);
    auto wide = [](LaurentSeries s) { return windowed(std::move(s), "x", 0, 6); };
    auto narrow = [](LaurentSeries s) { return windowed(std::move(s), "x", 0, 3); };
    EXPECT_EQ(narrow(wide(a) * wide(b)), narrow(a) * narrow(b));
    EXPECT_EQ(narrow(wide(a) + wide(b)), narrow(a) + narrow(b));
    LaurentSeries base = LaurentSeries::constant(ctx, 1) + random_series(rng, ctx, 1, 3, 3);
    EXPECT_EQ(narrow(binom_pow(wide(base), -3)), binom_pow(narrow(base), -3));
  }
}

TEST_F(SeriesProperty, JsonRoundTrip) {
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_series(rng, ctx, -5, 5, 10);
    EXPECT_EQ(series_from_json(to_json(a)), a);
    EXPECT_EQ(to_json(series_from_json(to_json(a))).dump(), to_json(a).dump());
  }
}

}  // namespace
}  // namespace gvpt
