#include <gtest/gtest.h>

#include "gvpt/correspond.hpp"
#include "gvpt/symprod.hpp"
#include "support.hpp"

namespace gvpt {
namespace {

using testing::uniform;

ExpansionWindow window(int d_max, int q_min, int q_max) {
  ExpansionWindow w;
  w.d_max = d_max;
  w.q_min = q_min;
  w.q_max = q_max;
  return w;
}

GVTable solved(int d_max) {
  GVTable gv;
  for (int d = 1; d <= d_max; ++d) gv[d] = gv_solve(d).values;
  return gv;
}

RefinedTable random_refined(std::mt19937& rng, int max_spin) {
  RefinedTable t;
  int parity = uniform(rng, 0, 1);
  int entries = uniform(rng, 1, 3);
  for (int i = 0; i < entries; ++i) {
    int a = uniform(rng, 0, max_spin);
    int b = uniform(rng, 0, max_spin);
    if ((a + b) % 2 != parity) a = a == 0 ? 1 : a - 1;
    t.add({a, b}, uniform(rng, -3, 3));
  }
  return t;
}

TEST(Correspond, UnrefinedExamples) {
  auto z1 = ztpt_unrefined({{1, {{0, 3}}}}, window(1, 0, 4));
  EXPECT_EQ(z1.coefficient({1, 1}), 3);
  auto z2 = ztpt_unrefined(solved(2), window(2, 0, 6));
  EXPECT_EQ(z2.coefficient({2, 2}), 15);
  auto empty = ztpt_unrefined({}, window(3, -2, 6));
  ASSERT_EQ(empty.terms().size(), 1u);
  EXPECT_EQ(empty.coefficient({0, 0}), 1);
  auto zero = ztpt_unrefined({{1, {{0, 0}}}, {2, {}}}, window(3, -2, 6));
  EXPECT_EQ(zero, empty);
}

TEST(Correspond, PtExtraction) {
  auto z = ztpt_unrefined(solved(3), window(3, 0, 8));
  EXPECT_EQ(pt_from_ztpt(z, 3, 0), -10);
  EXPECT_EQ(pt_from_ztpt(z, 2, 3), 66);
  EXPECT_EQ(pt_from_ztpt(z, 1, 0), 3);
  EXPECT_THROW(pt_from_ztpt(z, 3, 9), WindowError);
}

TEST(Correspond, Crosscheck) {
  auto r1 = crosscheck_unrefined(1);
  EXPECT_TRUE(r1.pass);
  ASSERT_EQ(r1.checked.size(), 3u);
  EXPECT_EQ(r1.checked[0].value, 3);
  EXPECT_EQ(r1.checked[1].value, -6);
  EXPECT_EQ(r1.checked[2].value, 9);
  auto r2 = crosscheck_unrefined(2);
  EXPECT_TRUE(r2.pass);
  EXPECT_EQ(r2.checked.size(), 7u);
  auto r5 = crosscheck_unrefined(5);
  EXPECT_TRUE(r5.pass);
  EXPECT_EQ(r5.checked.size(), 25u);
  EXPECT_THROW(crosscheck_unrefined(6), std::invalid_argument);
}

TEST(Correspond, CrosscheckDetectsWrongTable) {
  GVTable gv = solved(3);
  gv[3][1] += 1;
  auto z = ztpt_unrefined(gv, window(3, 0, 8));
  EXPECT_NE(pt_from_ztpt(z, 3, 0), pt_invariant(3, 0));
}

TEST(Correspond, LinearTermIsBpsPolynomial) {
  // With entries in one degree only, the Q^d coefficient is the sum of the
  // linear terms of the factors: genus 0 gives sum_j j n (-1)^{j+1} q^j, genus
  // g >= 1 gives n q^{g-1} (1 + q^{-1})^{2g-2}.
  std::mt19937 rng(515);
  const int q_min = -3;
  const int q_max = 8;
  for (int trial = 0; trial < 30; ++trial) {
    std::map<int, Integer> row;
    for (int g = 0; g <= 4; ++g) row[g] = uniform(rng, -5, 5);
    auto z = ztpt_unrefined({{2, row}}, window(2, q_min, q_max));
    LaurentSeries expected(VarContext({"q"}));
    for (int j = 1; j <= q_max; ++j) {
      expected.add_term(Monomial(std::vector<int>{j}), Integer(j) * row[0] * (j % 2 == 1 ? 1 : -1));
    }
    for (int g = 1; g <= 4; ++g) {
      for (int k = 0; k <= 2 * g - 2; ++k) {
        expected.add_term(Monomial(std::vector<int>{g - 1 - k}), row[g] * binomial(2 * g - 2, k));
      }
    }
    for (int q = q_min; q <= q_max; ++q) EXPECT_EQ(z.coefficient({q, 2}), expected.coefficient({q}));
    EXPECT_EQ(z.coefficient({0, 1}), 0);
  }
}

TEST(Correspond, WindowMonotone) {
  GVTable gv = solved(4);
  auto small = ztpt_unrefined(gv, window(3, -2, 6));
  auto large = ztpt_unrefined(gv, window(4, -3, 10));
  for (int d = 0; d <= 3; ++d) {
    for (int q = -2; q <= 6; ++q) EXPECT_EQ(small.coefficient({q, d}), large.coefficient({q, d}));
  }
}

TEST(Correspond, RefinedSingleFactor) {
  auto z = ztpt_refined({{1, RefinedTable{{{0, 0}, 1}}}}, window(1, 0, 4));
  LaurentSeries expected(z.context());
  for (int m = 1; m <= 4; ++m) {
    for (int j = 0; j <= m - 1; ++j) {
      expected.add_term(Monomial(std::vector<int>{m, -m + 1 + 2 * j, 1}), m % 2 == 0 ? -1 : 1);
    }
  }
  for (const auto& [mono, c] : z.terms()) {
    if (mono[2] == 1) EXPECT_EQ(c, expected.coefficient(std::vector<int>{mono[0], mono[1], 1}));
  }
  for (const auto& [mono, c] : expected.terms()) {
    EXPECT_EQ(z.coefficient(std::vector<int>{mono[0], mono[1], mono[2]}), c);
  }
  auto empty = ztpt_refined({}, window(2, 0, 4));
  ASSERT_EQ(empty.terms().size(), 1u);
  EXPECT_EQ(empty.coefficient({0, 0, 0}), 1);
}

// The Euler point of the refined variables lies at s = +1, where r = -1 and
// the spin carried by s reduces to a signed dimension.
TEST(Correspond, RefinedReducesAtEulerPoint) {
  RefinedTables tables{{1, RefinedTable{{{2, 0}, 1}}}};
  EXPECT_TRUE(refined_consistency(tables, window(2, 0, 8), 1).pass);
  std::mt19937 rng(8080);
  for (int trial = 0; trial < 20; ++trial) {
    RefinedTables random{{1, random_refined(rng, 3)}, {2, random_refined(rng, 3)}};
    EXPECT_TRUE(refined_consistency(random, window(2, -3, 8), 1).pass) << trial;
  }
}

TEST(Correspond, RefinedAtMinusOneDiffers) {
  // At s = -1 each factor becomes 1 + (-1)^m q^m Q, which changes the sign of
  // even-degree cross terms.
  RefinedTables tables{{1, RefinedTable{{{0, 0}, 1}}}};
  auto report = refined_consistency(tables, window(1, 0, 8), -1);
  EXPECT_FALSE(report.pass);
  ASSERT_FALSE(report.mismatches.empty());
  EXPECT_EQ(report.mismatches.front().n, 1);
  EXPECT_EQ(report.mismatches.front().expected, -2);
  EXPECT_EQ(report.mismatches.front().got, 2);
}

TEST(Correspond, NaiveCheck) {
  EXPECT_TRUE(naive_check(0, 1, 8).pass);
  EXPECT_TRUE(naive_check(1, 1, 8).pass);
  EXPECT_TRUE(naive_check(2, 5, 8).pass);
  auto s = macdonald_series(1, 1, 2);
  EXPECT_EQ(s.coefficient({2, 3}), 2);
}

TEST(Correspond, ReportJson) {
  auto j = to_json(crosscheck_unrefined(1));
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["checked"].size(), 3u);
  EXPECT_EQ(j["checked"][0].dump(), R"({"d":1,"n":0,"value":"3"})");
  EXPECT_TRUE(j["mismatches"].empty());
}

}  // namespace
}  // namespace gvpt
