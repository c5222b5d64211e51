#include <gtest/gtest.h>

#include <random>
#include <set>

#include "seqspectra/code.hpp"
#include "seqspectra/oracle.hpp"

using namespace seqspectra;

namespace {

const FieldCtx& f331() {
  static const FieldCtx ctx = FieldCtx::build(3, 3, 1);
  return ctx;
}

WeightDistribution wd(std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> xs) {
  WeightDistribution out;
  for (auto [w, c] : xs) out.add(w, c);
  return out;
}

}  // namespace

TEST(Codeword, ZeroAndMSequenceWords) {
  const auto& ctx = f331();
  EXPECT_EQ(oracle::naive_weight(codeword(ctx, ctx.zero(), ctx.zero()).symbols), 0u);
  for (std::uint64_t a = 1; a < ctx.size(); ++a)
    EXPECT_EQ(oracle::naive_weight(codeword(ctx, ctx.from_code(a), ctx.zero()).symbols), 18u);
}

TEST(Codeword, MatchesFieldArithmetic) {
  const auto ctx = FieldCtx::build(7, 3, 1);
  std::mt19937_64 rng(6);
  for (int t = 0; t < 20; ++t) {
    const FieldElement a = ctx.from_code(rng() % ctx.size()), b = ctx.from_code(rng() % ctx.size());
    EXPECT_EQ(codeword(ctx, a, b).symbols, oracle::naive_codeword(ctx, a, b));
  }
}

TEST(Codeword, CyclicShift) {
  const auto ctx = FieldCtx::build(7, 3, 1);
  std::mt19937_64 rng(12);
  const FieldElement alpha = ctx.alpha(), alpha_d = ctx.pow(alpha, ctx.params().d);
  for (int t = 0; t < 50; ++t) {
    const FieldElement a = ctx.from_code(rng() % ctx.size()), b = ctx.from_code(rng() % ctx.size());
    auto shifted = codeword(ctx, a, b).symbols;
    std::rotate(shifted.begin(), shifted.begin() + 1, shifted.end());
    EXPECT_EQ(shifted, codeword(ctx, ctx.mul(a, alpha), ctx.mul(b, alpha_d)).symbols);
  }
}

TEST(Codeword, Linearity) {
  const auto& ctx = f331();
  std::mt19937_64 rng(14);
  for (int t = 0; t < 100; ++t) {
    const FieldElement a1 = ctx.from_code(rng() % 27), b1 = ctx.from_code(rng() % 27);
    const FieldElement a2 = ctx.from_code(rng() % 27), b2 = ctx.from_code(rng() % 27);
    const auto c1 = codeword(ctx, a1, b1).symbols, c2 = codeword(ctx, a2, b2).symbols;
    const auto sum = codeword(ctx, ctx.add(a1, a2), ctx.add(b1, b2)).symbols;
    for (std::size_t i = 0; i < sum.size(); ++i) EXPECT_EQ(sum[i], (c1[i] + c2[i]) % 3);
  }
}

TEST(Codeword, AllDistinctOn331) {
  const auto& ctx = f331();
  std::set<std::vector<std::uint32_t>> words;
  for (std::uint64_t a = 0; a < 27; ++a)
    for (std::uint64_t b = 0; b < 27; ++b) {
      const auto w = codeword(ctx, ctx.from_code(a), ctx.from_code(b)).symbols;
      if (a || b) {
        EXPECT_NE(oracle::naive_weight(w), 0u);
      }
      words.insert(w);
    }
  EXPECT_EQ(words.size(), 729u);
  EXPECT_TRUE(dimension_check(ctx));
}

TEST(Weight, FromValueExamples) {
  const auto& ctx = f331();
  EXPECT_EQ(weight_from_value(ctx, QuadValue{54, 0}), 0u);
  EXPECT_EQ(weight_from_value(ctx, QuadValue{0, 6}), 18u);
  EXPECT_EQ(weight_from_value(ctx, QuadValue{9, 3}), 15u);
  EXPECT_EQ(weight_from_value(ctx, QuadValue{-9, 3}), 21u);
  EXPECT_EQ(weight_from_value(ctx, QuadValue{0, 12}), 18u);
  EXPECT_THROW((void)weight_from_value(ctx, QuadValue{1, 0}), Error);
}

TEST(Weight, ViaMuEqualsNaiveExhaustively) {
  for (auto [p, n, k] : {std::array<int, 3>{3, 3, 1}, {7, 3, 1}}) {
    const auto ctx = FieldCtx::build(p, n, k);
    std::uint64_t bad = 0;
    for (std::uint64_t a = 0; a < ctx.size(); ++a)
      for (std::uint64_t b = 0; b < ctx.size(); ++b) {
        const FieldElement fa = ctx.from_code(a), fb = ctx.from_code(b);
        bad += weight_via_mu(ctx, fa, fb) != oracle::naive_weight(codeword(ctx, fa, fb).symbols);
      }
    EXPECT_EQ(bad, 0u) << p << "," << n << "," << k;
  }
}

TEST(WeightDistribution, Table331) {
  const auto& ctx = f331();
  const auto expected = wd({{0, 1}, {15, 312}, {18, 260}, {21, 156}});
  EXPECT_EQ(closed_form_weight_distribution(ctx), expected);
  EXPECT_EQ(weight_distribution(ctx), expected);
  EXPECT_EQ(oracle::naive_weight_distribution(ctx, 4), expected);
  EXPECT_EQ(expected.total(), 729u);
}

TEST(WeightDistribution, Field731) {
  const auto ctx = FieldCtx::build(7, 3, 1);
  const auto closed = closed_form_weight_distribution(ctx);
  EXPECT_EQ(closed.count(0), 1u);
  EXPECT_GT(closed.count(294), 0u);
  EXPECT_GT(closed.count(294 + 21), 0u);  // ½(p-1)p^{(n+k)/2-1} = 3·7
  EXPECT_GT(closed.count(294 - 21), 0u);
  EXPECT_EQ(closed.normalized().entries.size(), 4u);
  EXPECT_EQ(closed.total(), 117649u);
  EXPECT_EQ(weight_distribution(ctx, 4), closed);
  EXPECT_EQ(oracle::naive_weight_distribution(ctx, 8), closed);
}

TEST(WeightDistribution, KEqualsNCollapses) {
  const auto ctx = FieldCtx::build(3, 3, 3);
  const auto closed = closed_form_weight_distribution(ctx).normalized();
  EXPECT_EQ(closed.entries.size(), 3u);  // the minus class has count 0 when k = n
  EXPECT_EQ(weight_distribution(ctx), closed);
  EXPECT_EQ(closed.total(), 729u);
}

TEST(Dimension, FullRankOnSeveralFields) {
  for (auto [p, n, k] : {std::array<int, 3>{3, 3, 1}, {3, 5, 1}, {7, 3, 3}, {11, 3, 1}}) {
    const auto ctx = FieldCtx::build(p, n, k);
    EXPECT_EQ(code_dimension(ctx), 2u * n);
  }
}
