#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "seqspectra/expsum.hpp"
#include "seqspectra/oracle.hpp"

using namespace seqspectra;

namespace {

const FieldCtx& f331() {
  static const FieldCtx ctx = FieldCtx::build(3, 3, 1);
  return ctx;
}

ValueDistribution table_331() {
  // p^n:1, 0:182, ±jp^{n/2}:13, (√3±j)3√3/2:156, (-√3±j)3√3/2:78, ±j·2·3√3:26
  ValueDistribution d;
  d.add({54, 0}, 1);
  d.add({0, 0}, 182);
  d.add({0, 6}, 13);
  d.add({0, -6}, 13);
  d.add({9, 3}, 156);
  d.add({9, -3}, 156);
  d.add({-9, 3}, 78);
  d.add({-9, -3}, 78);
  d.add({0, 12}, 26);
  d.add({0, -12}, 26);
  return d;
}

}  // namespace

TEST(Sab, SpecialCoefficients) {
  const auto& ctx = f331();
  EXPECT_EQ(sab(ctx, ctx.zero(), ctx.zero()), (QuadValue{54, 0}));
  for (std::uint64_t a = 1; a < ctx.size(); ++a) EXPECT_EQ(sab(ctx, ctx.from_code(a), ctx.zero()), (QuadValue{}));
  for (std::uint64_t b = 1; b < ctx.size(); ++b) {
    const QuadValue v = sab(ctx, ctx.zero(), ctx.from_code(b));
    EXPECT_EQ(v.twoA, 0);
    EXPECT_EQ(std::abs(v.twoB), 6);
  }
}

TEST(Sab, MatchesNaiveEvaluationExhaustively) {
  const auto& ctx = f331();
  for (std::uint64_t a = 0; a < ctx.size(); ++a)
    for (std::uint64_t b = 0; b < ctx.size(); ++b)
      ASSERT_EQ(sab(ctx, ctx.from_code(a), ctx.from_code(b)), oracle::naive_sab(ctx, ctx.from_code(a), ctx.from_code(b)));
}

TEST(Sab, ReductionIdentity) {
  for (auto [p, n, k] : {std::array<int, 3>{3, 3, 1}, {7, 3, 1}, {3, 5, 1}}) {
    const auto ctx = FieldCtx::build(p, n, k);
    std::mt19937_64 rng(p + n + k);
    for (int t = 0; t < 400; ++t) {
      const FieldElement a = ctx.exp(rng() % ctx.order()), b = ctx.from_code(rng() % ctx.size());
      EXPECT_EQ(sab(ctx, a, b), sab(ctx, ctx.one(), reduce_pair(ctx, a, b)));
    }
  }
}

TEST(Sab, NegationConjugates) {
  const auto ctx = FieldCtx::build(7, 3, 1);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 400; ++t) {
    const FieldElement a = ctx.from_code(rng() % ctx.size()), b = ctx.from_code(rng() % ctx.size());
    EXPECT_EQ(sab(ctx, ctx.neg(a), ctx.neg(b)), conj(sab(ctx, a, b)));
  }
}

TEST(CandidateValues, EncodingFor331) {
  const auto v = candidate_values(f331());
  EXPECT_EQ(v[0], (QuadValue{54, 0}));
  EXPECT_EQ(v[4], (QuadValue{9, 3}));
  EXPECT_EQ(v[8], (QuadValue{0, 12}));
  EXPECT_NEAR(std::abs(to_complex(v[8], 3)), 2 * std::pow(3.0, 1.5), 1e-9);
  const auto x = excluded_values(f331());
  EXPECT_EQ(x[0], (QuadValue{0, 6}));  // (p^k-1)/2 = 1 collides with ±jp^{n/2} when p^k = 3
}

TEST(ValueDistribution, BruteForceMatchesTableAndNaiveOracle) {
  const auto& ctx = f331();
  const auto brute = value_distribution_bruteforce(ctx, 2);
  EXPECT_EQ(brute, table_331());
  EXPECT_EQ(brute, oracle::naive_value_distribution(ctx, 4));
  EXPECT_EQ(brute.entries.size(), 10u);
  EXPECT_EQ(brute.total(), 729u);
}

TEST(ValueDistribution, ClosedFormMatchesTable) {
  EXPECT_EQ(closed_form_distribution(f331()), table_331());
}

TEST(ValueDistribution, DegenerateKEqualsN) {
  const auto ctx = FieldCtx::build(3, 3, 3);
  const auto closed = closed_form_distribution(ctx);
  const auto v = candidate_values(ctx);
  EXPECT_EQ(closed.count(v[8]), 0u);
  EXPECT_EQ(closed.count(v[9]), 0u);
  EXPECT_EQ(value_distribution_bruteforce(ctx), closed);
}

TEST(ValueDistribution, ClosedFormCountsFor351) {
  const auto ctx = FieldCtx::build(3, 5, 1);
  const auto closed = closed_form_distribution(ctx);
  const auto v = candidate_values(ctx);
  EXPECT_EQ(closed.count(v[2]), 121u);
  EXPECT_EQ(closed.count(v[3]), 121u);
  EXPECT_EQ(closed.count(v[1]), 2u * (59049u - 1u) / 8u);  // (p^k-1)(p^{2n}-1)/(2(p^k+1))
  EXPECT_EQ(value_distribution_bruteforce(ctx, 4), closed);
}

TEST(ValueDistribution, ThreadCountDoesNotMatter) {
  const auto ctx = FieldCtx::build(7, 3, 1);
  EXPECT_EQ(value_distribution_bruteforce(ctx, 1), value_distribution_bruteforce(ctx, 8));
}

TEST(Moments, PassOnClosedFormAndFailWhenPerturbed) {
  const auto& ctx = f331();
  auto dist = closed_form_distribution(ctx);
  EXPECT_TRUE(moment_checks(dist, ctx).all_pass());
  EXPECT_TRUE(conjugate_symmetric(dist));
  dist.add({9, 3}, 1);
  const auto m = moment_checks(dist, ctx);
  EXPECT_FALSE(m.all_pass());
  EXPECT_FALSE(conjugate_symmetric(dist));
}

TEST(Weil, LinearHasZeroSum) {
  const auto rep = weil_bound_check(f331(), 1);
  EXPECT_EQ(rep.cases, 26u);
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.max_ratio, 0.0);
}

TEST(Weil, QuadraticGaussSumMagnitude) {
  const auto& ctx = f331();
  CountVector cv(3);
  for (std::uint64_t c = 0; c < ctx.size(); ++c) {
    const FieldElement x = ctx.from_code(c);
    ++cv.counts[ctx.trace1(ctx.mul(x, x))];
  }
  EXPECT_EQ(norm_times4(counts_to_quadvalue(cv, 3), 3), 4 * 27);
}

TEST(Weil, ExhaustiveDegreeTwoOn331) {
  const auto rep = weil_bound_check(f331(), 2);
  EXPECT_EQ(rep.cases, 702u);
  EXPECT_EQ(rep.exact_cases, 702u);
  EXPECT_TRUE(rep.pass());
  EXPECT_NEAR(rep.max_ratio, 1.0, 1e-12);
}

TEST(Weil, SampledHigherDegreeUsesFloatFallback) {
  const auto ctx = FieldCtx::build(7, 3, 1);
  const auto rep = weil_bound_check(ctx, 5, 500, 3);  // ax^5 + bx leaves the quadratic subfield
  EXPECT_EQ(rep.cases, 500u);
  EXPECT_TRUE(rep.pass());
  EXPECT_LT(rep.exact_cases, rep.cases);
  EXPECT_THROW((void)weil_bound_check(ctx, 7), Error);
}
