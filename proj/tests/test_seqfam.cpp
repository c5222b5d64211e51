#include <gtest/gtest.h>

#include <random>
#include <set>

#include "seqspectra/expsum.hpp"
#include "seqspectra/seqfam.hpp"

using namespace seqspectra;

namespace {

const FieldCtx& f331() {
  static const FieldCtx ctx = FieldCtx::build(3, 3, 1);
  return ctx;
}

}  // namespace

TEST(FamilyMember, MSequence) {
  const auto& ctx = f331();
  const auto m = family_member(ctx, ctx.zero());
  ASSERT_EQ(m.values.size(), 26u);
  std::uint64_t zeros = 0;
  for (std::uint64_t t = 0; t < 26; ++t) {
    EXPECT_EQ(m.values[t], ctx.trace(ctx.exp(t), 1).code);
    zeros += m.values[t] == 0;
  }
  EXPECT_EQ(zeros, 8u);
}

TEST(FamilyMember, DistinctBetasGiveDistinctSequences) {
  const auto& ctx = f331();
  std::set<std::vector<std::uint32_t>> seen;
  for (std::uint64_t b = 0; b < ctx.size(); ++b) seen.insert(family_member(ctx, ctx.from_code(b)).values);
  EXPECT_EQ(seen.size(), 27u);
}

TEST(FamilyMember, MatchesFieldArithmetic) {
  const auto ctx = FieldCtx::build(7, 3, 1);
  const FieldElement beta = ctx.exp(100);
  const auto s = family_member(ctx, beta);
  for (std::uint64_t t = 0; t < ctx.order(); t += 7) {
    const FieldElement x = ctx.exp(t);
    EXPECT_EQ(s.values[t], ctx.trace(ctx.add(x, ctx.mul(beta, ctx.pow(x, ctx.params().d))), 1).code);
  }
}

TEST(Correlation, InPhaseAndTwoLevel) {
  const auto& ctx = f331();
  for (std::uint64_t b = 0; b < ctx.size(); ++b)
    EXPECT_EQ(correlation(ctx, ctx.from_code(b), ctx.from_code(b), 0), (QuadValue{52, 0}));
  for (std::uint64_t tau = 1; tau < 26; ++tau) EXPECT_EQ(correlation(ctx, ctx.zero(), ctx.zero(), tau), (QuadValue{-2, 0}));
}

TEST(Correlation, DirectEqualsSumIdentityExhaustively) {
  const auto& ctx = f331();
  std::vector<Sequence> fam;
  for (std::uint64_t b = 0; b < ctx.size(); ++b) fam.push_back(family_member(ctx, ctx.from_code(b)));
  for (std::uint64_t i = 0; i < ctx.size(); ++i)
    for (std::uint64_t j = 0; j < ctx.size(); ++j)
      for (std::uint64_t tau = 0; tau < ctx.order(); ++tau)
        ASSERT_EQ(correlation(fam[i].values, fam[j].values, tau, 3),
                  correlation_via_sum(ctx, ctx.from_code(i), ctx.from_code(j), tau));
}

TEST(Correlation, DirectEqualsSumIdentitySampled) {
  const auto ctx = FieldCtx::build(7, 3, 1);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 300; ++t) {
    const FieldElement b1 = ctx.from_code(rng() % ctx.size()), b2 = ctx.from_code(rng() % ctx.size());
    const std::uint64_t tau = rng() % ctx.order();
    EXPECT_EQ(correlation(ctx, b1, b2, tau), correlation_via_sum(ctx, b1, b2, tau));
  }
}

TEST(Scope, Parsing) {
  EXPECT_EQ(parse_scope("all-shifts"), Scope::AllShifts);
  EXPECT_EQ(parse_scope("distinct-pairs"), Scope::DistinctPairs);
  EXPECT_EQ(parse_scope("out-of-phase-auto"), Scope::OutOfPhaseAuto);
  EXPECT_FALSE(parse_scope(""));
  EXPECT_FALSE(parse_scope("all"));
}

TEST(FamilySpectrum, ReducedEqualsDirectOn331) {
  const auto& ctx = f331();
  for (Scope s : {Scope::AllShifts, Scope::DistinctPairs, Scope::OutOfPhaseAuto}) {
    const auto fast = family_spectrum(ctx, s, 3);
    const auto direct = family_spectrum_direct(ctx, s, 3);
    EXPECT_EQ(fast.values, direct.values) << scope_name(s);
    EXPECT_EQ(fast.max_observed_times4, direct.max_observed_times4);
  }
}

TEST(FamilySpectrum, ReducedEqualsDirectOn333And731) {
  for (auto [p, n, k] : {std::array<int, 3>{3, 3, 3}, {7, 3, 1}}) {
    const auto ctx = FieldCtx::build(p, n, k);
    for (Scope s : {Scope::AllShifts, Scope::OutOfPhaseAuto})
      EXPECT_EQ(family_spectrum(ctx, s, 4).values, family_spectrum_direct(ctx, s, 8).values);
  }
}

TEST(FamilySpectrum, BoundOn331) {
  const auto sp = family_spectrum(f331(), Scope::AllShifts);
  EXPECT_EQ(sp.bound_times4, 436);
  EXPECT_LE(sp.max_observed_times4, 436);
  EXPECT_TRUE(sp.within_bound());
  const std::uint64_t q = 27, n = 26;
  EXPECT_EQ(sp.values.total(), q * q * n - q);
}

TEST(FamilySpectrum, KeysAreShiftedCandidates) {
  for (auto [p, n, k] : {std::array<int, 3>{3, 3, 1}, {3, 5, 1}, {7, 3, 3}}) {
    const auto ctx = FieldCtx::build(p, n, k);
    const auto cands = candidate_values(ctx);
    for (Scope s : {Scope::AllShifts, Scope::DistinctPairs, Scope::OutOfPhaseAuto})
      for (const auto& [v, c] : family_spectrum(ctx, s).values.entries) {
        const QuadValue shifted = v + QuadValue{2, 0};
        EXPECT_NE(std::find(cands.begin(), cands.end(), shifted), cands.end());
      }
  }
}

TEST(FamilySpectrum, BoundOn351) {
  const auto sp = family_spectrum(FieldCtx::build(3, 5, 1), Scope::AllShifts, 4);
  EXPECT_EQ(sp.bound_times4, 3892);
  EXPECT_TRUE(sp.within_bound());
}
