#pragma once

// The family G = { s_β(t) = tr(α^t) + tr(β α^{dt}) : β ∈ F_{p^n} } and its
// correlation spectrum.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "seqspectra/charsum.hpp"
#include "seqspectra/expsum.hpp"
#include "seqspectra/gf.hpp"
#include "seqspectra/parallel.hpp"

namespace seqspectra {

struct Sequence {
  FieldElement beta;
  std::vector<std::uint32_t> values;  // length N, entries in [0, p)
};

inline Sequence family_member(const FieldCtx& ctx, FieldElement beta) {
  const std::uint32_t p = ctx.p();
  const std::uint64_t n = ctx.order();
  const auto tr = ctx.trace_by_index();
  const auto dec = ctx.decimation_index();
  Sequence s{beta, std::vector<std::uint32_t>(n)};
  if (beta.is_zero()) {
    for (std::uint64_t t = 0; t < n; ++t) s.values[t] = tr[t];
    return s;
  }
  const std::uint32_t lb = ctx.log(beta);
  for (std::uint64_t t = 0; t < n; ++t) {
    std::uint32_t v = tr[t] + tr[lb + dec[t]];
    if (v >= p) v -= p;
    s.values[t] = v;
  }
  return s;
}

/// Σ_t ω^{u(t+τ) - v(t)} by direct tally over one period.
inline QuadValue correlation(std::span<const std::uint32_t> u, std::span<const std::uint32_t> v, std::uint64_t tau,
                             std::uint32_t p) {
  const std::uint64_t n = u.size();
  CountVector cv(p);
  for (std::uint64_t t = 0; t < n; ++t) {
    std::uint64_t idx = t + tau;
    if (idx >= n) idx -= n;
    std::uint32_t s = u[idx] + p - v[t];
    if (s >= p) s -= p;
    ++cv.counts[s];
  }
  return counts_to_quadvalue(cv, p);
}

inline QuadValue correlation(const FieldCtx& ctx, FieldElement beta1, FieldElement beta2, std::uint64_t tau) {
  const Sequence s1 = family_member(ctx, beta1);
  const Sequence s2 = family_member(ctx, beta2);
  return correlation(s1.values, s2.values, tau % ctx.order(), ctx.p());
}

/// -1 + S(δ-1, β₁δ^d - β₂) with δ = α^τ.
inline QuadValue correlation_via_sum(const FieldCtx& ctx, FieldElement beta1, FieldElement beta2, std::uint64_t tau) {
  const FieldElement delta = ctx.exp(tau);
  const FieldElement a = ctx.sub(delta, ctx.one());
  const FieldElement b = ctx.sub(ctx.mul(beta1, ctx.pow(delta, ctx.params().d)), beta2);
  return sab(ctx, a, b) - QuadValue{2, 0};
}

enum class Scope { AllShifts, DistinctPairs, OutOfPhaseAuto };

inline std::string_view scope_name(Scope s) {
  switch (s) {
    case Scope::AllShifts: return "all-shifts";
    case Scope::DistinctPairs: return "distinct-pairs";
    case Scope::OutOfPhaseAuto: return "out-of-phase-auto";
  }
  return "";
}

inline std::optional<Scope> parse_scope(std::string_view name) {
  for (Scope s : {Scope::AllShifts, Scope::DistinctPairs, Scope::OutOfPhaseAuto})
    if (scope_name(s) == name) return s;
  return std::nullopt;
}

/// Correlation values over a scope of ordered (β₁, β₂, τ) triples. The
/// in-phase autocorrelation (β₁ = β₂, τ = 0) is always excluded:
///   all-shifts        every ordered pair and shift
///   distinct-pairs    β₁ ≠ β₂, every shift
///   out-of-phase-auto β₁ = β₂, τ ≠ 0
struct CorrelationSpectrum {
  Scope scope = Scope::AllShifts;
  ValueDistribution values;
  int128_t bound_times4 = 0;         // 4 + (p^k+1)^2 p^n
  int128_t max_observed_times4 = 0;  // max 4|C|^2

  bool within_bound() const { return max_observed_times4 <= bound_times4; }
};

inline int128_t correlation_bound_times4(const FieldCtx& ctx) {
  const int128_t qk1 = static_cast<int128_t>(ctx.params().qk) + 1;
  return 4 + qk1 * qk1 * static_cast<int128_t>(ctx.size());
}

namespace detail {

inline void finish_spectrum(const FieldCtx& ctx, CorrelationSpectrum& sp) {
  sp.bound_times4 = correlation_bound_times4(ctx);
  for (const auto& [v, c] : sp.values.entries)
    if (c) sp.max_observed_times4 = std::max(sp.max_observed_times4, norm_times4(v, ctx.p()));
}

}  // namespace detail

/// Spectrum through C = -1 + S(δ-1, β₁δ^d - β₂). For fixed τ the map
/// (β₁, β₂) ↦ b = β₁δ^d - β₂ hits every b exactly p^n times; the scope
/// restrictions remove a computable number of those per b.
inline CorrelationSpectrum family_spectrum(const FieldCtx& ctx, Scope scope, unsigned threads = 1) {
  const std::uint64_t q = ctx.size(), n = ctx.order();
  const std::uint64_t d = ctx.params().d;
  const auto reduced = reduced_sums(ctx, threads);
  const auto zero_col = zero_column_sums(ctx, threads);

  // For τ ≠ 0, b ↦ b·scale permutes F*, so only b = 0 vs b ≠ 0 matters and
  // every such row sees the same multiset of reduced sums.
  ValueDistribution nonzero_row;
  for (std::uint64_t c = 1; c < q; ++c) nonzero_row.add(reduced[c] - QuadValue{2, 0});
  const QuadValue zero_b = reduced[0] - QuadValue{2, 0};

  ValueDistribution values;
  auto add_row = [&](const ValueDistribution& row, std::uint64_t mult) {
    for (const auto& [v, c] : row.entries) values.add(v, c * mult);
  };
  for (std::uint64_t tau = 1; tau < n; ++tau) {
    const bool delta_d_is_one = detail::mulmod(d % n, tau, n) == 0;
    std::uint64_t mult_zero = 0, mult_nonzero = 0;
    switch (scope) {
      case Scope::AllShifts:
        mult_zero = mult_nonzero = q;
        break;
      case Scope::DistinctPairs:
        mult_zero = delta_d_is_one ? 0 : q - 1;
        mult_nonzero = delta_d_is_one ? q : q - 1;
        break;
      case Scope::OutOfPhaseAuto:
        mult_zero = delta_d_is_one ? q : 1;
        mult_nonzero = delta_d_is_one ? 0 : 1;
        break;
    }
    if (mult_zero) values.add(zero_b, mult_zero);
    if (mult_nonzero) add_row(nonzero_row, mult_nonzero);
  }
  // τ = 0: C = -1 + S(0, β₁ - β₂), q ordered pairs per difference b ≠ 0
  if (scope != Scope::OutOfPhaseAuto)
    for (std::uint64_t b = 1; b < q; ++b) values.add(zero_col[b] - QuadValue{2, 0}, q);
  CorrelationSpectrum sp;
  sp.scope = scope;
  sp.values = std::move(values);
  detail::finish_spectrum(ctx, sp);
  return sp;
}

/// Spectrum by tallying every triple directly; O(p^{2n} N^2), small fields only.
inline CorrelationSpectrum family_spectrum_direct(const FieldCtx& ctx, Scope scope, unsigned threads = 1) {
  const std::uint64_t q = ctx.size(), n = ctx.order();
  std::vector<Sequence> fam;
  fam.reserve(q);
  for (std::uint64_t b = 0; b < q; ++b) fam.push_back(family_member(ctx, ctx.from_code(b)));

  const unsigned workers = effective_workers(q, threads);
  std::vector<ValueDistribution> partial(workers);
  parallel_ranges(q, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
    for (std::uint64_t i = begin; i < end; ++i) {
      for (std::uint64_t j = 0; j < q; ++j) {
        if (scope == Scope::DistinctPairs && i == j) continue;
        if (scope == Scope::OutOfPhaseAuto && i != j) continue;
        for (std::uint64_t tau = 0; tau < n; ++tau) {
          if (i == j && tau == 0) continue;
          partial[w].add(correlation(fam[i].values, fam[j].values, tau, ctx.p()));
        }
      }
    }
  });
  CorrelationSpectrum sp;
  sp.scope = scope;
  for (const auto& part : partial) sp.values += part;
  detail::finish_spectrum(ctx, sp);
  return sp;
}

}  // namespace seqspectra
