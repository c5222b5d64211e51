#pragma once

// Slow reference paths used to cross-check the fast ones. Nothing here uses
// the index tables of the trace or of x ↦ x^d; elements go through plain
// field operations.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "seqspectra/charsum.hpp"
#include "seqspectra/code.hpp"
#include "seqspectra/gf.hpp"
#include "seqspectra/parallel.hpp"

namespace seqspectra::oracle {

using FloatSum = std::complex<double>;

/// Σ_x e^{2πi f(x)/p} by float accumulation; f returns an exponent in [0, p).
template <class Fn>
FloatSum float_char_sum(const FieldCtx& ctx, Fn&& f) {
  const double p = ctx.p();
  double re = 0, im = 0;
  for (std::uint64_t c = 0; c < ctx.size(); ++c) {
    const double angle = 2 * std::numbers::pi * static_cast<double>(f(ctx.from_code(c))) / p;
    re += std::cos(angle);
    im += std::sin(angle);
  }
  return {re, im};
}

inline std::uint32_t trace_of(const FieldCtx& ctx, FieldElement x) { return ctx.trace(x, 1).code; }

inline FloatSum float_sab(const FieldCtx& ctx, FieldElement a, FieldElement b) {
  const std::uint64_t d = ctx.params().d;
  return float_char_sum(ctx, [&](FieldElement x) {
    return ctx.trace1(ctx.add(ctx.mul(a, x), ctx.mul(b, ctx.pow(x, d))));
  });
}

/// Exact S(a,b) with one field evaluation of ax + bx^d per x.
inline QuadValue naive_sab(const FieldCtx& ctx, FieldElement a, FieldElement b) {
  const std::uint64_t d = ctx.params().d;
  CountVector cv(ctx.p());
  for (std::uint64_t c = 0; c < ctx.size(); ++c) {
    const FieldElement x = ctx.from_code(c);
    ++cv.counts[trace_of(ctx, ctx.add(ctx.mul(a, x), ctx.mul(b, ctx.pow(x, d))))];
  }
  return counts_to_quadvalue(cv, ctx.p());
}

/// Σ_x χ(sign·a x^{p^k+1} + b x^2), summed directly.
inline QuadValue direct_form_sum(const FieldCtx& ctx, FieldElement a, FieldElement b, int sign) {
  const std::uint64_t e = ctx.params().qk + 1;
  const FieldElement sa = sign >= 0 ? a : ctx.neg(a);
  CountVector cv(ctx.p());
  for (std::uint64_t c = 0; c < ctx.size(); ++c) {
    const FieldElement x = ctx.from_code(c);
    ++cv.counts[trace_of(ctx, ctx.add(ctx.mul(sa, ctx.pow(x, e)), ctx.mul(b, ctx.mul(x, x))))];
  }
  return counts_to_quadvalue(cv, ctx.p());
}

/// O(p^{3n}) distribution: naive_sab on every pair.
inline ValueDistribution naive_value_distribution(const FieldCtx& ctx, unsigned threads = 1) {
  const std::uint64_t q = ctx.size();
  const unsigned workers = effective_workers(q, threads);
  std::vector<ValueDistribution> partial(workers);
  parallel_ranges(q, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
    for (std::uint64_t a = begin; a < end; ++a)
      for (std::uint64_t b = 0; b < q; ++b) partial[w].add(naive_sab(ctx, ctx.from_code(a), ctx.from_code(b)));
  });
  ValueDistribution out;
  for (const auto& part : partial) out += part;
  return out;
}

/// Every x (optionally excluding 0) with eval(x) = 0.
template <class Fn>
std::vector<FieldElement> exhaustive_roots(const FieldCtx& ctx, Fn&& eval, bool nonzero_only = false) {
  std::vector<FieldElement> out;
  for (std::uint64_t c = nonzero_only ? 1 : 0; c < ctx.size(); ++c) {
    const FieldElement x = ctx.from_code(c);
    if (eval(x).is_zero()) out.push_back(x);
  }
  return out;
}

inline std::uint64_t naive_weight(std::span<const std::uint32_t> symbols) {
  std::uint64_t w = 0;
  for (auto s : symbols) w += s != 0;
  return w;
}

/// Codeword c(a,b) symbol by symbol through field operations.
inline std::vector<std::uint32_t> naive_codeword(const FieldCtx& ctx, FieldElement a, FieldElement b) {
  const std::uint64_t d = ctx.params().d;
  std::vector<std::uint32_t> out(ctx.order());
  FieldElement x = ctx.one();
  const FieldElement alpha = ctx.alpha();
  for (auto& s : out) {
    s = trace_of(ctx, ctx.add(ctx.mul(a, x), ctx.mul(b, ctx.pow(x, d))));
    x = ctx.mul(x, alpha);
  }
  return out;
}

/// Weight distribution by generating and counting every codeword.
inline WeightDistribution naive_weight_distribution(const FieldCtx& ctx, unsigned threads = 1) {
  const std::uint64_t q = ctx.size();
  const unsigned workers = effective_workers(q, threads);
  std::vector<WeightDistribution> partial(workers);
  parallel_ranges(q, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
    for (std::uint64_t a = begin; a < end; ++a)
      for (std::uint64_t b = 0; b < q; ++b)
        partial[w].add(naive_weight(codeword(ctx, ctx.from_code(a), ctx.from_code(b)).symbols));
  });
  WeightDistribution out;
  for (const auto& part : partial)
    for (const auto& [wt, c] : part.entries) out.add(wt, c);
  return out;
}

}  // namespace seqspectra::oracle
