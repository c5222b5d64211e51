#pragma once

// S(a,b) = Σ_x χ(ax + bx^d): exact evaluation, value distribution by
// enumeration and in closed form, and the moment identities.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <cstdint>
#include <random>
#include <vector>

#include "seqspectra/charsum.hpp"
#include "seqspectra/gf.hpp"
#include "seqspectra/parallel.hpp"

namespace seqspectra {

namespace detail {

// Tally of tr(ax + bx^d) over x ∈ F_{p^n}, in the log domain. A log of
// kNoLog marks a zero coefficient.
inline void tally_sab(const FieldCtx& ctx, std::uint32_t la, std::uint32_t lb, std::uint64_t* counts) {
  const std::uint32_t p = ctx.p();
  const std::uint64_t n = ctx.order();
  const auto tr = ctx.trace_by_index();
  const auto dec = ctx.decimation_index();
  counts[0] += 1;  // x = 0
  if (la == FieldCtx::kNoLog && lb == FieldCtx::kNoLog) {
    counts[0] += n;
  } else if (lb == FieldCtx::kNoLog) {
    const std::uint32_t* ta = tr.data() + la;
    for (std::uint64_t i = 0; i < n; ++i) ++counts[ta[i]];
  } else if (la == FieldCtx::kNoLog) {
    const std::uint32_t* tb = tr.data() + lb;
    for (std::uint64_t i = 0; i < n; ++i) ++counts[tb[dec[i]]];
  } else {
    const std::uint32_t* ta = tr.data() + la;
    const std::uint32_t* tb = tr.data() + lb;
    for (std::uint64_t i = 0; i < n; ++i) {
      std::uint32_t s = ta[i] + tb[dec[i]];
      if (s >= p) s -= p;
      ++counts[s];
    }
  }
}

inline std::uint32_t log_or_none(const FieldCtx& ctx, FieldElement x) {
  return x.is_zero() ? FieldCtx::kNoLog : ctx.log(x);
}

}  // namespace detail

inline CountVector sab_counts(const FieldCtx& ctx, FieldElement a, FieldElement b) {
  CountVector cv(ctx.p());
  detail::tally_sab(ctx, detail::log_or_none(ctx, a), detail::log_or_none(ctx, b), cv.counts.data());
  return cv;
}

/// Exact S(a,b).
inline QuadValue sab(const FieldCtx& ctx, FieldElement a, FieldElement b) {
  return counts_to_quadvalue(sab_counts(ctx, a, b), ctx.p());
}

/// c = b·a^{-d}, so that S(a,b) = S(1,c) for a ≠ 0.
inline FieldElement reduce_pair(const FieldCtx& ctx, FieldElement a, FieldElement b) {
  return ctx.mul(b, ctx.pow(ctx.inv(a), ctx.params().d));
}

/// S(1,c) for every c, indexed by the canonical encoding of c.
inline std::vector<QuadValue> reduced_sums(const FieldCtx& ctx, unsigned threads = 1) {
  std::vector<QuadValue> out(ctx.size());
  parallel_ranges(ctx.size(), threads, [&](std::uint64_t begin, std::uint64_t end, unsigned) {
    CountVector cv(ctx.p());
    for (std::uint64_t c = begin; c < end; ++c) {
      std::fill(cv.counts.begin(), cv.counts.end(), 0);
      detail::tally_sab(ctx, 0, detail::log_or_none(ctx, ctx.from_code(c)), cv.counts.data());
      out[c] = counts_to_quadvalue(cv, ctx.p());
    }
  });
  return out;
}

/// S(0,b) for every b, indexed by the canonical encoding of b.
inline std::vector<QuadValue> zero_column_sums(const FieldCtx& ctx, unsigned threads = 1) {
  std::vector<QuadValue> out(ctx.size());
  parallel_ranges(ctx.size(), threads, [&](std::uint64_t begin, std::uint64_t end, unsigned) {
    for (std::uint64_t b = begin; b < end; ++b) out[b] = sab(ctx, ctx.zero(), ctx.from_code(b));
  });
  return out;
}

/// The ten candidate values, in the order
/// p^n, 0, ±jp^{n/2}, (√p^k ± j)p^{n/2}/2, (-√p^k ± j)p^{n/2}/2, ±j(p^k+1)p^{n/2}/2.
/// With √p* = i√p: j·p^{n/2} has twoB = 2p^{(n-1)/2} and √p^k·p^{n/2} = p^{(n+k)/2}.
inline std::array<QuadValue, 10> candidate_values(const FieldCtx& ctx) {
  const auto& fp = ctx.params();
  const auto q = static_cast<std::int64_t>(fp.q);
  const auto qk = static_cast<std::int64_t>(fp.qk);
  const auto h = static_cast<std::int64_t>(detail::ipow(fp.p, (fp.n - 1) / 2));
  const auto r = static_cast<std::int64_t>(detail::ipow(fp.p, (fp.n + fp.k) / 2));
  return {{
      {2 * q, 0},
      {0, 0},
      {0, 2 * h},
      {0, -2 * h},
      {r, h},
      {r, -h},
      {-r, h},
      {-r, -h},
      {0, (qk + 1) * h},
      {0, -(qk + 1) * h},
  }};
}

/// ±j(p^k-1)p^{n/2}/2: admissible by rank counting but never attained as
/// such. For p^k = 3 these equal ±jp^{n/2}, which does occur via a = 0.
inline std::array<QuadValue, 2> excluded_values(const FieldCtx& ctx) {
  const auto& fp = ctx.params();
  const auto qk = static_cast<std::int64_t>(fp.qk);
  const auto h = static_cast<std::int64_t>(detail::ipow(fp.p, (fp.n - 1) / 2));
  return {{{0, (qk - 1) * h}, {0, -(qk - 1) * h}}};
}

/// Full distribution over all p^{2n} pairs: the a = 0 column directly, and
/// a ≠ 0 through S(a,b) = S(1, b·a^{-d}), each reduced value weighted p^n - 1.
inline ValueDistribution value_distribution_bruteforce(const FieldCtx& ctx, unsigned threads = 1) {
  const std::uint64_t q = ctx.size();
  const unsigned workers = effective_workers(q, threads);
  std::vector<ValueDistribution> partial(workers);
  parallel_ranges(q, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
    CountVector cv(ctx.p());
    for (std::uint64_t c = begin; c < end; ++c) {
      const std::uint32_t lc = detail::log_or_none(ctx, ctx.from_code(c));
      std::fill(cv.counts.begin(), cv.counts.end(), 0);
      detail::tally_sab(ctx, 0, lc, cv.counts.data());
      partial[w].add(counts_to_quadvalue(cv, ctx.p()), ctx.order());
      std::fill(cv.counts.begin(), cv.counts.end(), 0);
      detail::tally_sab(ctx, FieldCtx::kNoLog, lc, cv.counts.data());
      partial[w].add(counts_to_quadvalue(cv, ctx.p()), 1);
    }
  });
  ValueDistribution out;
  for (const auto& part : partial) out += part;
  return out;
}

namespace detail {

inline std::uint64_t exact_count(int128_t num, int128_t den, const char* what) {
  if (den == 0 || num % den != 0 || num / den < 0)
    throw Error(Errc::NonIntegerCount, std::string("closed-form count is not a nonnegative integer: ") + what);
  return static_cast<std::uint64_t>(num / den);
}

}  // namespace detail

/// Closed-form occurrence counts of the ten candidate values (zero counts
/// included). Throws NonIntegerCount outside the admissible parameters.
inline ValueDistribution closed_form_distribution(const FieldCtx& ctx) {
  const auto& fp = ctx.params();
  const int128_t q = fp.q, qk = fp.qk;
  const int128_t qnk = detail::ipow(fp.p, fp.n - fp.k);
  const int128_t half = detail::ipow(fp.p, (fp.n - fp.k) / 2);
  const auto v = candidate_values(ctx);

  const std::uint64_t zero = detail::exact_count((qk - 1) * (q * q - 1), 2 * (qk + 1), "0");
  const std::uint64_t pm_j =
      detail::exact_count((q * q - 1) * (qk - 1) - 2 * (q - 1) * (q - 1), 4 * (qk - 1), "±jp^{n/2}");
  const std::uint64_t plus_root = detail::exact_count((q - 1) * (qnk + half), 2, "(√p^k±j)p^{n/2}/2");
  const std::uint64_t minus_root = detail::exact_count((q - 1) * (qnk - half), 2, "(-√p^k±j)p^{n/2}/2");
  const std::uint64_t big = detail::exact_count((qnk - 1) * (q - 1), qk * qk - 1, "±j(p^k+1)p^{n/2}/2");

  ValueDistribution out;
  out.add(v[0], 1);
  out.add(v[1], zero);
  out.add(v[2], pm_j);
  out.add(v[3], pm_j);
  out.add(v[4], plus_root);
  out.add(v[5], plus_root);
  out.add(v[6], minus_root);
  out.add(v[7], minus_root);
  out.add(v[8], big);
  out.add(v[9], big);
  return out;
}

struct MomentReport {
  int128_t count = 0;
  WideQuadValue first;
  WideQuadValue second;
  WideQuadValue expected;  // p^{2n}
  bool count_ok = false;
  bool first_ok = false;
  bool second_ok = false;

  bool all_pass() const { return count_ok && first_ok && second_ok; }
};

/// Σ Ω, Σ vΩ and Σ v²Ω against p^{2n}, exactly.
inline MomentReport moment_checks(const ValueDistribution& dist, const FieldCtx& ctx) {
  MomentReport r;
  const int128_t q = ctx.size();
  r.expected = {2 * q * q, 0};
  for (const auto& [v, c] : dist.entries) {
    const WideQuadValue w = v.widen<int128_t>();
    const int128_t cc = c;
    r.count += cc;
    r.first += w.scaled(cc);
    r.second += multiply(w, w, ctx.p()).scaled(cc);
  }
  r.count_ok = r.count == q * q;
  r.first_ok = r.first == r.expected;
  r.second_ok = r.second == r.expected;
  return r;
}

/// Ω(v) = Ω(conj v) for every value.
inline bool conjugate_symmetric(const ValueDistribution& dist) {
  for (const auto& [v, c] : dist.entries)
    if (dist.count(conj(v)) != c) return false;
  return true;
}

struct WeilReport {
  std::uint64_t degree = 0;
  std::uint64_t cases = 0;
  std::uint64_t exact_cases = 0;
  std::uint64_t violations = 0;
  double max_ratio = 0.0;  // max |Σ| / ((l-1)p^{n/2}), 0 when the bound is 0

  bool pass() const { return violations == 0; }
};

/// Checks |Σ_x χ(f(x))| ≤ (l-1)p^{n/2} for f(x) = a x^l + b x (l ≥ 2, a ≠ 0)
/// or f(x) = a x (l = 1). Exhaustive when samples == 0 or covers every
/// pair, otherwise a seeded random sample. Sums inside Q(√p*) are compared
/// exactly; others fall back to a float magnitude.
inline WeilReport weil_bound_check(const FieldCtx& ctx, std::uint64_t degree, std::uint64_t samples = 0,
                                   std::uint64_t seed = 1) {
  const std::uint32_t p = ctx.p();
  const std::uint64_t q = ctx.size(), n = ctx.order();
  if (degree == 0 || degree % p == 0) throw Error(Errc::InvalidParams, "Weil bound needs gcd(l, p^n) = 1");
  WeilReport rep;
  rep.degree = degree;

  std::vector<std::uint32_t> pow_idx(n);
  for (std::uint64_t i = 0; i < n; ++i) pow_idx[i] = static_cast<std::uint32_t>(detail::mulmod(degree % n, i, n));
  const auto tr = ctx.trace_by_index();
  const int128_t bound4 = 4 * static_cast<int128_t>(degree - 1) * static_cast<int128_t>(degree - 1) * static_cast<int128_t>(q);
  std::vector<double> cos_t(p), sin_t(p);
  for (std::uint32_t t = 0; t < p; ++t) {
    cos_t[t] = std::cos(2 * std::numbers::pi * t / p);
    sin_t[t] = std::sin(2 * std::numbers::pi * t / p);
  }

  auto check = [&](std::uint32_t la, std::uint64_t b) {
    CountVector cv(p);
    cv.counts[0] = 1;
    const bool has_b = degree != 1 && b != 0;
    const std::uint32_t lb = has_b ? ctx.log(ctx.from_code(b)) : 0;
    for (std::uint64_t i = 0; i < n; ++i) {
      std::uint32_t s = tr[la + pow_idx[i]];
      if (has_b) {
        s += tr[lb + i];
        if (s >= p) s -= p;
      }
      ++cv.counts[s];
    }
    ++rep.cases;
    double mag2 = 0;
    bool violated = false;
    try {
      const QuadValue v = counts_to_quadvalue(cv, p);
      ++rep.exact_cases;
      const int128_t n4 = norm_times4(v, p);
      violated = n4 > bound4;
      mag2 = static_cast<double>(n4) / 4.0;
    } catch (const Error& err) {
      if (err.code() != Errc::NotInQuadraticSubfield) throw;
      double re = 0, im = 0;
      for (std::uint32_t t = 0; t < p; ++t) {
        re += static_cast<double>(cv.counts[t]) * cos_t[t];
        im += static_cast<double>(cv.counts[t]) * sin_t[t];
      }
      mag2 = re * re + im * im;
      violated = mag2 > static_cast<double>(bound4) / 4.0 * (1 + 1e-9) + 1e-6;
    }
    if (violated) ++rep.violations;
    if (bound4 > 0) {
      rep.max_ratio = std::max(rep.max_ratio, std::sqrt(mag2 / (static_cast<double>(bound4) / 4.0)));
    }
  };

  const std::uint64_t bs = degree == 1 ? 1 : q;
  const std::uint64_t total = n * bs;
  if (samples == 0 || samples >= total) {
    for (std::uint64_t la = 0; la < n; ++la)
      for (std::uint64_t b = 0; b < bs; ++b) check(static_cast<std::uint32_t>(la), b);
  } else {
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s)
      check(static_cast<std::uint32_t>(rng() % n), degree == 1 ? 0 : rng() % q);
  }
  return rep;
}

}  // namespace seqspectra
