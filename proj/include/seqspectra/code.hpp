#pragma once

// The cyclic code C = { c(a,b) : c_i = tr(aα^i + bα^{di}) } of length N.

#include <cstdint>
#include <map>
#include <vector>

#include "seqspectra/charsum.hpp"
#include "seqspectra/detail/fp_linalg.hpp"
#include "seqspectra/expsum.hpp"
#include "seqspectra/gf.hpp"

namespace seqspectra {

struct Codeword {
  FieldElement a;
  FieldElement b;
  std::vector<std::uint32_t> symbols;
};

inline Codeword codeword(const FieldCtx& ctx, FieldElement a, FieldElement b) {
  const std::uint32_t p = ctx.p();
  const std::uint64_t n = ctx.order();
  const auto tr = ctx.trace_by_index();
  const auto dec = ctx.decimation_index();
  Codeword cw{a, b, std::vector<std::uint32_t>(n, 0)};
  if (!a.is_zero()) {
    const std::uint32_t la = ctx.log(a);
    for (std::uint64_t i = 0; i < n; ++i) cw.symbols[i] = tr[la + i];
  }
  if (!b.is_zero()) {
    const std::uint32_t lb = ctx.log(b);
    for (std::uint64_t i = 0; i < n; ++i) {
      std::uint32_t s = cw.symbols[i] + tr[lb + dec[i]];
      if (s >= p) s -= p;
      cw.symbols[i] = s;
    }
  }
  return cw;
}

/// Hamming weight p^{n-1}(p-1) - μ(v)/p of any codeword whose sum is v.
/// Throws NonIntegerWeight unless the result is an integer in [0, N].
inline std::uint64_t weight_from_value(const FieldCtx& ctx, const QuadValue& v) {
  const auto& fp = ctx.params();
  const int128_t p = fp.p;
  const int128_t base = static_cast<int128_t>(detail::ipow(fp.p, fp.n - 1)) * (p - 1);
  // 2p·w = 2p·base - 2μ
  const int128_t num = 2 * p * base - static_cast<int128_t>(mu(v, fp.p).twice);
  if (num % (2 * p) != 0) throw Error(Errc::NonIntegerWeight, "μ(S)/p is not an integer");
  const int128_t w = num / (2 * p);
  if (w < 0 || w > static_cast<int128_t>(fp.period)) throw Error(Errc::NonIntegerWeight, "weight outside [0, N]");
  return static_cast<std::uint64_t>(w);
}

inline std::uint64_t weight_via_mu(const FieldCtx& ctx, FieldElement a, FieldElement b) {
  return weight_from_value(ctx, sab(ctx, a, b));
}

/// weight -> number of codewords; zero counts are ignored by equality.
struct WeightDistribution {
  std::map<std::uint64_t, std::uint64_t> entries;

  void add(std::uint64_t w, std::uint64_t c = 1) { entries[w] += c; }
  std::uint64_t count(std::uint64_t w) const {
    auto it = entries.find(w);
    return it == entries.end() ? 0 : it->second;
  }
  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (const auto& [w, c] : entries) t += c;
    return t;
  }
  WeightDistribution normalized() const {
    WeightDistribution out;
    for (const auto& [w, c] : entries)
      if (c) out.entries.emplace(w, c);
    return out;
  }
  friend bool operator==(const WeightDistribution& a, const WeightDistribution& b) {
    return a.normalized().entries == b.normalized().entries;
  }
};

/// Weights from a value distribution; every value carries its weight.
inline WeightDistribution weights_from_values(const FieldCtx& ctx, const ValueDistribution& dist) {
  WeightDistribution out;
  for (const auto& [v, c] : dist.entries)
    if (c) out.add(weight_from_value(ctx, v), c);
  return out;
}

inline WeightDistribution weight_distribution(const FieldCtx& ctx, unsigned threads = 1) {
  return weights_from_values(ctx, value_distribution_bruteforce(ctx, threads));
}

/// Four weight classes: 0, p^{n-1}(p-1) and (p-1)(p^{n-1} ± ½p^{(n+k)/2-1}).
inline WeightDistribution closed_form_weight_distribution(const FieldCtx& ctx) {
  const auto& fp = ctx.params();
  const std::uint64_t p = fp.p, q = fp.q, nn = fp.period;
  const std::uint64_t qnk = detail::ipow(p, fp.n - fp.k);
  const std::uint64_t half = detail::ipow(p, (fp.n - fp.k) / 2);
  const std::uint64_t top = detail::ipow(p, fp.n - 1);
  const std::uint64_t shift = (p - 1) / 2 * detail::ipow(p, (fp.n + fp.k) / 2 - 1);
  WeightDistribution out;
  out.add(0, 1);
  out.add((p - 1) * top, nn * (q - 2 * qnk + 1));
  out.add((p - 1) * top + shift, nn * (qnk - half));
  out.add((p - 1) * top - shift, nn * (qnk + half));
  return out;
}

/// dim_{F_p} C = 2n: the generator matrix with rows c(α^i, 0) and c(0, α^i),
/// i < n, has full rank. The code map is F_p-linear in (a, b), so this is
/// equivalent to all p^{2n} codewords being distinct.
inline std::size_t code_dimension(const FieldCtx& ctx) {
  const std::uint32_t n = ctx.params().n;
  detail::FpMatrix gen;
  gen.reserve(2 * n);
  for (std::uint32_t i = 0; i < n; ++i) gen.push_back(codeword(ctx, ctx.exp(i), ctx.zero()).symbols);
  for (std::uint32_t i = 0; i < n; ++i) gen.push_back(codeword(ctx, ctx.zero(), ctx.exp(i)).symbols);
  return detail::rank_mod_p(std::move(gen), ctx.p());
}

inline bool dimension_check(const FieldCtx& ctx) { return code_dimension(ctx) == 2 * ctx.params().n; }

}  // namespace seqspectra
