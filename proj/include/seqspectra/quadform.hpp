#pragma once

// Quadratic forms Q(x) = tr_k^n(±a x^{p^k+1} + b x^2) over F_{p^k}: Gram
// matrices, rank via linearized-polynomial kernels, congruence
// diagonalization and the closed-form character sum, plus the kernel and
// Bluher root censuses.

#include <cstdint>
#include <map>
#include <vector>

#include "seqspectra/charsum.hpp"
#include "seqspectra/detail/fp_linalg.hpp"
#include "seqspectra/gf.hpp"
#include "seqspectra/parallel.hpp"

namespace seqspectra {

/// φ(x) = c2·x^{p^{2k}} + c1·x^{p^k} + c0·x
struct LinearizedPoly {
  FieldElement c2;
  FieldElement c1;
  FieldElement c0;

  bool is_zero() const { return c2.is_zero() && c1.is_zero() && c0.is_zero(); }
};

inline FieldElement signed_coeff(const FieldCtx& ctx, FieldElement a, int sign) {
  return sign >= 0 ? a : ctx.neg(a);
}

/// φ_{sign·a, b}(x) = (sign·a)^{p^k} x^{p^{2k}} + 2b^{p^k} x^{p^k} + (sign·a) x,
/// the radical polynomial of tr_k^n(sign·a x^{p^k+1} + b x^2).
inline LinearizedPoly phi(const FieldCtx& ctx, FieldElement a, FieldElement b, int sign) {
  const std::uint32_t k = ctx.params().k;
  const FieldElement sa = signed_coeff(ctx, a, sign);
  return {ctx.frobenius(sa, k), ctx.mul(ctx.from_int(2), ctx.frobenius(b, k)), sa};
}

inline FieldElement evaluate(const FieldCtx& ctx, const LinearizedPoly& lp, FieldElement x) {
  const std::uint32_t k = ctx.params().k;
  FieldElement acc = ctx.mul(lp.c2, ctx.frobenius(x, 2 * k));
  acc = ctx.add(acc, ctx.mul(lp.c1, ctx.frobenius(x, k)));
  return ctx.add(acc, ctx.mul(lp.c0, x));
}

/// Number of roots of φ in F_{p^n}: p^{n - rank} of the F_p-matrix of x ↦ φ(x).
inline std::uint64_t kernel_size(const FieldCtx& ctx, const LinearizedPoly& lp) {
  if (lp.is_zero()) throw Error(Errc::InvalidParams, "kernel of the zero polynomial");
  const std::uint32_t n = ctx.params().n;
  detail::FpMatrix m(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t i = 0; i < n; ++i) {
    const auto ds = ctx.digits(evaluate(ctx, lp, ctx.exp(i)));
    for (std::uint32_t r = 0; r < n; ++r) m[r][i] = ds[r];
  }
  return detail::ipow(ctx.p(), n - detail::rank_mod_p(std::move(m), ctx.p()));
}

/// r = e - log_{p^k}(kernel size). Throws NonSubfieldKernel if the kernel
/// size is not a power of p^k.
inline std::uint32_t rank_of_form(const FieldCtx& ctx, FieldElement a, FieldElement b, int sign) {
  if (a.is_zero() && b.is_zero()) throw Error(Errc::InvalidParams, "(a, b) must be nonzero");
  const auto& fp = ctx.params();
  const std::uint64_t ks = kernel_size(ctx, phi(ctx, a, b, sign));
  std::uint64_t pw = 1;
  for (std::uint32_t t = 0; t <= fp.e; ++t, pw *= fp.qk)
    if (pw == ks) return fp.e - t;
  throw Error(Errc::NonSubfieldKernel, "kernel size is not a power of p^k");
}

/// Q(x) = tr_k^n(sign·a·x^{p^k+1} + b·x^2) ∈ F_{p^k}.
inline FieldElement quad_form_value(const FieldCtx& ctx, FieldElement a, FieldElement b, int sign, FieldElement x) {
  const auto& fp = ctx.params();
  const FieldElement sa = signed_coeff(ctx, a, sign);
  const FieldElement inner = ctx.add(ctx.mul(sa, ctx.pow(x, fp.qk + 1)), ctx.mul(b, ctx.mul(x, x)));
  return ctx.trace(inner, fp.k);
}

/// Symmetric e×e matrix over F_{p^k} (entries stored as F_{p^n} elements).
struct SymMatrix {
  std::uint32_t dim = 0;
  std::vector<FieldElement> entries;

  SymMatrix() = default;
  explicit SymMatrix(std::uint32_t d) : dim(d), entries(std::size_t{d} * d) {}

  FieldElement& at(std::uint32_t i, std::uint32_t j) { return entries[std::size_t{i} * dim + j]; }
  FieldElement at(std::uint32_t i, std::uint32_t j) const { return entries[std::size_t{i} * dim + j]; }
};

/// A_{jl} = ½(Q(α^j + α^l) - Q(α^j) - Q(α^l)) in the basis (1, α, …, α^{e-1}),
/// so that c^T A c = Q(x) for c = subfield_coords(x).
inline SymMatrix gram_matrix(const FieldCtx& ctx, FieldElement a, FieldElement b, int sign) {
  const std::uint32_t e = ctx.params().e;
  const FieldElement half = ctx.inv(ctx.from_int(2));
  std::vector<FieldElement> diag(e);
  for (std::uint32_t j = 0; j < e; ++j) diag[j] = quad_form_value(ctx, a, b, sign, ctx.exp(j));
  SymMatrix m(e);
  for (std::uint32_t j = 0; j < e; ++j) {
    for (std::uint32_t l = j; l < e; ++l) {
      const FieldElement qs = quad_form_value(ctx, a, b, sign, ctx.add(ctx.exp(j), ctx.exp(l)));
      const FieldElement v = ctx.mul(half, ctx.sub(ctx.sub(qs, diag[j]), diag[l]));
      m.at(j, l) = v;
      m.at(l, j) = v;
    }
  }
  return m;
}

/// c^T M c over F_{p^k}.
inline FieldElement evaluate_form(const FieldCtx& ctx, const SymMatrix& m, std::span<const FieldElement> c) {
  FieldElement acc{};
  for (std::uint32_t i = 0; i < m.dim; ++i)
    for (std::uint32_t j = 0; j < m.dim; ++j) acc = ctx.add(acc, ctx.mul(m.at(i, j), ctx.mul(c[i], c[j])));
  return acc;
}

/// Plain Gaussian-elimination rank over F_{p^k}.
inline std::uint32_t matrix_rank(const FieldCtx& ctx, SymMatrix m) {
  const std::uint32_t n = m.dim;
  std::uint32_t rank = 0;
  for (std::uint32_t c = 0; c < n && rank < n; ++c) {
    std::uint32_t piv = rank;
    while (piv < n && m.at(piv, c).is_zero()) ++piv;
    if (piv == n) continue;
    for (std::uint32_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    const FieldElement inv = ctx.inv(m.at(rank, c));
    for (std::uint32_t r = 0; r < n; ++r) {
      if (r == rank || m.at(r, c).is_zero()) continue;
      const FieldElement f = ctx.mul(m.at(r, c), inv);
      for (std::uint32_t j = 0; j < n; ++j) m.at(r, j) = ctx.sub(m.at(r, j), ctx.mul(f, m.at(rank, j)));
    }
    ++rank;
  }
  return rank;
}

/// H = B A B^T = diag(h_1, …, h_r, 0, …, 0) and Δ = h_1⋯h_r.
struct DiagForm {
  std::uint32_t rank = 0;
  FieldElement delta{1};
  int eta_delta = 1;
  std::vector<FieldElement> diagonal;
};

/// Symmetric elimination over F_{p^k} (odd characteristic). A zero pivot
/// with a nonzero off-diagonal entry is repaired by adding that row and
/// column, which puts 2·m_{jl} ≠ 0 on the diagonal.
inline DiagForm congruent_diagonalize(const FieldCtx& ctx, SymMatrix m) {
  const std::uint32_t n = m.dim;
  auto swap_index = [&](std::uint32_t i, std::uint32_t j) {
    if (i == j) return;
    for (std::uint32_t c = 0; c < n; ++c) std::swap(m.at(i, c), m.at(j, c));
    for (std::uint32_t r = 0; r < n; ++r) std::swap(m.at(r, i), m.at(r, j));
  };
  // row_i += row_j, col_i += col_j
  auto add_index = [&](std::uint32_t i, std::uint32_t j) {
    for (std::uint32_t c = 0; c < n; ++c) m.at(i, c) = ctx.add(m.at(i, c), m.at(j, c));
    for (std::uint32_t r = 0; r < n; ++r) m.at(r, i) = ctx.add(m.at(r, i), m.at(r, j));
  };

  DiagForm out;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (m.at(i, i).is_zero()) {
      std::uint32_t diag = n;
      for (std::uint32_t j = i + 1; j < n && diag == n; ++j)
        if (!m.at(j, j).is_zero()) diag = j;
      if (diag != n) {
        swap_index(i, diag);
      } else {
        bool fixed = false;
        for (std::uint32_t j = i; j < n && !fixed; ++j) {
          for (std::uint32_t l = j + 1; l < n && !fixed; ++l) {
            if (m.at(j, l).is_zero()) continue;
            add_index(j, l);
            swap_index(i, j);
            fixed = true;
          }
        }
        if (!fixed) break;  // remaining block is zero
      }
    }
    const FieldElement pivot = m.at(i, i);
    const FieldElement inv = ctx.inv(pivot);
    for (std::uint32_t r = i + 1; r < n; ++r) {
      if (m.at(r, i).is_zero()) continue;
      const FieldElement f = ctx.mul(m.at(r, i), inv);
      for (std::uint32_t c = i; c < n; ++c) m.at(r, c) = ctx.sub(m.at(r, c), ctx.mul(f, m.at(i, c)));
      for (std::uint32_t rr = i; rr < n; ++rr) m.at(rr, r) = ctx.sub(m.at(rr, r), ctx.mul(f, m.at(rr, i)));
    }
    out.diagonal.push_back(pivot);
    out.delta = ctx.mul(out.delta, pivot);
    ++out.rank;
  }
  out.eta_delta = ctx.eta(out.delta, ctx.params().k);
  return out;
}

/// Σ_{x ∈ F_{p^n}} ω^{tr_1^k f(x)} for a form of rank r with discriminant Δ:
/// η(Δ)·G^r·p^{k(e-r)}, where G = (√p*)^k is the quadratic Gauss sum of
/// F_{p^k} (k odd, p ≡ 3 mod 4).
inline QuadValue qf_sum_closed(const FieldCtx& ctx, const DiagForm& df) {
  const auto& fp = ctx.params();
  if (fp.qk % 4 != 3) throw Error(Errc::UnsupportedBranch, "closed form implemented for p^k ≡ 3 mod 4 only");
  const std::uint64_t m = std::uint64_t{fp.k} * df.rank;
  const auto scale = static_cast<std::int64_t>(detail::ipow(fp.p, std::uint64_t{fp.k} * (fp.e - df.rank)));
  const std::int64_t neg_p = -static_cast<std::int64_t>(fp.p);
  std::int64_t base = 1;
  for (std::uint64_t i = 0; i < m / 2; ++i) base *= neg_p;
  const std::int64_t c = 2 * base * scale * df.eta_delta;
  return m % 2 == 0 ? QuadValue{c, 0} : QuadValue{0, c};
}

/// S₁ (sign = +1) or S₂ (sign = -1) through Gram diagonalization.
inline QuadValue form_sum_closed(const FieldCtx& ctx, FieldElement a, FieldElement b, int sign) {
  return qf_sum_closed(ctx, congruent_diagonalize(ctx, gram_matrix(ctx, a, b, sign)));
}

/// S(a,b) = ½(S₁(a,b) + S₂(a,b)) from the two closed forms.
inline QuadValue dual_path_sab(const FieldCtx& ctx, FieldElement a, FieldElement b) {
  const QuadValue s = form_sum_closed(ctx, a, b, +1) + form_sum_closed(ctx, a, b, -1);
  if (s.twoA % 2 != 0 || s.twoB % 2 != 0) throw Error(Errc::NotRepresentable, "½(S₁ + S₂) is not a half-integer value");
  return {s.twoA / 2, s.twoB / 2};
}

struct KernelCensus {
  std::uint64_t pairs = 0;              // |F* × F*|
  std::uint64_t n1 = 0;                 // pairs with a kernel of size p^k
  std::uint64_t n2 = 0;                 // pairs with a kernel of size p^{2k}
  std::uint64_t unexpected_sizes = 0;   // kernels outside {1, p^k, p^{2k}}
  std::uint64_t both_nontrivial = 0;    // pairs where neither φ_{±a,b} is injective
  std::map<std::uint64_t, std::uint64_t> size_histogram;  // over both signs

  bool consistent() const { return unexpected_sizes == 0 && both_nontrivial == 0; }
};

/// N₁ = 2p^{n-k}(p^n-1), N₂ = 2(p^{n-k}-1)(p^n-1)/(p^{2k}-1).
inline std::pair<std::uint64_t, std::uint64_t> n1_n2_formula(const FieldCtx& ctx) {
  const auto& fp = ctx.params();
  const std::uint64_t qnk = detail::ipow(fp.p, fp.n - fp.k);
  return {2 * qnk * fp.period, 2 * (qnk - 1) * fp.period / (fp.qk * fp.qk - 1)};
}

/// Exhaustive root census of φ_{±a,b} over (a,b) ∈ F*×F*. For fixed a every
/// nonzero x is a root of exactly one φ_{a,b}, namely the one with
/// b^{p^k} = -(a^{p^k}x^{p^{2k}} + ax) / (2x^{p^k}); tallying that b over all x
/// gives every kernel size for that a in O(p^n).
inline KernelCensus kernel_census(const FieldCtx& ctx, unsigned threads = 1) {
  const auto& fp = ctx.params();
  const std::uint64_t n = fp.period;
  const std::uint64_t pk = detail::powmod(fp.p, fp.k, n);
  const std::uint64_t p2k = detail::powmod(fp.p, 2 * fp.k, n);
  std::vector<std::uint32_t> idx_pk(n), idx_p2k(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    idx_pk[i] = static_cast<std::uint32_t>(detail::mulmod(i, pk, n));
    idx_p2k[i] = static_cast<std::uint32_t>(detail::mulmod(i, p2k, n));
  }
  const std::uint64_t log_two = ctx.log(ctx.from_int(2));
  const std::uint64_t half_n = n / 2;
  const std::uint64_t sizes[3] = {1, fp.qk, fp.qk * fp.qk};

  const unsigned workers = effective_workers(n, threads);
  std::vector<KernelCensus> partial(workers);
  parallel_ranges(n, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
    KernelCensus& kc = partial[w];
    std::vector<std::uint32_t> tally_plus(n), tally_minus(n);
    const auto zech = ctx.zech_table();
    auto fill = [&](std::uint64_t la, std::vector<std::uint32_t>& tally) {
      std::fill(tally.begin(), tally.end(), 0);
      const std::uint64_t la_pk = detail::mulmod(la, pk, n);
      for (std::uint64_t i = 0; i < n; ++i) {
        std::uint64_t l1 = la_pk + idx_p2k[i];
        if (l1 >= n) l1 -= n;
        std::uint64_t l2 = la + i;
        if (l2 >= n) l2 -= n;
        // a^{p^k}x^{p^{2k}} + ax = α^{l1}(1 + α^{l2-l1})
        const std::uint32_t z = zech[l2 >= l1 ? l2 - l1 : l2 + n - l1];
        if (z == FieldCtx::kNoLog) continue;  // root of φ_{a,0}
        // log b^{p^k} = log(num) - log 2 - i·p^k + N/2
        const std::uint64_t lb = l1 + z + 3 * n + half_n - log_two - idx_pk[i];
        ++tally[lb % n];
      }
    };
    for (std::uint64_t la = begin; la < end; ++la) {
      fill(la, tally_plus);
      fill((la + half_n) % n, tally_minus);
      for (std::uint64_t lb = 0; lb < n; ++lb) {
        const std::uint64_t kp = 1 + std::uint64_t{tally_plus[lb]};
        const std::uint64_t km = 1 + std::uint64_t{tally_minus[lb]};
        ++kc.pairs;
        ++kc.size_histogram[kp];
        ++kc.size_histogram[km];
        for (std::uint64_t ks : {kp, km})
          if (ks != sizes[0] && ks != sizes[1] && ks != sizes[2]) ++kc.unexpected_sizes;
        if (kp != 1 && km != 1) ++kc.both_nontrivial;
        if (kp == sizes[1] || km == sizes[1]) ++kc.n1;
        if (kp == sizes[2] || km == sizes[2]) ++kc.n2;
      }
    }
  });
  KernelCensus out;
  for (const auto& kc : partial) {
    out.pairs += kc.pairs;
    out.n1 += kc.n1;
    out.n2 += kc.n2;
    out.unexpected_sizes += kc.unexpected_sizes;
    out.both_nontrivial += kc.both_nontrivial;
    for (const auto& [s, c] : kc.size_histogram) out.size_histogram[s] += c;
  }
  return out;
}

inline std::pair<std::uint64_t, std::uint64_t> n1_n2_census(const FieldCtx& ctx, unsigned threads = 1) {
  const KernelCensus kc = kernel_census(ctx, threads);
  return {kc.n1, kc.n2};
}

struct BluherCensus {
  std::uint32_t s = 0;
  std::uint32_t g = 0;  // gcd(s, n)
  std::map<std::uint64_t, std::uint64_t> histogram;  // root count -> #ψ
  std::uint64_t unique_root = 0;
  std::uint64_t many_roots = 0;  // p^g + 1 roots
  std::uint64_t unique_expected = 0;
  std::uint64_t many_expected = 0;
  std::uint64_t condition_violations = 0;  // roots failing (z-1)^{(p^n-1)/(p^g-1)} = 1
  bool support_ok = true;

  bool pass() const {
    return support_ok && unique_root == unique_expected && many_root_ok() && condition_violations == 0;
  }
  bool many_root_ok() const { return many_roots == many_expected; }
};

/// Root counts of z^{p^s+1} - ψz + ψ in F*_{p^n} for every ψ ∈ F*_{p^n}.
/// z = 1 is never a root; for every other z ≠ 0 there is exactly one ψ,
/// ψ = z^{p^s+1}/(z-1), so one pass over z finds every root of every ψ.
inline BluherCensus bluher_census(const FieldCtx& ctx, std::uint32_t s) {
  const auto& fp = ctx.params();
  const std::uint64_t n = fp.period;
  BluherCensus bc;
  bc.s = s;
  bc.g = static_cast<std::uint32_t>(detail::gcd(s, fp.n));
  const std::uint64_t pg = detail::ipow(fp.p, bc.g);
  bc.unique_expected = detail::ipow(fp.p, fp.n - bc.g);
  bc.many_expected = (detail::ipow(fp.p, fp.n - bc.g) - 1) / (pg * pg - 1);

  const std::uint64_t expo = (detail::powmod(fp.p, s, n) + 1) % n;
  auto psi_log = [&](std::uint64_t i) -> std::uint64_t {
    const FieldElement zm1 = ctx.sub(ctx.exp(i), ctx.one());
    return (detail::mulmod(i, expo, n) + n - ctx.log(zm1)) % n;
  };
  std::vector<std::uint32_t> roots(n, 0);
  for (std::uint64_t i = 1; i < n; ++i) ++roots[psi_log(i)];  // i = 0 is z = 1
  for (std::uint64_t l = 0; l < n; ++l) ++bc.histogram[roots[l]];
  for (const auto& [count, num] : bc.histogram)
    if (count != 0 && count != 1 && count != 2 && count != pg + 1) bc.support_ok = false;
  bc.unique_root = bc.histogram.count(1) ? bc.histogram.at(1) : 0;
  bc.many_roots = (pg + 1 != 1 && pg + 1 != 2 && bc.histogram.count(pg + 1)) ? bc.histogram.at(pg + 1) : 0;

  const std::uint64_t cond_exp = n / (pg - 1);
  for (std::uint64_t i = 1; i < n; ++i) {
    const std::uint64_t c = roots[psi_log(i)];
    if (c != 1 && c != pg + 1) continue;
    const FieldElement zm1 = ctx.sub(ctx.exp(i), ctx.one());
    if (ctx.pow(zm1, cond_exp) != ctx.one()) ++bc.condition_violations;
  }
  return bc;
}

}  // namespace seqspectra
