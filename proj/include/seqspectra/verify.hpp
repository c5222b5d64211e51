#pragma once

// The full property suite behind `seqspectra verify`. Every item reports the
// number of cases it ran and whether they were exhaustive or sampled.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "seqspectra/charsum.hpp"
#include "seqspectra/code.hpp"
#include "seqspectra/expsum.hpp"
#include "seqspectra/gf.hpp"
#include "seqspectra/oracle.hpp"
#include "seqspectra/parallel.hpp"
#include "seqspectra/quadform.hpp"
#include "seqspectra/seqfam.hpp"

namespace seqspectra {

struct VerifyOptions {
  unsigned threads = 1;
  std::uint64_t seed = 1;
  std::uint64_t pair_limit = 200000;  // exhaustive over (a,b) when p^{2n} <= this
  std::uint64_t samples = 10000;
  std::uint64_t float_samples = 1000;
  std::uint64_t triple_samples = 1000;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  bool exhaustive = true;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
  }
  const CheckResult* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

namespace detail {

struct PairSet {
  bool exhaustive = true;
  std::uint64_t count = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> sampled;
};

/// All of F×F when small enough, else `samples` seeded random pairs.
/// With nonzero_a only a ≠ 0 is drawn.
inline PairSet make_pairs(const FieldCtx& ctx, const VerifyOptions& opt, std::uint64_t samples, bool nonzero_a,
                          std::uint64_t salt) {
  const std::uint64_t q = ctx.size();
  PairSet ps;
  const std::uint64_t full = (nonzero_a ? q - 1 : q) * q;
  if (q * q <= opt.pair_limit) {
    ps.count = full;
    return ps;
  }
  ps.exhaustive = false;
  std::mt19937_64 rng(opt.seed ^ (salt * 0x9E3779B97F4A7C15ull));
  ps.sampled.reserve(samples);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const std::uint64_t a = nonzero_a ? 1 + rng() % (q - 1) : rng() % q;
    ps.sampled.emplace_back(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(rng() % q));
  }
  ps.count = samples;
  return ps;
}

/// Runs pred(a, b) over the pair set in parallel; returns the failure count.
template <class Pred>
std::uint64_t count_failures(const FieldCtx& ctx, const PairSet& ps, bool nonzero_a, unsigned threads, Pred&& pred) {
  const std::uint64_t q = ctx.size();
  std::atomic<std::uint64_t> failures{0};
  const unsigned workers = effective_workers(ps.count, threads);
  parallel_ranges(ps.count, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned) {
    std::uint64_t local = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      std::uint64_t a, b;
      if (ps.exhaustive) {
        a = i / q + (nonzero_a ? 1 : 0);
        b = i % q;
      } else {
        a = ps.sampled[i].first;
        b = ps.sampled[i].second;
      }
      if (!pred(ctx.from_code(a), ctx.from_code(b))) ++local;
    }
    failures += local;
  });
  return failures.load();
}

inline CheckResult pair_check(std::string name, const PairSet& ps, std::uint64_t failures) {
  CheckResult r;
  r.name = std::move(name);
  r.exhaustive = ps.exhaustive;
  r.cases = ps.count;
  r.failures = failures;
  r.pass = failures == 0;
  return r;
}

template <class Fn>
CheckResult guarded(std::string name, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& err) {
    CheckResult r;
    r.name = std::move(name);
    r.pass = false;
    r.failures = 1;
    r.detail = std::string(errc_name(err.code())) + ": " + err.what();
    return r;
  }
}

}  // namespace detail

inline VerifyReport run_verify(const FieldCtx& ctx, const VerifyOptions& opt = {}) {
  const auto& fp = ctx.params();
  const std::uint32_t p = fp.p;
  const std::uint64_t q = fp.q;
  const unsigned threads = opt.threads;
  VerifyReport rep;
  auto push = [&](CheckResult r) { rep.checks.push_back(std::move(r)); };

  push(detail::guarded("params", [&] {
    CheckResult r{"params", true, true, 1, 0, ""};
    fp.validate();
    std::ostringstream os;
    os << "d=" << fp.d << " N=" << fp.period << " gcd(d,N)=" << detail::gcd(fp.d, fp.period);
    r.detail = os.str();
    return r;
  }));

  const ValueDistribution brute = value_distribution_bruteforce(ctx, threads);

  push(detail::guarded("value_distribution", [&] {
    const ValueDistribution closed = closed_form_distribution(ctx);
    CheckResult r{"value_distribution", brute == closed, true, q * q, 0, ""};
    if (!r.pass) r.failures = 1;
    return r;
  }));

  push(detail::guarded("candidate_values", [&] {
    const auto cands = candidate_values(ctx);
    CheckResult r{"candidate_values", true, true, q * q, 0, ""};
    for (const auto& [v, c] : brute.entries)
      if (c && std::find(cands.begin(), cands.end(), v) == cands.end()) r.failures += c;
    r.pass = r.failures == 0;
    return r;
  }));

  // When p^k = 3 the excluded values coincide with ±jp^{n/2}; then only the
  // closed-form multiplicity may appear, otherwise none at all.
  push(detail::guarded("excluded_values", [&] {
    const ValueDistribution closed = closed_form_distribution(ctx);
    CheckResult r{"excluded_values", true, true, q * q, 0, ""};
    for (const auto& v : excluded_values(ctx)) {
      const std::uint64_t seen = brute.count(v), allowed = closed.count(v);
      r.failures += seen > allowed ? seen - allowed : allowed - seen;
    }
    r.pass = r.failures == 0;
    if (fp.qk == 3) r.detail = "coincides with ±jp^{n/2}";
    return r;
  }));

  push(detail::guarded("moments", [&] {
    const MomentReport m = moment_checks(brute, ctx);
    CheckResult r{"moments", m.all_pass(), true, 3, 0, ""};
    r.failures = !m.count_ok + !m.first_ok + !m.second_ok;
    return r;
  }));

  push(detail::guarded("conjugate_symmetry", [&] {
    const bool ok = conjugate_symmetric(brute);
    return CheckResult{"conjugate_symmetry", ok, true, brute.entries.size(), ok ? 0u : 1u, ""};
  }));

  push(detail::guarded("negation_conjugates", [&] {
    const auto ps = detail::make_pairs(ctx, opt, opt.samples, false, 1);
    const auto fails = detail::count_failures(ctx, ps, false, threads, [&](FieldElement a, FieldElement b) {
      return sab(ctx, ctx.neg(a), ctx.neg(b)) == conj(sab(ctx, a, b));
    });
    return detail::pair_check("negation_conjugates", ps, fails);
  }));

  push(detail::guarded("reduction_identity", [&] {
    const auto ps = detail::make_pairs(ctx, opt, opt.samples, true, 2);
    const auto fails = detail::count_failures(ctx, ps, true, threads, [&](FieldElement a, FieldElement b) {
      return sab(ctx, a, b) == sab(ctx, ctx.one(), reduce_pair(ctx, a, b));
    });
    return detail::pair_check("reduction_identity", ps, fails);
  }));

  push(detail::guarded("weil_bound", [&] {
    const std::uint64_t l = (fp.qk + 1) / 2;
    const std::uint64_t total = fp.period * q;
    const bool exhaustive = total <= opt.pair_limit;
    const WeilReport w = weil_bound_check(ctx, l, exhaustive ? 0 : opt.samples, opt.seed);
    std::ostringstream os;
    os << "l=" << l << " exact=" << w.exact_cases;
    return CheckResult{"weil_bound", w.pass(), exhaustive, w.cases, w.violations, os.str()};
  }));

  push(detail::guarded("kernel_census", [&] {
    const KernelCensus kc = kernel_census(ctx, threads);
    const auto [n1, n2] = n1_n2_formula(ctx);
    CheckResult r{"kernel_census", false, true, kc.pairs, 0, ""};
    r.failures = kc.unexpected_sizes + kc.both_nontrivial + (kc.n1 != n1) + (kc.n2 != n2);
    r.pass = r.failures == 0;
    std::ostringstream os;
    os << "N1=" << kc.n1 << "/" << n1 << " N2=" << kc.n2 << "/" << n2;
    r.detail = os.str();
    return r;
  }));

  for (std::uint32_t s = 1; s < fp.n; ++s) {
    const std::string name = "bluher_s" + std::to_string(s);
    push(detail::guarded(name, [&] {
      const BluherCensus bc = bluher_census(ctx, s);
      CheckResult r{name, bc.pass(), true, fp.period, 0, ""};
      r.failures = (bc.unique_root != bc.unique_expected) + !bc.many_root_ok() + !bc.support_ok +
                   bc.condition_violations;
      std::ostringstream os;
      os << "unique=" << bc.unique_root << "/" << bc.unique_expected << " many=" << bc.many_roots << "/"
         << bc.many_expected;
      r.detail = os.str();
      return r;
    }));
  }

  push(detail::guarded("dual_path", [&] {
    const auto ps = detail::make_pairs(ctx, opt, opt.samples, false, 3);
    const auto fails = detail::count_failures(ctx, ps, false, threads, [&](FieldElement a, FieldElement b) {
      if (a.is_zero() && b.is_zero()) return true;
      return dual_path_sab(ctx, a, b) == sab(ctx, a, b);
    });
    return detail::pair_check("dual_path", ps, fails);
  }));

  push(detail::guarded("mu_integrality", [&] {
    CheckResult r{"mu_integrality", true, true, 0, 0, ""};
    for (const auto& [v, c] : brute.entries) {
      if (!c) continue;
      ++r.cases;
      try {
        (void)weight_from_value(ctx, v);
      } catch (const Error& err) {
        if (err.code() != Errc::NonIntegerWeight) throw;
        ++r.failures;
      }
    }
    r.pass = r.failures == 0;
    return r;
  }));

  push(detail::guarded("weight_distribution", [&] {
    const bool ok = weights_from_values(ctx, brute) == closed_form_weight_distribution(ctx);
    return CheckResult{"weight_distribution", ok, true, q * q, ok ? 0u : 1u, ""};
  }));

  push(detail::guarded("weight_via_mu", [&] {
    const auto ps = detail::make_pairs(ctx, opt, opt.samples, false, 4);
    const auto fails = detail::count_failures(ctx, ps, false, threads, [&](FieldElement a, FieldElement b) {
      return weight_via_mu(ctx, a, b) == oracle::naive_weight(codeword(ctx, a, b).symbols);
    });
    return detail::pair_check("weight_via_mu", ps, fails);
  }));

  push(detail::guarded("dimension", [&] {
    const std::size_t dim = code_dimension(ctx);
    CheckResult r{"dimension", dim == 2 * fp.n, true, 1, dim == 2 * fp.n ? 0u : 1u, ""};
    r.detail = "rank=" + std::to_string(dim);
    return r;
  }));

  push(detail::guarded("family_bound", [&] {
    const CorrelationSpectrum sp = family_spectrum(ctx, Scope::AllShifts, threads);
    CheckResult r{"family_bound", sp.within_bound(), true, sp.values.total(), sp.within_bound() ? 0u : 1u, ""};
    r.detail = "max4=" + detail::to_string(sp.max_observed_times4) + " bound4=" + detail::to_string(sp.bound_times4);
    return r;
  }));

  push(detail::guarded("correlation_paths", [&] {
    const std::uint64_t n = fp.period;
    const bool exhaustive = q * q * n <= opt.pair_limit;
    const std::uint64_t cases = exhaustive ? q * q * n : opt.triple_samples;
    std::mt19937_64 rng(opt.seed ^ 0x5bd1e995ull);
    std::vector<std::array<std::uint64_t, 3>> triples;
    if (!exhaustive)
      for (std::uint64_t i = 0; i < cases; ++i) triples.push_back({rng() % q, rng() % q, rng() % n});
    std::atomic<std::uint64_t> failures{0};
    parallel_ranges(cases, effective_workers(cases, threads), [&](std::uint64_t begin, std::uint64_t end, unsigned) {
      std::uint64_t local = 0;
      for (std::uint64_t i = begin; i < end; ++i) {
        const auto t = exhaustive ? std::array<std::uint64_t, 3>{i / (q * n), (i / n) % q, i % n} : triples[i];
        const FieldElement b1 = ctx.from_code(t[0]), b2 = ctx.from_code(t[1]);
        if (correlation(ctx, b1, b2, t[2]) != correlation_via_sum(ctx, b1, b2, t[2])) ++local;
      }
      failures += local;
    });
    return CheckResult{"correlation_paths", failures == 0, exhaustive, cases, failures.load(), ""};
  }));

  push(detail::guarded("m_sequence_autocorrelation", [&] {
    const Sequence m = family_member(ctx, ctx.zero());
    CheckResult r{"m_sequence_autocorrelation", true, true, fp.period - 1, 0, ""};
    for (std::uint64_t tau = 1; tau < fp.period; ++tau)
      if (correlation(m.values, m.values, tau, p) != QuadValue{-2, 0}) ++r.failures;
    r.pass = r.failures == 0;
    return r;
  }));

  push(detail::guarded("float_oracle", [&] {
    const double tol = 1e-6 * std::pow(static_cast<double>(p), fp.n / 2.0);
    const std::uint64_t cases = std::min(opt.float_samples, q * q);
    std::mt19937_64 rng(opt.seed ^ 0xC2B2AE35ull);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    for (std::uint64_t i = 0; i < cases; ++i) {
      if (cases == q * q) pairs.emplace_back(i / q, i % q);
      else pairs.emplace_back(rng() % q, rng() % q);
    }
    std::atomic<std::uint64_t> failures{0};
    parallel_ranges(cases, effective_workers(cases, threads), [&](std::uint64_t begin, std::uint64_t end, unsigned) {
      std::uint64_t local = 0;
      for (std::uint64_t i = begin; i < end; ++i) {
        const FieldElement a = ctx.from_code(pairs[i].first), b = ctx.from_code(pairs[i].second);
        if (std::abs(to_complex(sab(ctx, a, b), p) - oracle::float_sab(ctx, a, b)) > tol) ++local;
      }
      failures += local;
    });
    return CheckResult{"float_oracle", failures == 0, cases == q * q, cases, failures.load(), ""};
  }));

  return rep;
}

}  // namespace seqspectra
