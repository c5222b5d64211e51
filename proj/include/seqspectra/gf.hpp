#pragma once

// Finite-field tower F_p ⊂ F_{p^k} ⊂ F_{p^n} backed by log/antilog and Zech
// tables. Elements are encoded as the integer Σ c_i p^i of their coefficient
// vector in the polynomial basis (1, α, …, α^{n-1}).

#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "seqspectra/detail/arith.hpp"
#include "seqspectra/detail/fp_linalg.hpp"
#include "seqspectra/error.hpp"

namespace seqspectra {

inline constexpr std::uint64_t kDefaultTableCap = std::uint64_t{1} << 26;

struct FieldElement {
  std::uint32_t code = 0;

  constexpr bool is_zero() const { return code == 0; }
  constexpr auto operator<=>(const FieldElement&) const = default;
};

/// Parameters (p, n, k) of the tower together with the derived decimation
/// d = (p^n+1)/(p^k+1) + (p^n-1)/2.
struct FieldParams {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t e = 0;        // n / k
  std::uint64_t q = 0;        // p^n
  std::uint64_t qk = 0;       // p^k
  std::uint64_t period = 0;   // N = p^n - 1
  std::uint64_t d = 0;

  /// Validates (p, n, k) against the admissibility constraints and the table
  /// cap. Throws Error{InvalidParams} or Error{CapExceeded}.
  static FieldParams make(std::uint64_t p, std::uint64_t n, std::uint64_t k,
                          std::uint64_t cap = kDefaultTableCap) {
    auto invalid = [](const std::string& msg) { return Error(Errc::InvalidParams, msg); };
    if (!detail::is_prime(p) || p == 2) throw invalid("p must be an odd prime");
    if (p % 4 != 3) throw invalid("p ≡ 3 mod 4 violated");
    if (n == 0 || n % 2 == 0) throw invalid("n must be odd");
    if (k == 0 || n % k != 0) throw invalid("k must divide n");
    const auto q = detail::checked_pow(p, n);
    if (!q || *q > cap || *q > (std::uint64_t{1} << 32)) {
      std::ostringstream os;
      os << "table cap exceeded: p^n = " << p << "^" << n << " > " << cap;
      throw Error(Errc::CapExceeded, os.str());
    }
    FieldParams fp;
    fp.p = static_cast<std::uint32_t>(p);
    fp.n = static_cast<std::uint32_t>(n);
    fp.k = static_cast<std::uint32_t>(k);
    fp.e = static_cast<std::uint32_t>(n / k);
    fp.q = *q;
    fp.qk = detail::ipow(p, k);
    fp.period = fp.q - 1;
    if ((fp.q + 1) % (fp.qk + 1) != 0 || fp.period % 2 != 0)
      throw invalid("decimation summands are not integral");
    fp.d = (fp.q + 1) / (fp.qk + 1) + fp.period / 2;
    fp.validate();
    return fp;
  }

  /// Re-checks the decimation invariants; used to reject hand-edited params.
  void validate() const {
    auto invalid = [](const std::string& msg) { return Error(Errc::InvalidParams, msg); };
    if (q + 1 == 0 || (q + 1) % (qk + 1) != 0) throw invalid("p^k + 1 must divide p^n + 1");
    if (d != (q + 1) / (qk + 1) + period / 2) throw invalid("d does not match (p^n+1)/(p^k+1) + (p^n-1)/2");
    if (detail::gcd(d, period) != 2) throw invalid("gcd(d, p^n - 1) must equal 2");
    if (detail::mulmod(d % period, (qk + 1) % period, period) != 2 % period)
      throw invalid("d(p^k + 1) ≡ 2 mod p^n - 1 violated");
  }
};

class FieldCtx {
 public:
  static constexpr std::uint32_t kNoLog = 0xFFFFFFFFu;

  explicit FieldCtx(const FieldParams& params) : params_(params) {
    params_.validate();
    find_modulus();
    build_tables();
    build_subfield_basis();
  }

  static FieldCtx build(std::uint64_t p, std::uint64_t n, std::uint64_t k,
                        std::uint64_t cap = kDefaultTableCap) {
    return FieldCtx(FieldParams::make(p, n, k, cap));
  }

  const FieldParams& params() const { return params_; }
  std::uint32_t p() const { return params_.p; }
  std::uint64_t size() const { return params_.q; }
  std::uint64_t order() const { return params_.period; }

  /// Coefficients c_0..c_{n-1} of the monic modulus x^n + Σ c_i x^i.
  std::span<const std::uint32_t> modulus() const { return modulus_; }
  FieldElement alpha() const { return exp(1); }

  FieldElement zero() const { return {}; }
  FieldElement one() const { return {1}; }
  FieldElement from_int(std::int64_t c) const {
    const std::int64_t pp = params_.p;
    return {static_cast<std::uint32_t>(((c % pp) + pp) % pp)};
  }
  /// Element with the given canonical integer encoding.
  FieldElement from_code(std::uint64_t code) const { return {static_cast<std::uint32_t>(code)}; }

  FieldElement exp(std::uint64_t i) const { return {exp_[i % params_.period]}; }
  std::uint32_t log(FieldElement x) const {
    if (x.is_zero()) throw Error(Errc::ZeroArgument, "log of zero");
    return log_[x.code];
  }

  FieldElement add(FieldElement x, FieldElement y) const {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    const std::uint64_t n = params_.period;
    std::uint64_t lx = log_[x.code], ly = log_[y.code];
    const std::uint64_t diff = ly >= lx ? ly - lx : ly + n - lx;
    const std::uint32_t z = zech_[diff];
    if (z == kNoLog) return {};
    std::uint64_t r = lx + z;
    if (r >= n) r -= n;
    return {exp_[r]};
  }
  FieldElement neg(FieldElement x) const {
    if (x.is_zero()) return x;
    std::uint64_t r = log_[x.code] + params_.period / 2;
    if (r >= params_.period) r -= params_.period;
    return {exp_[r]};
  }
  FieldElement sub(FieldElement x, FieldElement y) const { return add(x, neg(y)); }
  FieldElement mul(FieldElement x, FieldElement y) const {
    if (x.is_zero() || y.is_zero()) return {};
    std::uint64_t r = std::uint64_t{log_[x.code]} + log_[y.code];
    if (r >= params_.period) r -= params_.period;
    return {exp_[r]};
  }
  FieldElement inv(FieldElement x) const {
    if (x.is_zero()) throw Error(Errc::ZeroArgument, "inverse of zero");
    const std::uint32_t l = log_[x.code];
    return {exp_[l == 0 ? 0 : params_.period - l]};
  }
  FieldElement div(FieldElement x, FieldElement y) const { return mul(x, inv(y)); }
  FieldElement pow(FieldElement x, std::uint64_t e) const {
    if (x.is_zero()) return e == 0 ? one() : zero();
    return {exp_[detail::mulmod(log_[x.code], e % params_.period, params_.period)]};
  }
  /// x^{p^j}
  FieldElement frobenius(FieldElement x, std::uint64_t j) const {
    if (x.is_zero()) return x;
    const std::uint64_t f = detail::powmod(params_.p, j, params_.period);
    return {exp_[detail::mulmod(log_[x.code], f, params_.period)]};
  }

  bool divides_n(std::uint64_t m) const { return m != 0 && params_.n % m == 0; }

  bool in_subfield(FieldElement x, std::uint64_t m) const {
    return divides_n(m) && frobenius(x, m) == x;
  }

  /// Relative trace tr_m^n(x) = Σ_{i<n/m} x^{p^{mi}}.
  FieldElement trace(FieldElement x, std::uint64_t m) const {
    if (!divides_n(m)) throw Error(Errc::InvalidParams, "trace degree must divide n");
    FieldElement acc{};
    for (std::uint64_t i = 0; i < params_.n / m; ++i) acc = add(acc, frobenius(x, m * i));
    return acc;
  }
  /// Absolute trace as an integer in [0, p).
  std::uint32_t trace1(FieldElement x) const { return tr1_[x.code]; }

  /// Quadratic character of F_{p^m}^*, evaluated on x ∈ F_{p^m}^*.
  int eta(FieldElement x, std::uint64_t m) const {
    if (x.is_zero()) throw Error(Errc::ZeroArgument, "eta of zero");
    if (!divides_n(m)) throw Error(Errc::InvalidParams, "subfield degree must divide n");
    if (!in_subfield(x, m)) throw Error(Errc::NotInSubfield, "argument is not in F_{p^m}");
    const std::uint64_t cofactor = params_.period / (detail::ipow(params_.p, m) - 1);
    const std::uint64_t sublog = log_[x.code] / cofactor;
    return sublog % 2 == 0 ? 1 : -1;
  }

  /// tr(α^i) for 0 <= i < 2N, so callers can index with a sum of two logs
  /// without reducing modulo N.
  std::span<const std::uint32_t> trace_by_index() const { return trace_idx_; }
  /// d·i mod N for 0 <= i < N; x ↦ x^d in the log domain.
  std::span<const std::uint32_t> decimation_index() const { return dec_idx_; }
  /// Raw tables for hot loops: exp (size N), log (size p^n, log[0] = kNoLog)
  /// and Zech logarithms log(1 + α^i) (kNoLog where 1 + α^i = 0).
  std::span<const std::uint32_t> exp_table() const { return exp_; }
  std::span<const std::uint32_t> log_table() const { return log_; }
  std::span<const std::uint32_t> zech_table() const { return zech_; }

  std::vector<std::uint32_t> digits(FieldElement x) const {
    std::vector<std::uint32_t> out(params_.n);
    std::uint64_t c = x.code;
    for (auto& v : out) {
      v = static_cast<std::uint32_t>(c % params_.p);
      c /= params_.p;
    }
    return out;
  }
  FieldElement from_digits(std::span<const std::uint32_t> ds) const {
    std::uint64_t c = 0;
    for (std::size_t i = ds.size(); i-- > 0;) c = c * params_.p + ds[i] % params_.p;
    return {static_cast<std::uint32_t>(c)};
  }

  /// Coordinates of x over F_{p^k} in the basis (1, α, …, α^{e-1}).
  std::vector<FieldElement> subfield_coords(FieldElement x) const {
    const auto v = digits(x);
    const std::uint32_t n = params_.n, k = params_.k, p = params_.p;
    std::vector<FieldElement> out(params_.e);
    for (std::uint32_t j = 0; j < params_.e; ++j) {
      FieldElement c{};
      for (std::uint32_t t = 0; t < k; ++t) {
        const std::uint32_t row = j * k + t;
        std::uint64_t u = 0;
        for (std::uint32_t i = 0; i < n; ++i) u += detail::mulmod(coord_inv_[row][i], v[i], p);
        u %= p;
        if (u) c = add(c, mul(from_int(static_cast<std::int64_t>(u)), sub_basis_[t]));
      }
      out[j] = c;
    }
    return out;
  }

  FieldElement from_subfield_coords(std::span<const FieldElement> coords) const {
    FieldElement acc{};
    for (std::size_t j = 0; j < coords.size(); ++j) acc = add(acc, mul(coords[j], exp(j)));
    return acc;
  }

  /// A generator of F_{p^k}^*: α^{(p^n-1)/(p^k-1)}.
  FieldElement subfield_generator() const {
    return exp(params_.period / (params_.qk - 1));
  }

 private:
  void find_modulus();
  void build_tables();
  void build_subfield_basis();

  FieldParams params_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> zech_;
  std::vector<std::uint32_t> tr1_;
  std::vector<std::uint32_t> trace_idx_;
  std::vector<std::uint32_t> dec_idx_;
  std::vector<FieldElement> sub_basis_;
  detail::FpMatrix coord_inv_;
};

namespace detail {

// Polynomials over F_p modulo a monic f of degree n, coefficients low-first.
struct PolyRing {
  std::uint32_t p;
  std::vector<std::uint32_t> f;  // c_0..c_{n-1}

  std::vector<std::uint32_t> mul(const std::vector<std::uint32_t>& a,
                                 const std::vector<std::uint32_t>& b) const {
    const std::size_t n = f.size();
    std::vector<std::uint64_t> prod(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    }
    for (std::size_t deg = 2 * n - 1; deg >= n; --deg) {
      const std::uint64_t top = prod[deg];
      if (top) {
        prod[deg] = 0;
        for (std::size_t i = 0; i < n; ++i)
          prod[deg - n + i] = (prod[deg - n + i] + (p - top) * f[i]) % p;
      }
      if (deg == n) break;
    }
    return {prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(n)};
  }

  std::vector<std::uint32_t> pow(std::vector<std::uint32_t> base, std::uint64_t e) const {
    std::vector<std::uint32_t> r(f.size(), 0);
    r[0] = 1;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  // x reduced modulo f.
  std::vector<std::uint32_t> x() const {
    std::vector<std::uint32_t> r(f.size(), 0);
    if (f.size() == 1) {
      r[0] = (p - f[0]) % p;
    } else {
      r[1] = 1;
    }
    return r;
  }

  bool is_one(const std::vector<std::uint32_t>& a) const {
    if (a[0] != 1) return false;
    for (std::size_t i = 1; i < a.size(); ++i)
      if (a[i]) return false;
    return true;
  }
};

}  // namespace detail

// The first modulus, in increasing order of Σ c_i p^i, whose root has
// multiplicative order exactly p^n - 1. A primitive root forces the quotient
// ring to be a field, so irreducibility follows.
inline void FieldCtx::find_modulus() {
  const std::uint32_t p = params_.p, n = params_.n;
  const std::uint64_t order = params_.period;
  const auto factors = detail::prime_factors(order);
  detail::PolyRing ring{p, std::vector<std::uint32_t>(n, 0)};
  for (std::uint64_t m = 1; m < params_.q; ++m) {
    std::uint64_t c = m;
    for (std::uint32_t i = 0; i < n; ++i) {
      ring.f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    if (ring.f[0] == 0) continue;
    const auto x = ring.x();
    if (!ring.is_one(ring.pow(x, order))) continue;
    bool primitive = true;
    for (auto r : factors) {
      if (ring.is_one(ring.pow(x, order / r))) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      modulus_ = ring.f;
      return;
    }
  }
  throw Error(Errc::InvalidParams, "no primitive polynomial found");
}

inline void FieldCtx::build_tables() {
  const std::uint32_t p = params_.p, n = params_.n;
  const std::uint64_t q = params_.q, order = params_.period;
  exp_.assign(order, 0);
  log_.assign(q, kNoLog);

  std::vector<std::uint32_t> cur(n, 0);
  cur[0] = 1;
  auto encode = [&](const std::vector<std::uint32_t>& v) {
    std::uint64_t c = 0;
    for (std::size_t i = n; i-- > 0;) c = c * p + v[i];
    return static_cast<std::uint32_t>(c);
  };
  for (std::uint64_t i = 0; i < order; ++i) {
    const std::uint32_t code = encode(cur);
    exp_[i] = code;
    log_[code] = static_cast<std::uint32_t>(i);
    const std::uint64_t carry = cur[n - 1];
    for (std::uint32_t j = n - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (carry)
      for (std::uint32_t j = 0; j < n; ++j)
        cur[j] = static_cast<std::uint32_t>((cur[j] + (p - carry) * modulus_[j]) % p);
  }

  // Zech logarithms: zech_[i] = log(1 + α^i).
  zech_.assign(order, kNoLog);
  for (std::uint64_t i = 0; i < order; ++i) {
    const std::uint32_t code = exp_[i];
    const std::uint32_t d0 = code % p;
    const std::uint32_t plus_one = code - d0 + (d0 + 1) % p;
    zech_[i] = plus_one == 0 ? kNoLog : log_[plus_one];
  }

  // Absolute trace is F_p-linear: tabulate it on the polynomial basis first.
  std::vector<std::uint32_t> basis_tr(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const FieldElement t = trace(exp(i), 1);
    if (t.code >= p) throw Error(Errc::InvalidParams, "trace left the prime field");
    basis_tr[i] = t.code;
  }
  tr1_.assign(q, 0);
  for (std::uint64_t code = 0; code < q; ++code) {
    std::uint64_t c = code, acc = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      acc += (c % p) * basis_tr[i];
      c /= p;
    }
    tr1_[code] = static_cast<std::uint32_t>(acc % p);
  }
  trace_idx_.assign(2 * order, 0);
  for (std::uint64_t i = 0; i < 2 * order; ++i) trace_idx_[i] = tr1_[exp_[i % order]];

  dec_idx_.assign(order, 0);
  const std::uint64_t d = params_.d % order;
  for (std::uint64_t i = 0; i < order; ++i) dec_idx_[i] = static_cast<std::uint32_t>(detail::mulmod(d, i, order));
}

// F_p-basis {γ_t α^j} of F_{p^n}, γ_t = ζ^t for a generator ζ of F_{p^k}^*;
// its inverse coordinate matrix turns digits into F_{p^k}-coordinates.
inline void FieldCtx::build_subfield_basis() {
  const std::uint32_t n = params_.n, k = params_.k, p = params_.p;
  const FieldElement zeta = subfield_generator();
  sub_basis_.resize(k);
  for (std::uint32_t t = 0; t < k; ++t) sub_basis_[t] = pow(zeta, t);
  detail::FpMatrix basis(n, std::vector<std::uint32_t>(n, 0));
  for (std::uint32_t j = 0; j < params_.e; ++j) {
    for (std::uint32_t t = 0; t < k; ++t) {
      const auto ds = digits(mul(sub_basis_[t], exp(j)));
      for (std::uint32_t i = 0; i < n; ++i) basis[i][j * k + t] = ds[i];
    }
  }
  auto inv = detail::inverse_mod_p(basis, p);
  if (!inv) throw Error(Errc::InvalidParams, "subfield basis is singular");
  coord_inv_ = std::move(*inv);
}

}  // namespace seqspectra
