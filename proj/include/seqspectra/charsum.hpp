#pragma once

// Exact values in the quadratic subfield Q(√p*) ⊂ Q(ω), p* = -p.
//
// A value is stored doubled, (twoA + twoB·√p*) / 2, which covers every
// character-sum value this library produces. The embedding is fixed by
// √p* = Σ_t (t/p) ω^t = +i√p (p ≡ 3 mod 4, ω = e^{2πi/p}).

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "seqspectra/detail/arith.hpp"
#include "seqspectra/error.hpp"

namespace seqspectra {

template <class Int>
struct BasicQuadValue {
  Int twoA = 0;
  Int twoB = 0;

  constexpr bool is_rational() const { return twoB == 0; }

  constexpr BasicQuadValue operator+(const BasicQuadValue& o) const { return {twoA + o.twoA, twoB + o.twoB}; }
  constexpr BasicQuadValue operator-(const BasicQuadValue& o) const { return {twoA - o.twoA, twoB - o.twoB}; }
  constexpr BasicQuadValue operator-() const { return {-twoA, -twoB}; }
  constexpr BasicQuadValue& operator+=(const BasicQuadValue& o) {
    twoA += o.twoA;
    twoB += o.twoB;
    return *this;
  }
  constexpr BasicQuadValue scaled(Int s) const { return {twoA * s, twoB * s}; }

  constexpr bool operator==(const BasicQuadValue&) const = default;
  constexpr bool operator<(const BasicQuadValue& o) const {
    return twoA != o.twoA ? twoA < o.twoA : twoB < o.twoB;
  }

  template <class Other>
  constexpr BasicQuadValue<Other> widen() const {
    return {static_cast<Other>(twoA), static_cast<Other>(twoB)};
  }
};

using QuadValue = BasicQuadValue<std::int64_t>;
using WideQuadValue = BasicQuadValue<int128_t>;

/// Complex conjugate: √p* ↦ -√p*.
template <class Int>
constexpr BasicQuadValue<Int> conj(const BasicQuadValue<Int>& v) {
  return {v.twoA, -v.twoB};
}

/// Product in Q(√p*). Throws NotRepresentable when the result leaves the
/// half-integer lattice.
template <class Int>
BasicQuadValue<Int> multiply(const BasicQuadValue<Int>& x, const BasicQuadValue<Int>& y, std::uint32_t p) {
  const Int pp = static_cast<Int>(p);
  const Int a = x.twoA * y.twoA - pp * x.twoB * y.twoB;
  const Int b = x.twoA * y.twoB + x.twoB * y.twoA;
  if (a % 2 != 0 || b % 2 != 0) throw Error(Errc::NotRepresentable, "product is not a half-integer combination");
  return {a / 2, b / 2};
}

/// 4·|v|² = twoA² + p·twoB², exact.
template <class Int>
int128_t norm_times4(const BasicQuadValue<Int>& v, std::uint32_t p) {
  const int128_t a = static_cast<int128_t>(v.twoA), b = static_cast<int128_t>(v.twoB);
  return a * a + static_cast<int128_t>(p) * b * b;
}

inline int legendre(std::int64_t l, std::uint32_t p) {
  const std::int64_t r = ((l % p) + p) % p;
  if (r == 0) return 0;
  return detail::powmod(static_cast<std::uint64_t>(r), (p - 1) / 2, p) == 1 ? 1 : -1;
}

/// Tally of trace values: counts[t] = #{x : tr(f(x)) = t}.
struct CountVector {
  std::vector<std::uint64_t> counts;

  CountVector() = default;
  explicit CountVector(std::uint32_t p) : counts(p, 0) {}

  std::uint64_t domain_size() const { return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}); }
  CountVector& operator+=(const CountVector& o) {
    for (std::size_t t = 0; t < counts.size(); ++t) counts[t] += o.counts[t];
    return *this;
  }
};

/// Σ_t counts[t]·ω^t as an exact element of Q(√p*). The tally must be
/// constant on nonzero residues and on non-residues; anything else lies
/// outside the quadratic subfield.
inline QuadValue counts_to_quadvalue(const CountVector& cv, std::uint32_t p) {
  if (cv.counts.size() != p) throw Error(Errc::InvalidParams, "count vector length must equal p");
  std::int64_t cq = -1, cnq = -1;
  for (std::uint32_t t = 1; t < p; ++t) {
    const auto c = static_cast<std::int64_t>(cv.counts[t]);
    std::int64_t& slot = legendre(t, p) == 1 ? cq : cnq;
    if (slot < 0) {
      slot = c;
    } else if (slot != c) {
      throw Error(Errc::NotInQuadraticSubfield, "trace tally is not constant on quadratic residue classes");
    }
  }
  const auto c0 = static_cast<std::int64_t>(cv.counts[0]);
  return {2 * c0 - cq - cnq, cq - cnq};
}

/// σ_l(√p*) = (l/p)·√p*.
inline QuadValue galois_sigma(const QuadValue& v, std::int64_t l, std::uint32_t p) {
  return {v.twoA, legendre(l, p) * v.twoB};
}

struct HalfInteger {
  std::int64_t twice = 0;

  constexpr bool is_integer() const { return twice % 2 == 0; }
  constexpr std::int64_t value() const { return twice / 2; }
  constexpr bool operator==(const HalfInteger&) const = default;
};

/// Σ_{l=1}^{p-1} σ_l(v) = (p-1)·twoA/2; the √p* parts cancel.
inline HalfInteger mu(const QuadValue& v, std::uint32_t p) {
  return {static_cast<std::int64_t>(p - 1) * v.twoA};
}

/// Complex embedding with √p* = +i√p.
template <class Int>
std::complex<double> to_complex(const BasicQuadValue<Int>& v, std::uint32_t p) {
  return {static_cast<double>(v.twoA) / 2.0, static_cast<double>(v.twoB) / 2.0 * std::sqrt(static_cast<double>(p))};
}

/// Multiset of exact values with occurrence counts. Zero counts are allowed
/// (closed forms list every candidate) and ignored by equality.
struct ValueDistribution {
  std::map<QuadValue, std::uint64_t> entries;

  void add(const QuadValue& v, std::uint64_t count = 1) { entries[v] += count; }
  std::uint64_t count(const QuadValue& v) const {
    auto it = entries.find(v);
    return it == entries.end() ? 0 : it->second;
  }
  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (const auto& [v, c] : entries) t += c;
    return t;
  }
  ValueDistribution normalized() const {
    ValueDistribution out;
    for (const auto& [v, c] : entries)
      if (c) out.entries.emplace(v, c);
    return out;
  }
  ValueDistribution& operator+=(const ValueDistribution& o) {
    for (const auto& [v, c] : o.entries) entries[v] += c;
    return *this;
  }
  friend bool operator==(const ValueDistribution& a, const ValueDistribution& b) {
    return a.normalized().entries == b.normalized().entries;
  }
};

}  // namespace seqspectra
