#pragma once

// Dense linear algebra over the prime field F_p.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "seqspectra/detail/arith.hpp"

namespace seqspectra::detail {

using FpMatrix = std::vector<std::vector<std::uint32_t>>;

inline std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  return static_cast<std::uint32_t>(powmod(a, p - 2, p));
}

inline std::size_t rank_mod_p(FpMatrix m, std::uint32_t p) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const std::uint64_t inv = inv_mod_p(m[rank][c], p);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const std::uint64_t f = mulmod(m[r][c], inv, p);
      for (std::size_t j = c; j < cols; ++j) {
        const std::uint64_t sub = mulmod(f, m[rank][j], p);
        m[r][j] = static_cast<std::uint32_t>((m[r][j] + p - sub) % p);
      }
    }
    ++rank;
  }
  return rank;
}

inline std::optional<FpMatrix> inverse_mod_p(const FpMatrix& a, std::uint32_t p) {
  const std::size_t n = a.size();
  FpMatrix m(n, std::vector<std::uint32_t>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j] % p;
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[c]);
    const std::uint64_t inv = inv_mod_p(m[c][c], p);
    for (auto& v : m[c]) v = static_cast<std::uint32_t>(mulmod(v, inv, p));
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const std::uint64_t f = m[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j) {
        const std::uint64_t sub = mulmod(f, m[c][j], p);
        m[r][j] = static_cast<std::uint32_t>((m[r][j] + p - sub) % p);
      }
    }
  }
  FpMatrix out(n, std::vector<std::uint32_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = m[i][n + j];
  return out;
}

}  // namespace seqspectra::detail
