#pragma once

// Slow, independent reimplementations used to derive and freeze expected values.

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "diagbr/int_matrix.hpp"

namespace oracle {

using diagbr::Int;
using diagbr::IntMatrix;

// Cofactor expansion; only for tiny matrices.
inline Int det_laplace(const std::vector<std::vector<Int>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Int s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Int>> m;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Int> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      m.push_back(row);
    }
    const Int t = a[0][j] * det_laplace(m);
    s += (j % 2 == 0) ? t : Int(-t);
  }
  return s;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Nonzero invariant factors as quotients of determinantal divisors.
inline std::vector<Int> invariant_factors_by_minors(const IntMatrix& a) {
  std::vector<Int> out;
  Int prev = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(a.rows(), k, 0, cur, rs);
    subsets(a.cols(), k, 0, cur, cs);
    Int g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<Int>> m(k, std::vector<Int>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m[i][j] = a(r[i], c[j]);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det_laplace(m).get_mpz_t());
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  unsigned __int128 r = 1, b = a % p;
  for (; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return static_cast<std::uint64_t>(r);
}

// |S_flat(d)| by looping over all four entries.
inline int s_flat_count(int d) {
  int n = 0;
  for (int a = 1; a < d; ++a)
    for (int b = 1; b < d; ++b)
      for (int c = 1; c < d; ++c)
        for (int e = 1; e < d; ++e) {
          bool ok = true;
          for (int t = 1; t < d && ok; ++t)
            if (std::gcd(t, d) == 1 && (t * a % d) + (t * b % d) + (t * c % d) + (t * e % d) != 2 * d) ok = false;
          if (ok) ++n;
        }
  return n;
}

// Exponent counts of sum_{x1+x2+x3=-1} psi(x1)^a1 psi(x2)^a2 psi(x3)^a3 where
// psi(x) = zeta^j with x^{(p-1)/d} = r^j; characters found by exponentiation.
inline std::vector<long> jacobi_counts(int d, std::uint64_t p, std::uint64_t r, int a1, int a2, int a3) {
  std::vector<int> psi(p, -1);
  for (std::uint64_t x = 1; x < p; ++x) {
    const std::uint64_t y = powmod(x, (p - 1) / static_cast<std::uint64_t>(d), p);
    std::uint64_t cur = 1;
    for (int j = 0; j < d; ++j, cur = cur * r % p)
      if (cur == y) psi[x] = j;
  }
  std::vector<long> counts(static_cast<std::size_t>(d), 0);
  for (std::uint64_t x1 = 1; x1 < p; ++x1)
    for (std::uint64_t x2 = 1; x2 < p; ++x2) {
      const std::uint64_t x3 = (3 * p - 1 - x1 - x2) % p;
      if (x3 == 0) continue;
      ++counts[static_cast<std::size_t>((a1 * psi[x1] + a2 * psi[x2] + a3 * psi[x3]) % d)];
    }
  return counts;
}

}  // namespace oracle
