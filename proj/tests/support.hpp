#pragma once

// Test-only oracles and generators. Nothing here calls the code paths it is
// used to check.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <vector>

#include "intsimplex/matrix.hpp"
#include "intsimplex/rational.hpp"

namespace testing {

using intsimplex::IntMatrix;
using intsimplex::Rational;
using intsimplex::RationalMatrix;

inline std::uint64_t seed() {
  if (const char* env = std::getenv("INTSIMPLEX_SEED")) return std::strtoull(env, nullptr, 10);
  return 20240611;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 r(seed());
  return r;
}

inline void reseed(std::uint64_t s) { rng().seed(s); }

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational random_rational(long span = 9, long max_den = 5) {
  return Rational(uniform(-span, span), uniform(1, max_den));
}

inline RationalMatrix random_rational_matrix(std::size_t n) {
  RationalMatrix m = RationalMatrix::square(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rational();
  }
  return m;
}

// Laplace expansion along the first row.
inline Rational cofactor_det(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return m(0, 0);
  Rational total;
  for (std::size_t c = 0; c < n; ++c) {
    RationalMatrix minor = RationalMatrix::square(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 0, jj = 0; j < n; ++j) {
        if (j != c) minor(i - 1, jj++) = m(i, j);
      }
    }
    const Rational term = m(0, c) * cofactor_det(minor);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

// Symmetric, zero diagonal, off-diagonal uniform in [lo, hi].
inline IntMatrix random_distance_matrix(std::size_t n, long lo, long hi) {
  IntMatrix m = IntMatrix::square(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) m(i, j) = m(j, i) = uniform(lo, hi);
  }
  return m;
}

inline std::vector<std::int64_t> word_of(const IntMatrix& a, const std::vector<std::size_t>& perm) {
  std::vector<std::int64_t> w;
  for (std::size_t i = 1; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < i; ++j) w.push_back(a(perm[i], perm[j]));
  }
  return w;
}

// Minimum word over all n! relabelings.
inline std::vector<std::int64_t> brute_force_canonical_word(const IntMatrix& a) {
  std::vector<std::size_t> perm(a.rows());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::int64_t> best = word_of(a, perm);
  while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, word_of(a, perm));
  return best;
}

// p(n) by Euler's pentagonal-number recurrence.
inline std::vector<std::uint64_t> partition_numbers(std::size_t max_n) {
  std::vector<std::uint64_t> p(max_n + 1, 0);
  p[0] = 1;
  for (std::size_t n = 1; n <= max_n; ++n) {
    __int128 acc = 0;
    for (long k = 1;; ++k) {
      const long g1 = k * (3 * k - 1) / 2;
      const long g2 = k * (3 * k + 1) / 2;
      if (g1 > static_cast<long>(n)) break;
      const int sign = (k % 2 == 1) ? 1 : -1;
      acc += sign * static_cast<__int128>(p[n - static_cast<std::size_t>(g1)]);
      if (g2 <= static_cast<long>(n)) acc += sign * static_cast<__int128>(p[n - static_cast<std::size_t>(g2)]);
    }
    p[n] = static_cast<std::uint64_t>(acc);
  }
  return p;
}

}  // namespace testing
