#include "intsimplex/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace intsimplex {

namespace {

std::string entry_name(std::size_t i, std::size_t j) {
  return "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

// Fraction-free elimination with row swaps on zero pivots. Every division is
// exact: after step k each entry is a (k+1)-minor of the input.
template <typename Int>
Int bareiss(std::vector<Int> a, std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j) -> Int& { return a[i * n + j]; };
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && at(r, k) == 0) ++r;
      if (r == n) return Int(0);
      for (std::size_t j = k; j < n; ++j) std::swap(at(k, j), at(r, j));
      sign = -sign;
    }
    const Int pivot = at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * pivot - at(i, k) * at(k, j)) / prev;
      }
      at(i, k) = 0;
    }
    prev = pivot;
  }
  return n == 0 ? Int(1) : Int(sign * at(n - 1, n - 1));
}

BigInt int128_to_bigint(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  BigInt hi = BigInt(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  BigInt lo = BigInt(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  BigInt r = (hi << 64) + lo;
  return neg ? BigInt(-r) : r;
}

}  // namespace

SquaredDistanceMatrix::SquaredDistanceMatrix(RationalMatrix entries) : entries_(std::move(entries)) {
  if (!entries_.is_square()) throw InvalidMatrix("squared-distance matrix must be square");
  const std::size_t n = entries_.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_(i, i) != 0) throw InvalidMatrix("diagonal entry " + entry_name(i, i) + " is not zero");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (entries_(i, j) != entries_(j, i)) {
        throw InvalidMatrix("entries " + entry_name(i, j) + " and " + entry_name(j, i) + " differ");
      }
      if (entries_(i, j).sign() <= 0) {
        throw InvalidMatrix("off-diagonal entry " + entry_name(i, j) + " is not positive");
      }
    }
  }
}

SquaredDistanceMatrix SquaredDistanceMatrix::from_distances(const IntMatrix& distances) {
  RationalMatrix m(distances.rows(), distances.cols());
  for (std::size_t i = 0; i < distances.rows(); ++i) {
    for (std::size_t j = 0; j < distances.cols(); ++j) {
      m(i, j) = Rational(static_cast<long>(distances(i, j) * distances(i, j)));
    }
  }
  return SquaredDistanceMatrix(std::move(m));
}

SquaredDistanceMatrix SquaredDistanceMatrix::triangle(const Rational& a01, const Rational& a02,
                                                      const Rational& a12) {
  RationalMatrix m = RationalMatrix::square(3);
  m(0, 1) = m(1, 0) = a01;
  m(0, 2) = m(2, 0) = a02;
  m(1, 2) = m(2, 1) = a12;
  return SquaredDistanceMatrix(std::move(m));
}

SquaredDistanceMatrix SquaredDistanceMatrix::permuted(std::span<const std::size_t> perm) const {
  const std::size_t n = size();
  if (perm.size() != n) throw std::invalid_argument("permutation size mismatch");
  RationalMatrix m = RationalMatrix::square(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entries_(perm[i], perm[j]);
  }
  return SquaredDistanceMatrix(std::move(m));
}

BorderedMatrix::BorderedMatrix(SquaredDistanceMatrix inner)
    : inner_(std::move(inner)), full_(RationalMatrix::square(inner_.size() + 1)) {
  const std::size_t n = inner_.size();
  for (std::size_t j = 1; j <= n; ++j) full_(0, j) = full_(j, 0) = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) full_(i + 1, j + 1) = inner_(i, j);
  }
}

Rational det(const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<BigInt> scaled(n * n);
  BigInt scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt row_lcm = 1;
    for (std::size_t j = 0; j < n; ++j) {
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(i, j).raw().get_den_mpz_t());
    }
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& q = m(i, j).raw();
      scaled[i * n + j] = q.get_num() * (row_lcm / q.get_den());
    }
    scale *= row_lcm;
  }
  return Rational(bareiss<BigInt>(std::move(scaled), n), scale);
}

bool det_fits_int128(const IntMatrix& m) {
  // Every Bareiss intermediate is a minor (bounded by the product of row
  // norms) or a product of two minors before the exact division.
  double log2_bound = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double norm_sq = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const double v = static_cast<double>(m(i, j));
      norm_sq += v * v;
    }
    if (norm_sq > 1.0) log2_bound += 0.5 * std::log2(norm_sq);
  }
  return log2_bound < 61.0;
}

BigInt det_bigint(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<BigInt> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = BigInt(static_cast<long>(m(i, j)));
  }
  return bareiss<BigInt>(std::move(a), n);
}

BigInt det(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  if (!det_fits_int128(m)) return det_bigint(m);
  const std::size_t n = m.rows();
  std::vector<__int128> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  }
  return int128_to_bigint(bareiss<__int128>(std::move(a), n));
}

double det_double(const Matrix<double>& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  Matrix<double> a = m;
  const std::size_t n = a.rows();
  double result = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(a(i, k)) > std::abs(a(p, k))) p = i;
    }
    if (a(p, k) == 0.0) return 0.0;
    if (p != k) {
      a.swap_rows(p, k);
      result = -result;
    }
    result *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a(i, k) / a(k, k);
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return result;
}

BorderedMatrix border(const SquaredDistanceMatrix& a) { return BorderedMatrix(a); }

IntMatrix border(const IntMatrix& sq) {
  const std::size_t n = sq.rows();
  IntMatrix full = IntMatrix::square(n + 1, 0);
  for (std::size_t j = 1; j <= n; ++j) full(0, j) = full(j, 0) = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) full(i + 1, j + 1) = sq(i, j);
  }
  return full;
}

SquaredDistanceMatrix principal_submatrix(const SquaredDistanceMatrix& a,
                                          std::span<const std::size_t> subset) {
  if (subset.empty()) throw std::invalid_argument("principal_submatrix: empty index subset");
  std::vector<std::size_t> idx(subset.begin(), subset.end());
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) {
    throw std::invalid_argument("principal_submatrix: repeated index");
  }
  if (idx.back() >= a.size()) throw std::invalid_argument("principal_submatrix: index out of range");
  RationalMatrix m = RationalMatrix::square(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = a(idx[i], idx[j]);
  }
  return SquaredDistanceMatrix(std::move(m));
}

Matrix<double> to_double(const RationalMatrix& m) {
  Matrix<double> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_double();
  }
  return out;
}

}  // namespace intsimplex
