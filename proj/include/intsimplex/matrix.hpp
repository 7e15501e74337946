#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "intsimplex/rational.hpp"

namespace intsimplex {

/// Dense row-major matrix with value semantics.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init);

  static Matrix square(std::size_t n, const T& fill = T{}) { return Matrix(n, n, fill); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <typename T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> init)
    : rows_(init.size()), cols_(init.size() == 0 ? 0 : init.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : init) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

using RationalMatrix = Matrix<Rational>;
using IntMatrix = Matrix<std::int64_t>;

struct InvalidMatrix : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Symmetric matrix of exact squared distances on n points: zero diagonal,
/// strictly positive off-diagonal entries. Immutable once constructed.
class SquaredDistanceMatrix {
 public:
  /// Validates the invariants; throws InvalidMatrix naming the first
  /// offending entry.
  explicit SquaredDistanceMatrix(RationalMatrix entries);

  /// Builds the matrix of squares of an integer distance matrix.
  static SquaredDistanceMatrix from_distances(const IntMatrix& distances);

  /// Three points with squared distances (A01, A02, A12).
  static SquaredDistanceMatrix triangle(const Rational& a01, const Rational& a02, const Rational& a12);

  std::size_t size() const { return entries_.rows(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const RationalMatrix& entries() const { return entries_; }

  /// Same points relabeled: result(i, j) = this(perm[i], perm[j]).
  SquaredDistanceMatrix permuted(std::span<const std::size_t> perm) const;

  friend bool operator==(const SquaredDistanceMatrix&, const SquaredDistanceMatrix&) = default;

 private:
  RationalMatrix entries_;
};

/// Cayley-Menger bordered matrix: row/column 0 is (0, 1, ..., 1), the rest is A.
class BorderedMatrix {
 public:
  explicit BorderedMatrix(SquaredDistanceMatrix inner);

  const SquaredDistanceMatrix& inner() const { return inner_; }
  const RationalMatrix& full() const { return full_; }

 private:
  SquaredDistanceMatrix inner_;
  RationalMatrix full_;
};

/// Exact determinant. Rows are scaled to integers by the lcm of their
/// denominators, the integer matrix is reduced by fraction-free (Bareiss)
/// elimination, and the scale is divided back out. det of 0x0 is 1.
Rational det(const RationalMatrix& m);

/// Exact determinant of an integer matrix. Uses a 128-bit Bareiss pass when
/// a Hadamard bound proves every intermediate fits, GMP otherwise.
BigInt det(const IntMatrix& m);

/// The GMP-only path of det(IntMatrix); exposed for cross-checking.
BigInt det_bigint(const IntMatrix& m);

/// True when det(IntMatrix) would take the 128-bit path for this matrix.
bool det_fits_int128(const IntMatrix& m);

/// Floating-point determinant by partial-pivot LU; for diagnostics only.
double det_double(const Matrix<double>& m);

BorderedMatrix border(const SquaredDistanceMatrix& a);

/// Bordered integer matrix of an integer squared-distance matrix.
IntMatrix border(const IntMatrix& sq);

/// Rows and columns `subset` (ascending) of A. Empty or out-of-range subsets
/// throw std::invalid_argument.
SquaredDistanceMatrix principal_submatrix(const SquaredDistanceMatrix& a,
                                          std::span<const std::size_t> subset);

Matrix<double> to_double(const RationalMatrix& m);

}  // namespace intsimplex
