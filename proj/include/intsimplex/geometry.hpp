#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "intsimplex/matrix.hpp"

namespace intsimplex {

/// Outcome of the recursive Cayley-Menger test. When the points are not
/// realizable, `witness` is the index subset whose bordered determinant has
/// the wrong sign.
struct MengerVerdict {
  bool realizable = false;
  std::vector<std::size_t> witness;

  explicit operator bool() const { return realizable; }
};

struct RealizabilityReport {
  /// Smallest k such that the points embed in Euclidean k-space; nullopt
  /// when they embed in no Euclidean space.
  std::optional<std::size_t> realizable_in_dim;
  /// realizable_in_dim == n - 1.
  bool nondegenerate = false;
  std::vector<std::size_t> witness;
};

/// Decides whether the points of `a` embed in Euclidean `dim`-space.
///
/// For dim >= n-1 this is Menger's criterion applied recursively: a k-point
/// subset S is realizable in k-1 dimensions iff (-1)^k det(border(A_S)) >= 0
/// and every (k-1)-point subset of S is realizable in k-2 dimensions. Two
/// points with positive squared distance are always realizable. Subset results
/// are memoized by index mask for the duration of the call.
///
/// For dim < n-1 the points must additionally have affine rank <= dim, i.e.
/// every (dim+2)-point bordered determinant vanishes.
MengerVerdict menger_realizable(const SquaredDistanceMatrix& a, std::size_t dim);

RealizabilityReport minimal_embedding_dimension(const SquaredDistanceMatrix& a);

/// Realizable with strictly signed top-level bordered determinant, i.e. the
/// points span a full (n-1)-simplex.
bool is_nondegenerate_simplex(const SquaredDistanceMatrix& a);

/// Floating-point cross-check by classical scaling. Builds
/// G[i][j] = (A[0][i] + A[0][j] - A[i][j]) / 2 over points 1..n-1 and accepts
/// iff no eigenvalue is below -tol and at most `dim` exceed +tol. Advisory
/// only; the exact test above is authoritative.
bool gram_oracle(const SquaredDistanceMatrix& a, std::size_t dim, double tol = 1e-8);

/// Smallest |det(border(A_S))| over all subsets S of size >= 2, evaluated in
/// floating point. Used to flag near-degenerate instances when comparing the
/// exact and floating tests.
double min_abs_bordered_det(const SquaredDistanceMatrix& a);

}  // namespace intsimplex
