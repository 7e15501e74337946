#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "intsimplex/bijection.hpp"
#include "intsimplex/matrix.hpp"

namespace intsimplex {

/// Exact data of one part of size n_i: a unit-edge regular (n_i - 1)-simplex
/// centered at the origin, translated along its own axis.
struct RegularSimplexBlock {
  std::size_t size = 0;
  Rational circumradius_sq;     // (n_i - 1) / (2 n_i)
  Rational pair_inner_product;  // -1 / (2 n_i)
  Rational shift_sq;            // lambda^2 / 2 - (n_i - 1) / (2 n_i)
};

struct ShiftImpossible : std::domain_error {
  using std::domain_error::domain_error;
};

/// Throws ShiftImpossible when shift_sq would be negative.
RegularSimplexBlock block_parameters(std::size_t part, const Rational& lambda_sq);

/// Points with exact Gram matrix and floating coordinates.
struct Embedding {
  std::size_t ambient_dim = 0;
  std::vector<std::vector<double>> points;
  RationalMatrix gram;
  std::vector<std::size_t> block_of;
  Partition partition;
  Rational lambda_sq;

  /// gram(i,i) + gram(j,j) - 2 gram(i,j).
  Rational exact_squared_distance(std::size_t i, std::size_t j) const;
  double float_distance(std::size_t i, std::size_t j) const;
};

/// Inner products of the construction: within block i, shift_sq_i plus
/// circumradius_sq_i on the diagonal or -1/(2 n_i) off it; zero across
/// blocks.
RationalMatrix build_gram(const Partition& p, const Rational& lambda_sq,
                          LambdaRange range = LambdaRange::at_least_two);

/// Unit-edge regular simplex on k vertices in R^(k-1), barycenter at the
/// origin. Vertex m is raised along axis m-1 and the set recentered.
std::vector<std::vector<double>> regular_simplex(std::size_t k);

/// Coordinates in dimension sum(n_i - 1) + r = n: each block's simplex in its
/// own coordinate slice, then shifted by sqrt(shift_sq_i) along a dedicated
/// axis.
Embedding build_coordinates(const Partition& p, const Rational& lambda_sq,
                            LambdaRange range = LambdaRange::at_least_two);

struct RankDeficient : std::runtime_error {
  RankDeficient(std::size_t rank, std::size_t expected);
  std::size_t rank, expected;
};

/// Re-expresses an embedding in the affine span of its points: point 0 is
/// moved to the origin and the differences are orthonormalized by modified
/// Gram-Schmidt (rank tolerance 1e-10). The exact Gram is updated to the
/// translated points. Throws RankDeficient when fewer than n-1 directions
/// survive.
Embedding reduce_dimension(const Embedding& e);

}  // namespace intsimplex
