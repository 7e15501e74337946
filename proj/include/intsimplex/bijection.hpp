#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "intsimplex/matrix.hpp"
#include "intsimplex/rational.hpp"

namespace intsimplex {

/// Weakly decreasing positive parts summing to n().
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly
  /// decreasing.
  explicit Partition(std::vector<std::size_t> parts);

  /// Parses "3,2,1"; parts may be given in any order and are sorted.
  static Partition parse(const std::string& text);

  const std::vector<std::size_t>& parts() const { return parts_; }
  std::size_t n() const { return n_; }
  std::size_t size() const { return parts_.size(); }
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::size_t> parts_;
  std::size_t n_ = 0;
};

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ...,
/// (1,...,1). n = 0 gives the single empty partition.
std::vector<Partition> enumerate_partitions(std::size_t n);

/// Which values of lambda^2 a caller accepts. The clustering argument needs
/// lambda >= 2; above_one admits 1 < lambda^2 < 4 for threshold experiments.
enum class LambdaRange { at_least_two, above_one };

struct LambdaOutOfRange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Throws LambdaOutOfRange unless lambda_sq > 1, and lambda_sq >= 4 for
/// at_least_two.
void validate_lambda_sq(const Rational& lambda_sq, LambdaRange range);

/// Block matrix: squared distance 1 inside each part's index block,
/// lambda_sq across blocks, blocks in the order of the parts.
SquaredDistanceMatrix partition_to_matrix(const Partition& p, const Rational& lambda_sq,
                                          LambdaRange range = LambdaRange::at_least_two);

struct NotClustered : std::runtime_error {
  NotClustered(std::size_t i, std::size_t j, std::size_t k);
  /// A[i][j] = A[j][k] = 1 but A[i][k] != 1.
  std::size_t i, j, k;
};

struct BadAlphabet : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Recovers the partition from a {1, lambda^2} matrix after checking that
/// "squared distance 1" is transitive.
Partition matrix_to_partition(const SquaredDistanceMatrix& a);

struct LemmaReport {
  Partition partition;
  Rational lambda_sq;
  Rational det_a;
  Rational det_abar;
  /// (-1)^(d+1) (lambda^2 det(Abar) + det(A)) with d + 1 = n.
  Rational expr1;
  /// (-1)^(d+1) det(Abar).
  Rational expr2;

  bool holds() const { return expr1.sign() > 0 && expr2.sign() > 0; }
};

LemmaReport lemma_check(const Partition& p, const Rational& lambda_sq,
                        LambdaRange range = LambdaRange::at_least_two);

/// sigma(d, d+2) = sqrt((9d - 10 + sqrt(33d^2 - 52d + 20)) / (4d - 4)), with
/// the radicands kept exact: value^2 = outer_rational + outer_sqrt_coeff *
/// sqrt(inner).
struct SigmaValue {
  long double value = 0;
  Rational inner;
  Rational outer_rational;
  Rational outer_sqrt_coeff;
};

/// Throws std::invalid_argument for d < 2.
SigmaValue sigma(long long d);

/// (1/2) sqrt(9 + sqrt(33)), the limit of sigma(d) as d grows.
long double sigma_limit();

struct ThresholdRow {
  Rational lambda_sq;
  std::size_t classes_scanned = 0;
  std::size_t realizable = 0;
  std::size_t partitions = 0;
  bool bijection_holds = false;
  /// Whether lambda >= sigma(d-1, d+1); nullopt when that threshold is
  /// undefined (d < 3).
  std::optional<bool> above_threshold;
  /// Nondegenerate classes whose 1-relation is not an equivalence.
  std::vector<IntMatrix> extra;
  /// Cluster classes that fail to be nondegenerate.
  std::vector<IntMatrix> missing;
};

/// For each lambda^2, enumerates every {1, lambda^2} matrix on d+1 points up
/// to relabeling and counts the nondegenerate d-simplices. The bijection
/// holds when exactly the p(d+1) cluster classes are counted. Matrices in
/// `extra` / `missing` use 1 for distance 1 and 2 for distance lambda.
std::vector<ThresholdRow> threshold_scan(std::size_t d, const std::vector<Rational>& lambda_sq_grid);

}  // namespace intsimplex
