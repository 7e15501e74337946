#include "intsimplex/embedding.hpp"

#include <cmath>
#include <string>

namespace intsimplex {

RegularSimplexBlock block_parameters(std::size_t part, const Rational& lambda_sq) {
  if (part == 0) throw std::invalid_argument("block size must be positive");
  const long k = static_cast<long>(part);
  RegularSimplexBlock b;
  b.size = part;
  b.circumradius_sq = Rational(k - 1, 2 * k);
  b.pair_inner_product = Rational(-1, 2 * k);
  b.shift_sq = lambda_sq / Rational(2) - b.circumradius_sq;
  if (b.shift_sq.sign() < 0) {
    throw ShiftImpossible("lambda^2 = " + lambda_sq.to_string() + " is too small for a part of size " +
                          std::to_string(part));
  }
  return b;
}

Rational Embedding::exact_squared_distance(std::size_t i, std::size_t j) const {
  return gram(i, i) + gram(j, j) - Rational(2) * gram(i, j);
}

double Embedding::float_distance(std::size_t i, std::size_t j) const {
  double s = 0.0;
  for (std::size_t k = 0; k < points[i].size(); ++k) {
    const double t = points[i][k] - points[j][k];
    s += t * t;
  }
  return std::sqrt(s);
}

namespace {

std::vector<RegularSimplexBlock> blocks_for(const Partition& p, const Rational& lambda_sq, LambdaRange range) {
  validate_lambda_sq(lambda_sq, range);
  std::vector<RegularSimplexBlock> out;
  for (std::size_t part : p.parts()) out.push_back(block_parameters(part, lambda_sq));
  return out;
}

std::vector<std::size_t> block_index(const Partition& p) {
  std::vector<std::size_t> block_of;
  for (std::size_t b = 0; b < p.size(); ++b) block_of.insert(block_of.end(), p.parts()[b], b);
  return block_of;
}

}  // namespace

RationalMatrix build_gram(const Partition& p, const Rational& lambda_sq, LambdaRange range) {
  const auto blocks = blocks_for(p, lambda_sq, range);
  const auto block_of = block_index(p);
  const std::size_t n = p.n();
  RationalMatrix g = RationalMatrix::square(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (block_of[i] != block_of[j]) continue;
      const auto& b = blocks[block_of[i]];
      g(i, j) = b.shift_sq + (i == j ? b.circumradius_sq : b.pair_inner_product);
    }
  }
  return g;
}

std::vector<std::vector<double>> regular_simplex(std::size_t k) {
  if (k == 0) return {};
  const std::size_t dim = k - 1;
  std::vector<std::vector<double>> pts(1, std::vector<double>(dim, 0.0));
  double radius_sq = 0.0;  // circumradius^2 of the current m-vertex simplex
  for (std::size_t m = 1; m < k; ++m) {
    // New apex at unit distance from all current vertices.
    const double h = std::sqrt(1.0 - radius_sq);
    std::vector<double> apex(dim, 0.0);
    apex[m - 1] = h;
    pts.push_back(std::move(apex));
    const double shift = h / static_cast<double>(m + 1);
    for (auto& p : pts) p[m - 1] -= shift;
    radius_sq = static_cast<double>(m) / (2.0 * static_cast<double>(m + 1));
  }
  return pts;
}

Embedding build_coordinates(const Partition& p, const Rational& lambda_sq, LambdaRange range) {
  const auto blocks = blocks_for(p, lambda_sq, range);
  Embedding e;
  e.partition = p;
  e.lambda_sq = lambda_sq;
  e.block_of = block_index(p);
  e.gram = build_gram(p, lambda_sq, range);
  const std::size_t n = p.n();
  e.ambient_dim = n;  // sum (n_i - 1) + r
  std::size_t slice = 0;
  std::size_t shift_axis = n - p.size();
  for (const auto& b : blocks) {
    const double shift = std::sqrt(b.shift_sq.to_double());
    for (const auto& local : regular_simplex(b.size)) {
      std::vector<double> x(n, 0.0);
      for (std::size_t c = 0; c < local.size(); ++c) x[slice + c] = local[c];
      x[shift_axis] = shift;
      e.points.push_back(std::move(x));
    }
    slice += b.size - 1;
    ++shift_axis;
  }
  return e;
}

RankDeficient::RankDeficient(std::size_t rank_, std::size_t expected_)
    : std::runtime_error("affine rank " + std::to_string(rank_) + " below expected " + std::to_string(expected_)),
      rank(rank_), expected(expected_) {}

Embedding reduce_dimension(const Embedding& e) {
  constexpr double kRankTol = 1e-10;
  const std::size_t n = e.points.size();
  if (n == 0) return e;
  const std::size_t amb = e.points[0].size();

  std::vector<std::vector<double>> diffs(n, std::vector<double>(amb, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < amb; ++k) diffs[i][k] = e.points[i][k] - e.points[0][k];
  }

  std::vector<std::vector<double>> basis;
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<double> v = diffs[i];
    // Two sweeps keep the basis orthogonal to working precision.
    for (int sweep = 0; sweep < 2; ++sweep) {
      for (const auto& q : basis) {
        double dot = 0.0;
        for (std::size_t k = 0; k < amb; ++k) dot += q[k] * v[k];
        for (std::size_t k = 0; k < amb; ++k) v[k] -= dot * q[k];
      }
    }
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm <= kRankTol) continue;
    for (double& x : v) x /= norm;
    basis.push_back(std::move(v));
  }
  if (basis.size() + 1 < n) throw RankDeficient(basis.size(), n - 1);

  Embedding out = e;
  out.ambient_dim = basis.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> c(basis.size(), 0.0);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      for (std::size_t k = 0; k < amb; ++k) c[b] += basis[b][k] * diffs[i][k];
    }
    out.points[i] = std::move(c);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.gram(i, j) = e.gram(i, j) - e.gram(i, 0) - e.gram(0, j) + e.gram(0, 0);
    }
  }
  return out;
}

}  // namespace intsimplex
