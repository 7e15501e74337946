#include "intsimplex/geometry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace intsimplex {

namespace {

constexpr std::size_t kMaxPoints = 20;

std::vector<std::size_t> mask_indices(std::uint32_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1u) out.push_back(i);
  }
  return out;
}

// Per-call memo of bordered-determinant signs and subset verdicts.
class MengerSolver {
 public:
  explicit MengerSolver(const SquaredDistanceMatrix& a) : a_(a) {
    if (a.size() > kMaxPoints) throw std::invalid_argument("menger: too many points");
    const std::size_t slots = std::size_t{1} << a.size();
    sign_.assign(slots, kUnknown);
    verdict_.assign(slots, kUnknown);
  }

  // Sign of (-1)^k det(border(A_S)) for |S| = k.
  int oriented_sign(std::uint32_t mask) {
    if (sign_[mask] == kUnknown) {
      const auto idx = mask_indices(mask);
      const Rational d = det(border(principal_submatrix(a_, idx)).full());
      const int s = d.sign();
      sign_[mask] = static_cast<std::int8_t>(idx.size() % 2 == 0 ? s : -s);
    }
    return sign_[mask];
  }

  // Realizable in |S|-1 dimensions. On failure records the first failing
  // subset in subset-enumeration order.
  bool realizable(std::uint32_t mask) {
    if (verdict_[mask] != kUnknown) return verdict_[mask] == 1;
    bool ok = true;
    if (std::popcount(mask) > 2) {
      if (oriented_sign(mask) < 0) {
        ok = false;
        if (witness_.empty()) witness_ = mask_indices(mask);
      } else {
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
          const std::uint32_t bit = rest & (~rest + 1);
          if (!realizable(mask & ~bit)) {
            ok = false;
            break;
          }
        }
      }
    }
    verdict_[mask] = ok ? 1 : 0;
    return ok;
  }

  // Largest affinely independent subset size minus one; requires the full
  // set to be realizable.
  std::size_t affine_dimension() {
    const std::size_t n = a_.size();
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    for (std::size_t k = n; k >= 2; --k) {
      for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
        if (k == 2 || oriented_sign(mask) != 0) return k - 1;
      }
    }
    return 0;
  }

  bool all_subsets_degenerate(std::size_t k) {
    const std::uint32_t full = (1u << a_.size()) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
      if (k == 2 || oriented_sign(mask) != 0) return false;
    }
    return true;
  }

  std::vector<std::size_t> take_witness() { return std::move(witness_); }

 private:
  static constexpr std::int8_t kUnknown = 2;
  const SquaredDistanceMatrix& a_;
  std::vector<std::int8_t> sign_;
  std::vector<std::int8_t> verdict_;
  std::vector<std::size_t> witness_;
};

}  // namespace

MengerVerdict menger_realizable(const SquaredDistanceMatrix& a, std::size_t dim) {
  const std::size_t n = a.size();
  if (n <= 1) return {true, {}};
  MengerSolver solver(a);
  const std::uint32_t full = (1u << n) - 1;
  MengerVerdict v;
  v.realizable = solver.realizable(full);
  if (!v.realizable) {
    v.witness = solver.take_witness();
    return v;
  }
  if (dim + 1 < n && !solver.all_subsets_degenerate(dim + 2)) v.realizable = false;
  return v;
}

RealizabilityReport minimal_embedding_dimension(const SquaredDistanceMatrix& a) {
  const std::size_t n = a.size();
  RealizabilityReport report;
  if (n <= 1) {
    report.realizable_in_dim = 0;
    report.nondegenerate = true;
    return report;
  }
  MengerSolver solver(a);
  const std::uint32_t full = (1u << n) - 1;
  if (!solver.realizable(full)) {
    report.witness = solver.take_witness();
    return report;
  }
  report.realizable_in_dim = solver.affine_dimension();
  report.nondegenerate = *report.realizable_in_dim == n - 1;
  return report;
}

bool is_nondegenerate_simplex(const SquaredDistanceMatrix& a) {
  const std::size_t n = a.size();
  if (n <= 2) return true;
  MengerSolver solver(a);
  const std::uint32_t full = (1u << n) - 1;
  return solver.oriented_sign(full) > 0 && solver.realizable(full);
}

bool gram_oracle(const SquaredDistanceMatrix& a, std::size_t dim, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("gram_oracle: tolerance must be positive");
  const std::size_t n = a.size();
  if (n <= 1) return true;
  const std::size_t m = n - 1;
  Eigen::MatrixXd g(m, m);
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) {
      g(i - 1, j - 1) = 0.5 * (a(0, i).to_double() + a(0, j).to_double() - a(i, j).to_double());
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  std::size_t positive = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < -tol) return false;
    if (ev(i) > tol) ++positive;
  }
  return positive <= dim;
}

double min_abs_bordered_det(const SquaredDistanceMatrix& a) {
  const std::size_t n = a.size();
  if (n > kMaxPoints) throw std::invalid_argument("min_abs_bordered_det: too many points");
  const Matrix<double> ad = to_double(a.entries());
  double best = std::numeric_limits<double>::infinity();
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const auto idx = mask_indices(mask);
    if (idx.size() < 2) continue;
    const std::size_t k = idx.size();
    Matrix<double> b = Matrix<double>::square(k + 1, 0.0);
    for (std::size_t j = 1; j <= k; ++j) b(0, j) = b(j, 0) = 1.0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) b(i + 1, j + 1) = ad(idx[i], idx[j]);
    }
    best = std::min(best, std::abs(det_double(b)));
  }
  return best;
}

}  // namespace intsimplex
