#include "intsimplex/bijection.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "intsimplex/canonical.hpp"
#include "intsimplex/geometry.hpp"

namespace intsimplex {

Partition::Partition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    n_ += parts_[i];
  }
}

Partition Partition::parse(const std::string& text) {
  std::vector<std::size_t> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition part '" + item + "'");
    }
    if (used != item.size() || v <= 0) throw std::invalid_argument("bad partition part '" + item + "'");
    parts.push_back(static_cast<std::size_t>(v));
  }
  if (parts.empty()) throw std::invalid_argument("empty partition");
  std::sort(parts.rbegin(), parts.rend());
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::vector<Partition> enumerate_partitions(std::size_t n) {
  std::vector<Partition> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t rest, std::size_t cap) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (std::size_t part = std::min(rest, cap); part >= 1; --part) {
      cur.push_back(part);
      rec(rest - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

void validate_lambda_sq(const Rational& lambda_sq, LambdaRange range) {
  if (lambda_sq <= Rational(1)) {
    throw LambdaOutOfRange("lambda^2 = " + lambda_sq.to_string() + " must exceed 1");
  }
  if (range == LambdaRange::at_least_two && lambda_sq < Rational(4)) {
    throw LambdaOutOfRange("lambda^2 = " + lambda_sq.to_string() +
                           " is below 4; values in (1, 4) need the above-one range");
  }
}

SquaredDistanceMatrix partition_to_matrix(const Partition& p, const Rational& lambda_sq, LambdaRange range) {
  validate_lambda_sq(lambda_sq, range);
  const std::size_t n = p.n();
  std::vector<std::size_t> block(n);
  std::size_t at = 0;
  for (std::size_t b = 0; b < p.size(); ++b) {
    for (std::size_t k = 0; k < p.parts()[b]; ++k) block[at++] = b;
  }
  RationalMatrix m = RationalMatrix::square(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) m(i, j) = block[i] == block[j] ? Rational(1) : lambda_sq;
    }
  }
  return SquaredDistanceMatrix(std::move(m));
}

NotClustered::NotClustered(std::size_t i_, std::size_t j_, std::size_t k_)
    : std::runtime_error("squared distance 1 is not transitive: A[" + std::to_string(i_) + "][" +
                         std::to_string(j_) + "] = A[" + std::to_string(j_) + "][" + std::to_string(k_) +
                         "] = 1 but A[" + std::to_string(i_) + "][" + std::to_string(k_) + "] != 1"),
      i(i_), j(j_), k(k_) {}

Partition matrix_to_partition(const SquaredDistanceMatrix& a) {
  const std::size_t n = a.size();
  const Rational one(1);
  std::set<Rational> values;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) values.insert(a(i, j));
  }
  if (values.size() > 2) throw BadAlphabet("matrix has more than two distinct squared distances");
  for (const Rational& v : values) {
    if (v != one && v <= one) {
      throw BadAlphabet("squared distance " + v.to_string() + " is neither 1 nor above 1");
    }
  }
  if (values.size() == 2 && !values.contains(one)) {
    throw BadAlphabet("two-valued matrix without squared distance 1");
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j || a(i, j) != one) continue;
      for (std::size_t k = i + 1; k < n; ++k) {
        if (k != j && a(j, k) == one && a(i, k) != one) throw NotClustered(i, j, k);
      }
    }
  }
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> parts;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::size_t size = 0;
    for (std::size_t j = i; j < n; ++j) {
      if (j == i || a(i, j) == one) {
        seen[j] = true;
        ++size;
      }
    }
    parts.push_back(size);
  }
  std::sort(parts.rbegin(), parts.rend());
  return Partition(std::move(parts));
}

LemmaReport lemma_check(const Partition& p, const Rational& lambda_sq, LambdaRange range) {
  const SquaredDistanceMatrix a = partition_to_matrix(p, lambda_sq, range);
  LemmaReport r{p, lambda_sq, det(a.entries()), det(border(a).full()), {}, {}};
  const Rational sign = (p.n() % 2 == 0) ? Rational(1) : Rational(-1);
  r.expr1 = sign * (lambda_sq * r.det_abar + r.det_a);
  r.expr2 = sign * r.det_abar;
  return r;
}

SigmaValue sigma(long long d) {
  if (d < 2) throw std::invalid_argument("sigma(d, d+2) is defined for d >= 2");
  SigmaValue s;
  const Rational q(static_cast<long>(d));
  s.inner = Rational(33) * q * q - Rational(52) * q + Rational(20);
  s.outer_rational = (Rational(9) * q - Rational(10)) / (Rational(4) * q - Rational(4));
  s.outer_sqrt_coeff = Rational(1) / (Rational(4) * q - Rational(4));
  const long double ld = static_cast<long double>(d);
  const long double inner = 33.0L * ld * ld - 52.0L * ld + 20.0L;
  s.value = std::sqrt((9.0L * ld - 10.0L + std::sqrt(inner)) / (4.0L * ld - 4.0L));
  return s;
}

long double sigma_limit() { return 0.5L * std::sqrt(9.0L + std::sqrt(33.0L)); }

namespace {

bool one_relation_transitive(const IntMatrix& m) {
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || m(i, j) != 1) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != i && k != j && m(j, k) == 1 && m(i, k) != 1) return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<ThresholdRow> threshold_scan(std::size_t d, const std::vector<Rational>& lambda_sq_grid) {
  const std::size_t n = d + 1;
  if (d < 1 || d > 6) throw std::invalid_argument("threshold_scan supports 1 <= d <= 6");
  const std::size_t edges = n * (n - 1) / 2;

  // One canonical {1,2}-labeled matrix per relabeling class.
  std::vector<IntMatrix> classes;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << edges); ++bits) {
    IntMatrix m = IntMatrix::square(n, 0);
    std::size_t e = 0;
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j, ++e) m(i, j) = m(j, i) = ((bits >> e) & 1u) ? 2 : 1;
    }
    if (is_canonical(m)) classes.push_back(std::move(m));
  }
  const std::size_t partitions = enumerate_partitions(n).size();

  std::vector<ThresholdRow> rows;
  for (const Rational& lambda_sq : lambda_sq_grid) {
    if (lambda_sq <= Rational(1)) throw LambdaOutOfRange("threshold_scan: lambda^2 must exceed 1");
    ThresholdRow row;
    row.lambda_sq = lambda_sq;
    row.classes_scanned = classes.size();
    row.partitions = partitions;
    if (d >= 3) {
      const long double s = sigma(static_cast<long long>(d) - 1).value;
      row.above_threshold = lambda_sq.to_double() >= static_cast<double>(s * s);
    }
    for (const IntMatrix& m : classes) {
      RationalMatrix q = RationalMatrix::square(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i != j) q(i, j) = m(i, j) == 1 ? Rational(1) : lambda_sq;
        }
      }
      const bool good = is_nondegenerate_simplex(SquaredDistanceMatrix(std::move(q)));
      const bool cluster = one_relation_transitive(m);
      if (good) ++row.realizable;
      if (good && !cluster) row.extra.push_back(m);
      if (!good && cluster) row.missing.push_back(m);
    }
    row.bijection_holds = row.extra.empty() && row.missing.empty();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace intsimplex
