#include <doctest.h>

#include "intsimplex/bijection.hpp"
#include "intsimplex/canonical.hpp"
#include "intsimplex/census.hpp"
#include "intsimplex/geometry.hpp"
#include "intsimplex/kernels.hpp"
#include "support.hpp"

using namespace intsimplex;

namespace {

std::uint64_t count(std::size_t d, std::int64_t diameter, DiameterMode mode = DiameterMode::exact,
                    std::size_t jobs = 1) {
  CensusTask t;
  t.dimension = d;
  t.diameter = diameter;
  t.mode = mode;
  t.parallelism = jobs;
  return enumerate(t).count;
}

// Reference count without orderly pruning: all labeled matrices, keep the
// nondegenerate ones whose word is minimal among relabelings.
std::uint64_t brute_force_count(std::size_t d, long diameter) {
  const std::size_t n = d + 1;
  const std::size_t edges = n * (n - 1) / 2;
  std::vector<long> digits(edges, 1);
  std::uint64_t total = 0;
  for (;;) {
    IntMatrix m = IntMatrix::square(n, 0);
    std::size_t e = 0;
    long top = 0;
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j, ++e) {
        m(i, j) = m(j, i) = digits[e];
        top = std::max(top, digits[e]);
      }
    }
    if (top == diameter && distance_word(m) == testing::brute_force_canonical_word(m) &&
        is_nondegenerate_simplex(to_squared(m))) {
      ++total;
    }
    std::size_t k = 0;
    while (k < edges && digits[k] == diameter) digits[k++] = 1;
    if (k == edges) break;
    ++digits[k];
  }
  return total;
}

CensusTask task(std::size_t d, std::int64_t diameter) {
  CensusTask t;
  t.dimension = d;
  t.diameter = diameter;
  return t;
}

}  // namespace

TEST_CASE("small cells of the census") {
  CHECK(count(3, 1) == 1);
  CHECK(count(3, 2) == 4);
  CHECK(count(3, 3) == 16);
  CHECK(count(3, 4) == 45);
  CHECK(count(4, 3) == 56);
  CHECK(count(1, 5) == 1);
  CHECK(count(2, 1) == 1);
  CHECK(count(2, 2) == 2);  // (1,2,2) and (2,2,2); (1,1,2) is flat
}

TEST_CASE("census agrees with a brute-force count") {
  CHECK(count(2, 3) == brute_force_count(2, 3));
  CHECK(count(2, 5) == brute_force_count(2, 5));
  CHECK(count(3, 2) == brute_force_count(3, 2));
  CHECK(count(3, 3) == brute_force_count(3, 3));
}

TEST_CASE("diameter-1 cells hold only the regular simplex") {
  for (std::size_t d = 1; d <= 9; ++d) CHECK(count(d, 1) == 1);
}

TEST_CASE("diameter-2 cells equal p(d+1) - 1") {
  const auto p = testing::partition_numbers(10);
  for (std::size_t d = 3; d <= 6; ++d) CHECK(count(d, 2) == p[d + 1] - 1);
}

TEST_CASE("up-to mode is the sum of exact cells") {
  for (std::size_t d : {2u, 3u, 4u}) {
    std::uint64_t sum = 0;
    for (std::int64_t diam = 1; diam <= 3; ++diam) {
      sum += count(d, diam);
      CHECK(count(d, diam, DiameterMode::up_to) == sum);
    }
  }
}

TEST_CASE("weak and strict prefix screening give identical counts") {
  for (std::size_t d : {2u, 3u, 4u}) {
    for (std::int64_t diam = 1; diam <= 3; ++diam) {
      CensusTask t;
      t.dimension = d;
      t.diameter = diam;
      const auto strict = enumerate(t);
      t.prune = PruneRule::weak;
      const auto weak = enumerate(t);
      CAPTURE(d);
      CAPTURE(diam);
      CHECK(weak.count == strict.count);
      CHECK(weak.stats.nodes >= strict.stats.nodes);
    }
  }
}

TEST_CASE("counts and statistics do not depend on workers or task order") {
  CensusTask t;
  t.dimension = 4;
  t.diameter = 4;
  t.emit_representatives = true;
  const auto base = enumerate(t);
  for (std::size_t jobs : {2u, 8u}) {
    t.parallelism = jobs;
    for (std::uint64_t seed : {1u, 99u}) {
      t.task_order_seed = seed;
      const auto r = enumerate(t);
      CHECK(r.count == base.count);
      CHECK(r.stats == base.stats);
      CHECK(r.representatives == base.representatives);
    }
  }
  for (std::size_t split : {2u, 3u, 5u}) {
    t.split_points = split;
    CHECK(enumerate(t).count == base.count);
  }
}

TEST_CASE("representatives are canonical nondegenerate simplices") {
  CensusTask t;
  t.dimension = 4;
  t.diameter = 3;
  t.emit_representatives = true;
  const auto r = enumerate(t);
  REQUIRE(r.representatives.size() == r.count);
  for (const auto& m : r.representatives) {
    REQUIRE(is_canonical(m));
    REQUIRE(canonical_form(m).word == distance_word(m));
    const auto sq = to_squared(m);
    REQUIRE(menger_realizable(sq, 4).realizable);
    REQUIRE(det(border(sq).full()).sign() * (5 % 2 == 0 ? 1 : -1) > 0);
    long top = 0;
    for (auto v : distance_word(m)) top = std::max<long>(top, v);
    REQUIRE(top == 3);
  }
  for (std::size_t i = 1; i < r.representatives.size(); ++i) {
    REQUIRE(distance_word(r.representatives[i - 1]) < distance_word(r.representatives[i]));
  }
}

TEST_CASE("diameter-2 representatives are exactly the non-trivial partitions") {
  CensusTask t;
  t.dimension = 5;
  t.diameter = 2;
  t.emit_representatives = true;
  std::vector<Partition> seen;
  for (const auto& m : enumerate(t).representatives) {
    RationalMatrix q = RationalMatrix::square(6);
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = 0; j < 6; ++j) q(i, j) = Rational(static_cast<long>(m(i, j) * m(i, j)));
    }
    seen.push_back(matrix_to_partition(SquaredDistanceMatrix(q)));
  }
  auto all = enumerate_partitions(6);
  all.erase(all.begin());  // (6) has diameter 1
  std::sort(seen.begin(), seen.end(), [](auto& a, auto& b) { return a.parts() > b.parts(); });
  CHECK(seen == all);
}

TEST_CASE("census is identical under every kernel backend") {
  const kernels::Backend original = kernels::active_backend();
  for (auto backend : kernels::available_backends()) {
    kernels::set_active_backend(backend);
    CHECK(count(4, 3) == 56);
    CHECK(count(5, 2) == 10);
  }
  kernels::set_active_backend(original);
}

TEST_CASE("budgets fail loudly") {
  CensusTask t;
  t.dimension = 5;
  t.diameter = 3;
  t.node_budget = 5000;
  try {
    (void)enumerate(t);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.partial.nodes > 5000);
  }
  t.node_budget = 1'000'000'000;
  t.seconds_budget = 1e-9;
  t.dimension = 6;
  CHECK_THROWS_AS(enumerate(t), BudgetExceeded);

  CensusTask limited;
  limited.node_budget = 5000;
  const auto cells = census_table({3, 5}, {3}, limited);
  REQUIRE(cells.size() == 2);
  CHECK(cells[0].result->count == 16);
  CHECK_FALSE(cells[1].result.has_value());
  CHECK(format_csv(cells).find("5,3,—,") != std::string::npos);
  CHECK(format_text(cells).find("—") != std::string::npos);
}

TEST_CASE("invalid tasks are rejected") {
  CHECK_THROWS_AS(enumerate(task(0, 1)), std::invalid_argument);
  CHECK_THROWS_AS(enumerate(task(3, 0)), std::invalid_argument);
  CHECK_THROWS_AS(enumerate(task(3, 64)), std::invalid_argument);
  CensusTask t = task(3, 2);
  t.parallelism = 0;
  CHECK_THROWS_AS(enumerate(t), std::invalid_argument);
}

TEST_CASE("census table layout") {
  const auto cells = census_table({3, 4}, {1, 2}, CensusTask{});
  const std::string csv = format_csv(cells);
  CHECK(csv.rfind("dimension,diameter,count,nodes,seconds\n", 0) == 0);
  CHECK(csv.find("\n3,1,1,") != std::string::npos);
  CHECK(csv.find("\n4,2,6,") != std::string::npos);
  const std::string text = format_text(cells);
  CHECK(text.find("d=3") != std::string::npos);
  std::vector<std::uint64_t> counts;
  for (const auto& c : cells) counts.push_back(c.result->count);
  CHECK(counts == std::vector<std::uint64_t>{1, 1, 4, 6});
}
