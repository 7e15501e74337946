#include <doctest.h>

#include <numeric>

#include "intsimplex/canonical.hpp"
#include "support.hpp"

using namespace intsimplex;

namespace {

IntMatrix triangle(long a01, long a02, long a12) {
  IntMatrix m = IntMatrix::square(3, 0);
  m(0, 1) = m(1, 0) = a01;
  m(0, 2) = m(2, 0) = a02;
  m(1, 2) = m(2, 1) = a12;
  return m;
}

std::vector<std::size_t> random_perm(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), testing::rng());
  return p;
}

}  // namespace

TEST_CASE("canonical word of a triangle") {
  const std::vector<std::int64_t> want{1, 2, 2};
  CHECK(canonical_form(triangle(2, 1, 2)).word == want);
  CHECK(canonical_form(triangle(1, 2, 2)).word == want);
  CHECK(canonical_form(triangle(2, 2, 1)).word == want);
  CHECK(is_canonical(triangle(1, 2, 2)));
  CHECK_FALSE(is_canonical(triangle(2, 1, 2)));
  CHECK(distance_word(triangle(2, 1, 3)) == std::vector<std::int64_t>{2, 1, 3});
}

TEST_CASE("partition (2,1,1) with lambda = 2 has one canonical word") {
  IntMatrix m{{0, 1, 2, 2}, {1, 0, 2, 2}, {2, 2, 0, 2}, {2, 2, 2, 0}};
  const auto base = canonical_form(m);
  CHECK(base.word == std::vector<std::int64_t>{1, 2, 2, 2, 2, 2});
  for (int trial = 0; trial < 24; ++trial) {
    CHECK(canonical_form(relabel(m, random_perm(4))).word == base.word);
  }
}

TEST_CASE("labeling reproduces the canonical word") {
  for (int trial = 0; trial < 500; ++trial) {
    const auto n = static_cast<std::size_t>(testing::uniform(1, 7));
    const IntMatrix a = testing::random_distance_matrix(n, 1, 4);
    const CanonicalForm f = canonical_form(a);
    REQUIRE(distance_word(relabel(a, f.labeling)) == f.word);
    REQUIRE(is_canonical(canonical_matrix(a)));
  }
}

TEST_CASE("two labelings of the same 5-point matrix share a canonical form") {
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix a = testing::random_distance_matrix(5, 1, 3);
    const IntMatrix b = relabel(a, random_perm(5));
    const auto fa = canonical_form(a);
    REQUIRE(fa.word == canonical_form(b).word);
    REQUIRE(fa.word == testing::brute_force_canonical_word(a));
  }
}

TEST_CASE("pruned canonical form equals the all-permutations minimum") {
  for (int trial = 0; trial < 10000; ++trial) {
    const auto n = static_cast<std::size_t>(testing::uniform(1, 5));
    const long hi = trial % 3 == 0 ? 2 : 4;  // small alphabets stress ties and twins
    const IntMatrix a = testing::random_distance_matrix(n, 1, hi);
    const auto want = testing::brute_force_canonical_word(a);
    REQUIRE(canonical_form(a).word == want);
    REQUIRE(is_canonical(a) == (distance_word(a) == want));
  }
}

TEST_CASE("highly symmetric matrices canonicalize quickly") {
  // All-equal 20-point matrix: twin pruning collapses 20! labelings.
  IntMatrix m = IntMatrix::square(20, 1);
  for (std::size_t i = 0; i < 20; ++i) m(i, i) = 0;
  CHECK(is_canonical(m));
  CHECK(canonical_form(m).word == distance_word(m));
}

TEST_CASE("canonical form rejects out-of-range input") {
  IntMatrix m{{0, 64}, {64, 0}};
  CHECK_THROWS_AS(canonical_form(m), std::invalid_argument);
  CHECK_THROWS_AS(canonical_form(IntMatrix(2, 3)), std::invalid_argument);
}
