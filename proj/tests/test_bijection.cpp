#include <doctest.h>

#include <cmath>

#include "intsimplex/bijection.hpp"
#include "intsimplex/geometry.hpp"
#include "support.hpp"

using namespace intsimplex;

TEST_CASE("partitions of 4 in reverse-lexicographic order") {
  const auto ps = enumerate_partitions(4);
  REQUIRE(ps.size() == 5);
  CHECK(ps[0].parts() == std::vector<std::size_t>{4});
  CHECK(ps[1].parts() == std::vector<std::size_t>{3, 1});
  CHECK(ps[2].parts() == std::vector<std::size_t>{2, 2});
  CHECK(ps[3].parts() == std::vector<std::size_t>{2, 1, 1});
  CHECK(ps[4].parts() == std::vector<std::size_t>{1, 1, 1, 1});
  for (std::size_t i = 1; i < ps.size(); ++i) CHECK(ps[i].parts() < ps[i - 1].parts());
}

TEST_CASE("partition counts match the pentagonal recurrence") {
  const auto p = testing::partition_numbers(40);
  CHECK(p[10] == 42);
  CHECK(p[7] == 15);
  CHECK(p[40] == 37338);
  for (std::size_t n = 0; n <= 40; ++n) REQUIRE(enumerate_partitions(n).size() == p[n]);
  const auto empty = enumerate_partitions(0);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].size() == 0);
}

TEST_CASE("partition validation and parsing") {
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK(Partition::parse("1,3,2").parts() == std::vector<std::size_t>{3, 2, 1});
  CHECK(Partition::parse("3,2,1").to_string() == "(3,2,1)");
  CHECK_THROWS_AS(Partition::parse("3,x"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("0"), std::invalid_argument);
}

TEST_CASE("partition_to_matrix examples") {
  const auto m = partition_to_matrix(Partition({2, 2}), 4);
  CHECK(m(0, 1) == Rational(1));
  CHECK(m(2, 3) == Rational(1));
  for (std::size_t i : {0, 1}) {
    for (std::size_t j : {2, 3}) CHECK(m(i, j) == Rational(4));
  }
  const auto one_block = partition_to_matrix(Partition({5}), Rational(17, 4));
  const auto singletons = partition_to_matrix(Partition({1, 1, 1, 1}), 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == j) continue;
      CHECK(one_block(i, j) == Rational(1));
      CHECK(singletons(i, j) == Rational(4));
    }
  }
  CHECK_THROWS_AS(partition_to_matrix(Partition({2}), 1), LambdaOutOfRange);
  CHECK_THROWS_AS(partition_to_matrix(Partition({2}), 3), LambdaOutOfRange);
  CHECK_NOTHROW(partition_to_matrix(Partition({2}), 3, LambdaRange::above_one));
  CHECK_THROWS_AS(partition_to_matrix(Partition({2}), 1, LambdaRange::above_one), LambdaOutOfRange);
}

TEST_CASE("matrix_to_partition examples and errors") {
  CHECK(matrix_to_partition(partition_to_matrix(Partition({3, 2, 1}), 4)) == Partition({3, 2, 1}));

  try {
    (void)matrix_to_partition(SquaredDistanceMatrix::triangle(1, 1, 4));
    FAIL("expected NotClustered");
  } catch (const NotClustered& e) {
    std::vector<std::size_t> t{e.i, e.j, e.k};
    std::sort(t.begin(), t.end());
    CHECK(t == std::vector<std::size_t>{0, 1, 2});
    const auto a = SquaredDistanceMatrix::triangle(1, 1, 4);
    CHECK(a(e.i, e.j) == Rational(1));
    CHECK(a(e.j, e.k) == Rational(1));
    CHECK(a(e.i, e.k) != Rational(1));
  }

  RationalMatrix ones = RationalMatrix::square(5);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) ones(i, j) = i == j ? 0 : 1;
  }
  CHECK(matrix_to_partition(SquaredDistanceMatrix(ones)) == Partition({5}));
  CHECK(matrix_to_partition(partition_to_matrix(Partition({1, 1, 1}), 9)) == Partition({1, 1, 1}));

  CHECK_THROWS_AS(matrix_to_partition(SquaredDistanceMatrix::triangle(1, 4, 9)), BadAlphabet);
  CHECK_THROWS_AS(matrix_to_partition(SquaredDistanceMatrix::triangle(4, 9, 9)), BadAlphabet);
  CHECK_THROWS_AS(matrix_to_partition(SquaredDistanceMatrix::triangle(Rational(1, 2), 1, 1)), BadAlphabet);
}

TEST_CASE("matrix_to_partition inverts partition_to_matrix") {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (const auto& p : enumerate_partitions(n)) {
      for (const Rational& l : {Rational(4), Rational(9), Rational(17, 4), Rational(25, 4)}) {
        REQUIRE(matrix_to_partition(partition_to_matrix(p, l)) == p);
      }
    }
  }
}

TEST_CASE("lemma_check examples") {
  const auto r11 = lemma_check(Partition({1, 1}), 4);
  CHECK(r11.det_a == Rational(-16));
  CHECK(r11.det_abar == Rational(8));
  CHECK(r11.expr1 == Rational(16));
  CHECK(r11.expr2 == Rational(8));
  CHECK(r11.holds());

  const auto r2 = lemma_check(Partition({2}), 4);
  CHECK(r2.det_a == Rational(-1));
  CHECK(r2.det_abar == Rational(2));
  CHECK(r2.expr1 == Rational(7));
  CHECK(r2.expr2 == Rational(2));
  CHECK(r2.holds());

  const auto r21 = lemma_check(Partition({2, 1}), 4);
  CHECK(r21.expr1.sign() > 0);
  CHECK(r21.expr2.sign() > 0);
  CHECK(r21.det_abar == testing::cofactor_det(border(partition_to_matrix(Partition({2, 1}), 4)).full()));
}

TEST_CASE("lemma holds for every partition of n <= 11") {
  for (std::size_t n = 1; n <= 11; ++n) {
    for (const auto& p : enumerate_partitions(n)) {
      for (const Rational& l : {Rational(4), Rational(9), Rational(17, 4), Rational(100)}) {
        const auto r = lemma_check(p, l);
        CAPTURE(p.to_string());
        REQUIRE(r.holds());
      }
    }
  }
}

TEST_CASE("lemma implies full-dimensional partition simplices") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& p : enumerate_partitions(n)) {
      REQUIRE(lemma_check(p, 4).holds());
      const auto r = minimal_embedding_dimension(partition_to_matrix(p, 4));
      REQUIRE(r.realizable_in_dim == n - 1);
    }
  }
}

TEST_CASE("sigma values") {
  const auto s2 = sigma(2);
  CHECK(std::abs(static_cast<double>(s2.value) - std::sqrt(2.0 + std::sqrt(3.0))) < 1e-12);
  CHECK(s2.inner == Rational(48));
  CHECK(s2.outer_rational == Rational(2));
  CHECK(s2.outer_sqrt_coeff == Rational(1, 4));

  const auto s3 = sigma(3);
  CHECK(s3.inner == Rational(161));
  CHECK(s3.outer_rational == Rational(17, 8));
  CHECK(s3.value < s2.value);
  CHECK(s3.value > sigma_limit());

  CHECK(std::abs(static_cast<double>(sigma_limit()) - 1.91993) < 1e-5);
  CHECK(std::abs(static_cast<double>(sigma(1000000).value) - 1.91993) < 1e-4);
  CHECK_THROWS_AS(sigma(1), std::invalid_argument);

  long double prev = sigma(2).value;
  for (long long d = 3; d <= 10000; ++d) {
    const long double cur = sigma(d).value;
    REQUIRE(cur <= prev + 1e-12L);
    REQUIRE(cur >= sigma_limit() - 1e-12L);
    prev = cur;
  }
}

TEST_CASE("threshold scan at lambda^2 = 4 matches the partition count") {
  const auto p = testing::partition_numbers(6);
  for (std::size_t d = 1; d <= 5; ++d) {
    const auto rows = threshold_scan(d, {Rational(4)});
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].realizable == p[d + 1]);
    CHECK(rows[0].partitions == p[d + 1]);
    CHECK(rows[0].bijection_holds);
  }
  const auto d3 = threshold_scan(3, {Rational(4)});
  CHECK(d3[0].classes_scanned == 11);  // graphs on 4 vertices
  CHECK(*d3[0].above_threshold);
}

TEST_CASE("threshold scan below the clustering regime reports without asserting") {
  const auto rows = threshold_scan(2, {Rational(2)});
  REQUIRE(rows.size() == 1);
  CHECK_FALSE(rows[0].above_threshold.has_value());
  // Sides (1, 1, sqrt 2) form a right triangle, so an extra class appears.
  CHECK(rows[0].realizable == rows[0].partitions + rows[0].extra.size() - rows[0].missing.size());
  CHECK_FALSE(rows[0].extra.empty());
  CHECK_THROWS_AS(threshold_scan(7, {Rational(4)}), std::invalid_argument);
}
