#include <doctest.h>

#include <algorithm>

#include "intsimplex/kernels.hpp"
#include "support.hpp"

using namespace intsimplex::kernels;

namespace {

DistanceRow random_row(long hi) {
  DistanceRow r;
  // Garbage past the logical length must not matter.
  for (auto& v : r.v) v = static_cast<std::int8_t>(testing::uniform(0, hi));
  return r;
}

}  // namespace

TEST_CASE("scalar reference kernels") {
  DistanceRow a, b;
  a[0] = 1; b[0] = 1;  // sides (1, 1, c)
  CHECK(scalar::triangle_ok(a, b, 2, 1));
  CHECK_FALSE(scalar::triangle_ok(a, b, 3, 1));
  a[1] = 3; b[1] = 1;  // sides (3, c, 1): needs 2 <= c <= 4
  CHECK_FALSE(scalar::triangle_ok(a, b, 1, 2));
  CHECK(scalar::triangle_ok(a, b, 2, 2));
  CHECK(scalar::triangle_ok(a, b, 1, 1));  // second lane ignored
  CHECK(scalar::triangle_ok(a, b, 9, 0));

  DistanceRow x, y;
  x[0] = 1; x[1] = 2;
  y[0] = 1; y[1] = 3;
  CHECK(scalar::compare_rows(x, y, 2) < 0);
  CHECK(scalar::compare_rows(y, x, 2) > 0);
  CHECK(scalar::compare_rows(x, y, 1) == 0);
  CHECK(scalar::compare_rows(x, y, 0) == 0);
}

TEST_CASE("every available backend matches the scalar reference") {
  const auto backends = available_backends();
  REQUIRE(backends.front() == Backend::scalar);
  for (Backend backend : backends) {
    CAPTURE(backend_name(backend));
    for (int trial = 0; trial < 20000; ++trial) {
      const long hi = trial % 2 ? 4 : 63;
      const DistanceRow a = random_row(hi);
      DistanceRow b = random_row(hi);
      if (trial % 3 == 0) b = a;
      if (trial % 5 == 0) {
        const auto at = static_cast<std::size_t>(testing::uniform(0, kLanes - 1));
        b[at] = static_cast<std::int8_t>(std::min<long>(63, b[at] + 1));
      }
      const auto c = static_cast<std::int8_t>(testing::uniform(0, hi));
      const auto len = static_cast<std::size_t>(testing::uniform(0, kLanes));
      REQUIRE(triangle_ok_with(backend, a, b, c, len) == scalar::triangle_ok(a, b, c, len));
      const int got = compare_rows_with(backend, a, b, len);
      const int want = scalar::compare_rows(a, b, len);
      REQUIRE((got > 0) == (want > 0));
      REQUIRE((got < 0) == (want < 0));
    }
  }
}

TEST_CASE("dispatch can be switched and restored") {
  const Backend original = active_backend();
  for (Backend backend : available_backends()) {
    set_active_backend(backend);
    CHECK(active_backend() == backend);
    DistanceRow a, b;
    a[0] = 2; b[0] = 5;
    CHECK_FALSE(triangle_ok(a, b, 2, 1));
    CHECK(triangle_ok(a, b, 3, 1));
  }
  set_active_backend(original);
#if !defined(__aarch64__)
  CHECK_THROWS_AS(set_active_backend(Backend::neon), std::invalid_argument);
#endif
}
