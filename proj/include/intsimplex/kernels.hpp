#pragma once

// Small int8 kernels on the census hot path. Each has a scalar reference and
// SIMD variants; the active variant is chosen once at startup from CPU
// features (override with INTSIMPLEX_KERNEL=scalar|avx2|neon).

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace intsimplex::kernels {

inline constexpr std::size_t kLanes = 32;

/// One row of the strict lower triangle of a distance matrix, padded to a
/// full SIMD register. Lanes past the logical length must be readable but
/// their values are ignored.
struct alignas(32) DistanceRow {
  std::array<std::int8_t, kLanes> v{};

  std::int8_t& operator[](std::size_t i) { return v[i]; }
  std::int8_t operator[](std::size_t i) const { return v[i]; }
};

enum class Backend { scalar, avx2, neon };

std::string_view backend_name(Backend b);

/// Variants compiled into this binary and supported by the running CPU.
std::vector<Backend> available_backends();

Backend active_backend();

/// Switches the process-wide dispatch. Throws std::invalid_argument when the
/// backend is not available. Not safe to call while other threads use the
/// kernels.
void set_active_backend(Backend b);

/// Weak triangle inequality between one new distance and a row:
/// for every i < len, |a[i] - c| <= b[i] <= a[i] + c.
/// len <= kLanes; all values must be in [0, 63].
bool triangle_ok(const DistanceRow& a, const DistanceRow& b, std::int8_t c, std::size_t len);

/// Lexicographic comparison of the first `len` lanes: negative, zero or
/// positive as a < b, a == b, a > b.
int compare_rows(const DistanceRow& a, const DistanceRow& b, std::size_t len);

// Direct entry points for equivalence testing.
namespace scalar {
bool triangle_ok(const DistanceRow& a, const DistanceRow& b, std::int8_t c, std::size_t len);
int compare_rows(const DistanceRow& a, const DistanceRow& b, std::size_t len);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
bool triangle_ok(const DistanceRow& a, const DistanceRow& b, std::int8_t c, std::size_t len);
int compare_rows(const DistanceRow& a, const DistanceRow& b, std::size_t len);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
bool triangle_ok(const DistanceRow& a, const DistanceRow& b, std::int8_t c, std::size_t len);
int compare_rows(const DistanceRow& a, const DistanceRow& b, std::size_t len);
}  // namespace neon
#endif

/// Calls a backend's implementation directly, bypassing the dispatch.
bool triangle_ok_with(Backend backend, const DistanceRow& a, const DistanceRow& b, std::int8_t c,
                      std::size_t len);
int compare_rows_with(Backend backend, const DistanceRow& a, const DistanceRow& b, std::size_t len);

}  // namespace intsimplex::kernels
