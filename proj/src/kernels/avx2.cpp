#include "intsimplex/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace intsimplex::kernels::avx2 {

namespace {

__attribute__((target("avx2"))) inline std::uint32_t lane_mask(std::size_t len) {
  return len >= 32 ? 0xffffffffu : ((1u << len) - 1u);
}

}  // namespace

__attribute__((target("avx2"))) bool triangle_ok(const DistanceRow& a, const DistanceRow& b,
                                                 std::int8_t c, std::size_t len) {
  const __m256i va = _mm256_load_si256(reinterpret_cast<const __m256i*>(a.v.data()));
  const __m256i vb = _mm256_load_si256(reinterpret_cast<const __m256i*>(b.v.data()));
  const __m256i vc = _mm256_set1_epi8(c);
  const __m256i diff = _mm256_abs_epi8(_mm256_sub_epi8(va, vc));
  const __m256i sum = _mm256_adds_epi8(va, vc);
  const __m256i bad = _mm256_or_si256(_mm256_cmpgt_epi8(diff, vb), _mm256_cmpgt_epi8(vb, sum));
  const auto mask = static_cast<std::uint32_t>(_mm256_movemask_epi8(bad));
  return (mask & lane_mask(len)) == 0;
}

__attribute__((target("avx2"))) int compare_rows(const DistanceRow& a, const DistanceRow& b,
                                                 std::size_t len) {
  const __m256i va = _mm256_load_si256(reinterpret_cast<const __m256i*>(a.v.data()));
  const __m256i vb = _mm256_load_si256(reinterpret_cast<const __m256i*>(b.v.data()));
  const auto eq = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(va, vb)));
  const std::uint32_t ne = ~eq & lane_mask(len);
  if (ne == 0) return 0;
  const int first = __builtin_ctz(ne);
  return a[first] < b[first] ? -1 : 1;
}

}  // namespace intsimplex::kernels::avx2

#endif
