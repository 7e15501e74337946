#include "intsimplex/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace intsimplex::kernels::neon {

namespace {

// Nonzero bytes of `bad` restricted to the first `len` of 16 lanes.
inline bool any_in_prefix(uint8x16_t bad, std::size_t len) {
  static const std::uint8_t kIota[16] = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15};
  const uint8x16_t live = vcltq_u8(vld1q_u8(kIota), vdupq_n_u8(static_cast<std::uint8_t>(len > 16 ? 16 : len)));
  return vmaxvq_u8(vandq_u8(bad, live)) != 0;
}

inline uint8x16_t triangle_bad(int8x16_t a, int8x16_t b, int8x16_t c) {
  const int8x16_t diff = vabdq_s8(a, c);
  const int8x16_t sum = vqaddq_s8(a, c);
  return vorrq_u8(vcgtq_s8(diff, b), vcgtq_s8(b, sum));
}

}  // namespace

bool triangle_ok(const DistanceRow& a, const DistanceRow& b, std::int8_t c, std::size_t len) {
  const int8x16_t vc = vdupq_n_s8(c);
  if (any_in_prefix(triangle_bad(vld1q_s8(a.v.data()), vld1q_s8(b.v.data()), vc), len)) return false;
  if (len <= 16) return true;
  return !any_in_prefix(triangle_bad(vld1q_s8(a.v.data() + 16), vld1q_s8(b.v.data() + 16), vc), len - 16);
}

int compare_rows(const DistanceRow& a, const DistanceRow& b, std::size_t len) {
  for (std::size_t base = 0; base < len; base += 16) {
    const uint8x16_t ne = vmvnq_u8(vceqq_s8(vld1q_s8(a.v.data() + base), vld1q_s8(b.v.data() + base)));
    if (!any_in_prefix(ne, len - base)) continue;
    for (std::size_t i = base; i < len; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
  }
  return 0;
}

}  // namespace intsimplex::kernels::neon

#endif
