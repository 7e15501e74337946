#include "intsimplex/kernels.hpp"

namespace intsimplex::kernels::scalar {

bool triangle_ok(const DistanceRow& a, const DistanceRow& b, std::int8_t c, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    const int ai = a[i];
    const int bi = b[i];
    const int diff = ai > c ? ai - c : c - ai;
    if (bi < diff || bi > ai + c) return false;
  }
  return true;
}

int compare_rows(const DistanceRow& a, const DistanceRow& b, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace intsimplex::kernels::scalar
