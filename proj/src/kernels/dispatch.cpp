#include <cstdlib>
#include <stdexcept>
#include <string>

#include "intsimplex/kernels.hpp"

namespace intsimplex::kernels {

namespace {

using TriangleFn = bool (*)(const DistanceRow&, const DistanceRow&, std::int8_t, std::size_t);
using CompareFn = int (*)(const DistanceRow&, const DistanceRow&, std::size_t);

struct Table {
  Backend backend;
  TriangleFn triangle;
  CompareFn compare;
};

bool cpu_has(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Backend::neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Table table_for(Backend b) {
  switch (b) {
#if defined(__x86_64__) || defined(_M_X64)
    case Backend::avx2:
      return {b, &avx2::triangle_ok, &avx2::compare_rows};
#endif
#if defined(__aarch64__)
    case Backend::neon:
      return {b, &neon::triangle_ok, &neon::compare_rows};
#endif
    default:
      return {Backend::scalar, &scalar::triangle_ok, &scalar::compare_rows};
  }
}

Table initial_table() {
  if (const char* env = std::getenv("INTSIMPLEX_KERNEL")) {
    const std::string want(env);
    for (Backend b : available_backends()) {
      if (backend_name(b) == want) return table_for(b);
    }
  }
  return table_for(available_backends().back());
}

Table& active() {
  static Table t = initial_table();
  return t;
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
    case Backend::neon:
      return "neon";
  }
  return "unknown";
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out{Backend::scalar};
  for (Backend b : {Backend::avx2, Backend::neon}) {
    if (cpu_has(b)) out.push_back(b);
  }
  return out;
}

Backend active_backend() { return active().backend; }

void set_active_backend(Backend b) {
  if (!cpu_has(b)) {
    throw std::invalid_argument("kernel backend '" + std::string(backend_name(b)) + "' is not available");
  }
  active() = table_for(b);
}

bool triangle_ok(const DistanceRow& a, const DistanceRow& b, std::int8_t c, std::size_t len) {
  return active().triangle(a, b, c, len);
}

int compare_rows(const DistanceRow& a, const DistanceRow& b, std::size_t len) {
  return active().compare(a, b, len);
}

bool triangle_ok_with(Backend backend, const DistanceRow& a, const DistanceRow& b, std::int8_t c,
                      std::size_t len) {
  if (!cpu_has(backend)) throw std::invalid_argument("kernel backend not available");
  return table_for(backend).triangle(a, b, c, len);
}

int compare_rows_with(Backend backend, const DistanceRow& a, const DistanceRow& b, std::size_t len) {
  if (!cpu_has(backend)) throw std::invalid_argument("kernel backend not available");
  return table_for(backend).compare(a, b, len);
}

}  // namespace intsimplex::kernels
