#include <cstdlib>
#include <string>

#include "qconv/error.hpp"
#include "qconv/kernels.hpp"

namespace qconv::kernels {

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
  }
  return "unknown";
}

bool backend_available(Backend b) {
  switch (b) {
    case Backend::Scalar: return true;
    case Backend::Avx2:
#if defined(__x86_64__) || defined(__i386__)
      return avx2::compiled() && __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Backend active_backend() {
  static const Backend chosen = [] {
    if (const char* env = std::getenv("QCONV_KERNEL"); env && std::string(env) == "scalar") {
      return Backend::Scalar;
    }
    return backend_available(Backend::Avx2) ? Backend::Avx2 : Backend::Scalar;
  }();
  return chosen;
}

DirectedResult directed_linf(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                             std::size_t stride, Backend backend) {
  if (stride == 0 || stride % 4 != 0 || a.size() % stride != 0 || b.size() % stride != 0) {
    throw InvalidArgumentError("directed_linf: stride must be a positive multiple of 4");
  }
  if (a.empty() || b.empty()) throw InvalidArgumentError("directed_linf: empty point set");
  if (backend == Backend::Avx2 && backend_available(Backend::Avx2)) {
    return avx2::directed_linf(a, b, stride);
  }
  return scalar::directed_linf(a, b, stride);
}

std::int64_t cut_norm_max(std::span<const std::int32_t> d, int n, Backend backend) {
  if (n < 0 || n > 30 || d.size() < static_cast<std::size_t>(n) * cut_stride(n)) {
    throw InvalidArgumentError("cut_norm_max: matrix does not match n");
  }
  if (n == 0) return 0;
  if (backend == Backend::Avx2 && backend_available(Backend::Avx2)) {
    return avx2::cut_norm_max(d, n);
  }
  return scalar::cut_norm_max(d, n);
}

}  // namespace qconv::kernels
