#pragma once

// Integer inner loops shared by the metric and graph modules.
//
// Each kernel has a scalar reference implementation and an AVX2 variant.
// The variant is picked at runtime from the CPU feature set; setting the
// environment variable QCONV_KERNEL=scalar forces the reference path. Both
// variants return bit-identical results (the equivalence tests enforce it).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace qconv::kernels {

enum class Backend { Scalar, Avx2 };

std::string_view backend_name(Backend b);
bool backend_available(Backend b);
/// Best available backend, honouring QCONV_KERNEL.
Backend active_backend();

/// Points are stored row-major with this many int64 lanes per row.
constexpr std::size_t lane_stride(std::size_t dim) { return (dim + 3) / 4 * 4; }

struct DirectedResult {
  std::int64_t distance = 0;  ///< max over a of min over b of the l-infinity distance
  std::size_t witness = 0;    ///< first row of `a` attaining it
};

/// Directed Hausdorff distance between two integer point sets (l-infinity).
/// Both sets must be nonempty and share `stride`; padding lanes must agree.
DirectedResult directed_linf(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                             std::size_t stride, Backend backend);

/// Row stride (int32 lanes) for cut_norm_max.
constexpr std::size_t cut_stride(int n) { return (static_cast<std::size_t>(n) + 7) / 8 * 8; }

/// max over S, T of |sum_{s in S, t in T} d[s][t]| for a symmetric n x n
/// matrix stored with row stride cut_stride(n). Enumerates S in Gray-code
/// order and maximizes over T in closed form from the column sums.
std::int64_t cut_norm_max(std::span<const std::int32_t> d, int n, Backend backend);

namespace scalar {
DirectedResult directed_linf(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                             std::size_t stride);
std::int64_t cut_norm_max(std::span<const std::int32_t> d, int n);
}  // namespace scalar

namespace avx2 {
bool compiled();
DirectedResult directed_linf(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                             std::size_t stride);
std::int64_t cut_norm_max(std::span<const std::int32_t> d, int n);
}  // namespace avx2

}  // namespace qconv::kernels
