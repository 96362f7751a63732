#include <algorithm>
#include <limits>
#include <vector>

#include "qconv/kernels.hpp"

namespace qconv::kernels::scalar {

DirectedResult directed_linf(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                             std::size_t stride) {
  const std::size_t na = a.size() / stride;
  const std::size_t nb = b.size() / stride;
  DirectedResult result{-1, 0};
  for (std::size_t i = 0; i < na; ++i) {
    const std::int64_t* p = a.data() + i * stride;
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::size_t j = 0; j < nb; ++j) {
      const std::int64_t* q = b.data() + j * stride;
      std::int64_t d = 0;
      for (std::size_t c = 0; c < stride; ++c) {
        const std::int64_t diff = p[c] - q[c];
        d = std::max(d, diff < 0 ? -diff : diff);
      }
      best = std::min(best, d);
      // This row can no longer raise the running maximum.
      if (best <= result.distance) break;
    }
    if (best > result.distance) {
      result.distance = best;
      result.witness = i;
    }
  }
  if (result.distance < 0) result.distance = 0;
  return result;
}

std::int64_t cut_norm_max(std::span<const std::int32_t> d, int n) {
  const std::size_t stride = cut_stride(n);
  std::vector<std::int32_t> col(stride, 0);
  std::int64_t best = 0;
  const std::uint64_t count = std::uint64_t{1} << n;
  std::uint64_t gray = 0;
  for (std::uint64_t step = 1; step < count; ++step) {
    const int flip = __builtin_ctzll(step);
    gray ^= std::uint64_t{1} << flip;
    const std::int32_t* row = d.data() + static_cast<std::size_t>(flip) * stride;
    if ((gray >> flip) & 1u) {
      for (std::size_t t = 0; t < stride; ++t) col[t] += row[t];
    } else {
      for (std::size_t t = 0; t < stride; ++t) col[t] -= row[t];
    }
    std::int64_t pos = 0;
    std::int64_t neg = 0;
    for (std::size_t t = 0; t < stride; ++t) {
      if (col[t] > 0) pos += col[t];
      else neg -= col[t];
    }
    best = std::max({best, pos, neg});
  }
  return best;
}

}  // namespace qconv::kernels::scalar
