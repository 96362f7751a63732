// Compiled with -mavx2 when the toolchain targets x86-64; otherwise the
// entry points fall back to the scalar reference so dispatch stays uniform.

#include <algorithm>
#include <limits>
#include <vector>

#include "qconv/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace qconv::kernels::avx2 {

#if defined(__AVX2__)

bool compiled() { return true; }

namespace {

inline __m256i abs_epi64(__m256i v) {
  const __m256i zero = _mm256_setzero_si256();
  const __m256i negative = _mm256_cmpgt_epi64(zero, v);
  return _mm256_blendv_epi8(v, _mm256_sub_epi64(zero, v), negative);
}

inline __m256i max_epi64(__m256i a, __m256i b) {
  return _mm256_blendv_epi8(a, b, _mm256_cmpgt_epi64(b, a));
}

inline std::int64_t hmax_epi64(__m256i v) {
  const __m128i lo = _mm256_castsi256_si128(v);
  const __m128i hi = _mm256_extracti128_si256(v, 1);
  const __m128i m = _mm_blendv_epi8(lo, hi, _mm_cmpgt_epi64(hi, lo));
  const std::int64_t x = _mm_cvtsi128_si64(m);
  const std::int64_t y = _mm_extract_epi64(m, 1);
  return x > y ? x : y;
}

inline std::int32_t hsum_epi32(__m256i v) {
  const __m128i s = _mm_add_epi32(_mm256_castsi256_si128(v), _mm256_extracti128_si256(v, 1));
  const __m128i t = _mm_add_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(1, 0, 3, 2)));
  const __m128i u = _mm_add_epi32(t, _mm_shuffle_epi32(t, _MM_SHUFFLE(2, 3, 0, 1)));
  return _mm_cvtsi128_si32(u);
}

}  // namespace

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
      __m256i acc = _mm256_setzero_si256();
      for (std::size_t c = 0; c < stride; c += 4) {
        const __m256i pv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + c));
        const __m256i qv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(q + c));
        acc = max_epi64(acc, abs_epi64(_mm256_sub_epi64(pv, qv)));
      }
      best = std::min(best, hmax_epi64(acc));
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
  const std::size_t blocks = stride / 8;
  std::vector<std::int32_t> col(stride, 0);
  const __m256i zero = _mm256_setzero_si256();
  std::int64_t best = 0;
  const std::uint64_t count = std::uint64_t{1} << n;
  std::uint64_t gray = 0;
  for (std::uint64_t step = 1; step < count; ++step) {
    const int flip = __builtin_ctzll(step);
    gray ^= std::uint64_t{1} << flip;
    const std::int32_t* row = d.data() + static_cast<std::size_t>(flip) * stride;
    const bool add = (gray >> flip) & 1u;
    __m256i pos = zero;
    __m256i neg = zero;
    for (std::size_t blk = 0; blk < blocks; ++blk) {
      const __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + blk * 8));
      auto* slot = reinterpret_cast<__m256i*>(col.data() + blk * 8);
      const __m256i c0 = _mm256_loadu_si256(slot);
      const __m256i c = add ? _mm256_add_epi32(c0, r) : _mm256_sub_epi32(c0, r);
      _mm256_storeu_si256(slot, c);
      pos = _mm256_add_epi32(pos, _mm256_max_epi32(c, zero));
      neg = _mm256_add_epi32(neg, _mm256_max_epi32(_mm256_sub_epi32(zero, c), zero));
    }
    best = std::max({best, static_cast<std::int64_t>(hsum_epi32(pos)),
                     static_cast<std::int64_t>(hsum_epi32(neg))});
  }
  return best;
}

#else

bool compiled() { return false; }

DirectedResult directed_linf(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                             std::size_t stride) {
  return scalar::directed_linf(a, b, stride);
}

std::int64_t cut_norm_max(std::span<const std::int32_t> d, int n) {
  return scalar::cut_norm_max(d, n);
}

#endif

}  // namespace qconv::kernels::avx2
