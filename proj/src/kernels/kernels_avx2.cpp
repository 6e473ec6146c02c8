// Compiled with -mavx2; only reached through dispatch after a CPU check.
#include <immintrin.h>

#include "cantorval/kernels.hpp"

namespace cantorval::simd::avx2 {

void add_offset(std::span<const std::int64_t> in, std::int64_t offset, std::span<std::int64_t> out) {
  const std::size_t n = in.size();
  const __m256i off = _mm256_set1_epi64x(offset);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in.data() + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), _mm256_add_epi64(v, off));
  }
  for (; i < n; ++i) out[i] = in[i] + offset;
}

void shift_add(std::span<const std::int64_t> in, unsigned shift, std::int64_t addend, std::span<std::int64_t> out) {
  const std::size_t n = in.size();
  const __m256i add = _mm256_set1_epi64x(addend);
  const __m128i count = _mm_cvtsi32_si128(static_cast<int>(shift));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in.data() + i));
    const __m256i r = _mm256_add_epi64(_mm256_sll_epi64(v, count), add);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), r);
  }
  for (; i < n; ++i) out[i] = (in[i] << shift) + addend;
}

std::size_t mark_breaks(std::span<const std::int64_t> sorted, std::int64_t width, std::span<std::uint8_t> flags) {
  if (sorted.size() < 2) return 0;
  const std::size_t pairs = sorted.size() - 1;
  const __m256i w = _mm256_set1_epi64x(width);
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 4 <= pairs; i += 4) {
    const __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(sorted.data() + i));
    const __m256i next = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(sorted.data() + i + 1));
    const __m256i gt = _mm256_cmpgt_epi64(next, _mm256_add_epi64(cur, w));
    const int mask = _mm256_movemask_pd(_mm256_castsi256_pd(gt));
    for (int lane = 0; lane < 4; ++lane) flags[i + lane] = static_cast<std::uint8_t>((mask >> lane) & 1);
    count += static_cast<std::size_t>(__builtin_popcount(static_cast<unsigned>(mask)));
  }
  for (; i < pairs; ++i) {
    const bool brk = sorted[i + 1] > sorted[i] + width;
    flags[i] = brk ? 1 : 0;
    count += brk ? 1 : 0;
  }
  return count;
}

}  // namespace cantorval::simd::avx2
