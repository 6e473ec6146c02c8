#include "cantorval/kernels.hpp"

#if defined(CANTORVAL_HAVE_NEON_KERNELS)
#include <arm_neon.h>

namespace cantorval::simd::neon {

void add_offset(std::span<const std::int64_t> in, std::int64_t offset, std::span<std::int64_t> out) {
  const std::size_t n = in.size();
  const int64x2_t off = vdupq_n_s64(offset);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_s64(out.data() + i, vaddq_s64(vld1q_s64(in.data() + i), off));
  for (; i < n; ++i) out[i] = in[i] + offset;
}

void shift_add(std::span<const std::int64_t> in, unsigned shift, std::int64_t addend, std::span<std::int64_t> out) {
  const std::size_t n = in.size();
  const int64x2_t add = vdupq_n_s64(addend);
  const int64x2_t count = vdupq_n_s64(static_cast<std::int64_t>(shift));
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_s64(out.data() + i, vaddq_s64(vshlq_s64(vld1q_s64(in.data() + i), count), add));
  }
  for (; i < n; ++i) out[i] = (in[i] << shift) + addend;
}

std::size_t mark_breaks(std::span<const std::int64_t> sorted, std::int64_t width, std::span<std::uint8_t> flags) {
  if (sorted.size() < 2) return 0;
  const std::size_t pairs = sorted.size() - 1;
  const int64x2_t w = vdupq_n_s64(width);
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 2 <= pairs; i += 2) {
    const int64x2_t cur = vld1q_s64(sorted.data() + i);
    const int64x2_t next = vld1q_s64(sorted.data() + i + 1);
    const uint64x2_t gt = vcgtq_s64(next, vaddq_s64(cur, w));
    flags[i] = static_cast<std::uint8_t>(vgetq_lane_u64(gt, 0) & 1);
    flags[i + 1] = static_cast<std::uint8_t>(vgetq_lane_u64(gt, 1) & 1);
    count += flags[i] + flags[i + 1];
  }
  for (; i < pairs; ++i) {
    const bool brk = sorted[i + 1] > sorted[i] + width;
    flags[i] = brk ? 1 : 0;
    count += brk ? 1 : 0;
  }
  return count;
}

}  // namespace cantorval::simd::neon
#endif
