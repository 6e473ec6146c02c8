#include "cantorval/kernels.hpp"

namespace cantorval::simd::scalar {

void add_offset(std::span<const std::int64_t> in, std::int64_t offset, std::span<std::int64_t> out) {
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = in[i] + offset;
}

void shift_add(std::span<const std::int64_t> in, unsigned shift, std::int64_t addend, std::span<std::int64_t> out) {
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = (in[i] << shift) + addend;
}

std::size_t mark_breaks(std::span<const std::int64_t> sorted, std::int64_t width, std::span<std::uint8_t> flags) {
  std::size_t count = 0;
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    const bool brk = sorted[i + 1] > sorted[i] + width;
    flags[i] = brk ? 1 : 0;
    count += brk ? 1 : 0;
  }
  return count;
}

}  // namespace cantorval::simd::scalar
