#pragma once

// Integer inner loops used when a rational enumeration can be rescaled to a
// common denominator that fits in 64 bits. Every kernel has a scalar
// reference implementation; vector variants must produce identical output.

#include <cstddef>
#include <cstdint>
#include <span>

namespace cantorval::simd {

enum class Isa { scalar, avx2, neon };

/// Best instruction set supported by both the build and the running CPU.
Isa detected_isa();
/// Instruction set used by the dispatching entry points below.
Isa active_isa();
/// Overrides dispatch (tests and benchmarks). Throws PreconditionError if the
/// requested ISA is unavailable on this machine.
void force_isa(Isa isa);
bool isa_available(Isa isa);
const char* isa_name(Isa isa);

/// out[i] = in[i] + offset. `out` may alias `in`; sizes must match.
void add_offset(std::span<const std::int64_t> in, std::int64_t offset, std::span<std::int64_t> out);

/// out[i] = (in[i] << shift) + addend, for non-negative inputs.
void shift_add(std::span<const std::int64_t> in, unsigned shift, std::int64_t addend, std::span<std::int64_t> out);

/// For sorted input, flags[i] = 1 iff sorted[i + 1] > sorted[i] + width, for
/// i < size - 1. Returns the number of flags set. flags.size() >= size - 1.
std::size_t mark_breaks(std::span<const std::int64_t> sorted, std::int64_t width, std::span<std::uint8_t> flags);

namespace scalar {
void add_offset(std::span<const std::int64_t> in, std::int64_t offset, std::span<std::int64_t> out);
void shift_add(std::span<const std::int64_t> in, unsigned shift, std::int64_t addend, std::span<std::int64_t> out);
std::size_t mark_breaks(std::span<const std::int64_t> sorted, std::int64_t width, std::span<std::uint8_t> flags);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define CANTORVAL_HAVE_AVX2_KERNELS 1
namespace avx2 {
void add_offset(std::span<const std::int64_t> in, std::int64_t offset, std::span<std::int64_t> out);
void shift_add(std::span<const std::int64_t> in, unsigned shift, std::int64_t addend, std::span<std::int64_t> out);
std::size_t mark_breaks(std::span<const std::int64_t> sorted, std::int64_t width, std::span<std::uint8_t> flags);
}  // namespace avx2
#endif

#if defined(__aarch64__) || defined(__ARM_NEON)
#define CANTORVAL_HAVE_NEON_KERNELS 1
namespace neon {
void add_offset(std::span<const std::int64_t> in, std::int64_t offset, std::span<std::int64_t> out);
void shift_add(std::span<const std::int64_t> in, unsigned shift, std::int64_t addend, std::span<std::int64_t> out);
std::size_t mark_breaks(std::span<const std::int64_t> sorted, std::int64_t width, std::span<std::uint8_t> flags);
}  // namespace neon
#endif

}  // namespace cantorval::simd
