#include <atomic>

#include "cantorval/errors.hpp"
#include "cantorval/kernels.hpp"

namespace cantorval::simd {
namespace {

bool cpu_has_avx2() {
#if defined(CANTORVAL_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

std::atomic<int>& override_slot() {
  static std::atomic<int> slot{-1};
  return slot;
}

}  // namespace

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2: return cpu_has_avx2();
    case Isa::neon:
#if defined(CANTORVAL_HAVE_NEON_KERNELS)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa detected_isa() {
  static const Isa isa = [] {
    if (isa_available(Isa::avx2)) return Isa::avx2;
    if (isa_available(Isa::neon)) return Isa::neon;
    return Isa::scalar;
  }();
  return isa;
}

Isa active_isa() {
  const int forced = override_slot().load(std::memory_order_relaxed);
  return forced < 0 ? detected_isa() : static_cast<Isa>(forced);
}

void force_isa(Isa isa) {
  if (!isa_available(isa)) throw PreconditionError(std::string("ISA not available: ") + isa_name(isa));
  override_slot().store(static_cast<int>(isa), std::memory_order_relaxed);
}

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

void add_offset(std::span<const std::int64_t> in, std::int64_t offset, std::span<std::int64_t> out) {
  switch (active_isa()) {
#if defined(CANTORVAL_HAVE_AVX2_KERNELS)
    case Isa::avx2: return avx2::add_offset(in, offset, out);
#endif
#if defined(CANTORVAL_HAVE_NEON_KERNELS)
    case Isa::neon: return neon::add_offset(in, offset, out);
#endif
    default: return scalar::add_offset(in, offset, out);
  }
}

void shift_add(std::span<const std::int64_t> in, unsigned shift, std::int64_t addend, std::span<std::int64_t> out) {
  switch (active_isa()) {
#if defined(CANTORVAL_HAVE_AVX2_KERNELS)
    case Isa::avx2: return avx2::shift_add(in, shift, addend, out);
#endif
#if defined(CANTORVAL_HAVE_NEON_KERNELS)
    case Isa::neon: return neon::shift_add(in, shift, addend, out);
#endif
    default: return scalar::shift_add(in, shift, addend, out);
  }
}

std::size_t mark_breaks(std::span<const std::int64_t> sorted, std::int64_t width, std::span<std::uint8_t> flags) {
  switch (active_isa()) {
#if defined(CANTORVAL_HAVE_AVX2_KERNELS)
    case Isa::avx2: return avx2::mark_breaks(sorted, width, flags);
#endif
#if defined(CANTORVAL_HAVE_NEON_KERNELS)
    case Isa::neon: return neon::mark_breaks(sorted, width, flags);
#endif
    default: return scalar::mark_breaks(sorted, width, flags);
  }
}

}  // namespace cantorval::simd
