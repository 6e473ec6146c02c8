#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "cantorval/errors.hpp"
#include "cantorval/kernels.hpp"
#include "cantorval/subsums.hpp"
#include "support.hpp"

namespace simd = cantorval::simd;

namespace {

std::vector<std::int64_t> random_values(gen::Source& src, std::size_t n, long hi) {
  std::vector<std::int64_t> v(n);
  for (auto& x : v) x = src.integer(0, hi);
  return v;
}

struct IsaGuard {
  simd::Isa saved = simd::active_isa();
  ~IsaGuard() { simd::force_isa(saved); }
};

}  // namespace

TEST_CASE("scalar is always available and forcing an absent ISA fails") {
  CHECK(simd::isa_available(simd::Isa::scalar));
  for (simd::Isa isa : {simd::Isa::avx2, simd::Isa::neon}) {
    if (!simd::isa_available(isa)) CHECK_THROWS_AS(simd::force_isa(isa), cantorval::PreconditionError);
  }
}

#if defined(CANTORVAL_HAVE_AVX2_KERNELS)
TEST_CASE("avx2 kernels match the scalar reference on every length") {
  if (!simd::isa_available(simd::Isa::avx2)) return;
  gen::Source src(31);
  for (std::size_t n = 0; n < 70; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      const auto in = random_values(src, n, 1L << 40);
      const std::int64_t offset = src.integer(-1000, 1000);
      std::vector<std::int64_t> a(n), b(n);
      simd::scalar::add_offset(in, offset, a);
      simd::avx2::add_offset(in, offset, b);
      CHECK(a == b);

      const unsigned shift = static_cast<unsigned>(src.integer(0, 8));
      simd::scalar::shift_add(in, shift, offset, a);
      simd::avx2::shift_add(in, shift, offset, b);
      CHECK(a == b);

      auto sorted = random_values(src, n, 200);
      std::sort(sorted.begin(), sorted.end());
      const std::int64_t width = src.integer(0, 10);
      std::vector<std::uint8_t> fa(n), fb(n);
      const std::size_t ca = simd::scalar::mark_breaks(sorted, width, fa);
      const std::size_t cb = simd::avx2::mark_breaks(sorted, width, fb);
      CHECK(ca == cb);
      if (n > 0) CHECK(std::equal(fa.begin(), fa.begin() + static_cast<long>(n - 1), fb.begin()));
    }
  }
}

TEST_CASE("add_offset may alias its input") {
  if (!simd::isa_available(simd::Isa::avx2)) return;
  std::vector<std::int64_t> v{1, 2, 3, 4, 5, 6, 7, 8, 9};
  simd::avx2::add_offset(v, 10, v);
  CHECK(v == std::vector<std::int64_t>{11, 12, 13, 14, 15, 16, 17, 18, 19});
}
#endif

TEST_CASE("scalar mark_breaks counts strict jumps") {
  const std::vector<std::int64_t> sorted{0, 1, 3, 4, 10};
  std::vector<std::uint8_t> flags(4);
  CHECK(simd::scalar::mark_breaks(sorted, 1, flags) == 2);
  CHECK(flags == std::vector<std::uint8_t>{0, 1, 0, 1});
}

TEST_CASE("enumeration output does not depend on the dispatched ISA") {
  IsaGuard guard;
  const auto spec = cantorval::TermSequence::cantorval();
  std::vector<std::vector<std::string>> runs;
  for (simd::Isa isa : {simd::Isa::scalar, simd::Isa::avx2, simd::Isa::neon}) {
    if (!simd::isa_available(isa)) continue;
    simd::force_isa(isa);
    auto sums = gen::strs(cantorval::partial_sums(spec, 12));
    auto ks = gen::strs(cantorval::k_set(6));
    sums.insert(sums.end(), ks.begin(), ks.end());
    runs.push_back(std::move(sums));
  }
  for (const auto& r : runs) CHECK(r == runs.front());
  CHECK(gen::strs(cantorval::detail::partial_sums_rational(spec, 12)) ==
        std::vector<std::string>(runs.front().begin(), runs.front().begin() + static_cast<long>(cantorval::partial_sums(spec, 12).size())));
}
