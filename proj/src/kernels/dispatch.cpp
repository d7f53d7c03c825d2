#include <cstdlib>
#include <string_view>

#include "forumlens/kernels.hpp"
#include "kernels_impl.hpp"

namespace forumlens::simd {

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

const KernelTable& scalar_kernels() noexcept {
  static const KernelTable table{Isa::Scalar,         scalar::dot,   scalar::sparse_dot,
                                 scalar::sum_squares, scalar::squared_distance,
                                 scalar::scale,       scalar::axpy};
  return table;
}

const KernelTable* avx2_kernels() noexcept {
#if defined(FORUMLENS_HAVE_AVX2)
  static const KernelTable table{Isa::Avx2,         avx2::dot,   avx2::sparse_dot,
                                 avx2::sum_squares, avx2::squared_distance,
                                 avx2::scale,       avx2::axpy};
  return &table;
#else
  return nullptr;
#endif
}

bool cpu_supports_avx2() noexcept {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

const KernelTable& select() noexcept {
  const char* env = std::getenv("FORUMLENS_SIMD");
  const std::string_view want = env ? env : "auto";
  if (want == "scalar") return scalar_kernels();
  const KernelTable* avx = avx2_kernels();
  if (avx != nullptr && cpu_supports_avx2()) return *avx;
  return scalar_kernels();
}

}  // namespace

const KernelTable& active() noexcept {
  static const KernelTable& table = select();
  return table;
}

}  // namespace forumlens::simd
