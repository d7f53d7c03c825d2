#pragma once

// Data-parallel inner loops. Each kernel has a scalar reference version and,
// on x86-64 builds, an AVX2+FMA version compiled in its own translation unit.
// The active table is chosen once at first use: FORUMLENS_SIMD=scalar|avx2|auto
// (default auto = AVX2 when the CPU reports avx2 and fma).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace forumlens::simd {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa) noexcept;

struct KernelTable {
  Isa isa;
  double (*dot)(const double* a, const double* b, std::size_t n);
  /// sum_i dense[index[i]] * value[i]
  double (*sparse_dot)(const double* dense, const std::uint32_t* index, const double* value,
                       std::size_t nnz);
  double (*sum_squares)(const double* a, std::size_t n);
  double (*squared_distance)(const double* a, const double* b, std::size_t n);
  void (*scale)(double* a, double factor, std::size_t n);
  /// y += alpha * x
  void (*axpy)(double* y, double alpha, const double* x, std::size_t n);
};

const KernelTable& scalar_kernels() noexcept;
/// nullptr when the AVX2 variant was not compiled in.
const KernelTable* avx2_kernels() noexcept;
bool cpu_supports_avx2() noexcept;

const KernelTable& active() noexcept;

inline double dot(std::span<const double> a, std::span<const double> b) noexcept {
  return active().dot(a.data(), b.data(), a.size() < b.size() ? a.size() : b.size());
}
inline double sparse_dot(std::span<const double> dense, std::span<const std::uint32_t> index,
                         std::span<const double> value) noexcept {
  return active().sparse_dot(dense.data(), index.data(), value.data(), index.size());
}
inline double sum_squares(std::span<const double> a) noexcept {
  return active().sum_squares(a.data(), a.size());
}
inline double squared_distance(std::span<const double> a, std::span<const double> b) noexcept {
  return active().squared_distance(a.data(), b.data(), a.size());
}
inline void scale(std::span<double> a, double factor) noexcept {
  active().scale(a.data(), factor, a.size());
}
inline void axpy(std::span<double> y, double alpha, std::span<const double> x) noexcept {
  active().axpy(y.data(), alpha, x.data(), y.size());
}

}  // namespace forumlens::simd
