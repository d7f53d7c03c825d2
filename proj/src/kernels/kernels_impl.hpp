#pragma once

#include <cstddef>
#include <cstdint>

namespace forumlens::simd {

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
double sparse_dot(const double* dense, const std::uint32_t* index, const double* value,
                  std::size_t nnz);
double sum_squares(const double* a, std::size_t n);
double squared_distance(const double* a, const double* b, std::size_t n);
void scale(double* a, double factor, std::size_t n);
void axpy(double* y, double alpha, const double* x, std::size_t n);
}  // namespace scalar

#if defined(FORUMLENS_HAVE_AVX2)
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
double sparse_dot(const double* dense, const std::uint32_t* index, const double* value,
                  std::size_t nnz);
double sum_squares(const double* a, std::size_t n);
double squared_distance(const double* a, const double* b, std::size_t n);
void scale(double* a, double factor, std::size_t n);
void axpy(double* y, double alpha, const double* x, std::size_t n);
}  // namespace avx2
#endif

}  // namespace forumlens::simd
