#include "forumlens/sparse.hpp"

#include <algorithm>

#include "forumlens/kernels.hpp"

namespace forumlens {

double SparseVector::sum() const noexcept {
  double s = 0;
  for (double v : value) s += v;
  return s;
}

SparseVector bag_of_ids(std::span<const std::uint32_t> ids) {
  std::vector<std::uint32_t> sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  SparseVector out;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    out.index.push_back(sorted[i]);
    out.value.push_back(static_cast<double>(j - i));
    i = j;
  }
  return out;
}

SparseVector sparse_from_dense(std::span<const double> dense) {
  SparseVector out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0.0) {
      out.index.push_back(static_cast<std::uint32_t>(i));
      out.value.push_back(dense[i]);
    }
  return out;
}

double dot(std::span<const double> dense, const SparseVector& x) noexcept {
  return simd::active().sparse_dot(dense.data(), x.index.data(), x.value.data(), x.nnz());
}

void add_scaled(std::span<double> dense, double alpha, const SparseVector& x) noexcept {
  for (std::size_t i = 0; i < x.nnz(); ++i) dense[x.index[i]] += alpha * x.value[i];
}

}  // namespace forumlens
