#pragma once

// Sparse bags of word counts keyed by vocabulary index.

#include <cstdint>
#include <span>
#include <vector>

namespace forumlens {

struct SparseVector {
  std::vector<std::uint32_t> index;  // strictly increasing
  std::vector<double> value;

  std::size_t nnz() const noexcept { return index.size(); }
  double sum() const noexcept;
  bool operator==(const SparseVector&) const = default;
};

/// Counts of each id in `ids` (ids need not be sorted).
SparseVector bag_of_ids(std::span<const std::uint32_t> ids);
/// Non-zero entries of a dense count vector.
SparseVector sparse_from_dense(std::span<const double> dense);
/// sum_i dense[index[i]] * value[i], via the active SIMD kernel.
double dot(std::span<const double> dense, const SparseVector& x) noexcept;
/// dense[index[i]] += alpha * value[i]
void add_scaled(std::span<double> dense, double alpha, const SparseVector& x) noexcept;

}  // namespace forumlens
