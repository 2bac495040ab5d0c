#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "spl/rational.hpp"

namespace spl::detail {

/// Rank over Q by fraction-free (Bareiss) elimination.
inline std::size_t exact_rank(const std::vector<std::vector<int>>& rows_in) {
  if (rows_in.empty()) return 0;
  const std::size_t cols = rows_in.front().size();
  std::vector<std::vector<BigInt>> a;
  a.reserve(rows_in.size());
  for (const auto& row : rows_in) a.emplace_back(row.begin(), row.end());
  const std::size_t rows = a.size();
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j)
        a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace spl::detail
