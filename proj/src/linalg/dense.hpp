#pragma once

// In-place Gaussian elimination kernels shared by the public linalg entry
// points. Matrices are row-major uint32 buffers with residues in [0, p).

#include <cstddef>
#include <cstdint>
#include <vector>

namespace frobrig::linalg::detail {

/// Rank of a rows x cols matrix. Destroys the buffer.
size_t dense_rank(std::vector<uint32_t>& data, size_t rows, size_t cols, uint32_t p);

/// Brings the buffer to reduced row-echelon form (pivots normalized to 1,
/// nonzero rows first) and returns the pivot columns.
std::vector<size_t> dense_rref(std::vector<uint32_t>& data, size_t rows, size_t cols, uint32_t p);

/// Number of lazy accumulation steps a row tolerates before it must be
/// reduced again: every step adds at most (p-1)^2 to an entry below p.
inline uint64_t lazy_budget(uint32_t p) {
  const uint64_t step = static_cast<uint64_t>(p - 1) * (p - 1);
  if (step == 0) return UINT64_MAX;
  return (UINT32_MAX - static_cast<uint64_t>(p)) / step;
}

}  // namespace frobrig::linalg::detail
