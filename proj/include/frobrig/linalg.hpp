#pragma once

// Exact dense linear algebra over the prime field F_p.
//
// Everything here works on coefficient vectors of uint32_t holding reduced
// residues in [0, p). Characteristic two takes a bit-packed elimination path;
// other primes use lazily reduced 32-bit accumulators, which is why p is
// limited to 16 bits.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace frobrig::linalg {

using Vec = std::vector<uint32_t>;

/// Largest characteristic accepted by the elimination kernels.
inline constexpr uint32_t kMaxPrime = 65521;

bool is_prime(uint64_t n) noexcept;

/// Arithmetic in F_p for a runtime prime p.
class PrimeField {
 public:
  explicit PrimeField(uint32_t p);

  uint32_t p() const noexcept { return p_; }
  uint32_t reduce(int64_t v) const noexcept;
  uint32_t add(uint32_t a, uint32_t b) const noexcept {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  uint32_t neg(uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  uint32_t mul(uint32_t a, uint32_t b) const noexcept {
    return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
  }
  uint32_t inv(uint32_t a) const;
  uint32_t pow(uint32_t a, uint64_t e) const noexcept;

 private:
  uint32_t p_;
};

class MatrixFp {
 public:
  MatrixFp(size_t rows, size_t cols, uint32_t p);
  MatrixFp(uint32_t p, const std::vector<std::vector<uint32_t>>& rows);

  static MatrixFp identity(size_t n, uint32_t p);

  size_t rows() const noexcept { return rows_; }
  size_t cols() const noexcept { return cols_; }
  uint32_t p() const noexcept { return p_; }

  uint32_t at(size_t i, size_t j) const { return data_[i * cols_ + j]; }
  void set(size_t i, size_t j, uint32_t v);
  std::span<const uint32_t> row(size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<uint32_t> row(size_t i) { return {data_.data() + i * cols_, cols_}; }

  /// Matrix-vector product.
  Vec apply(std::span<const uint32_t> v) const;

  bool operator==(const MatrixFp&) const = default;

 private:
  size_t rows_;
  size_t cols_;
  uint32_t p_;
  std::vector<uint32_t> data_;
};

struct Rref {
  MatrixFp reduced;
  std::vector<size_t> pivots;  ///< pivot column of each nonzero row, increasing
  size_t rank() const noexcept { return pivots.size(); }
};

Rref rref(const MatrixFp& m);
size_t rank(const MatrixFp& m);

/// Basis of the right null space, one vector per free column in increasing
/// column order (the free coordinate is 1, other free coordinates 0).
std::vector<Vec> kernel_basis(const MatrixFp& m);

/// Basis of the column space: the pivot columns of the input.
std::vector<Vec> image_basis(const MatrixFp& m);

/// dim span(big) - dim span(small). Throws ContainmentViolation when
/// span(small) is not contained in span(big).
size_t quotient_dim(const std::vector<Vec>& big, const std::vector<Vec>& small, uint32_t p);

/// Incrementally maintained echelon basis of a subspace of F_p^dim.
class RowSpace {
 public:
  RowSpace(size_t dim, uint32_t p);
  ~RowSpace();
  RowSpace(RowSpace&&) noexcept;
  RowSpace& operator=(RowSpace&&) noexcept;
  RowSpace(const RowSpace&) = delete;
  RowSpace& operator=(const RowSpace&) = delete;

  /// Adds v to the spanning set; true iff it was not already in the span.
  bool insert(std::span<const uint32_t> v);
  bool contains(std::span<const uint32_t> v) const;
  size_t rank() const noexcept;
  size_t dim() const noexcept { return dim_; }

 private:
  struct Impl;
  size_t dim_;
  Impl* impl_;
};

// ---------------------------------------------------------------------------
// Sparse linear maps with optional degree labels.
//
// A labeled map records, for every row and column coordinate, an integer
// label (an internal degree). When every nonzero entry joins a row and a column
// with equal labels the map is block diagonal and all rank/kernel queries are
// answered block by block. Otherwise the labels are ignored.

using SparseVec = std::vector<std::pair<uint32_t, uint32_t>>;  ///< (index, value), sorted

struct LabeledMap {
  size_t rows = 0;
  uint32_t p = 2;
  std::vector<SparseVec> columns;
  std::vector<int> row_label;  ///< empty when ungraded
  std::vector<int> col_label;

  size_t cols() const noexcept { return columns.size(); }
  /// True when labels are present and every entry respects them.
  bool graded() const;
};

/// rank of the submatrix on the selected rows/columns (empty selector = all).
size_t rank(const LabeledMap& map, const std::vector<bool>& row_mask = {},
            const std::vector<bool>& col_mask = {});

/// Same rank, split by column label (a single entry at label 0 when the map
/// is ungraded).
std::map<int, size_t> rank_by_label(const LabeledMap& map, const std::vector<bool>& row_mask = {},
                                    const std::vector<bool>& col_mask = {});

/// Kernel of the map restricted to the selected columns. Vectors are sparse
/// over the full column index range. Ordering: blocks by increasing label,
/// within a block by free column index.
struct KernelVector {
  SparseVec vec;
  int label = 0;
};
std::vector<KernelVector> kernel(const LabeledMap& map, const std::vector<bool>& col_mask = {});

/// Greedy selection: returns indices into `candidates` of the vectors that are
/// independent modulo span(base) and the previously kept candidates, scanning
/// in input order. Vectors are sparse over [0, dim). Labels, when provided for
/// all vectors and consistent, split the work by label.
std::vector<size_t> select_independent(size_t dim, uint32_t p, const std::vector<SparseVec>& base,
                                       const std::vector<SparseVec>& candidates,
                                       const std::vector<int>& base_labels = {},
                                       const std::vector<int>& candidate_labels = {});

}  // namespace frobrig::linalg
