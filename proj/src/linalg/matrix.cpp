#include <algorithm>
#include <utility>

#include "dense.hpp"
#include "frobrig/errors.hpp"
#include "frobrig/linalg.hpp"

namespace frobrig::linalg {

namespace detail {

namespace {

// ---- characteristic two: rows packed 64 columns per word -------------------

struct BitMatrix {
  size_t rows, cols, words;
  std::vector<uint64_t> bits;

  BitMatrix(const std::vector<uint32_t>& data, size_t r, size_t c)
      : rows(r), cols(c), words((c + 63) / 64), bits(r * ((c + 63) / 64), 0) {
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < c; ++j)
        if (data[i * c + j] & 1u) bits[i * words + j / 64] |= uint64_t{1} << (j % 64);
  }
  uint64_t* row(size_t i) { return bits.data() + i * words; }
  bool get(size_t i, size_t j) const { return (bits[i * words + j / 64] >> (j % 64)) & 1u; }
};

// Eliminates column by column; when `reduced` is set also clears entries above
// each pivot. Returns pivot columns; pivot rows end up in positions 0..rank-1.
std::vector<size_t> eliminate_gf2(BitMatrix& m, bool reduced) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
    const size_t w = c / 64;
    const uint64_t bit = uint64_t{1} << (c % 64);
    size_t pr = r;
    while (pr < m.rows && !(m.row(pr)[w] & bit)) ++pr;
    if (pr == m.rows) continue;
    if (pr != r) std::swap_ranges(m.row(pr), m.row(pr) + m.words, m.row(r));
    const uint64_t* piv = m.row(r);
    const size_t start = reduced ? 0 : r + 1;
    for (size_t i = start; i < m.rows; ++i) {
      if (i == r) continue;
      uint64_t* dst = m.row(i);
      if (!(dst[w] & bit)) continue;
      for (size_t k = w; k < m.words; ++k) dst[k] ^= piv[k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// ---- odd characteristic: lazily reduced 32-bit accumulators ---------------

class LazyEliminator {
 public:
  LazyEliminator(std::vector<uint32_t>& data, size_t rows, size_t cols, uint32_t p)
      : data_(data), rows_(rows), cols_(cols), field_(p), budget_(lazy_budget(p)) {
    order_.resize(rows);
    for (size_t i = 0; i < rows; ++i) order_[i] = i;
  }

  std::vector<size_t> run(bool reduced) {
    const uint32_t p = field_.p();
    std::vector<size_t> pivots;
    size_t r = 0;
    uint64_t steps = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
      size_t pr = r;
      for (; pr < rows_; ++pr) {
        uint32_t& e = at(pr, c);
        e %= p;
        if (e) break;
      }
      if (pr == rows_) continue;
      std::swap(order_[pr], order_[r]);
      uint32_t* piv = row(r);
      const uint32_t inv = field_.inv(piv[c]);
      for (size_t k = c; k < cols_; ++k) piv[k] = static_cast<uint32_t>(static_cast<uint64_t>(piv[k] % p) * inv % p);

      if (++steps >= budget_) {
        reduce_all();
        steps = 1;
      }
      const size_t start = reduced ? 0 : r + 1;
      for (size_t i = start; i < rows_; ++i) {
        if (i == r) continue;
        uint32_t* dst = row(i);
        const uint32_t f = dst[c] % p;
        if (!f) {
          dst[c] = 0;
          continue;
        }
        const uint32_t g = p - f;
        for (size_t k = c; k < cols_; ++k) dst[k] += g * piv[k];
      }
      pivots.push_back(c);
      ++r;
    }
    reduce_all();
    return pivots;
  }

  /// Writes rows back in elimination order.
  void commit() {
    std::vector<uint32_t> out(rows_ * cols_);
    for (size_t i = 0; i < rows_; ++i)
      std::copy_n(data_.data() + order_[i] * cols_, cols_, out.data() + i * cols_);
    data_.swap(out);
  }

 private:
  uint32_t* row(size_t i) { return data_.data() + order_[i] * cols_; }
  uint32_t& at(size_t i, size_t c) { return data_[order_[i] * cols_ + c]; }
  void reduce_all() {
    const uint32_t p = field_.p();
    for (auto& v : data_) v %= p;
  }

  std::vector<uint32_t>& data_;
  size_t rows_, cols_;
  PrimeField field_;
  uint64_t budget_;
  std::vector<size_t> order_;
};

}  // namespace

size_t dense_rank(std::vector<uint32_t>& data, size_t rows, size_t cols, uint32_t p) {
  if (rows == 0 || cols == 0) return 0;
  if (p == 2) {
    BitMatrix m(data, rows, cols);
    return eliminate_gf2(m, false).size();
  }
  LazyEliminator e(data, rows, cols, p);
  return e.run(false).size();
}

std::vector<size_t> dense_rref(std::vector<uint32_t>& data, size_t rows, size_t cols, uint32_t p) {
  if (rows == 0 || cols == 0) return {};
  if (p == 2) {
    BitMatrix m(data, rows, cols);
    auto pivots = eliminate_gf2(m, true);
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) data[i * cols + j] = m.get(i, j) ? 1u : 0u;
    return pivots;
  }
  LazyEliminator e(data, rows, cols, p);
  auto pivots = e.run(true);
  e.commit();
  return pivots;
}

}  // namespace detail

MatrixFp::MatrixFp(size_t rows, size_t cols, uint32_t p) : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {
  if (p < 2 || p > kMaxPrime || !is_prime(p))
    throw Error(ErrorCode::InvalidArgument, "unsupported characteristic " + std::to_string(p));
}

MatrixFp::MatrixFp(uint32_t p, const std::vector<std::vector<uint32_t>>& rows)
    : MatrixFp(rows.size(), rows.empty() ? 0 : rows.front().size(), p) {
  for (size_t i = 0; i < rows_; ++i) {
    if (rows[i].size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
    for (size_t j = 0; j < cols_; ++j) set(i, j, rows[i][j]);
  }
}

MatrixFp MatrixFp::identity(size_t n, uint32_t p) {
  MatrixFp m(n, n, p);
  for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void MatrixFp::set(size_t i, size_t j, uint32_t v) { data_[i * cols_ + j] = v % p_; }

Vec MatrixFp::apply(std::span<const uint32_t> v) const {
  if (v.size() != cols_) throw Error(ErrorCode::InvalidArgument, "dimension mismatch in matrix-vector product");
  Vec out(rows_, 0);
  for (size_t i = 0; i < rows_; ++i) {
    uint64_t acc = 0;
    for (size_t j = 0; j < cols_; ++j) acc = (acc + static_cast<uint64_t>(at(i, j)) * v[j]) % p_;
    out[i] = static_cast<uint32_t>(acc);
  }
  return out;
}

Rref rref(const MatrixFp& m) {
  std::vector<uint32_t> data(m.rows() * m.cols());
  for (size_t i = 0; i < m.rows(); ++i) std::copy(m.row(i).begin(), m.row(i).end(), data.begin() + i * m.cols());
  auto pivots = detail::dense_rref(data, m.rows(), m.cols(), m.p());
  MatrixFp out(m.rows(), m.cols(), m.p());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out.set(i, j, data[i * m.cols() + j]);
  return {std::move(out), std::move(pivots)};
}

size_t rank(const MatrixFp& m) {
  std::vector<uint32_t> data(m.rows() * m.cols());
  for (size_t i = 0; i < m.rows(); ++i) std::copy(m.row(i).begin(), m.row(i).end(), data.begin() + i * m.cols());
  return detail::dense_rank(data, m.rows(), m.cols(), m.p());
}

std::vector<Vec> kernel_basis(const MatrixFp& m) {
  const Rref r = rref(m);
  const PrimeField f(m.p());
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : r.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), 0);
    v[free] = 1;
    for (size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = f.neg(r.reduced.at(k, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vec> image_basis(const MatrixFp& m) {
  const Rref r = rref(m);
  std::vector<Vec> basis;
  for (size_t c : r.pivots) {
    Vec v(m.rows());
    for (size_t i = 0; i < m.rows(); ++i) v[i] = m.at(i, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

size_t quotient_dim(const std::vector<Vec>& big, const std::vector<Vec>& small, uint32_t p) {
  size_t dim = 0;
  if (!big.empty()) dim = big.front().size();
  else if (!small.empty()) dim = small.front().size();
  RowSpace space(dim, p);
  for (const auto& v : big) space.insert(v);
  const size_t big_rank = space.rank();
  RowSpace sub(dim, p);
  for (const auto& v : small) {
    if (!space.contains(v))
      throw Error(ErrorCode::ContainmentViolation, "subspace is not contained in the ambient span");
    sub.insert(v);
  }
  return big_rank - sub.rank();
}

}  // namespace frobrig::linalg
