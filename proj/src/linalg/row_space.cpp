#include <algorithm>
#include <optional>

#include "dense.hpp"
#include "frobrig/errors.hpp"
#include "frobrig/linalg.hpp"

namespace frobrig::linalg {

// Echelon rows sorted by pivot column. Rows are normalized (pivot = 1) but not
// back-substituted, so a reduction must visit them in pivot order.
struct RowSpace::Impl {
  explicit Impl(size_t dim, uint32_t p) : dim(dim), field(p), words((dim + 63) / 64) {}

  size_t dim;
  PrimeField field;
  size_t words;
  std::vector<size_t> pivots;  // sorted
  std::vector<std::vector<uint64_t>> bit_rows;
  std::vector<Vec> rows;

  // Characteristic two.
  std::vector<uint64_t> pack(std::span<const uint32_t> v) const {
    std::vector<uint64_t> b(words, 0);
    for (size_t j = 0; j < v.size(); ++j)
      if (v[j] & 1u) b[j / 64] |= uint64_t{1} << (j % 64);
    return b;
  }
  void reduce_bits(std::vector<uint64_t>& b) const {
    for (size_t k = 0; k < pivots.size(); ++k) {
      const size_t c = pivots[k];
      if ((b[c / 64] >> (c % 64)) & 1u) {
        const auto& row = bit_rows[k];
        for (size_t w = c / 64; w < words; ++w) b[w] ^= row[w];
      }
    }
  }
  static std::optional<size_t> leading_bit(const std::vector<uint64_t>& b) {
    for (size_t w = 0; w < b.size(); ++w)
      if (b[w]) return w * 64 + static_cast<size_t>(__builtin_ctzll(b[w]));
    return std::nullopt;
  }

  // Odd characteristic.
  void reduce_vec(Vec& w) const {
    const uint32_t p = field.p();
    const uint64_t budget = detail::lazy_budget(p);
    uint64_t steps = 0;
    for (size_t k = 0; k < pivots.size(); ++k) {
      const size_t c = pivots[k];
      const uint32_t f = w[c] % p;
      if (!f) {
        w[c] = 0;
        continue;
      }
      if (++steps >= budget) {
        for (auto& x : w) x %= p;
        steps = 1;
      }
      const uint32_t g = p - f;
      const auto& row = rows[k];
      for (size_t j = c; j < dim; ++j) w[j] += g * row[j];
    }
    for (auto& x : w) x %= p;
  }

  size_t insert_position(size_t pivot) const {
    return static_cast<size_t>(std::lower_bound(pivots.begin(), pivots.end(), pivot) - pivots.begin());
  }
};

RowSpace::RowSpace(size_t dim, uint32_t p) : dim_(dim), impl_(new Impl(dim, p)) {}
RowSpace::~RowSpace() { delete impl_; }
RowSpace::RowSpace(RowSpace&& o) noexcept : dim_(o.dim_), impl_(o.impl_) { o.impl_ = nullptr; }
RowSpace& RowSpace::operator=(RowSpace&& o) noexcept {
  if (this != &o) {
    delete impl_;
    dim_ = o.dim_;
    impl_ = o.impl_;
    o.impl_ = nullptr;
  }
  return *this;
}

size_t RowSpace::rank() const noexcept { return impl_->pivots.size(); }

bool RowSpace::insert(std::span<const uint32_t> v) {
  if (v.size() != dim_) throw Error(ErrorCode::InvalidArgument, "RowSpace: dimension mismatch");
  Impl& m = *impl_;
  if (m.field.p() == 2) {
    auto b = m.pack(v);
    m.reduce_bits(b);
    auto lead = Impl::leading_bit(b);
    if (!lead) return false;
    const size_t pos = m.insert_position(*lead);
    m.pivots.insert(m.pivots.begin() + static_cast<std::ptrdiff_t>(pos), *lead);
    m.bit_rows.insert(m.bit_rows.begin() + static_cast<std::ptrdiff_t>(pos), std::move(b));
    return true;
  }
  Vec w(v.begin(), v.end());
  for (auto& x : w) x %= m.field.p();
  m.reduce_vec(w);
  size_t lead = 0;
  while (lead < dim_ && w[lead] == 0) ++lead;
  if (lead == dim_) return false;
  const uint32_t inv = m.field.inv(w[lead]);
  for (size_t j = lead; j < dim_; ++j) w[j] = m.field.mul(w[j], inv);
  const size_t pos = m.insert_position(lead);
  m.pivots.insert(m.pivots.begin() + static_cast<std::ptrdiff_t>(pos), lead);
  m.rows.insert(m.rows.begin() + static_cast<std::ptrdiff_t>(pos), std::move(w));
  return true;
}

bool RowSpace::contains(std::span<const uint32_t> v) const {
  if (v.size() != dim_) throw Error(ErrorCode::InvalidArgument, "RowSpace: dimension mismatch");
  const Impl& m = *impl_;
  if (m.field.p() == 2) {
    auto b = m.pack(v);
    m.reduce_bits(b);
    return !Impl::leading_bit(b).has_value();
  }
  Vec w(v.begin(), v.end());
  for (auto& x : w) x %= m.field.p();
  m.reduce_vec(w);
  return std::all_of(w.begin(), w.end(), [](uint32_t x) { return x == 0; });
}

}  // namespace frobrig::linalg
