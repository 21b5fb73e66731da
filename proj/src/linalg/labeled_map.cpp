#include <algorithm>
#include <map>
#include <optional>
#include <unordered_map>

#include "dense.hpp"
#include "frobrig/errors.hpp"
#include "frobrig/linalg.hpp"

namespace frobrig::linalg {

namespace {

// Columns grouped into blocks that share a label; rows are attached lazily by
// scanning the block's entries. Ungraded maps form a single block.
struct Block {
  int label = 0;
  std::vector<uint32_t> cols;
};

std::vector<Block> column_blocks(const LabeledMap& map, const std::vector<bool>& col_mask) {
  const bool graded = map.graded();
  std::map<int, Block> by_label;
  for (uint32_t c = 0; c < map.cols(); ++c) {
    if (!col_mask.empty() && !col_mask[c]) continue;
    const int label = graded ? map.col_label[c] : 0;
    auto& b = by_label[label];
    b.label = label;
    b.cols.push_back(c);
  }
  std::vector<Block> out;
  out.reserve(by_label.size());
  for (auto& [_, b] : by_label) out.push_back(std::move(b));
  return out;
}

// Dense rows x cols buffer of the block, keeping only rows that are touched
// and selected. `row_ids` receives the global row index of each dense row.
std::vector<uint32_t> densify(const LabeledMap& map, const Block& block, const std::vector<bool>& row_mask,
                              std::vector<uint32_t>& row_ids) {
  std::unordered_map<uint32_t, uint32_t> local;
  row_ids.clear();
  for (uint32_t c : block.cols)
    for (const auto& [r, v] : map.columns[c]) {
      if (!row_mask.empty() && !row_mask[r]) continue;
      if (v == 0) continue;
      if (local.emplace(r, static_cast<uint32_t>(row_ids.size())).second) row_ids.push_back(r);
    }
  const size_t nr = row_ids.size(), nc = block.cols.size();
  std::vector<uint32_t> data(nr * nc, 0);
  for (size_t j = 0; j < nc; ++j)
    for (const auto& [r, v] : map.columns[block.cols[j]]) {
      if (!row_mask.empty() && !row_mask[r]) continue;
      if (v == 0) continue;
      data[local.at(r) * nc + j] = v;
    }
  return data;
}

// Rank of the block by sparse elimination on its columns, pivoting on the
// smallest row index. Gives up (returns nullopt) once the stored pivots
// exceed `fill_limit` entries, leaving the block to the dense kernels.
std::optional<size_t> sparse_rank(const LabeledMap& map, const Block& block, const std::vector<bool>& row_mask,
                                  size_t fill_limit) {
  const PrimeField field(map.p);
  std::unordered_map<uint32_t, SparseVec> pivots;
  size_t stored = 0;
  SparseVec v, next;
  for (uint32_t c : block.cols) {
    v.clear();
    for (const auto& [r, x] : map.columns[c])
      if (x != 0 && (row_mask.empty() || row_mask[r])) v.emplace_back(r, x);
    while (!v.empty()) {
      const auto it = pivots.find(v.front().first);
      if (it == pivots.end()) break;
      // v -= v[lead] * pivot, merging two sorted sparse vectors.
      const uint32_t f = field.neg(v.front().second);
      const SparseVec& piv = it->second;
      next.clear();
      size_t a = 0, b = 0;
      while (a < v.size() || b < piv.size()) {
        if (b == piv.size() || (a < v.size() && v[a].first < piv[b].first)) {
          next.push_back(v[a++]);
        } else if (a == v.size() || piv[b].first < v[a].first) {
          next.emplace_back(piv[b].first, field.mul(f, piv[b].second));
          ++b;
        } else {
          const uint32_t x = field.add(v[a].second, field.mul(f, piv[b].second));
          if (x) next.emplace_back(v[a].first, x);
          ++a, ++b;
        }
      }
      v.swap(next);
    }
    if (v.empty()) continue;
    const uint32_t inv = field.inv(v.front().second);
    if (inv != 1)
      for (auto& [_, x] : v) x = field.mul(x, inv);
    stored += v.size();
    if (stored > fill_limit) return std::nullopt;
    pivots.emplace(v.front().first, v);
  }
  return pivots.size();
}

size_t block_rank(const LabeledMap& map, const Block& block, const std::vector<bool>& row_mask,
                  std::vector<uint32_t>& row_ids) {
  const size_t limit = std::max<size_t>(64, 8 * block.cols.size());
  if (auto r = sparse_rank(map, block, row_mask, limit)) return *r;
  auto data = densify(map, block, row_mask, row_ids);
  return detail::dense_rank(data, row_ids.size(), block.cols.size(), map.p);
}

}  // namespace

bool LabeledMap::graded() const {
  if (row_label.size() != rows || col_label.size() != columns.size()) return false;
  for (size_t c = 0; c < columns.size(); ++c)
    for (const auto& [r, v] : columns[c])
      if (v != 0 && row_label[r] != col_label[c]) return false;
  return true;
}

size_t rank(const LabeledMap& map, const std::vector<bool>& row_mask, const std::vector<bool>& col_mask) {
  size_t total = 0;
  std::vector<uint32_t> row_ids;
  for (const auto& block : column_blocks(map, col_mask)) total += block_rank(map, block, row_mask, row_ids);
  return total;
}

std::map<int, size_t> rank_by_label(const LabeledMap& map, const std::vector<bool>& row_mask,
                                    const std::vector<bool>& col_mask) {
  std::map<int, size_t> out;
  std::vector<uint32_t> row_ids;
  for (const auto& block : column_blocks(map, col_mask)) {
    const size_t r = block_rank(map, block, row_mask, row_ids);
    if (r) out[block.label] += r;
  }
  return out;
}

std::vector<KernelVector> kernel(const LabeledMap& map, const std::vector<bool>& col_mask) {
  const PrimeField field(map.p);
  std::vector<KernelVector> out;
  std::vector<uint32_t> row_ids;
  for (const auto& block : column_blocks(map, col_mask)) {
    const size_t nc = block.cols.size();
    auto data = densify(map, block, {}, row_ids);
    const size_t nr = row_ids.size();
    std::vector<size_t> pivots = detail::dense_rref(data, nr, nc, map.p);
    std::vector<bool> is_pivot(nc, false);
    for (size_t c : pivots) is_pivot[c] = true;
    for (size_t f = 0; f < nc; ++f) {
      if (is_pivot[f]) continue;
      KernelVector kv;
      kv.label = block.label;
      for (size_t k = 0; k < pivots.size() && pivots[k] < f; ++k) {
        const uint32_t e = data[k * nc + f];
        if (e) kv.vec.emplace_back(block.cols[pivots[k]], field.neg(e));
      }
      kv.vec.emplace_back(block.cols[f], 1u);
      std::sort(kv.vec.begin(), kv.vec.end());
      out.push_back(std::move(kv));
    }
  }
  return out;
}

std::vector<size_t> select_independent(size_t dim, uint32_t p, const std::vector<SparseVec>& base,
                                       const std::vector<SparseVec>& candidates, const std::vector<int>& base_labels,
                                       const std::vector<int>& candidate_labels) {
  const bool use_labels = base_labels.size() == base.size() && candidate_labels.size() == candidates.size();
  std::map<int, std::pair<std::vector<size_t>, std::vector<size_t>>> groups;  // label -> (base ids, cand ids)
  for (size_t i = 0; i < base.size(); ++i) groups[use_labels ? base_labels[i] : 0].first.push_back(i);
  for (size_t i = 0; i < candidates.size(); ++i) groups[use_labels ? candidate_labels[i] : 0].second.push_back(i);

  std::vector<size_t> kept;
  for (auto& [_, ids] : groups) {
    if (ids.second.empty()) continue;
    // Compress the coordinates that occur in this group.
    std::unordered_map<uint32_t, uint32_t> local;
    auto collect = [&](const SparseVec& v) {
      for (const auto& [i, x] : v) {
        if (i >= dim) throw Error(ErrorCode::InvalidArgument, "select_independent: index out of range");
        if (x) local.emplace(i, static_cast<uint32_t>(local.size()));
      }
    };
    for (size_t i : ids.first) collect(base[i]);
    for (size_t i : ids.second) collect(candidates[i]);
    const size_t ldim = local.size();
    RowSpace space(ldim, p);
    Vec dense(ldim);
    auto load = [&](const SparseVec& v) {
      std::fill(dense.begin(), dense.end(), 0u);
      for (const auto& [i, x] : v)
        if (x) dense[local.at(i)] = x % p;
    };
    for (size_t i : ids.first) {
      load(base[i]);
      space.insert(dense);
    }
    for (size_t i : ids.second) {
      load(candidates[i]);
      if (space.insert(dense)) kept.push_back(i);
    }
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace frobrig::linalg
