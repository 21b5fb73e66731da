#include <algorithm>

#include "frobrig/errors.hpp"
#include "frobrig/resolve.hpp"

namespace frobrig::resolve {

int wide_cap(int cap) { return std::max(2 * cap - 2, cap + 1); }

Expansion expand(const RMatrix& m, const std::vector<int>& row_shifts, const std::vector<int>& col_shifts,
                 int weight) {
  const auto& alg = *m.algebra();
  const auto& field = alg.field();
  const size_t d = alg.dim(), g = m.rows(), h = m.cols();
  Expansion e;
  e.dim = d;
  e.map.rows = g * d;
  e.map.p = alg.p();
  e.position.assign(h * d, 0);
  e.map.columns.reserve(h * d);
  const bool labeled = row_shifts.size() == g && col_shifts.size() == h;
  if (labeled) {
    e.map.row_label.resize(g * d);
    for (size_t i = 0; i < g; ++i)
      for (size_t t = 0; t < d; ++t) e.map.row_label[i * d + t] = row_shifts[i] + weight * alg.basis_degree(t);
  }

  std::vector<linalg::SparseVec> support(g * h);
  for (size_t i = 0; i < g; ++i)
    for (size_t j = 0; j < h; ++j) {
      auto a = m.entry(i, j);
      for (size_t u = 0; u < d; ++u)
        if (a[u]) support[j * g + i].emplace_back(static_cast<uint32_t>(u), a[u]);
    }

  std::vector<uint32_t> acc(g * d, 0);
  std::vector<uint32_t> touched;
  // Basis indices are sorted by degree, so walking degree layers in order and
  // generators inside each layer realizes the (deg s, j, s) ordering.
  size_t layer_start = 0;
  while (layer_start < d) {
    size_t layer_end = layer_start;
    while (layer_end < d && alg.basis_degree(layer_end) == alg.basis_degree(layer_start)) ++layer_end;
    for (size_t j = 0; j < h; ++j) {
      for (size_t s = layer_start; s < layer_end; ++s) {
        for (size_t i = 0; i < g; ++i)
          for (const auto& [u, au] : support[j * g + i])
            for (const auto& [t, c] : alg.product(u, s)) {
              const size_t row = i * d + t;
              if (!acc[row]) touched.push_back(static_cast<uint32_t>(row));
              acc[row] = field.add(acc[row], field.mul(au, c));
            }
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        linalg::SparseVec col;
        for (uint32_t row : touched) {
          if (acc[row]) col.emplace_back(row, acc[row]);
          acc[row] = 0;
        }
        touched.clear();
        e.position[j * d + s] = static_cast<uint32_t>(e.map.columns.size());
        e.col_generator.push_back(static_cast<uint32_t>(j));
        e.col_basis.push_back(static_cast<uint32_t>(s));
        if (labeled) e.map.col_label.push_back(col_shifts[j] + weight * alg.basis_degree(s));
        e.map.columns.push_back(std::move(col));
      }
    }
    layer_start = layer_end;
  }
  return e;
}

std::vector<bool> trusted_columns(const RMatrix& m, const Expansion& e) {
  const auto& alg = *m.algebra();
  std::vector<bool> mask(e.map.cols(), true);
  if (alg.artinian()) return mask;
  const int maxdeg = std::max(m.max_degree(), 0);
  for (size_t c = 0; c < mask.size(); ++c) mask[c] = alg.basis_degree(e.col_basis[c]) + maxdeg < alg.cap();
  return mask;
}

std::vector<size_t> minimal_generators(const AlgebraPtr& alg, size_t g, const std::vector<Coeffs>& vectors) {
  const size_t d = alg->dim();
  const auto& field = alg->field();
  auto sparse = [](const Coeffs& v) {
    linalg::SparseVec out;
    for (size_t k = 0; k < v.size(); ++k)
      if (v[k]) out.emplace_back(static_cast<uint32_t>(k), v[k]);
    return out;
  };
  std::vector<linalg::SparseVec> candidates, base;
  for (const auto& v : vectors) {
    if (v.size() != g * d) throw Error(ErrorCode::InvalidArgument, "vector has wrong length");
    candidates.push_back(sparse(v));
    // m * N is spanned by s * v for the standard monomials s != 1.
    for (size_t s = 1; s < d; ++s) {
      Coeffs w(g * d, 0);
      for (size_t i = 0; i < g; ++i)
        for (size_t u = 0; u < d; ++u) {
          const uint32_t a = v[i * d + u];
          if (!a) continue;
          for (const auto& [t, c] : alg->product(u, s)) w[i * d + t] = field.add(w[i * d + t], field.mul(a, c));
        }
      auto sw = sparse(w);
      if (!sw.empty()) base.push_back(std::move(sw));
    }
  }
  return linalg::select_independent(g * d, alg->p(), base, candidates);
}

Syzygy syzygy_at_cap(const RMatrix& m, const std::vector<int>& row_shifts, const std::vector<int>& col_shifts,
                     int weight) {
  const AlgebraPtr& alg = m.algebra();
  const size_t d = alg->dim();
  const auto& field = alg->field();

  std::vector<int> rs = row_shifts, cs = col_shifts;
  if (rs.size() != m.rows() || cs.size() != m.cols()) {
    rs.clear();
    cs.clear();
    if (auto gr = infer_grading(m, nullptr, weight)) {
      rs = gr->rows;
      cs = gr->cols;
    }
  }
  Expansion e = expand(m, rs, cs, weight);
  bool graded = !rs.empty() && e.map.graded();
  if (!graded) {
    e.map.row_label.clear();
    e.map.col_label.clear();
  }
  const std::vector<bool> mask = trusted_columns(m, e);
  const std::vector<linalg::KernelVector> K = linalg::kernel(e.map, mask);

  // Kernel elements are determined by their values at the free columns.
  std::vector<long> free_index(e.map.cols(), -1);
  for (size_t k = 0; k < K.size(); ++k) free_index[K[k].vec.back().first] = static_cast<long>(k);

  std::vector<linalg::SparseVec> base;
  std::vector<int> base_labels;
  std::vector<uint32_t> acc(e.map.cols(), 0);
  std::vector<uint32_t> touched;
  for (const auto& kv : K) {
    for (size_t v = 0; v < alg->num_vars(); ++v) {
      for (const auto& [c, val] : kv.vec) {
        const size_t j = e.col_generator[c], s = e.col_basis[c];
        for (const auto& [u, w] : alg->variable_product(v, s)) {
          const uint32_t col = e.column_of(j * d + u);
          if (!acc[col]) touched.push_back(col);
          acc[col] = field.add(acc[col], field.mul(val, w));
        }
      }
      bool inside = true;
      linalg::SparseVec proj;
      std::sort(touched.begin(), touched.end());
      touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
      for (uint32_t col : touched) {
        if (acc[col]) {
          if (!mask[col]) inside = false;
          if (free_index[col] >= 0) proj.emplace_back(static_cast<uint32_t>(free_index[col]), acc[col]);
        }
        acc[col] = 0;
      }
      touched.clear();
      if (!inside || proj.empty()) continue;
      base.push_back(std::move(proj));
      base_labels.push_back(kv.label + weight);
    }
  }
  std::vector<linalg::SparseVec> candidates(K.size());
  std::vector<int> cand_labels(K.size());
  for (size_t k = 0; k < K.size(); ++k) {
    candidates[k] = {{static_cast<uint32_t>(k), 1u}};
    cand_labels[k] = K[k].label;
  }
  const auto kept = graded ? linalg::select_independent(K.size(), alg->p(), base, candidates, base_labels, cand_labels)
                           : linalg::select_independent(K.size(), alg->p(), base, candidates);

  Syzygy out{RMatrix(alg, m.cols(), kept.size()), {}};
  for (size_t n = 0; n < kept.size(); ++n) {
    auto col = out.matrix.column(n);
    for (const auto& [c, val] : K[kept[n]].vec) col[e.col_generator[c] * d + e.col_basis[c]] = val;
    if (graded) out.shifts.push_back(K[kept[n]].label);
  }
  return out;
}

namespace {

// Entries agree on all basis monomials of degree < cap (the smaller algebra's
// whole basis).
bool agree_below_cap(const RMatrix& small, const RMatrix& wide) {
  if (small.rows() != wide.rows() || small.cols() != wide.cols()) return false;
  const auto& sa = *small.algebra();
  const auto& wa = *wide.algebra();
  for (size_t t = 0; t < sa.dim(); ++t)
    if (wa.index_of(sa.standard_monomials()[t]) != static_cast<long>(t)) return false;
  for (size_t j = 0; j < small.cols(); ++j)
    for (size_t i = 0; i < small.rows(); ++i) {
      auto a = small.entry(i, j);
      auto b = wide.entry(i, j);
      if (!std::equal(a.begin(), a.end(), b.begin())) return false;
    }
  return true;
}

}  // namespace

RMatrix syzygy(const RMatrix& m) {
  Syzygy s = syzygy_at_cap(m);
  if (m.algebra()->artinian()) return s.matrix;
  const AlgebraPtr wide = m.algebra()->with_cap(wide_cap(m.algebra()->cap()));
  Syzygy w = syzygy_at_cap(m.with_algebra(wide));
  if (!agree_below_cap(s.matrix, w.matrix))
    throw Error(ErrorCode::CapUnstable, "syzygy changes between caps " + std::to_string(m.algebra()->cap()) + " and " +
                                            std::to_string(wide->cap()) + "; raise the degree cap");
  return s.matrix;
}

}  // namespace frobrig::resolve
