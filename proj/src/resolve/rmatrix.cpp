#include <algorithm>
#include <deque>
#include <sstream>

#include "frobrig/errors.hpp"
#include "frobrig/resolve.hpp"

namespace frobrig::resolve {

RMatrix::RMatrix(AlgebraPtr alg, size_t rows, size_t cols)
    : alg_(std::move(alg)), rows_(rows), cols_(cols), dim_(alg_->dim()), data_(rows * cols * dim_, 0) {}

RMatrix RMatrix::identity(const AlgebraPtr& alg, size_t n) {
  RMatrix m(alg, n, n);
  for (size_t i = 0; i < n; ++i) m.entry(i, i)[0] = 1;
  return m;
}

RMatrix RMatrix::from_polynomials(const AlgebraPtr& alg, const std::vector<std::vector<ringkit::Polynomial>>& rows) {
  const size_t cols = rows.empty() ? 0 : rows.front().size();
  RMatrix m(alg, rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::InvalidArgument, "ragged relation matrix");
    for (size_t j = 0; j < cols; ++j) m.set(i, j, alg->normal_form(rows[i][j]));
  }
  return m;
}

std::span<const uint32_t> RMatrix::entry(size_t i, size_t j) const {
  return {data_.data() + (j * rows_ + i) * dim_, dim_};
}
std::span<uint32_t> RMatrix::entry(size_t i, size_t j) { return {data_.data() + (j * rows_ + i) * dim_, dim_}; }
std::span<const uint32_t> RMatrix::column(size_t j) const { return {data_.data() + j * rows_ * dim_, rows_ * dim_}; }
std::span<uint32_t> RMatrix::column(size_t j) { return {data_.data() + j * rows_ * dim_, rows_ * dim_}; }

RingElement RMatrix::element(size_t i, size_t j) const {
  auto e = entry(i, j);
  return RingElement(alg_, Coeffs(e.begin(), e.end()));
}

void RMatrix::set(size_t i, size_t j, const RingElement& e) {
  if (e.algebra() != alg_) throw Error(ErrorCode::InvalidArgument, "entry from a different algebra");
  set(i, j, e.coeffs());
}

void RMatrix::set(size_t i, size_t j, std::span<const uint32_t> coeffs) {
  if (coeffs.size() != dim_) throw Error(ErrorCode::InvalidArgument, "entry has wrong length");
  auto dst = entry(i, j);
  for (size_t t = 0; t < dim_; ++t) dst[t] = coeffs[t] % alg_->p();
}

bool RMatrix::entry_is_zero(size_t i, size_t j) const {
  auto e = entry(i, j);
  return std::all_of(e.begin(), e.end(), [](uint32_t c) { return c == 0; });
}

bool RMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](uint32_t c) { return c == 0; });
}

int RMatrix::max_degree() const {
  int d = -1;
  for (size_t k = 0; k < data_.size(); ++k)
    if (data_[k]) d = std::max(d, alg_->basis_degree(k % dim_));
  return d;
}

bool RMatrix::entries_in_maximal_ideal() const {
  for (size_t k = 0; k < data_.size(); k += dim_)
    if (data_[k]) return false;
  return true;
}

RMatrix RMatrix::operator*(const RMatrix& o) const {
  if (alg_ != o.alg_) throw Error(ErrorCode::InvalidArgument, "matrices over different algebras");
  if (cols_ != o.rows_) throw Error(ErrorCode::InvalidArgument, "matrix dimensions do not match");
  RMatrix out(alg_, rows_, o.cols_);
  for (size_t c = 0; c < o.cols_; ++c)
    for (size_t a = 0; a < cols_; ++a) {
      if (o.entry_is_zero(a, c)) continue;
      for (size_t i = 0; i < rows_; ++i) {
        if (entry_is_zero(i, a)) continue;
        alg_->multiply_add(entry(i, a), o.entry(a, c), out.entry(i, c));
      }
    }
  return out;
}

bool RMatrix::operator==(const RMatrix& o) const {
  return alg_ == o.alg_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

RMatrix RMatrix::select_columns(const std::vector<size_t>& cols) const {
  RMatrix out(alg_, rows_, cols.size());
  for (size_t k = 0; k < cols.size(); ++k) {
    auto src = column(cols.at(k));
    std::copy(src.begin(), src.end(), out.column(k).begin());
  }
  return out;
}

RMatrix RMatrix::without_row_and_column(size_t row, size_t col) const {
  RMatrix out(alg_, rows_ - 1, cols_ - 1);
  for (size_t j = 0, oj = 0; j < cols_; ++j) {
    if (j == col) continue;
    for (size_t i = 0, oi = 0; i < rows_; ++i) {
      if (i == row) continue;
      auto src = entry(i, j);
      std::copy(src.begin(), src.end(), out.entry(oi, oj).begin());
      ++oi;
    }
    ++oj;
  }
  return out;
}

RMatrix RMatrix::frobenius(const std::vector<linalg::SparseVec>& table) const {
  if (table.size() != dim_) throw Error(ErrorCode::InvalidArgument, "Frobenius table does not match the algebra");
  const auto& field = alg_->field();
  RMatrix out(alg_, rows_, cols_);
  for (size_t k = 0; k < data_.size(); k += dim_) {
    uint32_t* dst = out.data_.data() + k;
    for (size_t u = 0; u < dim_; ++u) {
      const uint32_t a = data_[k + u];
      if (!a) continue;
      for (const auto& [t, c] : table[u]) dst[t] = field.add(dst[t], field.mul(a, c));
    }
  }
  return out;
}

RMatrix RMatrix::with_algebra(const AlgebraPtr& alg) const {
  if (alg == alg_) return *this;
  if (alg->p() != alg_->p() || alg->num_vars() != alg_->num_vars())
    throw Error(ErrorCode::InvalidArgument, "target algebra has a different polynomial ring");
  RMatrix out(alg, rows_, cols_);
  if (alg->groebner_basis() == alg_->groebner_basis()) {
    std::vector<long> map(dim_);
    for (size_t t = 0; t < dim_; ++t) map[t] = alg->index_of(alg_->standard_monomials()[t]);
    for (size_t k = 0, o = 0; k < data_.size(); k += dim_, o += alg->dim())
      for (size_t t = 0; t < dim_; ++t)
        if (data_[k + t] && map[t] >= 0) out.data_[o + static_cast<size_t>(map[t])] = data_[k + t];
    return out;
  }
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) out.set(i, j, alg->normal_form(alg_->to_polynomial(entry(i, j))));
  return out;
}

RMatrix RMatrix::truncated(int degree) const {
  RMatrix out = *this;
  for (size_t k = 0; k < out.data_.size(); ++k)
    if (alg_->basis_degree(k % dim_) >= degree) out.data_[k] = 0;
  return out;
}

std::vector<std::vector<ringkit::Polynomial>> RMatrix::to_polynomials() const {
  std::vector<std::vector<ringkit::Polynomial>> rows(rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) rows[i].push_back(alg_->to_polynomial(entry(i, j)));
  return rows;
}

std::string RMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (size_t i = 0; i < rows_; ++i) {
    out << (i ? ", [" : "[");
    for (size_t j = 0; j < cols_; ++j)
      out << (j ? ", " : "") << alg_->to_polynomial(entry(i, j)).to_string(alg_->variables());
    out << ']';
  }
  out << ']';
  return out.str();
}

// ---------------------------------------------------------------------------

namespace {

struct Edge {
  size_t from, to;
  int delta;  // shift[to] = shift[from] + delta
};

// Propagates shifts along edges from seeded nodes, then from fresh zero seeds.
std::optional<std::vector<int>> solve_shifts(size_t nodes, const std::vector<Edge>& edges,
                                             const std::vector<std::optional<int>>& seeds) {
  std::vector<std::vector<std::pair<size_t, int>>> adj(nodes);
  for (const auto& e : edges) {
    adj[e.from].emplace_back(e.to, e.delta);
    adj[e.to].emplace_back(e.from, -e.delta);
  }
  std::vector<std::optional<int>> shift = seeds;
  std::deque<size_t> queue;
  for (size_t v = 0; v < nodes; ++v)
    if (shift[v]) queue.push_back(v);
  auto drain = [&]() -> bool {
    while (!queue.empty()) {
      const size_t v = queue.front();
      queue.pop_front();
      for (const auto& [w, d] : adj[v]) {
        const int want = *shift[v] + d;
        if (!shift[w]) {
          shift[w] = want;
          queue.push_back(w);
        } else if (*shift[w] != want) {
          return false;
        }
      }
    }
    return true;
  };
  if (!drain()) return std::nullopt;
  for (size_t v = 0; v < nodes; ++v) {
    if (shift[v]) continue;
    shift[v] = 0;
    queue.push_back(v);
    if (!drain()) return std::nullopt;
  }
  std::vector<int> out(nodes);
  for (size_t v = 0; v < nodes; ++v) out[v] = *shift[v];
  return out;
}

// Degree of a homogeneous entry, or nullopt if the entry is inhomogeneous.
std::optional<int> homogeneous_degree(const RMatrix& m, size_t i, size_t j) {
  auto e = m.entry(i, j);
  int deg = -1;
  for (size_t t = 0; t < e.size(); ++t) {
    if (!e[t]) continue;
    const int d = m.algebra()->basis_degree(t);
    if (deg < 0) deg = d;
    else if (deg != d) return std::nullopt;
  }
  return deg;
}

}  // namespace

std::optional<Grading> infer_grading(const RMatrix& m, const std::vector<int>* row_shifts, int weight) {
  if (!m.algebra()->graded()) return std::nullopt;
  const size_t g = m.rows(), h = m.cols();
  std::vector<Edge> edges;
  for (size_t j = 0; j < h; ++j)
    for (size_t i = 0; i < g; ++i) {
      auto d = homogeneous_degree(m, i, j);
      if (!d) return std::nullopt;
      if (*d >= 0) edges.push_back({i, g + j, weight * *d});
    }
  std::vector<std::optional<int>> seeds(g + h);
  if (row_shifts) {
    if (row_shifts->size() != g) throw Error(ErrorCode::InvalidArgument, "row shift count does not match");
    for (size_t i = 0; i < g; ++i) seeds[i] = (*row_shifts)[i];
  }
  auto sol = solve_shifts(g + h, edges, seeds);
  if (!sol) return std::nullopt;
  Grading out;
  out.rows.assign(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(g));
  out.cols.assign(sol->begin() + static_cast<std::ptrdiff_t>(g), sol->end());
  return out;
}

std::optional<std::vector<std::vector<int>>> infer_complex_shifts(const AlgebraPtr& alg, const std::vector<size_t>& ranks,
                                                                   const std::vector<RMatrix>& ds) {
  if (!alg->graded()) return std::nullopt;
  std::vector<size_t> offset(ranks.size() + 1, 0);
  for (size_t n = 0; n < ranks.size(); ++n) offset[n + 1] = offset[n] + ranks[n];
  std::vector<Edge> edges;
  for (size_t n = 1; n <= ds.size(); ++n) {
    const RMatrix& d = ds[n - 1];
    for (size_t j = 0; j < d.cols(); ++j)
      for (size_t i = 0; i < d.rows(); ++i) {
        auto deg = homogeneous_degree(d, i, j);
        if (!deg) return std::nullopt;
        if (*deg >= 0) edges.push_back({offset[n - 1] + i, offset[n] + j, *deg});
      }
  }
  auto sol = solve_shifts(offset.back(), edges, std::vector<std::optional<int>>(offset.back()));
  if (!sol) return std::nullopt;
  std::vector<std::vector<int>> shifts(ranks.size());
  for (size_t n = 0; n < ranks.size(); ++n)
    shifts[n].assign(sol->begin() + static_cast<std::ptrdiff_t>(offset[n]),
                     sol->begin() + static_cast<std::ptrdiff_t>(offset[n + 1]));
  return shifts;
}

}  // namespace frobrig::resolve
