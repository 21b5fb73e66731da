#pragma once

// Naive reference computations used only by the tests. Nothing here calls
// into the engine: rings are quotients by monomial ideals, elements are
// dense coefficient maps over the surviving monomials, and ranks come from
// plain Gaussian elimination on int64 matrices.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using Mono = std::vector<int>;

inline int64_t mod(int64_t a, int64_t p) { return ((a % p) + p) % p; }

inline int64_t inverse(int64_t a, int64_t p) {
  int64_t r = 1, e = p - 2;
  a = mod(a, p);
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

using Matrix = std::vector<std::vector<int64_t>>;

inline size_t rank(Matrix m, int64_t p) {
  size_t r = 0;
  const size_t cols = m.empty() ? 0 : m[0].size();
  for (size_t c = 0; c < cols && r < m.size(); ++c) {
    size_t piv = r;
    while (piv < m.size() && mod(m[piv][c], p) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    const int64_t inv = inverse(m[r][c], p);
    for (auto& v : m[r]) v = mod(v * inv, p);
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r || mod(m[i][c], p) == 0) continue;
      const int64_t f = mod(m[i][c], p);
      for (size_t k = 0; k < cols; ++k) m[i][k] = mod(m[i][k] - f * m[r][k], p);
    }
    ++r;
  }
  return r;
}

// F_p[x_1..x_n] / (monomials); the ideal must contain a power of every
// variable.
class MonomialRing {
 public:
  MonomialRing(int64_t p, size_t n, std::vector<Mono> gens) : p_(p), n_(n), gens_(std::move(gens)) {
    Mono e(n, 0);
    enumerate(e, 0);
    for (size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
  }

  int64_t p() const { return p_; }
  size_t dim() const { return basis_.size(); }
  const std::vector<Mono>& basis() const { return basis_; }

  using Elem = std::map<Mono, int64_t>;

  bool killed(const Mono& m) const {
    for (const auto& g : gens_) {
      bool div = true;
      for (size_t v = 0; v < n_; ++v) div = div && g[v] <= m[v];
      if (div) return true;
    }
    return false;
  }

  Elem mul(const Elem& a, const Elem& b) const {
    Elem out;
    for (const auto& [ma, ca] : a)
      for (const auto& [mb, cb] : b) {
        Mono m(n_);
        for (size_t v = 0; v < n_; ++v) m[v] = ma[v] + mb[v];
        if (killed(m)) continue;
        out[m] = mod(out[m] + ca * cb, p_);
      }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
  }

  Elem power(const Elem& a, int64_t e) const {
    Elem r{{Mono(n_, 0), 1}};
    for (int64_t i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }

  // Dense F_p matrix of the R-linear map R^cols -> R^rows given by `entries`
  // (rows x cols), column (c, s) = image of basis_s e_c.
  Matrix expand(const std::vector<std::vector<Elem>>& entries, size_t rows, size_t cols) const {
    Matrix m(rows * dim(), std::vector<int64_t>(cols * dim(), 0));
    for (size_t i = 0; i < rows; ++i)
      for (size_t c = 0; c < cols; ++c)
        for (size_t s = 0; s < dim(); ++s) {
          const Elem img = mul(entries[i][c], Elem{{basis_[s], 1}});
          for (const auto& [mono, coef] : img) m[i * dim() + index_.at(mono)][c * dim() + s] = coef;
        }
    return m;
  }

 private:
  void enumerate(Mono& e, size_t v) {
    if (v == n_) {
      if (!killed(e)) basis_.push_back(e);
      return;
    }
    for (int k = 0;; ++k) {
      e[v] = k;
      Mono probe(n_, 0);
      probe[v] = k;
      if (killed(probe)) break;
      enumerate(e, v + 1);
    }
    e[v] = 0;
  }

  int64_t p_;
  size_t n_;
  std::vector<Mono> gens_;
  std::vector<Mono> basis_;
  std::map<Mono, size_t> index_;
};

// A complex F_0 <- F_1 <- ... given by its differentials; ds[n-1] = d_n is
// ranks[n-1] x ranks[n].
struct Complex {
  std::vector<size_t> ranks;
  std::vector<std::vector<std::vector<MonomialRing::Elem>>> ds;
};

// dim_k H_j, with d_0 = 0 and d_{len+1} = 0.
inline size_t homology(const MonomialRing& R, const Complex& C, size_t j) {
  const size_t len = C.ranks.size() - 1;
  const size_t n = C.ranks[j] * R.dim();
  size_t rank_out = 0, rank_in = 0;
  if (j >= 1 && C.ranks[j] && C.ranks[j - 1])
    rank_out = rank(R.expand(C.ds[j - 1], C.ranks[j - 1], C.ranks[j]), R.p());
  if (j < len && C.ranks[j] && C.ranks[j + 1]) rank_in = rank(R.expand(C.ds[j], C.ranks[j], C.ranks[j + 1]), R.p());
  return n - rank_out - rank_in;
}

inline Complex twisted(const MonomialRing& R, Complex C, int r) {
  int64_t q = 1;
  for (int i = 0; i < r; ++i) q *= R.p();
  for (auto& d : C.ds)
    for (auto& row : d)
      for (auto& e : row) e = R.power(e, q);
  return C;
}

// Betti numbers of k over F_p[x_1..x_n]/m^2: n^j.
inline size_t betti_of_k_square_zero(size_t n, size_t j) {
  size_t b = 1;
  for (size_t i = 0; i < j; ++i) b *= n;
  return b;
}

}  // namespace oracle
