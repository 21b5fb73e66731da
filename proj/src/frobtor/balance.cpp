#include <algorithm>

#include "frobrig/errors.hpp"
#include "frobrig/frobtor.hpp"

namespace frobrig::frobtor {

using resolve::RMatrix;

bool BalanceReport::all_equal() const {
  return std::all_of(equal.begin(), equal.end(), [](bool b) { return b; });
}

namespace {

struct FrobeniusModule {
  ModulePresentation presentation;
  std::vector<int> shifts;  // deg b_k
  int weight;
};

linalg::SparseVec times(const ringkit::LocalAlgebra& A, const linalg::SparseVec& a, size_t u) {
  std::vector<uint32_t> acc(A.dim(), 0);
  for (const auto& [t, c] : a)
    for (const auto& [w, e] : A.product(t, u)) acc[w] = A.field().add(acc[w], A.field().mul(c, e));
  linalg::SparseVec out;
  for (size_t w = 0; w < acc.size(); ++w)
    if (acc[w]) out.emplace_back(static_cast<uint32_t>(w), acc[w]);
  return out;
}

// ^{phi^r}R as coker of a relation matrix: generators b_k are standard
// monomials spanning R / phi^r(m)R, relations generate the kernel of
// (k, s) -> s^{p^r} b_k.
FrobeniusModule present_frobenius_module(const ringkit::AlgebraPtr& alg, int r) {
  const auto& A = *alg;
  const size_t d = A.dim();
  const auto phi = A.frobenius_table(r);
  int q = 1;
  for (int i = 0; i < r; ++i) q *= static_cast<int>(A.p());

  std::vector<linalg::SparseVec> base, units(d);
  for (size_t v = 0; v < A.num_vars(); ++v) {
    linalg::SparseVec image;
    std::vector<uint32_t> acc(d, 0);
    for (const auto& [t, c] : A.variable_product(v, 0))
      for (const auto& [w, e] : phi[t]) acc[w] = A.field().add(acc[w], A.field().mul(c, e));
    for (size_t w = 0; w < d; ++w)
      if (acc[w]) image.emplace_back(static_cast<uint32_t>(w), acc[w]);
    if (image.empty()) continue;
    for (size_t u = 0; u < d; ++u) {
      auto prod = times(A, image, u);
      if (!prod.empty()) base.push_back(std::move(prod));
    }
  }
  for (size_t t = 0; t < d; ++t) units[t] = {{static_cast<uint32_t>(t), 1u}};
  const std::vector<size_t> gens = linalg::select_independent(d, A.p(), base, units);
  const size_t g = gens.size();

  linalg::LabeledMap E;
  E.rows = d;
  E.p = A.p();
  for (size_t t = 0; t < d; ++t) E.row_label.push_back(A.basis_degree(t));
  for (size_t k = 0; k < g; ++k)
    for (size_t s = 0; s < d; ++s) {
      E.columns.push_back(times(A, phi[s], gens[k]));
      E.col_label.push_back(A.basis_degree(gens[k]) + q * A.basis_degree(s));
    }
  std::vector<ringkit::Coeffs> kernel;
  for (const auto& kv : linalg::kernel(E)) {
    ringkit::Coeffs v(g * d, 0);
    for (const auto& [c, val] : kv.vec) v[c] = val;
    kernel.push_back(std::move(v));
  }
  const auto kept = resolve::minimal_generators(alg, g, kernel);
  RMatrix rel(alg, g, kept.size());
  for (size_t n = 0; n < kept.size(); ++n) {
    auto col = rel.column(n);
    std::copy(kernel[kept[n]].begin(), kernel[kept[n]].end(), col.begin());
  }
  std::vector<int> shifts;
  for (size_t k : gens) shifts.push_back(A.basis_degree(k));
  ModulePresentation P(rel, "phiR");
  if (P.generators() != g) throw Error(ErrorCode::InvalidArgument, "internal: Frobenius module presentation not minimal");
  return {std::move(P), std::move(shifts), q};
}

// d (x) I_m: entry ((a, k), (b, k)) = d[a, b].
RMatrix tensor_identity(const RMatrix& d, size_t m) {
  RMatrix out(d.algebra(), d.rows() * m, d.cols() * m);
  for (size_t b = 0; b < d.cols(); ++b)
    for (size_t a = 0; a < d.rows(); ++a) {
      if (d.entry_is_zero(a, b)) continue;
      for (size_t k = 0; k < m; ++k) out.set(a * m + k, b * m + k, d.entry(a, b));
    }
  return out;
}

// I_l (x) rel: entry ((b, k), (b, c)) = rel[k, c].
RMatrix identity_tensor(size_t l, const RMatrix& rel) {
  RMatrix out(rel.algebra(), l * rel.rows(), l * rel.cols());
  for (size_t b = 0; b < l; ++b)
    for (size_t c = 0; c < rel.cols(); ++c)
      for (size_t k = 0; k < rel.rows(); ++k)
        if (!rel.entry_is_zero(k, c)) out.set(b * rel.rows() + k, b * rel.cols() + c, rel.entry(k, c));
  return out;
}

std::vector<int> combined_shifts(const std::vector<int>& outer, const std::vector<int>& inner, int q) {
  std::vector<int> out;
  for (int a : outer)
    for (int b : inner) out.push_back(a + q * b);
  return out;
}

// Homology of F (x) M where F is a free complex and M = coker(rel).
class TensorHomology {
 public:
  TensorHomology(const FreeComplex& F, const ModulePresentation& M) : F_(F), M_(M) {
    if (F.graded()) {
      if (auto gr = resolve::infer_grading(M.relations())) {
        graded_ = true;
        m_rows_ = gr->rows;
        m_cols_ = gr->cols;
      }
    }
  }

  size_t at(size_t j) {
    const size_t m0 = M_.generators();
    const size_t nj = F_.ranks[j] * m0 * F_.algebra->dim();
    if (nj == 0) return 0;
    size_t h = nj;
    if (j >= 1) h -= rank_with_relations(j) - relations_rank(j - 1);
    if (j + 1 <= F_.length()) h -= rank_with_relations(j + 1);
    return h;
  }

 private:
  resolve::Expansion relations(size_t n) {
    const RMatrix U = identity_tensor(F_.ranks[n], M_.relations());
    if (!graded_) return resolve::expand(U);
    return resolve::expand(U, combined_shifts(F_.shifts[n], m_rows_, F_.weight),
                           combined_shifts(F_.shifts[n], m_cols_, F_.weight), F_.weight);
  }

  size_t relations_rank(size_t n) { return linalg::rank(relations(n).map); }

  // rank [D_n | U_{n-1}]
  size_t rank_with_relations(size_t n) {
    const size_t m0 = M_.generators();
    const RMatrix D = tensor_identity(F_.d(n), m0);
    resolve::Expansion e = graded_ ? resolve::expand(D, combined_shifts(F_.shifts[n - 1], m_rows_, F_.weight),
                                                     combined_shifts(F_.shifts[n], m_rows_, F_.weight), F_.weight)
                                   : resolve::expand(D);
    resolve::Expansion u = relations(n - 1);
    for (auto& c : u.map.columns) e.map.columns.push_back(std::move(c));
    for (int l : u.map.col_label) e.map.col_label.push_back(l);
    return linalg::rank(e.map);
  }

  const FreeComplex& F_;
  const ModulePresentation& M_;
  bool graded_ = false;
  std::vector<int> m_rows_, m_cols_;
};

}  // namespace

BalanceReport tor_balance_oracle(const ModulePresentation& M, int r, size_t N) {
  const auto& alg = M.algebra();
  if (!alg->artinian()) throw Error(ErrorCode::NotArtinian, "the balance oracle needs an Artinian ring");
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "twist exponent r must be at least 1");
  BalanceReport rep;
  for (const auto& row : tor_frobenius(M, r, N).rows) rep.frobenius_side.push_back(row.length);

  const FrobeniusModule P = present_frobenius_module(alg, r);
  const FreeComplex FP = resolve::minimal_free_resolution(P.presentation, N + 1, P.shifts, P.weight);
  TensorHomology H(FP, M);
  for (size_t j = 0; j <= N; ++j) {
    rep.module_side.push_back(H.at(j));
    const Length& f = rep.frobenius_side[j];
    rep.equal.push_back(f.is_finite() && f.value == rep.module_side.back());
  }
  return rep;
}

}  // namespace frobrig::frobtor
