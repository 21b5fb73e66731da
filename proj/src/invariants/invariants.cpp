#include "frobrig/invariants.hpp"

#include <algorithm>
#include <functional>

#include "frobrig/errors.hpp"
#include "frobrig/resolve.hpp"

namespace frobrig::invariants {

namespace {

using resolve::RMatrix;

std::vector<Coeffs> echelon(std::vector<Coeffs> vecs, size_t dim, uint32_t p) {
  if (vecs.empty()) return {};
  linalg::MatrixFp m(p, vecs);
  const linalg::Rref r = linalg::rref(m);
  std::vector<Coeffs> out;
  for (size_t i = 0; i < r.rank(); ++i) {
    auto row = r.reduced.row(i);
    out.emplace_back(row.begin(), row.begin() + static_cast<long>(dim));
  }
  return out;
}

// Kernel of x -> (x g_1, ..., x g_k) over the columns where every product is
// exact at the algebra's cap, as a canonical echelon basis.
std::vector<Coeffs> annihilator_at_cap(const AlgebraPtr& A, const std::vector<Polynomial>& gens) {
  const size_t d = A->dim();
  if (gens.empty()) {
    std::vector<Coeffs> all(d, Coeffs(d, 0));
    for (size_t i = 0; i < d; ++i) all[i][i] = 1;
    return all;
  }
  std::vector<std::vector<Polynomial>> rows;
  for (const auto& g : gens) rows.push_back({g});
  const RMatrix m = RMatrix::from_polynomials(A, rows);
  resolve::Expansion e;
  if (auto gr = resolve::infer_grading(m))
    e = resolve::expand(m, gr->rows, gr->cols);
  else
    e = resolve::expand(m);
  if (!e.map.graded()) {
    e.map.row_label.clear();
    e.map.col_label.clear();
  }
  const auto mask = resolve::trusted_columns(m, e);
  std::vector<Coeffs> vecs;
  for (const auto& kv : linalg::kernel(e.map, mask)) {
    Coeffs v(d, 0);
    for (const auto& [c, val] : kv.vec) v[e.col_basis[c]] = val;
    vecs.push_back(std::move(v));
  }
  return echelon(std::move(vecs), d, A->p());
}

// The wide-cap answer must live below the small cap and coincide with the
// small-cap answer.
template <typename F>
std::vector<Coeffs> stabilized(const AlgebraPtr& A, const char* what, F compute) {
  std::vector<Coeffs> small = compute(A);
  if (A->artinian()) return small;
  const AlgebraPtr W = A->with_cap(resolve::wide_cap(A->cap()));
  const std::vector<Coeffs> wide = compute(W);
  auto unstable = [&] {
    throw Error(ErrorCode::CapUnstable, std::string(what) + " changes between caps " + std::to_string(A->cap()) +
                                            " and " + std::to_string(W->cap()) + "; raise the degree cap");
  };
  if (wide.size() != small.size()) unstable();
  const size_t d = A->dim();
  for (size_t i = 0; i < wide.size(); ++i) {
    if (std::any_of(wide[i].begin() + static_cast<long>(d), wide[i].end(), [](uint32_t c) { return c != 0; }))
      unstable();
    if (!std::equal(small[i].begin(), small[i].end(), wide[i].begin())) unstable();
  }
  return small;
}

Polynomial linear_form(uint32_t p, const std::vector<uint32_t>& coeffs) {
  Polynomial f(p, coeffs.size());
  for (size_t v = 0; v < coeffs.size(); ++v)
    if (coeffs[v]) f = f + Polynomial::variable(p, coeffs.size(), v).scaled(coeffs[v]);
  return f;
}

// Linear forms with leading coefficient 1, by weight, then support, then
// coefficients. At most `limit` of them.
std::vector<Polynomial> linear_candidates(uint32_t p, size_t n, size_t limit) {
  std::vector<Polynomial> out;
  for (size_t w = 1; w <= n && out.size() < limit; ++w) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(w), true);
    do {
      std::vector<size_t> support;
      for (size_t v = 0; v < n; ++v)
        if (pick[v]) support.push_back(v);
      std::vector<uint32_t> tail(w - 1, 1);
      for (;;) {
        std::vector<uint32_t> coeffs(n, 0);
        coeffs[support[0]] = 1;
        for (size_t k = 1; k < w; ++k) coeffs[support[k]] = tail[k - 1];
        out.push_back(linear_form(p, coeffs));
        if (out.size() >= limit) return out;
        size_t k = tail.size();
        while (k > 0 && tail[k - 1] == p - 1) tail[--k] = 1;
        if (k == 0) break;
        ++tail[k - 1];
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return out;
}

constexpr size_t kCandidateLimit = 256;

}  // namespace

std::vector<Coeffs> colon_into_zero(const AlgebraPtr& A, const std::vector<Polynomial>& J) {
  return stabilized(A, "colon ideal", [&](const AlgebraPtr& B) { return annihilator_at_cap(B, J); });
}

std::vector<Polynomial> maximal_ideal_power(const AlgebraPtr& A, int s) {
  const size_t n = A->num_vars();
  std::vector<Polynomial> out;
  if (s <= 0) return {Polynomial::constant(A->p(), n, 1)};
  // Degree-s monomials in n variables by stars and bars.
  ringkit::Exponents e(n, 0);
  std::function<void(size_t, int)> rec = [&](size_t v, int left) {
    if (v + 1 == n) {
      e[v] = left;
      Polynomial f = A->to_polynomial(A->normal_form(Polynomial::monomial(A->p(), e)));
      if (!f.is_zero()) out.push_back(std::move(f));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[v] = k;
      rec(v + 1, left - k);
    }
  };
  rec(0, s);
  return out;
}

std::vector<Coeffs> socle(const AlgebraPtr& A) { return colon_into_zero(A, maximal_ideal_power(A, 1)); }

bool is_field(const AlgebraPtr& A) { return A->artinian() && A->dim() == 1; }

bool condition1(const AlgebraPtr& A) {
  if (is_field(A)) return false;
  const int p = static_cast<int>(A->p());
  for (const auto& v : colon_into_zero(A, maximal_ideal_power(A, p)))
    if (!A->in_maximal_power(v, p)) return true;
  return false;
}

int c_invariant(const AlgebraPtr& A) {
  const auto soc = socle(A);
  if (soc.empty()) throw Error(ErrorCode::PositiveDepth, "the socle is zero, so the ring has positive depth");
  for (int s = 1;; ++s)
    for (const auto& v : soc)
      if (!A->in_maximal_power(v, s)) return s;
}

bool is_regular(const AlgebraPtr& A, const Polynomial& y) {
  if (A->normal_form(y)[0] != 0) throw Error(ErrorCode::InvalidArgument, "a regular element must lie in m");
  try {
    return stabilized(A, "multiplication kernel", [&](const AlgebraPtr& B) { return annihilator_at_cap(B, {y}); })
        .empty();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CapUnstable) throw;
    // A kernel that keeps growing with the cap is certainly nonzero.
    return false;
  }
}

std::vector<Polynomial> find_regular_sequence(const AlgebraPtr& A, size_t d_max) {
  std::vector<Polynomial> seq;
  AlgebraPtr cur = A;
  const auto candidates = linear_candidates(A->p(), A->num_vars(), kCandidateLimit);
  while (seq.size() < d_max && !cur->artinian()) {
    bool extended = false;
    for (const auto& y : candidates) {
      if (cur->normal_form(y) == Coeffs(cur->dim(), 0)) continue;
      if (!is_regular(cur, y)) continue;
      seq.push_back(y);
      cur = cur->quotient({y});
      extended = true;
      break;
    }
    if (!extended) break;
  }
  return seq;
}

std::vector<Polynomial> find_regular_sequence(const AlgebraPtr& A) { return find_regular_sequence(A, A->num_vars()); }

AlgebraPtr reduce_regular(const AlgebraPtr& A, const std::vector<Polynomial>& ys) {
  AlgebraPtr cur = A;
  for (size_t i = 0; i < ys.size(); ++i) {
    if (!is_regular(cur, ys[i]))
      throw Error(ErrorCode::NotRegular, "element " + std::to_string(i + 1) + " of the sequence is not regular");
    cur = cur->quotient({ys[i]});
  }
  return cur;
}

int min_r_threshold(int c, uint32_t p) {
  if (c < 1) throw Error(ErrorCode::InvalidArgument, "c must be positive");
  int r = 1;
  uint64_t q = p;
  while (q <= static_cast<uint64_t>(c)) {
    q *= p;
    ++r;
  }
  return r;
}

InvariantReport invariant_report(const AlgebraPtr& A) {
  InvariantReport rep;
  rep.ring = ringkit::print_presentation(A->presentation());
  rep.variables = A->variables();
  rep.p = A->p();
  rep.cap = A->cap();
  rep.artinian = A->artinian();
  rep.graded = A->graded();
  rep.field = is_field(A);
  if (rep.artinian) {
    rep.length = A->length();
    rep.nilpotency = A->nilpotency_index();
  }
  rep.condition1 = condition1(A);
  if (rep.field) rep.notes.push_back("regular ring: the socle condition is reported false");
  if (!rep.graded) rep.notes.push_back("local semantics approximate: relations are not homogeneous");

  rep.regular_sequence = find_regular_sequence(A);
  rep.depth = rep.regular_sequence.size();
  if (!rep.artinian) {
    rep.depth_at_cap = true;
    rep.notes.push_back("depth at cap " + std::to_string(A->cap()) + ", linear candidates only");
  }
  if (rep.depth == 0) {
    rep.socle_dim = socle(A).size();
    rep.c = c_invariant(A);
    rep.r_threshold = min_r_threshold(*rep.c, rep.p);
  } else {
    const AlgebraPtr bar = reduce_regular(A, rep.regular_sequence);
    rep.socle_dim = socle(bar).size();
    if (rep.socle_dim > 0) {
      rep.c_y = c_invariant(bar);
      rep.r_threshold = min_r_threshold(*rep.c_y, rep.p);
    } else {
      rep.notes.push_back("quotient by the regular sequence still has positive depth; c_y not computed");
    }
  }
  return rep;
}

}  // namespace frobrig::invariants
