#include <algorithm>
#include <functional>
#include <set>

#include "frobrig/errors.hpp"
#include "frobrig/ringkit.hpp"

namespace frobrig::ringkit {

namespace {

void validate(const RingPresentation& pres) {
  if (!linalg::is_prime(pres.p) || pres.p > linalg::kMaxPrime)
    throw Error(ErrorCode::InvalidArgument, "characteristic must be a prime <= " + std::to_string(linalg::kMaxPrime));
  if (pres.variables.empty()) throw Error(ErrorCode::InvalidArgument, "a ring needs at least one variable");
  std::set<std::string> names(pres.variables.begin(), pres.variables.end());
  if (names.size() != pres.variables.size()) throw Error(ErrorCode::InvalidArgument, "duplicate variable name");
  if (pres.cap < 2) throw Error(ErrorCode::CapTooSmall, "degree cap must be at least 2");
  for (const auto& f : pres.relations) {
    if (f.p() != pres.p || f.num_vars() != pres.variables.size())
      throw Error(ErrorCode::InvalidArgument, "relation does not belong to the presented polynomial ring");
    if (f.constant_term() != 0) throw Error(ErrorCode::ZeroRing, "relation with nonzero constant term gives the zero ring");
  }
}

}  // namespace

LocalAlgebra::LocalAlgebra(RingPresentation pres, std::vector<Polynomial> gb)
    : pres_(std::move(pres)), field_(pres_.p), gb_(std::move(gb)) {
  const size_t n = pres_.variables.size();
  for (const auto& g : gb_)
    if (total_degree(g.lead_exponents()) == 0) throw Error(ErrorCode::ZeroRing, "the relations generate the unit ideal");

  std::vector<bool> pure(n, false);
  for (const auto& g : gb_) {
    const auto& e = g.lead_exponents();
    size_t support = 0, var = 0;
    for (size_t i = 0; i < n; ++i)
      if (e[i] > 0) ++support, var = i;
    if (support == 1) pure[var] = true;
  }
  artinian_ = std::all_of(pure.begin(), pure.end(), [](bool b) { return b; });
  graded_ = std::all_of(gb_.begin(), gb_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });

  if (!artinian_) {
    int maxdeg = 0;
    for (const auto& f : pres_.relations) maxdeg = std::max(maxdeg, f.degree());
    if (pres_.cap <= maxdeg)
      throw Error(ErrorCode::CapTooSmall, "degree cap " + std::to_string(pres_.cap) +
                                              " must exceed the largest relation degree " + std::to_string(maxdeg));
  }
  enumerate_basis();
  build_tables();
}

AlgebraPtr LocalAlgebra::build(const RingPresentation& pres) {
  validate(pres);
  auto gb = reduced_groebner_basis(pres.relations);
  return AlgebraPtr(new LocalAlgebra(pres, std::move(gb)));
}

AlgebraPtr LocalAlgebra::with_cap(int cap) const {
  RingPresentation pres = pres_;
  pres.cap = cap;
  validate(pres);
  return AlgebraPtr(new LocalAlgebra(std::move(pres), gb_));
}

AlgebraPtr LocalAlgebra::quotient(const std::vector<Polynomial>& extra) const {
  RingPresentation pres = pres_;
  for (const auto& f : extra) pres.relations.push_back(f);
  return build(pres);
}

void LocalAlgebra::enumerate_basis() {
  const size_t n = num_vars();
  auto is_standard = [&](const Exponents& e) {
    return std::none_of(gb_.begin(), gb_.end(), [&](const Polynomial& g) { return divides(g.lead_exponents(), e); });
  };
  std::vector<Exponents> layer{Exponents(n, 0)};
  int degree = 0;
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end(), [](const Exponents& a, const Exponents& b) { return grevlex_greater(b, a); });
    for (auto& e : layer) {
      basis_.push_back(e);
      degrees_.push_back(degree);
      if (basis_.size() > kMaxBasisSize)
        throw Error(ErrorCode::InvalidArgument, "more than " + std::to_string(kMaxBasisSize) +
                                                    " standard monomials; lower the degree cap");
    }
    ++degree;
    if (!artinian_ && degree >= pres_.cap) break;
    std::set<Exponents> next;
    for (const auto& e : layer) {
      for (size_t v = 0; v < n; ++v) {
        Exponents f = e;
        ++f[v];
        if (is_standard(f)) next.insert(std::move(f));
      }
    }
    layer.assign(next.begin(), next.end());
  }
  for (size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

long LocalAlgebra::index_of(const Exponents& e) const {
  auto it = index_.find(e);
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

size_t LocalAlgebra::length() const {
  if (!artinian_) throw Error(ErrorCode::NotArtinian, "length is only defined for Artinian algebras");
  return basis_.size();
}

Coeffs LocalAlgebra::normal_form(const Polynomial& f, bool* truncated) const {
  if (f.p() != p() || f.num_vars() != num_vars())
    throw Error(ErrorCode::InvalidArgument, "polynomial does not belong to this algebra");
  Coeffs out(dim(), 0);
  bool dropped = false;
  const Polynomial r = reduce(f, gb_);
  for (const auto& [e, c] : r.terms()) {
    const long idx = index_of(e);
    if (idx < 0) {
      dropped = true;  // degree >= cap in a non-Artinian algebra
      continue;
    }
    out[static_cast<size_t>(idx)] = c;
  }
  if (truncated) *truncated = dropped;
  return out;
}

Polynomial LocalAlgebra::to_polynomial(std::span<const uint32_t> coeffs) const {
  Polynomial f(p(), num_vars());
  for (size_t i = 0; i < coeffs.size() && i < dim(); ++i)
    if (coeffs[i]) f.add_term(basis_[i], coeffs[i]);
  return f;
}

void LocalAlgebra::build_tables() {
  const size_t n = num_vars(), d = dim();
  var_products_.assign(n * d, {});
  for (size_t v = 0; v < n; ++v) {
    for (size_t i = 0; i < d; ++i) {
      Exponents e = basis_[i];
      ++e[v];
      linalg::SparseVec sv;
      const long idx = index_of(e);
      if (idx >= 0) {
        sv.emplace_back(static_cast<uint32_t>(idx), 1u);
      } else {
        const Coeffs c = normal_form(Polynomial::monomial(p(), e));
        for (size_t t = 0; t < d; ++t)
          if (c[t]) sv.emplace_back(static_cast<uint32_t>(t), c[t]);
      }
      var_products_[v * d + i] = std::move(sv);
    }
  }

  // Write each standard monomial as x_v * (smaller standard monomial) and
  // expand products along that chain.
  std::vector<std::pair<size_t, size_t>> chain(d, {0, 0});
  for (size_t i = 1; i < d; ++i) {
    for (size_t v = 0; v < n; ++v) {
      if (basis_[i][v] == 0) continue;
      Exponents e = basis_[i];
      --e[v];
      chain[i] = {v, static_cast<size_t>(index_of(e))};
      break;
    }
  }

  product_offsets_.assign(d * d + 1, 0);
  product_terms_.clear();
  Coeffs acc(d, 0);
  std::vector<uint32_t> touched;
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < d; ++j) {
      const size_t k = i * d + j;
      product_offsets_[k] = product_terms_.size();
      if (i == 0) {
        product_terms_.emplace_back(static_cast<uint32_t>(j), 1u);
        continue;
      }
      const auto [v, prev] = chain[i];
      for (const auto& [t, c] : product(prev, j)) {
        for (const auto& [u, w] : variable_product(v, t)) {
          if (acc[u] == 0) touched.push_back(u);
          acc[u] = field_.add(acc[u], field_.mul(c, w));
        }
      }
      std::sort(touched.begin(), touched.end());
      for (uint32_t u : touched) {
        if (acc[u]) product_terms_.emplace_back(u, acc[u]);
        acc[u] = 0;
      }
      touched.clear();
    }
    product_offsets_[(i + 1) * d] = product_terms_.size();
  }
  product_offsets_[d * d] = product_terms_.size();
}

void LocalAlgebra::multiply_add(std::span<const uint32_t> a, std::span<const uint32_t> b,
                                std::span<uint32_t> out) const {
  const size_t d = dim();
  std::vector<uint32_t> nz_b;
  for (size_t j = 0; j < d; ++j)
    if (b[j]) nz_b.push_back(static_cast<uint32_t>(j));
  if (nz_b.empty()) return;
  for (size_t i = 0; i < d; ++i) {
    if (!a[i]) continue;
    for (uint32_t j : nz_b) {
      const uint32_t ab = field_.mul(a[i], b[j]);
      for (const auto& [t, c] : product(i, j)) out[t] = field_.add(out[t], field_.mul(ab, c));
    }
  }
}

std::vector<linalg::SparseVec> LocalAlgebra::frobenius_table(int r) const {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "Frobenius exponent r must be >= 1");
  const size_t d = dim();
  std::vector<linalg::SparseVec> table(d);
  for (size_t s = 0; s < d; ++s) {
    Coeffs cur(d, 0);
    cur[s] = 1;
    for (int step = 0; step < r; ++step) {
      // cur <- cur^p by repeated squaring.
      Coeffs result(d, 0);
      result[0] = 1;
      Coeffs base = cur;
      for (uint32_t e = p(); e; e >>= 1) {
        if (e & 1) {
          Coeffs t(d, 0);
          multiply_add(result, base, t);
          result.swap(t);
        }
        if (e > 1) {
          Coeffs t(d, 0);
          multiply_add(base, base, t);
          base.swap(t);
        }
      }
      cur.swap(result);
      if (std::all_of(cur.begin(), cur.end(), [](uint32_t x) { return x == 0; })) break;
    }
    for (size_t t = 0; t < d; ++t)
      if (cur[t]) table[s].emplace_back(static_cast<uint32_t>(t), cur[t]);
  }
  return table;
}

bool LocalAlgebra::in_maximal_power(std::span<const uint32_t> coeffs, int s) const {
  if (s <= 0) return true;
  const size_t n = num_vars();
  std::vector<Polynomial> gens = gb_;
  // All monomials of total degree s.
  Exponents e(n, 0);
  std::function<void(size_t, int)> rec = [&](size_t v, int left) {
    if (v + 1 == n) {
      e[v] = left;
      gens.push_back(Polynomial::monomial(p(), e));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[v] = k;
      rec(v + 1, left - k);
    }
  };
  rec(0, s);
  const auto gb = reduced_groebner_basis(gens);
  return reduce(to_polynomial(coeffs), gb).is_zero();
}

int LocalAlgebra::nilpotency_index() const {
  if (!artinian_) throw Error(ErrorCode::NotArtinian, "nilpotency index needs an Artinian algebra");
  const size_t d = dim();
  // span of m^s, starting with s = 1.
  std::vector<Coeffs> gens;
  for (size_t v = 0; v < num_vars(); ++v)
    gens.push_back(normal_form(Polynomial::variable(p(), num_vars(), v)));
  for (int s = 1; s <= static_cast<int>(d) + 1; ++s) {
    linalg::RowSpace space(d, p());
    std::vector<Coeffs> basis;
    for (const auto& g : gens)
      if (space.insert(g)) basis.push_back(g);
    if (basis.empty()) return s;
    gens.clear();
    for (const auto& b : basis) {
      for (size_t v = 0; v < num_vars(); ++v) {
        Coeffs out(d, 0);
        for (size_t i = 0; i < d; ++i) {
          if (!b[i]) continue;
          for (const auto& [t, c] : variable_product(v, i)) out[t] = field_.add(out[t], field_.mul(b[i], c));
        }
        gens.push_back(std::move(out));
      }
    }
  }
  throw Error(ErrorCode::NotArtinian, "maximal ideal is not nilpotent (the quotient is not local)");
}

AlgebraPtr build_algebra(const RingPresentation& pres) { return LocalAlgebra::build(pres); }

size_t algebra_length(const LocalAlgebra& alg) { return alg.length(); }

}  // namespace frobrig::ringkit
