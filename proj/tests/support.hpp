#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "frobrig/resolve.hpp"
#include "frobrig/ringkit.hpp"
#include "oracle.hpp"

namespace testing_support {

using frobrig::ringkit::AlgebraPtr;
using frobrig::ringkit::Polynomial;

inline std::string corpus_path(const std::string& name) { return std::string(FROBRIG_RINGS_DIR) + "/" + name; }

inline frobrig::ringkit::RingDocument load_document(const std::string& name) {
  std::ifstream in(corpus_path(name));
  std::stringstream buf;
  buf << in.rdbuf();
  return frobrig::ringkit::parse_document(buf.str());
}

inline AlgebraPtr load_algebra(const std::string& name) {
  return frobrig::ringkit::build_algebra(load_document(name).ring);
}

inline AlgebraPtr algebra(const std::string& text) {
  return frobrig::ringkit::build_algebra(frobrig::ringkit::parse_presentation(text));
}

inline oracle::MonomialRing::Elem to_oracle(const Polynomial& f) {
  oracle::MonomialRing::Elem e;
  for (const auto& [mono, c] : f.terms()) e[mono] = c;
  return e;
}

inline oracle::Complex to_oracle(const frobrig::resolve::FreeComplex& F) {
  oracle::Complex C;
  C.ranks = F.ranks;
  for (const auto& d : F.differentials) {
    std::vector<std::vector<oracle::MonomialRing::Elem>> rows;
    for (const auto& row : d.to_polynomials()) {
      rows.emplace_back();
      for (const auto& f : row) rows.back().push_back(to_oracle(f));
    }
    if (rows.empty() || rows.front().size() != d.cols()) rows.assign(d.rows(), std::vector<oracle::MonomialRing::Elem>(d.cols()));
    C.ds.push_back(std::move(rows));
  }
  return C;
}

// Oracle ring for an engine algebra whose Groebner basis consists of monomials.
inline oracle::MonomialRing monomial_oracle(const AlgebraPtr& A) {
  std::vector<oracle::Mono> gens;
  for (const auto& g : A->groebner_basis()) gens.push_back(g.lead_exponents());
  return oracle::MonomialRing(A->p(), A->num_vars(), gens);
}

// Small random polynomials for property tests.
class Gen {
 public:
  explicit Gen(uint64_t seed) : rng_(seed) {}

  int between(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Polynomial poly(uint32_t p, size_t n, int max_deg, int max_terms, bool allow_constant = true) {
    Polynomial f(p, n);
    const int terms = between(0, max_terms);
    for (int t = 0; t < terms; ++t) {
      std::vector<int> e(n, 0);
      const int d = between(allow_constant ? 0 : 1, max_deg);
      for (int k = 0; k < d && n > 0; ++k) ++e[static_cast<size_t>(between(0, static_cast<int>(n) - 1))];
      f = f + Polynomial::monomial(p, e, static_cast<uint32_t>(between(1, static_cast<int>(p) - 1)));
    }
    return f;
  }

  // g x h matrix with entries in the maximal ideal.
  std::vector<std::vector<Polynomial>> matrix(uint32_t p, size_t n, size_t g, size_t h, int max_deg = 2) {
    std::vector<std::vector<Polynomial>> rows(g);
    for (auto& row : rows)
      for (size_t c = 0; c < h; ++c) row.push_back(poly(p, n, max_deg, 2, false));
    return rows;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace testing_support
