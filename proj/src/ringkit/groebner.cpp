#include <algorithm>
#include <utility>

#include "frobrig/ringkit.hpp"

namespace frobrig::ringkit {

namespace {

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents m(a.size());
  for (size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

Exponents quotient(const Exponents& a, const Exponents& b) {
  Exponents q(a.size());
  for (size_t i = 0; i < a.size(); ++i) q[i] = a[i] - b[i];
  return q;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Exponents l = lcm(f.lead_exponents(), g.lead_exponents());
  const linalg::PrimeField field(f.p());
  const uint32_t cf = field.inv(f.lead_coefficient());
  const uint32_t cg = field.inv(g.lead_coefficient());
  return f.times_monomial(quotient(l, f.lead_exponents()), cf) -
         g.times_monomial(quotient(l, g.lead_exponents()), cg);
}

}  // namespace

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis) {
  const linalg::PrimeField field(f.p());
  Polynomial remainder(f.p(), f.num_vars());
  Polynomial h = f;
  while (!h.is_zero()) {
    const Exponents lead = h.lead_exponents();
    const uint32_t lc = h.lead_coefficient();
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero() || !divides(g.lead_exponents(), lead)) continue;
      const uint32_t c = field.mul(lc, field.inv(g.lead_coefficient()));
      h = h - g.times_monomial(quotient(lead, g.lead_exponents()), c);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.add_term(lead, lc);
      h = h - Polynomial::monomial(f.p(), lead, lc);
    }
  }
  return remainder;
}

std::vector<Polynomial> reduced_groebner_basis(std::vector<Polynomial> generators) {
  std::vector<Polynomial> g;
  for (auto& f : generators)
    if (!f.is_zero()) g.push_back(f.monic());
  if (g.empty()) return g;

  // Buchberger with the coprime-lead criterion.
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t j = 0; j < g.size(); ++j)
    for (size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    // Lowest lcm degree first keeps intermediate polynomials small.
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
      return total_degree(lcm(g[a.first].lead_exponents(), g[a.second].lead_exponents())) <
             total_degree(lcm(g[b.first].lead_exponents(), g[b.second].lead_exponents()));
    });
    auto [i, j] = *best;
    pairs.erase(best);
    if (coprime(g[i].lead_exponents(), g[j].lead_exponents())) continue;
    Polynomial r = reduce(s_polynomial(g[i], g[j]), g);
    if (r.is_zero()) continue;
    g.push_back(r.monic());
    for (size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }

  // Minimalize: drop elements whose lead is divisible by another lead.
  std::sort(g.begin(), g.end(), [](const Polynomial& a, const Polynomial& b) {
    return grevlex_greater(b.lead_exponents(), a.lead_exponents());
  });
  std::vector<Polynomial> minimal;
  for (const auto& f : g) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                 [&](const Polynomial& m) { return divides(m.lead_exponents(), f.lead_exponents()); });
    if (!redundant) minimal.push_back(f);
  }

  // Interreduce tails.
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    const Polynomial lead = Polynomial::monomial(minimal[i].p(), minimal[i].lead_exponents(), 1);
    minimal[i] = lead + reduce(minimal[i] - lead, others);
  }
  std::sort(minimal.begin(), minimal.end(), [](const Polynomial& a, const Polynomial& b) {
    return grevlex_greater(a.lead_exponents(), b.lead_exponents());
  });
  return minimal;
}

}  // namespace frobrig::ringkit
