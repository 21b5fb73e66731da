#include <algorithm>
#include <random>

#include "frobrig/errors.hpp"
#include "frobrig/report.hpp"

namespace frobrig::report {

namespace {

using ringkit::Exponents;
using ringkit::Polynomial;
using ringkit::RingPresentation;

class Draw {
 public:
  Draw(uint64_t seed, uint64_t trial) {
    std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32), static_cast<uint32_t>(trial),
                      static_cast<uint32_t>(trial >> 32)};
    gen_.seed(seq);
  }
  int between(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool chance(int percent) { return between(1, 100) <= percent; }

 private:
  std::mt19937_64 gen_;
};

std::vector<std::string> variable_names(size_t n) {
  static const char* names[] = {"x", "y", "z"};
  return std::vector<std::string>(names, names + n);
}

Exponents random_monomial(Draw& rng, size_t n, int degree) {
  Exponents e(n, 0);
  for (int k = 0; k < degree; ++k) ++e[static_cast<size_t>(rng.between(0, static_cast<int>(n) - 1))];
  return e;
}

Polynomial random_linear(Draw& rng, uint32_t p, size_t n) {
  Polynomial f(p, n);
  for (size_t v = 0; v < n; ++v) {
    const int c = rng.between(0, static_cast<int>(p) - 1);
    if (c) f = f + Polynomial::variable(p, n, v).scaled(static_cast<uint32_t>(c));
  }
  return f;
}

RingPresentation square_zero_ring(Draw& rng, const SearchParams& sp) {
  RingPresentation pres;
  pres.p = rng.chance(50) ? 2 : 3;
  const size_t n = static_cast<size_t>(rng.between(1, static_cast<int>(sp.max_vars)));
  pres.variables = variable_names(n);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a; b < n; ++b) {
      Exponents e(n, 0);
      ++e[a];
      ++e[b];
      pres.relations.push_back(Polynomial::monomial(pres.p, e));
    }
  return pres;
}

RingPresentation artinian_ring(Draw& rng, const SearchParams& sp) {
  RingPresentation pres;
  pres.p = rng.chance(50) ? 2 : 3;
  const size_t n = static_cast<size_t>(rng.between(1, static_cast<int>(sp.max_vars)));
  pres.variables = variable_names(n);
  const int top = std::max(2, sp.max_relation_degree);
  for (size_t v = 0; v < n; ++v) {
    Exponents e(n, 0);
    e[v] = rng.between(2, top);
    pres.relations.push_back(Polynomial::monomial(pres.p, e));
  }
  const int extra = n > 1 ? rng.between(0, 2) : 0;
  for (int k = 0; k < extra; ++k) {
    const int deg = rng.between(2, top);
    Polynomial f = Polynomial::monomial(pres.p, random_monomial(rng, n, deg));
    if (rng.chance(50)) {
      const auto c = static_cast<uint32_t>(rng.between(1, static_cast<int>(pres.p) - 1));
      f = f + Polynomial::monomial(pres.p, random_monomial(rng, n, deg), c);
    }
    if (!f.is_zero()) pres.relations.push_back(f);
  }
  return pres;
}

RingPresentation depth_one_ring(Draw& rng, const SearchParams& sp) {
  RingPresentation pres;
  pres.p = rng.chance(50) ? 2 : 3;
  pres.variables = {"x", "y"};
  const int a = rng.between(2, std::max(2, sp.max_relation_degree));
  pres.relations.push_back(Polynomial::monomial(pres.p, {a, 0}));
  int rmax = 1;
  for (int r : sp.r_values) rmax = std::max(rmax, r);
  int q = 1;
  for (int i = 0; i < rmax; ++i) q *= static_cast<int>(pres.p);
  pres.cap = q * a + 2;
  return pres;
}

std::vector<std::vector<Polynomial>> random_module(Draw& rng, const RingPresentation& pres, const SearchParams& sp) {
  const size_t n = pres.variables.size();
  const int g = rng.between(1, static_cast<int>(sp.max_module_size));
  const int h = rng.between(1, static_cast<int>(sp.max_module_size));
  std::vector<std::vector<Polynomial>> rows(static_cast<size_t>(g));
  for (auto& row : rows)
    for (int c = 0; c < h; ++c) {
      const int kind = rng.between(1, 100);
      if (kind <= 30)
        row.emplace_back(pres.p, n);
      else if (kind <= 80)
        row.push_back(random_linear(rng, pres.p, n));
      else if (kind <= 95)
        row.push_back(Polynomial::monomial(pres.p, random_monomial(rng, n, 2)));
      else
        row.push_back(Polynomial::constant(pres.p, n, 1));
    }
  return rows;
}

std::string module_text(const resolve::ModulePresentation& M) {
  const auto& vars = M.algebra()->variables();
  std::string s = "coker [";
  for (size_t i = 0; i < M.source().size(); ++i) {
    s += i ? ", [" : "[";
    for (size_t j = 0; j < M.source()[i].size(); ++j) s += (j ? ", " : "") + M.source()[i][j].to_string(vars);
    s += "]";
  }
  return s + "]";
}

bool vanishing_window(const frobtor::TorTable& t, size_t depth, size_t N) {
  for (size_t n = 1; n + depth <= N; ++n) {
    bool all = true;
    for (size_t j = n; j <= n + depth; ++j) all = all && t.rows[j].length.is_zero();
    if (all) return true;
  }
  return false;
}

}  // namespace

SearchSummary run_search(const SearchParams& params) {
  if (params.max_vars < 1 || params.max_vars > 3) throw Error(ErrorCode::InvalidArgument, "variable count must be 1..3");
  if (params.max_relation_degree < 2 || params.max_relation_degree > 3)
    throw Error(ErrorCode::InvalidArgument, "relation degree must be 2..3");
  if (params.max_module_size < 1 || params.max_module_size > 3)
    throw Error(ErrorCode::InvalidArgument, "module size must be 1..3");
  if (params.r_values.empty()) throw Error(ErrorCode::InvalidArgument, "at least one r is needed");
  static const std::vector<std::string> families{"msq0", "artinian", "depth1"};
  if (params.family != "mixed" && std::find(families.begin(), families.end(), params.family) == families.end())
    throw Error(ErrorCode::InvalidArgument, "unknown family '" + params.family + "'");

  SearchSummary out;
  out.params = params;
  for (size_t trial = 0; trial < params.trials; ++trial) {
    Draw rng(params.seed, trial);
    std::string family = params.family;
    if (family == "mixed") family = families[static_cast<size_t>(rng.between(0, 2))];
    const RingPresentation pres = family == "msq0"       ? square_zero_ring(rng, params)
                                  : family == "artinian" ? artinian_ring(rng, params)
                                                         : depth_one_ring(rng, params);
    const auto rows = random_module(rng, pres, params);
    try {
      const auto A = ringkit::build_algebra(pres);
      const resolve::ModulePresentation M(A, rows);
      const auto inv = invariants::invariant_report(A);
      const auto F = resolve::minimal_free_resolution(M, params.N + 1);
      if (M.is_free()) ++out.free_modules;
      uint64_t q = 1;
      for (int r : params.r_values) {
        q = 1;
        for (int i = 0; i < r; ++i) q *= A->p();
        const auto rep = frobtor::rigidity_probe(M, F, inv, r, params.N);
        ++out.evaluated;
        if (rep.flagged()) ++out.flagged;
        if (rep.first_vanishing && !rep.is_free) {
          Witness w{trial, ringkit::print_presentation(pres), module_text(M), r, *rep.first_vanishing, inv.depth,
                    rep.flagged()};
          if (w.contradiction) ++out.contradictions;
          out.witnesses.push_back(std::move(w));
        }
        if (inv.depth > 0 && inv.c_y && q > static_cast<uint64_t>(*inv.c_y)) {
          ++out.window_checked;
          if (vanishing_window(rep.table, inv.depth, params.N)) {
            ++out.window_vanishing;
            if (rep.pd_finite == false) ++out.window_violations;
          }
        }
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ContainmentViolation) throw;
      ++out.skipped;
      out.skip_reasons.push_back("trial " + std::to_string(trial) + ": " + error_code_name(e.code()) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace frobrig::report
