#include <algorithm>
#include <numeric>

#include "frobrig/errors.hpp"
#include "homology_counter.hpp"

namespace frobrig::frobtor {

Ratio Ratio::of(uint64_t num, uint64_t den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "ratio with zero denominator");
  const uint64_t g = std::gcd(num, den);
  return g == 0 ? Ratio{0, 1} : Ratio{num / g, den / g};
}

std::string Ratio::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

namespace {

void require_length(const FreeComplex& F, size_t N) {
  if (F.length() >= N + 1 || (F.length() >= N && !F.open_end)) return;
  throw Error(ErrorCode::InvalidArgument, "the resolution must reach F_" + std::to_string(N + 1));
}

bool pd_visibly_finite(const FreeComplex& F) {
  for (size_t j = 1; j < F.ranks.size(); ++j)
    if (F.ranks[j] == 0) return true;
  return !F.open_end;
}

bool square_zero_at_p(const ringkit::LocalAlgebra& A) {
  return A.artinian() && A.nilpotency_index() <= static_cast<int>(A.p());
}

// T is the twisted complex whose homology is tabulated; F supplies the Betti row.
TorTable tabulate(const FreeComplex& F, const FreeComplex& T, int r, size_t N, const std::string& module) {
  TorTable table;
  table.module = module;
  table.r = r;
  CapLadder ladder(T);
  for (size_t j = 0; j <= N; ++j) {
    TorRow row;
    row.j = j;
    row.betti = j < F.ranks.size() ? F.ranks[j] : 0;
    try {
      row.length = ladder.at(j);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CapUnstable) throw;
      row.length = Length::unstable();
    }
    if (row.length.is_finite() && row.betti > 0) row.ratio = Ratio::of(row.length.value, row.betti);
    table.rows.push_back(std::move(row));
  }
  return table;
}

// Exact constancy of length / betti for m^p = 0 and infinite pd.
std::optional<std::string> ratio_verdict(const TorTable& t, const ringkit::LocalAlgebra& A, bool pd_finite,
                                         bool* constant = nullptr) {
  if (!square_zero_at_p(A) || pd_finite) return std::nullopt;
  const Ratio want = Ratio::of(A.length(), 1);
  bool ok = true;
  for (const auto& row : t.rows)
    if (row.j >= 1 && !(row.ratio && *row.ratio == want)) ok = false;
  if (constant) *constant = ok;
  return ok ? "ratio constant = " + want.to_string()
            : "ratio not constant (expected " + want.to_string() + " since m^p = 0)";
}

}  // namespace

TorTable tor_table(const FreeComplex& F, int r, size_t N, const std::string& module) {
  require_length(F, N);
  const auto& A = *F.algebra;
  if (!A.artinian() && A.cap() < required_cap(F, r))
    throw Error(ErrorCode::CapTooSmall, "degree cap " + std::to_string(A.cap()) + " is below " +
                                            std::to_string(required_cap(F, r)) + " needed for r = " + std::to_string(r));
  TorTable table = tabulate(F, twist(F, r), r, N, module);
  if (auto v = ratio_verdict(table, A, pd_visibly_finite(F))) table.verdicts.push_back(*v);
  return table;
}

TorTable tor_frobenius(const ModulePresentation& M, int r, size_t N) {
  return tor_table(resolve::minimal_free_resolution(M, N + 1), r, N, M.name());
}

bool RigidityReport::flagged() const {
  return std::any_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.applicable && !v.consistent; });
}

RigidityReport rigidity_probe(const ModulePresentation& M, int r, size_t N) {
  const FreeComplex F = resolve::minimal_free_resolution(M, N + 1);
  return rigidity_probe(M, F, invariants::invariant_report(M.algebra()), r, N);
}

RigidityReport rigidity_probe(const ModulePresentation& M, const FreeComplex& F, const invariants::InvariantReport& inv,
                              int r, size_t N) {
  RigidityReport rep;
  rep.table = tor_table(F, r, N, M.name());
  rep.is_free = M.is_free();
  rep.condition1 = inv.condition1;
  rep.depth = inv.depth;
  rep.c = inv.c;
  rep.c_y = inv.c_y;
  const auto& rows = rep.table.rows;
  const auto& A = *F.algebra;

  if (pd_visibly_finite(F))
    rep.pd_finite = true;
  else if (inv.depth + 1 < F.ranks.size())
    rep.pd_finite = false;  // pd finite would force pd <= depth

  for (size_t j = 1; j <= N; ++j)
    if (rows[j].length.is_zero()) {
      rep.first_vanishing = j;
      break;
    }
  if (rep.first_vanishing)
    for (size_t n = *rep.first_vanishing + 1; n <= N; ++n)
      if (rows[n].length.is_nonzero()) rep.later_nonvanishing = true;

  uint64_t q = 1;
  for (int i = 0; i < r; ++i) q *= A.p();

  // Some Tor_j = 0 with j >= 1 forces M free.
  auto projective_rule = [&](const std::string& rule, bool applicable, const std::string& why) {
    Verdict v{rule, applicable, true, why};
    if (!applicable) return v;
    if (rep.first_vanishing && !rep.is_free) {
      v.consistent = false;
      v.detail = "Tor_" + std::to_string(*rep.first_vanishing) + " = 0 but M is not free";
    } else {
      v.detail = rep.first_vanishing ? "Tor vanishes and M is free" : "no Tor_j vanishes for 1 <= j <= N";
    }
    return v;
  };
  rep.verdicts.push_back(projective_rule("socle-rigidity", inv.condition1,
                                         inv.condition1 ? "" : "(0:m^p) lies in m^p"));
  const bool p14 = inv.depth == 0 && inv.c && q > static_cast<uint64_t>(*inv.c);
  rep.verdicts.push_back(projective_rule("depth-zero-threshold", p14, p14 ? "" : "needs depth 0 and p^r > c(R)"));

  {
    Verdict v{"zero-twist", square_zero_at_p(A), true, ""};
    if (!v.applicable) {
      v.detail = "needs an Artinian ring with m^p = 0";
    } else {
      for (size_t j = 1; j <= N && v.consistent; ++j)
        if (rows[j].length.is_zero() && rows[j].betti != 0) {
          v.consistent = false;
          v.detail = "Tor_" + std::to_string(j) + " = 0 but l_" + std::to_string(j) + " = " + std::to_string(rows[j].betti);
        }
      if (v.consistent) v.detail = "Tor_j = 0 only where l_j = 0";
    }
    rep.verdicts.push_back(v);
  }

  {
    const size_t d = inv.depth;
    Verdict v{"depth-window", d > 0 && inv.c_y && q > static_cast<uint64_t>(*inv.c_y), true, ""};
    if (!v.applicable) {
      v.detail = "needs depth > 0 and p^r > c_y(R)";
    } else {
      // d + 1 consecutive vanishing Tor modules force finite projective dimension.
      std::optional<size_t> window;
      for (size_t n = 1; n + d <= N && !window; ++n) {
        bool all = true;
        for (size_t j = n; j <= n + d; ++j) all = all && rows[j].length.is_zero();
        if (all) window = n;
      }
      if (window && rep.pd_finite == false) {
        v.consistent = false;
        v.detail = "Tor_j = 0 for " + std::to_string(*window) + " <= j <= " + std::to_string(*window + d) +
                   " but pd(M) is infinite";
      } else if (window) {
        v.detail = "vanishing window at j = " + std::to_string(*window) + " with pd(M) finite";
      } else {
        v.detail = "no vanishing window of length " + std::to_string(d + 1);
      }
    }
    rep.verdicts.push_back(v);
  }

  {
    Verdict v{"finite-pd", rep.pd_finite == true, true, ""};
    if (!v.applicable) {
      v.detail = "pd(M) not known to be finite";
    } else {
      for (size_t j = 1; j <= N && v.consistent; ++j)
        if (rows[j].length.is_nonzero()) {
          v.consistent = false;
          v.detail = "pd(M) finite but Tor_" + std::to_string(j) + " = " + rows[j].length.to_string();
        }
      if (v.consistent) v.detail = "Tor_j = 0 for 1 <= j <= N";
    }
    rep.verdicts.push_back(v);
  }
  return rep;
}

RatioReport ratio_report(const ModulePresentation& M, int r, size_t N) {
  const FreeComplex F = resolve::minimal_free_resolution(M, N + 1);
  if (pd_visibly_finite(F))
    throw Error(ErrorCode::NotApplicable, "M has finite projective dimension; ratios are undefined past pd(M)");
  RatioReport rep;
  rep.table = tor_table(F, r, N, M.name());
  const auto& A = *M.algebra();
  if (A.artinian()) rep.ring_length = A.length();
  rep.constancy_applicable = square_zero_at_p(A);
  bool constant = false;
  if (auto v = ratio_verdict(rep.table, A, false, &constant)) {
    rep.constant = constant;
    rep.verdict = *v;
  } else {
    rep.verdict = "ratios reported without verdict (needs an Artinian ring with m^p = 0)";
  }
  return rep;
}

TorTable tor_vs_quotient_coeffs(const ModulePresentation& M, int r, const std::vector<ringkit::Polynomial>& ys,
                                size_t N) {
  const FreeComplex F = resolve::minimal_free_resolution(M, N + 1);
  if (ys.empty()) return tor_table(F, r, N, M.name());
  const auto& A = M.algebra();
  const ringkit::AlgebraPtr bar = invariants::reduce_regular(A, ys);
  const FreeComplex T = twist(F, r);
  FreeComplex Tbar = T.with_algebra(bar);
  if (!bar->artinian()) {
    const FreeComplex& source = T.wide ? *T.wide : T;
    Tbar.wide = std::make_shared<FreeComplex>(source.with_algebra(bar->with_cap(resolve::wide_cap(bar->cap()))));
  }
  return tabulate(F, Tbar, r, N, M.name() + " over R/(y)");
}

}  // namespace frobrig::frobtor
