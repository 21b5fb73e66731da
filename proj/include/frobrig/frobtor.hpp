#pragma once

// Frobenius twists of complexes and the Tor modules Tor_j(M, ^{phi^r}R).
//
// Tor_j(M, ^{phi^r}R) is the homology of the minimal resolution of M with
// every differential entry raised to the p^r-th power. Lengths are
// F_p-dimensions; over non-Artinian algebras each length is computed at the
// working cap and at the wide cap and reported as INFINITE or UNSTABLE when
// the two disagree.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobrig/invariants.hpp"
#include "frobrig/resolve.hpp"

namespace frobrig::frobtor {

using resolve::FreeComplex;
using resolve::ModulePresentation;

/// Length of a homology module, or a marker when it cannot be pinned down.
struct Length {
  enum class Kind { Finite, Infinite, Unstable };
  Kind kind = Kind::Finite;
  size_t value = 0;

  static Length finite(size_t v) { return {Kind::Finite, v}; }
  static Length infinite() { return {Kind::Infinite, 0}; }
  static Length unstable() { return {Kind::Unstable, 0}; }

  bool is_finite() const noexcept { return kind == Kind::Finite; }
  bool is_zero() const noexcept { return kind == Kind::Finite && value == 0; }
  /// Known to be nonzero (INFINITE counts, UNSTABLE does not).
  bool is_nonzero() const noexcept { return kind == Kind::Infinite || (kind == Kind::Finite && value > 0); }
  std::string to_string() const;  ///< number, "INF" or "UNSTABLE"
  bool operator==(const Length&) const = default;
};

/// Exact nonnegative fraction in lowest terms.
struct Ratio {
  uint64_t num = 0;
  uint64_t den = 1;
  static Ratio of(uint64_t num, uint64_t den);
  std::string to_string() const;  ///< "3" or "7/2"
  bool operator==(const Ratio&) const = default;
};

/// Every differential entry replaced by its p^r-th power; ranks, shifts and
/// the wide-cap companion are carried along (shifts scale by p^r).
FreeComplex twist(const FreeComplex& C, int r);

/// dim H_j at the algebra's cap, counted on the coordinates of C_j where
/// d_j is computed exactly. No stabilization.
size_t homology_at_cap(const FreeComplex& C, size_t j);

/// dim H_j(C) for 0 <= j <= length(C) (d_0 = 0). A complex marked open_end
/// needs j < length(C). Non-Artinian algebras are checked at caps D and
/// 2D - 2. When those disagree, a graded complex whose homology at 2D - 2
/// vanishes in the upper half of the newly visible degrees is exact; failing
/// that, a third cap 4D - 6 decides between an exact value (the two larger
/// caps agree), INFINITE (growth at both steps) and UNSTABLE. If the third
/// cap would be too large to expand, growth is reported INFINITE.
Length homology_length(const FreeComplex& C, size_t j);

/// Smallest cap at which the twisted resolution can be trusted:
/// p^r * (largest differential degree) + 2.
int required_cap(const FreeComplex& F, int r);

struct TorRow {
  size_t j = 0;
  Length length;
  size_t betti = 0;
  std::optional<Ratio> ratio;  ///< length / betti when both are finite and betti > 0
};

struct TorTable {
  std::string module;
  int r = 1;
  std::vector<TorRow> rows;  ///< j = 0..N
  std::vector<std::string> verdicts;
};

/// Tor table from an already computed resolution F_0..F_{N+1} (or a closed
/// shorter one). Entries that fail to stabilize are marked, never thrown.
TorTable tor_table(const FreeComplex& F, int r, size_t N, const std::string& module);

TorTable tor_frobenius(const ModulePresentation& M, int r, size_t N);

/// One rigidity statement tested against a Tor table.
struct Verdict {
  std::string rule;     ///< "socle-rigidity", "depth-zero-threshold", "zero-twist", "depth-window", "finite-pd"
  bool applicable = false;
  bool consistent = true;
  std::string detail;
};

struct RigidityReport {
  TorTable table;
  std::optional<size_t> first_vanishing;  ///< least j >= 1 with Tor_j = 0
  bool later_nonvanishing = false;        ///< some n in (first_vanishing, N] with Tor_n != 0
  bool is_free = false;
  std::optional<bool> pd_finite;          ///< known from the resolution and depth
  bool condition1 = false;
  size_t depth = 0;
  std::optional<int> c;
  std::optional<int> c_y;
  std::vector<Verdict> verdicts;

  bool flagged() const;
};

RigidityReport rigidity_probe(const ModulePresentation& M, int r, size_t N);

/// Variant that reuses a resolution (to at least N + 1) and ring invariants.
RigidityReport rigidity_probe(const ModulePresentation& M, const FreeComplex& F,
                              const invariants::InvariantReport& inv, int r, size_t N);

struct RatioReport {
  TorTable table;
  std::optional<size_t> ring_length;  ///< ell(R) when Artinian
  bool constancy_applicable = false;  ///< Artinian with m^p = 0
  std::optional<bool> constant;       ///< every ratio for j >= 1 equals ell(R)
  std::string verdict;
};

/// Throws NotApplicable when the resolution shows pd(M) finite.
RatioReport ratio_report(const ModulePresentation& M, int r, size_t N);

struct BalanceReport {
  std::vector<Length> frobenius_side;  ///< from the twisted resolution of M
  std::vector<size_t> module_side;     ///< from a resolution of ^{phi^r}R, tensored with M
  std::vector<bool> equal;
  bool all_equal() const;
};

/// Computes Tor_j(M, ^{phi^r}R) for j <= N a second way, by presenting
/// ^{phi^r}R as an R-module, resolving it and tensoring with M. Artinian only.
BalanceReport tor_balance_oracle(const ModulePresentation& M, int r, size_t N);

/// Lengths of H_j(twist(F, r) tensor R/(y)) for j = 0..N, the y_i checked
/// to form a regular sequence (NotRegular otherwise).
TorTable tor_vs_quotient_coeffs(const ModulePresentation& M, int r, const std::vector<ringkit::Polynomial>& ys,
                                size_t N);

}  // namespace frobrig::frobtor
