#pragma once

// Socles, colon ideals and the ring invariants that control Frobenius
// rigidity: condition (0:m^p) not inside m^p, c(R), depth, regular
// sequences and c_y(R).

#include <optional>
#include <string>
#include <vector>

#include "frobrig/ringkit.hpp"

namespace frobrig::invariants {

using ringkit::AlgebraPtr;
using ringkit::Coeffs;
using ringkit::Polynomial;

/// F_p-basis of (0 : J) = { x : x g = 0 for every generator g of J }, in
/// reduced echelon form over the standard monomials (ordered by degree).
/// Non-Artinian algebras: only degrees where the products are exact at the
/// cap are reported, and the answer must agree at the wide cap
/// (CapUnstable otherwise).
std::vector<Coeffs> colon_into_zero(const AlgebraPtr& A, const std::vector<Polynomial>& J);

/// Generators of m^s: the nonzero normal forms of the degree-s monomials.
std::vector<Polynomial> maximal_ideal_power(const AlgebraPtr& A, int s);

/// Socle (0 : m).
std::vector<Coeffs> socle(const AlgebraPtr& A);

/// True when the algebra is a field (m = 0).
bool is_field(const AlgebraPtr& A);

/// (0 : m^p) is not contained in m^p. Fields report false.
bool condition1(const AlgebraPtr& A);

/// Least s >= 1 with (0 : m) not inside m^s. Throws PositiveDepth when the
/// socle vanishes.
int c_invariant(const AlgebraPtr& A);

/// Multiplication by y is injective on the degrees where it is exact, at the
/// working cap and at the wide cap. Requires y in m.
bool is_regular(const AlgebraPtr& A, const Polynomial& y);

/// Greedy maximal regular sequence of linear forms, at most d_max long.
/// Candidates are tried by number of nonzero coefficients, then by support,
/// then by coefficients.
std::vector<Polynomial> find_regular_sequence(const AlgebraPtr& A, size_t d_max);
std::vector<Polynomial> find_regular_sequence(const AlgebraPtr& A);

/// A / (y); every y_i must be regular on A / (y_1..y_{i-1}) (NotRegular).
AlgebraPtr reduce_regular(const AlgebraPtr& A, const std::vector<Polynomial>& ys);

/// Least r >= 1 with p^r > c.
int min_r_threshold(int c, uint32_t p);

struct InvariantReport {
  std::string ring;  ///< printed presentation
  std::vector<std::string> variables;
  uint32_t p = 2;
  int cap = 0;
  bool artinian = false;
  bool graded = false;
  bool field = false;
  std::optional<size_t> length;     ///< ell(R), Artinian only
  std::optional<int> nilpotency;    ///< least s with m^s = 0, Artinian only
  bool condition1 = false;
  size_t depth = 0;
  std::vector<Polynomial> regular_sequence;
  std::optional<int> c;     ///< depth 0
  std::optional<int> c_y;   ///< depth > 0
  int r_threshold = 1;
  size_t socle_dim = 0;     ///< socle of R (depth 0) or of R / (y)
  bool depth_at_cap = false;  ///< depth was computed in a truncated algebra
  std::vector<std::string> notes;
};

InvariantReport invariant_report(const AlgebraPtr& A);

}  // namespace frobrig::invariants
