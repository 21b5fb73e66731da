#pragma once

// Presentations F_p[x_1..x_n]/I and exact arithmetic in the quotient via
// Groebner normal forms over the standard-monomial basis.
//
// Monomial order is graded reverse lexicographic with the declared variable
// order (x_1 > x_2 > ... > x_n). For non-Artinian quotients the algebra only
// sees standard monomials of total degree < cap; this is the Artinian ring
// F_p[x]/(I + m^cap) and callers that report numbers must confirm them at a
// second, larger cap.

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frobrig/linalg.hpp"

namespace frobrig::ringkit {

using Exponents = std::vector<int>;

int total_degree(const Exponents& e) noexcept;

/// Strict grevlex comparison: true iff a > b.
bool grevlex_greater(const Exponents& a, const Exponents& b) noexcept;

struct GrevlexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const noexcept { return grevlex_greater(a, b); }
};

bool divides(const Exponents& a, const Exponents& b) noexcept;

/// Sparse polynomial over F_p, terms kept in descending grevlex order.
class Polynomial {
 public:
  using Terms = std::map<Exponents, uint32_t, GrevlexDescending>;

  Polynomial(uint32_t p, size_t num_vars) : p_(p), num_vars_(num_vars) {}

  static Polynomial constant(uint32_t p, size_t num_vars, uint32_t c);
  static Polynomial monomial(uint32_t p, const Exponents& e, uint32_t c = 1);
  static Polynomial variable(uint32_t p, size_t num_vars, size_t index);

  uint32_t p() const noexcept { return p_; }
  size_t num_vars() const noexcept { return num_vars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  size_t size() const noexcept { return terms_.size(); }

  /// Leading exponent/coefficient; undefined on zero.
  const Exponents& lead_exponents() const { return terms_.begin()->first; }
  uint32_t lead_coefficient() const { return terms_.begin()->second; }

  uint32_t coefficient(const Exponents& e) const;
  uint32_t constant_term() const;
  int degree() const;  ///< -1 for zero
  int min_degree() const;  ///< -1 for zero
  bool is_homogeneous() const;

  void add_term(const Exponents& e, uint32_t c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(uint32_t c) const;
  Polynomial times_monomial(const Exponents& e, uint32_t c) const;
  Polynomial monic() const;
  Polynomial pow(uint64_t e) const;
  /// Drops terms of total degree >= cap.
  Polynomial truncated(int cap) const;

  bool operator==(const Polynomial& o) const { return p_ == o.p_ && num_vars_ == o.num_vars_ && terms_ == o.terms_; }

  /// Canonical text: terms in descending grevlex order, "0" for zero.
  std::string to_string(const std::vector<std::string>& vars) const;

 private:
  void check_compatible(const Polynomial& o) const;
  uint32_t p_;
  size_t num_vars_;
  Terms terms_;
};

/// Full reduction of f modulo a Groebner basis (remainder of the division).
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis);

/// Reduced Groebner basis (monic, sorted by descending lead monomial) of the
/// ideal generated by `generators` under grevlex.
std::vector<Polynomial> reduced_groebner_basis(std::vector<Polynomial> generators);

// ---------------------------------------------------------------------------
// Presentations and their text form.

inline constexpr int kDefaultCap = 12;

struct RingPresentation {
  uint32_t p = 2;
  std::vector<std::string> variables;
  std::vector<Polynomial> relations;
  int cap = kDefaultCap;

  bool operator==(const RingPresentation&) const = default;
};

/// Module definition as written in a ring file, before it is attached to an
/// algebra: `coker [[...],[...]]` (rows = generators), `k`, or `free n`.
struct ModuleSpec {
  enum class Kind { Cokernel, ResidueField, Free };
  std::string name;
  Kind kind = Kind::Cokernel;
  size_t generators = 0;
  std::vector<std::vector<Polynomial>> rows;  ///< generators x relations
  std::string source;  ///< the definition text, for reports
};

struct RingDocument {
  RingPresentation ring;
  std::vector<ModuleSpec> modules;
};

RingPresentation parse_presentation(std::string_view text);

/// A ring line followed by any number of `module NAME = ...` lines; `#`
/// starts a comment running to the end of the line.
RingDocument parse_document(std::string_view text);

/// Parses a module expression (`k`, `free 2`, `coker [[x, y]]`) against a ring.
ModuleSpec parse_module_expression(std::string_view text, const RingPresentation& ring, std::string name = "M");

Polynomial parse_polynomial(std::string_view text, const RingPresentation& ring);

std::string print_presentation(const RingPresentation& pres);

// ---------------------------------------------------------------------------
// The quotient algebra.

class LocalAlgebra;
using AlgebraPtr = std::shared_ptr<const LocalAlgebra>;
using Coeffs = std::vector<uint32_t>;
using Term = std::pair<uint32_t, uint32_t>;  ///< (basis index, coefficient)

/// Upper bound on the number of standard monomials an algebra may carry.
inline constexpr size_t kMaxBasisSize = 2048;

class LocalAlgebra {
 public:
  /// Validates the presentation, computes the reduced Groebner basis and the
  /// standard monomials. Throws ZeroRing, CapTooSmall, InvalidArgument.
  static AlgebraPtr build(const RingPresentation& pres);

  /// Same presentation, different degree cap.
  AlgebraPtr with_cap(int cap) const;
  /// The algebra modulo extra relations (same cap).
  AlgebraPtr quotient(const std::vector<Polynomial>& extra) const;

  const RingPresentation& presentation() const noexcept { return pres_; }
  const linalg::PrimeField& field() const noexcept { return field_; }
  uint32_t p() const noexcept { return pres_.p; }
  size_t num_vars() const noexcept { return pres_.variables.size(); }
  int cap() const noexcept { return pres_.cap; }
  const std::vector<std::string>& variables() const noexcept { return pres_.variables; }
  const std::vector<Polynomial>& groebner_basis() const noexcept { return gb_; }
  bool artinian() const noexcept { return artinian_; }
  /// True iff the Groebner basis is homogeneous (standard grading), so all
  /// structure maps preserve degree.
  bool graded() const noexcept { return graded_; }

  size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Exponents>& standard_monomials() const noexcept { return basis_; }
  int basis_degree(size_t i) const { return degrees_[i]; }
  /// Largest degree of a standard monomial.
  int top_degree() const noexcept { return degrees_.empty() ? 0 : degrees_.back(); }
  /// Index of a standard monomial, or -1.
  long index_of(const Exponents& e) const;

  /// ell_R(R) = dim_{F_p} R; throws NotArtinian.
  size_t length() const;

  /// Normal form coordinates. Sets *truncated when a term of degree >= cap
  /// was dropped (non-Artinian algebras only).
  Coeffs normal_form(const Polynomial& f, bool* truncated = nullptr) const;
  Polynomial to_polynomial(std::span<const uint32_t> coeffs) const;

  /// nf(basis_i * basis_j) and nf(x_v * basis_i) as sparse coordinate vectors.
  std::span<const Term> product(size_t i, size_t j) const {
    const size_t k = i * basis_.size() + j;
    return {product_terms_.data() + product_offsets_[k], product_offsets_[k + 1] - product_offsets_[k]};
  }
  const linalg::SparseVec& variable_product(size_t v, size_t i) const { return var_products_[v * basis_.size() + i]; }

  /// out += a * b (coordinates).
  void multiply_add(std::span<const uint32_t> a, std::span<const uint32_t> b, std::span<uint32_t> out) const;

  /// Images nf(s^{p^r}) of the standard monomials; the Frobenius power of
  /// an element is the F_p-linear combination of these.
  std::vector<linalg::SparseVec> frobenius_table(int r) const;

  /// True iff the element lies in m^s, tested by reduction against the
  /// Groebner basis of I + (x_1..x_n)^s.
  bool in_maximal_power(std::span<const uint32_t> coeffs, int s) const;

  /// Least s >= 1 with m^s = 0; throws NotArtinian.
  int nilpotency_index() const;

 private:
  LocalAlgebra(RingPresentation pres, std::vector<Polynomial> gb);
  void enumerate_basis();
  void build_tables();

  RingPresentation pres_;
  linalg::PrimeField field_;
  std::vector<Polynomial> gb_;
  bool artinian_ = false;
  bool graded_ = false;
  std::vector<Exponents> basis_;
  std::vector<int> degrees_;
  std::map<Exponents, size_t> index_;
  std::vector<linalg::SparseVec> var_products_;
  std::vector<size_t> product_offsets_;  // CSR layout of the n x n product table
  std::vector<Term> product_terms_;
};

/// An element of a LocalAlgebra in normal form.
class RingElement {
 public:
  RingElement(AlgebraPtr alg, Coeffs coeffs, bool truncated = false);

  static RingElement zero(const AlgebraPtr& alg);
  static RingElement one(const AlgebraPtr& alg);
  static RingElement variable(const AlgebraPtr& alg, size_t v);

  const AlgebraPtr& algebra() const noexcept { return alg_; }
  const Coeffs& coeffs() const noexcept { return coeffs_; }
  /// Set when normal-form computation dropped terms of degree >= cap.
  bool truncated() const noexcept { return truncated_; }

  bool is_zero() const noexcept;
  bool is_unit() const noexcept { return !coeffs_.empty() && coeffs_[0] != 0; }
  bool in_maximal_ideal() const noexcept { return !is_unit(); }
  int degree() const noexcept;      ///< -1 for zero
  int min_degree() const noexcept;  ///< -1 for zero
  bool is_homogeneous() const noexcept;

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator*(const RingElement& o) const;
  RingElement operator-() const;
  RingElement scaled(uint32_t c) const;
  /// Multiplicative inverse of a unit (throws InvalidArgument otherwise).
  RingElement inverse() const;
  bool operator==(const RingElement& o) const { return coeffs_ == o.coeffs_; }

  Polynomial to_polynomial() const { return alg_->to_polynomial(coeffs_); }
  std::string to_string() const { return to_polynomial().to_string(alg_->variables()); }

 private:
  void check_same(const RingElement& o) const;
  AlgebraPtr alg_;
  Coeffs coeffs_;
  bool truncated_;
};

AlgebraPtr build_algebra(const RingPresentation& pres);
RingElement nf(const AlgebraPtr& alg, const Polynomial& f);
/// e^{p^r}; requires r >= 1.
RingElement frob_power(const RingElement& e, int r);
size_t algebra_length(const LocalAlgebra& alg);

}  // namespace frobrig::ringkit
