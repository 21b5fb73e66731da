#pragma once

// Finitely presented modules over a LocalAlgebra, syzygies and minimal free
// resolutions.
//
// R-linear maps are expanded over the standard-monomial basis into F_p-linear
// maps: the coordinate (j, s) of R^h stands for basis_s * e_j. When the ring
// and the matrix are homogeneous every coordinate carries the label
// shift_j + weight * deg(s), and elimination runs label block by label block.

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frobrig/linalg.hpp"
#include "frobrig/ringkit.hpp"

namespace frobrig::resolve {

using ringkit::AlgebraPtr;
using ringkit::Coeffs;
using ringkit::RingElement;

/// Matrix over a LocalAlgebra, column-major: entry (i, j) occupies the
/// coefficient block starting at (j * rows + i) * dim, so column j is the
/// expanded coordinate vector of an element of R^rows.
class RMatrix {
 public:
  RMatrix(AlgebraPtr alg, size_t rows, size_t cols);

  static RMatrix identity(const AlgebraPtr& alg, size_t n);
  /// Entries are normal forms of the given polynomials (rows x cols).
  static RMatrix from_polynomials(const AlgebraPtr& alg, const std::vector<std::vector<ringkit::Polynomial>>& rows);

  const AlgebraPtr& algebra() const noexcept { return alg_; }
  size_t rows() const noexcept { return rows_; }
  size_t cols() const noexcept { return cols_; }

  std::span<const uint32_t> entry(size_t i, size_t j) const;
  std::span<uint32_t> entry(size_t i, size_t j);
  /// Expanded coordinates of column j (length rows * dim).
  std::span<const uint32_t> column(size_t j) const;
  std::span<uint32_t> column(size_t j);

  RingElement element(size_t i, size_t j) const;
  void set(size_t i, size_t j, const RingElement& e);
  void set(size_t i, size_t j, std::span<const uint32_t> coeffs);

  bool entry_is_zero(size_t i, size_t j) const;
  bool is_zero() const;
  /// Largest degree of an entry, -1 for the zero matrix.
  int max_degree() const;
  /// Every entry has zero constant term.
  bool entries_in_maximal_ideal() const;

  RMatrix operator*(const RMatrix& o) const;
  bool operator==(const RMatrix& o) const;

  /// Column subset / reordering.
  RMatrix select_columns(const std::vector<size_t>& cols) const;
  RMatrix without_row_and_column(size_t row, size_t col) const;

  /// Entries raised to the p^r-th power through a precomputed Frobenius table.
  RMatrix frobenius(const std::vector<linalg::SparseVec>& table) const;
  /// The same matrix over another algebra with the same presentation (normal
  /// forms recomputed from polynomials).
  RMatrix with_algebra(const AlgebraPtr& alg) const;
  /// Entries with every basis monomial of degree >= degree removed.
  RMatrix truncated(int degree) const;

  std::vector<std::vector<ringkit::Polynomial>> to_polynomials() const;
  std::string to_string() const;

 private:
  AlgebraPtr alg_;
  size_t rows_, cols_, dim_;
  std::vector<uint32_t> data_;
};

/// Degree shifts for which every nonzero entry (i, j) is homogeneous of degree
/// cols[j] - rows[i].
struct Grading {
  std::vector<int> rows;
  std::vector<int> cols;
};

/// Finds shifts when the ring is graded and the entries are homogeneous. With
/// `row_shifts` given only column shifts are solved for; generators that no
/// nonzero entry touches get shift 0. With weight w the rule becomes
/// cols[j] - rows[i] = w * deg(entry).
std::optional<Grading> infer_grading(const RMatrix& m, const std::vector<int>* row_shifts = nullptr, int weight = 1);

/// F_p-linear expansion of an R-matrix. Columns are ordered by
/// (deg s, j, s) so that every degree truncation is a prefix; rows are in the
/// natural order i * dim + t.
struct Expansion {
  linalg::LabeledMap map;
  std::vector<uint32_t> col_generator;  ///< j for each map column
  std::vector<uint32_t> col_basis;      ///< s for each map column
  std::vector<uint32_t> position;       ///< map column of (j, s) at j * dim + s

  size_t dim = 0;
  /// Map column for a natural coordinate j * dim + s.
  uint32_t column_of(size_t natural) const { return position[natural]; }
};

/// `row_shifts`/`col_shifts` may be empty (ungraded). Labels are
/// shift + weight * deg(s).
Expansion expand(const RMatrix& m, const std::vector<int>& row_shifts = {}, const std::vector<int>& col_shifts = {},
                 int weight = 1);

/// Columns (j, s) whose image is computed exactly at the algebra's cap:
/// deg s + maxdeg(m) < cap. All columns for Artinian algebras.
std::vector<bool> trusted_columns(const RMatrix& m, const Expansion& e);

/// Greedy Nakayama selection: indices of the input vectors (elements of R^g
/// given as expanded coordinates) whose images form a k-basis of N / mN,
/// where N is the span of all of them.
std::vector<size_t> minimal_generators(const AlgebraPtr& alg, size_t g, const std::vector<Coeffs>& vectors);

struct Syzygy {
  RMatrix matrix;
  std::vector<int> shifts;  ///< generator shifts, empty when ungraded
};

/// Minimal generators of ker(m) at the algebra's cap (no stabilization).
Syzygy syzygy_at_cap(const RMatrix& m, const std::vector<int>& row_shifts = {},
                     const std::vector<int>& col_shifts = {}, int weight = 1);

/// Minimal generators of ker(m). For non-Artinian algebras the computation
/// is repeated at the wide cap and CapUnstable is thrown on disagreement.
RMatrix syzygy(const RMatrix& m);

/// Cap used to confirm results computed at `cap`: 2 * cap - 2, at least cap + 1.
int wide_cap(int cap);

/// coker(relations), minimized on construction: unit entries are removed by
/// row and column operations, then redundant relations are dropped.
class ModulePresentation {
 public:
  ModulePresentation(AlgebraPtr alg, std::vector<std::vector<ringkit::Polynomial>> rows, std::string name = "M");
  ModulePresentation(const RMatrix& relations, std::string name = "M");

  static ModulePresentation from_spec(const AlgebraPtr& alg, const ringkit::ModuleSpec& spec);
  static ModulePresentation residue_field(const AlgebraPtr& alg);
  static ModulePresentation free(const AlgebraPtr& alg, size_t rank);

  const AlgebraPtr& algebra() const noexcept { return alg_; }
  const std::string& name() const noexcept { return name_; }
  size_t generators() const noexcept { return relations_.rows(); }
  /// The minimized relation matrix.
  const RMatrix& relations() const noexcept { return relations_; }
  /// Generators and relations before minimization.
  size_t input_generators() const noexcept { return source_.size(); }
  const std::vector<std::vector<ringkit::Polynomial>>& source() const noexcept { return source_; }
  bool minimal() const noexcept { return true; }
  bool is_free() const noexcept { return relations_.cols() == 0; }

  ModulePresentation with_cap(int cap) const;
  ModulePresentation with_algebra(const AlgebraPtr& alg) const;

 private:
  void minimize();
  AlgebraPtr alg_;
  std::vector<std::vector<ringkit::Polynomial>> source_;
  RMatrix relations_;
  std::string name_;
};

/// F_0 <- F_1 <- ... <- F_N with d_n : F_n -> F_{n-1}.
struct FreeComplex {
  AlgebraPtr algebra;
  std::vector<size_t> ranks;           ///< l_0..l_N
  std::vector<RMatrix> differentials;  ///< differentials[n - 1] = d_n
  std::vector<std::vector<int>> shifts;  ///< per F_n; empty when ungraded
  int weight = 1;                       ///< label = shift + weight * deg(s)
  bool minimal = false;
  /// Set when the complex continues past F_N (a truncated resolution).
  bool open_end = false;
  /// For non-Artinian algebras: the same complex computed at the wide cap.
  std::shared_ptr<const FreeComplex> wide;

  size_t length() const noexcept { return ranks.empty() ? 0 : ranks.size() - 1; }
  const RMatrix& d(size_t n) const { return differentials.at(n - 1); }
  bool graded() const noexcept { return !shifts.empty(); }

  /// d_n d_{n+1} = 0 for all n.
  bool is_complex() const;
  bool entries_in_maximal_ideal() const;

  /// Builds a complex from differentials, inferring shifts when possible.
  static FreeComplex from_differentials(const AlgebraPtr& alg, std::vector<RMatrix> ds,
                                        std::optional<size_t> rank0 = std::nullopt);
  /// The complex over another algebra with the same presentation.
  FreeComplex with_algebra(const AlgebraPtr& alg) const;
};

/// Consistent shifts for all F_n, if the complex is homogeneous.
std::optional<std::vector<std::vector<int>>> infer_complex_shifts(const AlgebraPtr& alg, const std::vector<size_t>& ranks,
                                                                   const std::vector<RMatrix>& ds);

/// Minimal free resolution F_0..F_N of M. For non-Artinian algebras the
/// resolution is recomputed at the wide cap; ranks and differentials
/// (truncated below the smaller cap) must agree or CapUnstable is thrown.
FreeComplex minimal_free_resolution(const ModulePresentation& M, size_t N);

/// Same, with prescribed generator shifts and label weight (labels are
/// shift + weight * deg(s)); used for modules whose natural grading is not
/// the standard one.
FreeComplex minimal_free_resolution(const ModulePresentation& M, size_t N, const std::vector<int>& generator_shifts,
                                    int weight);

std::vector<size_t> betti_numbers(const ModulePresentation& M, size_t N);

bool is_free(const ModulePresentation& M);

}  // namespace frobrig::resolve
