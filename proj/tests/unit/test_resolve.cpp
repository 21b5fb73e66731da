#include <gtest/gtest.h>

#include "frobrig/errors.hpp"
#include "frobrig/resolve.hpp"
#include "support.hpp"

using namespace frobrig;
using namespace frobrig::resolve;
using testing_support::algebra;
using testing_support::Gen;

namespace {

// Independent exactness check: H_j of the resolution vanishes for
// 1 <= j < N and H_0 has the dimension of M.
void expect_exact(const AlgebraPtr& A, const FreeComplex& F, size_t module_dim) {
  const auto R = testing_support::monomial_oracle(A);
  const auto C = testing_support::to_oracle(F);
  EXPECT_EQ(oracle::homology(R, C, 0), module_dim);
  for (size_t j = 1; j + 1 < F.ranks.size(); ++j) EXPECT_EQ(oracle::homology(R, C, j), 0u) << "j=" << j;
}

}  // namespace

TEST(RMatrix, ProductAndIdentity) {
  const auto A = algebra("ring F 2 [x,y] / (x^2, y^2)");
  const auto m = RMatrix::from_polynomials(A, {{ringkit::parse_polynomial("x", A->presentation()),
                                                ringkit::parse_polynomial("y", A->presentation())}});
  EXPECT_EQ(RMatrix::identity(A, 1) * m, m);
  EXPECT_EQ(m.max_degree(), 1);
  EXPECT_TRUE(m.entries_in_maximal_ideal());
  EXPECT_EQ(m.to_string(), "[[x, y]]");
}

TEST(Grading, InfersShiftsForHomogeneousMatrix) {
  const auto A = algebra("ring F 2 [x,y] / (x^2, y^2)");
  const auto& P = A->presentation();
  const auto m = RMatrix::from_polynomials(
      A, {{ringkit::parse_polynomial("x", P), ringkit::parse_polynomial("y^2", P)}, {ringkit::parse_polynomial("0", P), ringkit::parse_polynomial("x*y", P)}});
  const auto g = infer_grading(m);
  ASSERT_TRUE(g.has_value());
  EXPECT_EQ(g->cols[0] - g->rows[0], 1);
  EXPECT_EQ(g->cols[1] - g->rows[1], 2);
  const auto bad = RMatrix::from_polynomials(A, {{ringkit::parse_polynomial("x + x*y", P)}});
  EXPECT_FALSE(infer_grading(bad).has_value());
}

TEST(Presentation, MinimizationRemovesUnits) {
  const auto A = algebra("ring F 3 [x,y] / (x^2, y^2)");
  const ModulePresentation M(A, {{ringkit::Polynomial::constant(3, 2, 1), ringkit::parse_polynomial("x", A->presentation())},
                                 {ringkit::parse_polynomial("y", A->presentation()), ringkit::parse_polynomial("0", A->presentation())}});
  EXPECT_EQ(M.input_generators(), 2u);
  EXPECT_EQ(M.generators(), 1u);
  EXPECT_TRUE(M.relations().entries_in_maximal_ideal());
}

TEST(Presentation, FreeAndResidueField) {
  const auto A = algebra("ring F 2 [x,y] / (x^2, x*y, y^2)");
  EXPECT_TRUE(ModulePresentation::free(A, 2).is_free());
  EXPECT_FALSE(ModulePresentation::residue_field(A).is_free());
  const auto F = minimal_free_resolution(ModulePresentation::free(A, 2), 4);
  EXPECT_EQ(F.ranks.front(), 2u);
  for (size_t j = 1; j < F.ranks.size(); ++j) EXPECT_EQ(F.ranks[j], 0u);
}

TEST(Betti, ResidueFieldOverSquareZeroRings) {
  for (size_t n = 1; n <= 3; ++n) {
    std::string vars, rels;
    const char* names[] = {"x", "y", "z"};
    for (size_t a = 0; a < n; ++a) {
      vars += (a ? "," : "") + std::string(names[a]);
      for (size_t b = a; b < n; ++b) rels += (rels.empty() ? "" : ", ") + std::string(names[a]) + "*" + names[b];
    }
    const auto A = algebra("ring F 2 [" + vars + "] / (" + rels + ")");
    const auto b = betti_numbers(ModulePresentation::residue_field(A), n == 3 ? 4 : 6);
    for (size_t j = 0; j < b.size(); ++j) EXPECT_EQ(b[j], oracle::betti_of_k_square_zero(n, j)) << "n=" << n << " j=" << j;
  }
}

TEST(Betti, PrincipalIdealRings) {
  // Over F_3[x]/(x^3): k and R/(x^2) have periodic resolutions of rank 1.
  const auto A = algebra("ring F 3 [x] / (x^3)");
  const auto k = betti_numbers(ModulePresentation::residue_field(A), 6);
  EXPECT_EQ(k, std::vector<size_t>(7, 1));
  const auto F = minimal_free_resolution(ModulePresentation(A, {{ringkit::parse_polynomial("x^2", A->presentation())}}), 4);
  EXPECT_EQ(F.d(1).to_string(), "[[x^2]]");
  EXPECT_EQ(F.d(2).to_string(), "[[x]]");
  EXPECT_EQ(F.d(3).to_string(), "[[x^2]]");
}

TEST(Resolution, NonArtinianExample) {
  // R = F_2[x,y]/(xy, x^2), M = R/(x): ranks 1 1 2 3 5 ...
  const auto A = testing_support::load_algebra("ex31.ring");
  const auto M = ModulePresentation(A, {{ringkit::parse_polynomial("x", A->presentation())}});
  const auto F = minimal_free_resolution(M, 5);
  EXPECT_EQ(F.ranks, (std::vector<size_t>{1, 1, 2, 3, 5, 8}));
  EXPECT_TRUE(F.is_complex());
  ASSERT_TRUE(F.wide);
  EXPECT_EQ(F.wide->ranks, F.ranks);
}

class ResolutionProperty : public ::testing::TestWithParam<const char*> {};

TEST_P(ResolutionProperty, RandomModulesGiveMinimalExactComplexes) {
  const auto A = algebra(GetParam());
  const auto R = testing_support::monomial_oracle(A);
  Gen gen(2024);
  for (int trial = 0; trial < 25; ++trial) {
    const size_t g = static_cast<size_t>(gen.between(1, 2)), h = static_cast<size_t>(gen.between(1, 3));
    const auto rows = gen.matrix(A->p(), A->num_vars(), g, h);
    const ModulePresentation M(A, rows);
    const auto F = minimal_free_resolution(M, 4);
    ASSERT_TRUE(F.is_complex());
    EXPECT_TRUE(F.entries_in_maximal_ideal());
    // dim M from the oracle, using the presentation before minimization.
    oracle::Complex pres;
    pres.ranks = {g, h};
    pres.ds.emplace_back();
    for (const auto& row : rows) {
      pres.ds.back().emplace_back();
      for (const auto& f : row) pres.ds.back().back().push_back(testing_support::to_oracle(f));
    }
    const size_t module_dim = oracle::homology(R, pres, 0);
    expect_exact(A, F, module_dim);
  }
}

INSTANTIATE_TEST_SUITE_P(MonomialRings, ResolutionProperty,
                         ::testing::Values("ring F 2 [x,y] / (x^2, x*y, y^2)", "ring F 3 [x,y] / (x^3, x^2*y, x*y^2, y^3)",
                                           "ring F 2 [x,y] / (x^2, y^3)", "ring F 2 [x,y,z] / (x^2, y^2, z^2, x*y*z)"));

TEST(Syzygy, KernelOfVariableRow) {
  const auto A = algebra("ring F 2 [x,y] / (x^2, x*y, y^2)");
  const auto m = RMatrix::from_polynomials(A, {{ringkit::parse_polynomial("x", A->presentation()),
                                                ringkit::parse_polynomial("y", A->presentation())}});
  const auto s = syzygy(m);
  EXPECT_EQ(s.cols(), 4u);
  EXPECT_TRUE((m * s).is_zero());
}

TEST(WideCap, Formula) {
  EXPECT_EQ(wide_cap(8), 14);
  EXPECT_EQ(wide_cap(2), 3);
}
