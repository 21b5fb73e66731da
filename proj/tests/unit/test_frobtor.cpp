#include <gtest/gtest.h>

#include "frobrig/errors.hpp"
#include "frobrig/frobtor.hpp"
#include "support.hpp"

using namespace frobrig;
using namespace frobrig::frobtor;
using resolve::ModulePresentation;
using testing_support::algebra;
using testing_support::Gen;
using testing_support::load_algebra;

namespace {

ModulePresentation coker(const ringkit::AlgebraPtr& A, const char* entry) {
  return ModulePresentation(A, {{ringkit::parse_polynomial(entry, A->presentation())}});
}

std::vector<std::string> lengths(const TorTable& t) {
  std::vector<std::string> out;
  for (const auto& row : t.rows) out.push_back(row.length.to_string());
  return out;
}

}  // namespace

TEST(Ratio, LowestTerms) {
  EXPECT_EQ(Ratio::of(6, 4).to_string(), "3/2");
  EXPECT_EQ(Ratio::of(9, 3).to_string(), "3");
  EXPECT_EQ(Ratio::of(6, 4), Ratio::of(3, 2));
}

TEST(Length, Markers) {
  EXPECT_EQ(Length::infinite().to_string(), "INF");
  EXPECT_EQ(Length::unstable().to_string(), "UNSTABLE");
  EXPECT_TRUE(Length::infinite().is_nonzero());
  EXPECT_FALSE(Length::unstable().is_nonzero());
  EXPECT_FALSE(Length::unstable().is_zero());
}

TEST(Twist, RaisesEntriesToPower) {
  const auto A = algebra("ring F 3 [x] / (x^7)");
  const auto F = resolve::minimal_free_resolution(coker(A, "x^2"), 2);
  const auto T = twist(F, 1);
  EXPECT_EQ(T.d(1).to_string(), "[[x^6]]");
  EXPECT_EQ(F.d(2).to_string(), "[[x^5]]");
  EXPECT_EQ(T.d(2).to_string(), "[[0]]");
  EXPECT_EQ(T.ranks, F.ranks);
}

TEST(Twist, VanishesWhenMpIsZero) {
  const auto A = algebra("ring F 2 [x,y] / (x^2, x*y, y^2)");
  const auto F = resolve::minimal_free_resolution(ModulePresentation::residue_field(A), 4);
  for (int r = 1; r <= 3; ++r)
    for (const auto& d : twist(F, r).differentials) EXPECT_TRUE(d.is_zero());
}

class HomologyProperty : public ::testing::TestWithParam<const char*> {};

TEST_P(HomologyProperty, TwistedHomologyMatchesOracle) {
  const auto A = algebra(GetParam());
  const auto R = testing_support::monomial_oracle(A);
  Gen gen(31337);
  for (int trial = 0; trial < 15; ++trial) {
    const ModulePresentation M(A, gen.matrix(A->p(), A->num_vars(), static_cast<size_t>(gen.between(1, 2)),
                                             static_cast<size_t>(gen.between(1, 2))));
    const auto F = resolve::minimal_free_resolution(M, 4);
    for (int r = 1; r <= 2; ++r) {
      const auto T = twist(F, r);
      const auto C = oracle::twisted(R, testing_support::to_oracle(F), r);
      for (size_t j = 0; j < F.length(); ++j) {
        const auto len = homology_length(T, j);
        ASSERT_TRUE(len.is_finite());
        EXPECT_EQ(len.value, oracle::homology(R, C, j)) << "trial " << trial << " r " << r << " j " << j;
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(MonomialRings, HomologyProperty,
                         ::testing::Values("ring F 2 [x,y] / (x^3, x*y^2, y^4)", "ring F 3 [x,y] / (x^4, y^4)",
                                           "ring F 2 [x] / (x^9)", "ring F 2 [x,y,z] / (x^2, y^3, z^3)"));

TEST(Tor, ResidueFieldOverSquareZeroRing) {
  const auto A = load_algebra("r1.ring");
  for (int r = 1; r <= 2; ++r) {
    const auto t = tor_frobenius(ModulePresentation::residue_field(A), r, 5);
    for (const auto& row : t.rows) {
      EXPECT_EQ(row.length.value, 3 * row.betti);
      ASSERT_TRUE(row.ratio.has_value());
      EXPECT_EQ(*row.ratio, Ratio::of(3, 1));
    }
  }
}

TEST(Tor, NonArtinianExampleLengths) {
  const auto A = load_algebra("ex31.ring");
  const auto M = coker(A, "x");
  EXPECT_EQ(lengths(tor_frobenius(M, 1, 4)), (std::vector<std::string>{"INF", "3", "4", "7", "11"}));
  EXPECT_EQ(lengths(tor_frobenius(M, 2, 4)), (std::vector<std::string>{"INF", "5", "6", "11", "17"}));
}

TEST(Tor, CapStabilityAcrossCaps) {
  auto pres = testing_support::load_document("ex31.ring").ring;
  const auto at8 = lengths(tor_frobenius(coker(ringkit::build_algebra(pres), "x"), 1, 4));
  pres.cap = 14;
  const auto at14 = lengths(tor_frobenius(coker(ringkit::build_algebra(pres), "x"), 1, 4));
  EXPECT_EQ(at8, at14);
}

TEST(Tor, FiniteModulesBeyondTheWorkingWindow) {
  // Tor_j(k, ^phi^2 R) over ex32 lives in degrees the cap-8 window does not
  // reach; the lengths must still come out finite and cap-independent.
  auto pres = testing_support::load_document("ex32.ring").ring;
  std::vector<std::vector<std::string>> tables;
  for (int cap : {8, 14}) {
    pres.cap = cap;
    tables.push_back(lengths(tor_frobenius(ModulePresentation::residue_field(ringkit::build_algebra(pres)), 2, 3)));
  }
  EXPECT_EQ(tables[0], tables[1]);
  EXPECT_EQ(tables[0], (std::vector<std::string>{"17", "19", "54", "109"}));
}

TEST(Tor, CapTooSmallIsReported) {
  const auto A = algebra("ring F 2 [x,y] / (x*y, x^2) cap 4");
  try {
    tor_frobenius(coker(A, "x"), 2, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapTooSmall);
  }
}

TEST(Tor, RequiredCap) {
  const auto A = load_algebra("ex31.ring");
  const auto F = resolve::minimal_free_resolution(coker(A, "x"), 3);
  EXPECT_EQ(required_cap(F, 1), 4);
  EXPECT_EQ(required_cap(F, 2), 6);
}

TEST(RatioReport, ConstantEqualsLength) {
  const auto rep = ratio_report(ModulePresentation::residue_field(algebra("ring F 3 [x,y] / (x^3, x^2*y, x*y^2, y^3)")), 1, 4);
  EXPECT_TRUE(rep.constancy_applicable);
  EXPECT_EQ(rep.ring_length, 6u);
  EXPECT_EQ(rep.constant, true);
  EXPECT_EQ(rep.verdict, "ratio constant = 6");
}

TEST(RatioReport, FinitePdIsNotApplicable) {
  const auto A = load_algebra("r1.ring");
  try {
    ratio_report(ModulePresentation::free(A, 1), 1, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotApplicable);
  }
}

TEST(Rigidity, ConsistentOnConditionOneRing) {
  const auto A = load_algebra("ex33.ring");
  const auto rep = rigidity_probe(ModulePresentation::residue_field(A), 1, 4);
  EXPECT_FALSE(rep.flagged());
  EXPECT_FALSE(rep.first_vanishing.has_value());
  EXPECT_TRUE(rep.condition1);
}

TEST(Rigidity, FreeModuleVanishes) {
  const auto A = load_algebra("ex33.ring");
  const auto rep = rigidity_probe(ModulePresentation::free(A, 2), 2, 3);
  EXPECT_TRUE(rep.is_free);
  EXPECT_EQ(rep.pd_finite, true);
  EXPECT_EQ(rep.first_vanishing, 1u);
  EXPECT_FALSE(rep.flagged());
}

TEST(Rigidity, FinitePdOverDepthOne) {
  const auto A = load_algebra("depth1.ring");
  const auto rep = rigidity_probe(coker(A, "y"), 2, 4);
  EXPECT_EQ(rep.pd_finite, true);
  EXPECT_EQ(rep.first_vanishing, 1u);
  EXPECT_FALSE(rep.flagged());
}

TEST(Balance, AgreesOnArtinianRings) {
  for (const char* text : {"ring F 2 [x,y] / (x^2, x*y, y^2)", "ring F 3 [x] / (x^3)", "ring F 2 [x] / (x^4)"}) {
    const auto A = algebra(text);
    for (int r = 1; r <= 2; ++r) {
      const auto rep = tor_balance_oracle(ModulePresentation::residue_field(A), r, 3);
      EXPECT_TRUE(rep.all_equal()) << text << " r=" << r;
    }
  }
}

TEST(Balance, RejectsNonArtinian) {
  try {
    tor_balance_oracle(ModulePresentation::residue_field(load_algebra("ex31.ring")), 1, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotArtinian);
  }
}

TEST(QuotientCoefficients, RegularElementOverDepthOne) {
  const auto A = load_algebra("depth1.ring");
  const auto y = ringkit::parse_polynomial("y", A->presentation());
  const auto t = tor_vs_quotient_coeffs(coker(A, "x"), 2, {y}, 3);
  for (const auto& row : t.rows) EXPECT_EQ(row.length, Length::finite(2)) << row.j;
}
