#include <gtest/gtest.h>

#include "frobrig/errors.hpp"
#include "frobrig/ringkit.hpp"
#include "support.hpp"

using namespace frobrig;
using namespace frobrig::ringkit;
using testing_support::algebra;
using testing_support::Gen;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return static_cast<ErrorCode>(0);
}

}  // namespace

TEST(Parser, ReadsRingLine) {
  const auto pres = parse_presentation("ring F 2 [x,y] / (x*y, x^2) cap 8");
  EXPECT_EQ(pres.p, 2u);
  EXPECT_EQ(pres.variables, (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(pres.relations.size(), 2u);
  EXPECT_EQ(pres.cap, 8);
}

TEST(Parser, EmptyRelationsAndDefaultCap) {
  const auto pres = parse_presentation("ring F 3 [x] / ()");
  EXPECT_TRUE(pres.relations.empty());
  EXPECT_EQ(pres.cap, kDefaultCap);
}

TEST(Parser, RoundTripsThroughPrinter) {
  for (const char* text : {"ring F 2 [x,y] / (x^2, x*y, y^2) cap 8", "ring F 3 [x] / () cap 4",
                           "ring F 5 [a,b,c] / (a^2 - 2*b*c, c^3 + a) cap 9"}) {
    const auto pres = parse_presentation(text);
    EXPECT_EQ(parse_presentation(print_presentation(pres)), pres) << text;
  }
}

TEST(Parser, ReportsLineAndColumn) {
  try {
    parse_presentation("ring F 2 [x, y]\n / (x*, y)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_GT(e.column(), 1);
  }
}

TEST(Parser, RejectsBadInput) {
  EXPECT_EQ(code_of([] { parse_presentation("ring F 4 [x] / (x^2)"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_presentation("ring F 2 [x, x] / (x^2)"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_presentation("ring F 2 [x] / (x + 1)"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_presentation("ring F 2 [x] / (y)"); }), ErrorCode::Parse);
}

TEST(Parser, DocumentWithModules) {
  const auto doc = parse_document("# comment\nring F 2 [x, y] / (x^2, y^2)\nmodule k = k\nmodule M = coker [[x, y], [0, x]]\n");
  ASSERT_EQ(doc.modules.size(), 2u);
  EXPECT_EQ(doc.modules[0].kind, ModuleSpec::Kind::ResidueField);
  EXPECT_EQ(doc.modules[1].rows.size(), 2u);
  EXPECT_EQ(doc.modules[1].rows[0].size(), 2u);
  EXPECT_EQ(code_of([] { parse_document("ring F 2 [x] / (x^2)\nmodule k = k\nmodule k = k"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_document("ring F 2 [x] / (x^2)\nmodule M = coker [[x], [x, x]]"); }), ErrorCode::Parse);
}

TEST(Grevlex, OrdersDegreeThenReverseLex) {
  EXPECT_TRUE(grevlex_greater({0, 0, 2}, {1, 0, 0}));
  EXPECT_TRUE(grevlex_greater({1, 1, 0}, {2, 0, 0}) == false);
  EXPECT_TRUE(grevlex_greater({2, 0, 0}, {1, 1, 0}));
  EXPECT_TRUE(grevlex_greater({1, 1, 0}, {1, 0, 1}));
  EXPECT_TRUE(grevlex_greater({0, 2, 0}, {1, 0, 1}));
}

TEST(Groebner, ReducedBasisOfKnownIdeal) {
  const auto pres = parse_presentation("ring F 2 [x, y] / (x^2 + y^2, x*y)");
  const auto gb = reduced_groebner_basis(pres.relations);
  // {y^3, x^2 + y^2, x y}, sorted by descending lead monomial
  ASSERT_EQ(gb.size(), 3u);
  EXPECT_EQ(gb[0].to_string(pres.variables), "y^3");
  EXPECT_EQ(gb[1].to_string(pres.variables), "x^2 + y^2");
}

TEST(Algebra, StandardMonomialCounts) {
  EXPECT_EQ(algebra("ring F 2 [x,y] / (x^2, x*y, y^2)")->dim(), 3u);
  EXPECT_EQ(algebra("ring F 3 [x,y] / (x^3, x^2*y, x*y^2, y^3)")->dim(), 6u);
  EXPECT_EQ(algebra("ring F 2 [x] / (x^2)")->dim(), 2u);
  const auto trunc = algebra("ring F 3 [x] / () cap 4");
  EXPECT_FALSE(trunc->artinian());
  EXPECT_EQ(trunc->dim(), 4u);
  const auto ex31 = algebra("ring F 2 [x,y] / (x*y, x^2) cap 8");
  EXPECT_FALSE(ex31->artinian());
  EXPECT_EQ(ex31->dim(), 9u);  // 1, x, y, ..., y^7
}

TEST(Algebra, BasisIsSortedByDegreeWithOneFirst) {
  const auto A = algebra("ring F 2 [x,y,z] / (x^2, y^2, z^2)");
  EXPECT_EQ(A->standard_monomials().front(), (Exponents{0, 0, 0}));
  for (size_t i = 1; i < A->dim(); ++i) EXPECT_LE(A->basis_degree(i - 1), A->basis_degree(i));
  EXPECT_EQ(A->nilpotency_index(), 4);
}

TEST(Algebra, Errors) {
  RingPresentation unit;
  unit.p = 3;
  unit.variables = {"x"};
  unit.relations = {Polynomial::constant(3, 1, 2)};
  EXPECT_EQ(code_of([&] { build_algebra(unit); }), ErrorCode::ZeroRing);
  EXPECT_EQ(code_of([] { algebra("ring F 2 [x,y] / (x*y^4) cap 4"); }), ErrorCode::CapTooSmall);
  // Artinian rings do not depend on the cap.
  EXPECT_EQ(algebra("ring F 2 [x] / (x^5) cap 4")->dim(), 5u);
  EXPECT_EQ(code_of([] { algebra("ring F 2 [x] / () cap 4")->length(); }), ErrorCode::NotArtinian);
}

TEST(Algebra, NormalFormOfRelationIsZero) {
  const auto A = testing_support::load_algebra("ex33.ring");
  for (const auto& rel : A->presentation().relations) EXPECT_TRUE(nf(A, rel).is_zero());
  const auto xy = nf(A, parse_polynomial("x*y", A->presentation()));
  const auto zz = nf(A, parse_polynomial("z^2", A->presentation()));
  EXPECT_EQ(xy, zz);
  EXPECT_FALSE(xy.is_zero());
}

TEST(Algebra, TruncationFlagForNonArtinian) {
  const auto A = algebra("ring F 2 [x, y] / (x^2) cap 4");
  bool truncated = false;
  A->normal_form(parse_polynomial("y^5", A->presentation()), &truncated);
  EXPECT_TRUE(truncated);
}

TEST(Frobenius, KillsMaximalIdealWhenMpIsZero) {
  const auto A = algebra("ring F 2 [x,y] / (x^2, x*y, y^2)");
  EXPECT_TRUE(frob_power(RingElement::variable(A, 0) + RingElement::variable(A, 1), 1).is_zero());
  EXPECT_EQ(frob_power(RingElement::one(A), 3), RingElement::one(A));
}

class FrobeniusProperty : public ::testing::TestWithParam<const char*> {};

TEST_P(FrobeniusProperty, IsARingHomomorphism) {
  const auto A = algebra(GetParam());
  Gen gen(99);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = nf(A, gen.poly(A->p(), A->num_vars(), 3, 3));
    const auto b = nf(A, gen.poly(A->p(), A->num_vars(), 3, 3));
    for (int r = 1; r <= 2; ++r) {
      EXPECT_EQ(frob_power(a * b, r), frob_power(a, r) * frob_power(b, r));
      EXPECT_EQ(frob_power(a + b, r), frob_power(a, r) + frob_power(b, r));
    }
  }
}

TEST_P(FrobeniusProperty, MultiplicationIsCommutativeAndAssociative) {
  const auto A = algebra(GetParam());
  Gen gen(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = nf(A, gen.poly(A->p(), A->num_vars(), 3, 3));
    const auto b = nf(A, gen.poly(A->p(), A->num_vars(), 3, 3));
    const auto c = nf(A, gen.poly(A->p(), A->num_vars(), 3, 3));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

INSTANTIATE_TEST_SUITE_P(Rings, FrobeniusProperty,
                         ::testing::Values("ring F 2 [x,y] / (x^2, x*y, y^2)", "ring F 3 [x,y] / (x^3, y^2 - x*y)",
                                           "ring F 2 [x,y,z] / (x^2, y^2, x*z, y*z, x*y + z^2, z^3)",
                                           "ring F 5 [x, y] / (x^2 - y^3, x*y)"));

TEST(Oracle, MonomialRingDimensionsAgree) {
  for (const char* text : {"ring F 2 [x,y] / (x^2, x*y, y^2)", "ring F 3 [x,y] / (x^3, x^2*y, x*y^2, y^3)",
                           "ring F 2 [x,y,z] / (x^2, y^3, z^2, x*y*z)"}) {
    const auto A = algebra(text);
    EXPECT_EQ(testing_support::monomial_oracle(A).dim(), A->dim()) << text;
  }
}
