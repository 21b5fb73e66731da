#include <gtest/gtest.h>

#include "frobrig/errors.hpp"
#include "frobrig/invariants.hpp"
#include "support.hpp"

using namespace frobrig;
using namespace frobrig::invariants;
using testing_support::algebra;
using testing_support::load_algebra;

TEST(Socle, SquareZeroRingIsTheMaximalIdeal) {
  EXPECT_EQ(socle(algebra("ring F 2 [x,y] / (x^2, x*y, y^2)")).size(), 2u);
  EXPECT_EQ(socle(algebra("ring F 3 [x] / (x^3)")).size(), 1u);
}

TEST(Socle, GorensteinExample) {
  const auto A = load_algebra("ex33.ring");
  EXPECT_EQ(socle(A).size(), 1u);
  EXPECT_EQ(A->nilpotency_index(), 3);
  EXPECT_EQ(A->dim(), 5u);
}

TEST(Colon, NonArtinianAnnihilator) {
  // In F_2[x,y]/(xy, x^2) the annihilator of m is spanned by x.
  const auto A = load_algebra("ex31.ring");
  const auto ann = colon_into_zero(A, maximal_ideal_power(A, 1));
  ASSERT_EQ(ann.size(), 1u);
  EXPECT_EQ(A->to_polynomial(ann[0]).to_string(A->variables()), "x");
}

TEST(Condition1, Examples) {
  EXPECT_TRUE(condition1(load_algebra("ex31.ring")));
  EXPECT_TRUE(condition1(load_algebra("ex32.ring")));
  EXPECT_TRUE(condition1(load_algebra("ex33.ring")));
  EXPECT_TRUE(condition1(algebra("ring F 2 [x,y] / (x^2, x*y, y^2)")));
  // Complete intersection with m^p != 0: the socle x^3 y lies in m^2.
  EXPECT_FALSE(condition1(algebra("ring F 2 [x,y] / (x^4, y^2)")));
}

TEST(Condition1, FieldIsReportedFalse) {
  const auto A = load_algebra("field.ring");
  EXPECT_TRUE(is_field(A));
  EXPECT_FALSE(condition1(A));
  const auto rep = invariant_report(A);
  ASSERT_FALSE(rep.notes.empty());
  EXPECT_NE(rep.notes.front().find("regular"), std::string::npos);
}

TEST(CInvariant, Values) {
  EXPECT_EQ(c_invariant(load_algebra("ex31.ring")), 2);
  EXPECT_EQ(c_invariant(load_algebra("ex33.ring")), 3);
  EXPECT_EQ(c_invariant(algebra("ring F 2 [x,y] / (x^2, x*y, y^2)")), 2);
  EXPECT_EQ(c_invariant(algebra("ring F 3 [x] / (x^3)")), 3);
  EXPECT_EQ(c_invariant(algebra("ring F 2 [x] / (x^5)")), 5);
}

TEST(CInvariant, PositiveDepthThrows) {
  try {
    c_invariant(load_algebra("depth1.ring"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PositiveDepth);
  }
}

TEST(Threshold, LeastPowerAboveC) {
  EXPECT_EQ(min_r_threshold(2, 2), 2);
  EXPECT_EQ(min_r_threshold(3, 2), 2);
  EXPECT_EQ(min_r_threshold(4, 2), 3);
  EXPECT_EQ(min_r_threshold(2, 3), 1);
  EXPECT_EQ(min_r_threshold(1, 5), 1);
}

TEST(Regular, SequencesAndQuotients) {
  const auto A = load_algebra("depth1.ring");
  const auto& P = A->presentation();
  EXPECT_TRUE(is_regular(A, ringkit::parse_polynomial("y", P)));
  EXPECT_FALSE(is_regular(A, ringkit::parse_polynomial("x", P)));
  const auto ys = find_regular_sequence(A);
  ASSERT_EQ(ys.size(), 1u);
  const auto Q = reduce_regular(A, ys);
  EXPECT_TRUE(Q->artinian());
  EXPECT_EQ(Q->dim(), 2u);
  try {
    reduce_regular(A, {ringkit::parse_polynomial("x", P)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotRegular);
  }
}

TEST(Regular, DepthZeroHasNoRegularElement) {
  EXPECT_TRUE(find_regular_sequence(load_algebra("ex31.ring")).empty());
  EXPECT_TRUE(find_regular_sequence(load_algebra("ex33.ring")).empty());
}

TEST(Report, DepthOneRings) {
  const auto r2 = invariant_report(load_algebra("depth1.ring"));
  EXPECT_EQ(r2.depth, 1u);
  EXPECT_EQ(r2.c_y, 2);
  EXPECT_FALSE(r2.c.has_value());
  EXPECT_EQ(r2.r_threshold, 2);
  const auto r3 = invariant_report(load_algebra("depth1_p3.ring"));
  EXPECT_EQ(r3.c_y, 3);
  EXPECT_EQ(r3.r_threshold, 2);
}

TEST(Report, ArtinianFields) {
  const auto rep = invariant_report(load_algebra("ex33.ring"));
  EXPECT_TRUE(rep.artinian);
  EXPECT_EQ(rep.length, 5u);
  EXPECT_EQ(rep.nilpotency, 3);
  EXPECT_EQ(rep.socle_dim, 1u);
  EXPECT_TRUE(rep.condition1);
  EXPECT_EQ(rep.c, 3);
}

TEST(Report, CapStability) {
  // The ring invariants of a non-Artinian ring do not move with the cap.
  const auto doc = testing_support::load_document("ex31.ring");
  auto pres = doc.ring;
  const auto a = invariant_report(ringkit::build_algebra(pres));
  pres.cap = 14;
  const auto b = invariant_report(ringkit::build_algebra(pres));
  EXPECT_EQ(a.condition1, b.condition1);
  EXPECT_EQ(a.c, b.c);
  EXPECT_EQ(a.depth, b.depth);
  EXPECT_EQ(a.socle_dim, b.socle_dim);
}
