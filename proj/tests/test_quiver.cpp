#include <gtest/gtest.h>

#include "d4vgit/quiver.hpp"
#include "d4vgit/random.hpp"

using namespace d4vgit;

TEST(BuildRep, ZeroX) {
  PointHV p = base_point();
  p.x = {Scalar(0), Scalar(0)};
  QuiverRep r = build_rep(p);
  EXPECT_EQ(r, QuiverRep{});
}

TEST(BuildRep, ChartNormalizedLeg) {
  PointHV p;
  p.x = {Scalar(1), Scalar(0)};
  p.alpha = {Scalar(1), Scalar(2), Scalar(3)};
  p.B[0] = {Scalar(1), Scalar(0), Scalar(7)};
  QuiverRep r = build_rep(p);
  EXPECT_EQ(r.E0, (Vec<Scalar, 2>{Scalar(1), Scalar(0)}));
  EXPECT_EQ(r.D[0], (Vec<Scalar, 2>{Scalar(1), Scalar(0)}));
  EXPECT_EQ(r.E[0], (Vec<Scalar, 2>{Scalar(0), Scalar(1)}));
}

TEST(Preprojective, ZeroRep) { EXPECT_TRUE(preprojective_residual(QuiverRep{}).all()); }

TEST(Preprojective, HoldsOnZ) {
  Sampler s(41);
  for (int k = 0; k < 100; ++k) {
    PointHV p = act(s.group_element(), base_point());
    p.x = {s.scalar(), s.scalar()};
    EXPECT_TRUE(preprojective_residual(build_rep(p)).all());
  }
}

TEST(Preprojective, OffZIdentities) {
  Sampler s(42);
  for (int k = 0; k < 100; ++k) {
    PointHV p = s.point();
    auto res = preprojective_residual(build_rep(p));
    EXPECT_TRUE(res.legs_zero());
    EXPECT_TRUE((res.central[0][0] + res.central[1][1]).is_zero());
    EXPECT_EQ(area_form(res.central), e1_at_x_squared(p, residuals(p)));
  }
}

TEST(Preprojective, WitnessE2NotE1Fails) {
  PointHV w = witness_E2_not_E1();
  auto res = preprojective_residual(build_rep(w));
  EXPECT_TRUE(res.legs_zero());
  EXPECT_FALSE(res.central_zero());
  EXPECT_TRUE(king_stable(build_rep(w)));
}

TEST(King, Examples) {
  EXPECT_FALSE(king_stable(QuiverRep{}));
  QuiverRep r;
  r.E0 = {Scalar(1), Scalar(0)};
  r.D[0] = {Scalar(1), Scalar(0)};
  r.E[0] = {Scalar(0), Scalar(1)};
  r.D[1] = {Scalar(2), Scalar(1)};
  r.D[2] = {Scalar(0), Scalar(3)};
  EXPECT_TRUE(king_stable(r));
  r.D[1] = {Scalar(0), Scalar(0)};
  EXPECT_FALSE(king_stable(r));
}

TEST(BuildRep, Equivariance) {
  Sampler s(43);
  for (int k = 0; k < 50; ++k) {
    PointHV p = s.point();
    GroupElement h = s.group_element();
    EXPECT_EQ(build_rep(act(h, p)), transport(h, build_rep(p)));
    EXPECT_EQ(king_stable(build_rep(act(h, p))), king_stable(build_rep(p)));
  }
}
