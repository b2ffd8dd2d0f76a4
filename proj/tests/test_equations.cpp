#include <gtest/gtest.h>

#include "d4vgit/equations.hpp"
#include "d4vgit/random.hpp"

using namespace d4vgit;

namespace {

Vec<Scalar, 3> form(long p, long q, long r) { return {Scalar(p), Scalar(q), Scalar(r)}; }

// Points of Z outside Z-o: rank-one B with both factors isotropic and beta = 0,
// or alpha = 0 with any rank-one B.
PointHV boundary_point(Sampler& s) {
  PointHV p;
  p.x = {s.scalar(), s.scalar()};
  Vec<Scalar, 3> m = s.coin() ? form(1, 0, 0) : form(0, 0, 1);
  if (s.coin()) {
    Scalar c = s.nonzero();
    Vec<Scalar, 3> ell{c, c * Scalar::i(), Scalar(0)};
    p.alpha = {Scalar(1), Scalar(1), s.scalar()};
    for (int i = 0; i < 3; ++i) p.B[i] = scale(ell[i], m);
  } else {
    Vec<Scalar, 3> ell{s.scalar(), s.scalar(), s.scalar()};
    Vec<Scalar, 3> mm{s.scalar(), s.scalar(), s.scalar()};
    p.beta = s.scalar();
    for (int i = 0; i < 3; ++i) p.B[i] = scale(ell[i], mm);
  }
  return p;
}

}  // namespace

TEST(JPairing, Examples) {
  Scalar r1(7, 3);
  Vec<Scalar, 3> b1{Scalar(1), Scalar(0), r1};
  EXPECT_EQ(j_pairing(b1, b1), Scalar(2) * r1);
  Vec<Scalar, 3> b2{Scalar(2), Scalar(5), Scalar(-1)};
  EXPECT_EQ(j_pairing(b1, b2), b2[2] + r1 * b2[0]);
  Sampler s(31);
  for (int k = 0; k < 50; ++k) {
    Vec<Scalar, 3> u{s.scalar(), s.scalar(), s.scalar()}, v{s.scalar(), s.scalar(), s.scalar()};
    EXPECT_EQ(j_pairing(u, v), j_pairing(v, u));
    EXPECT_EQ(j_pairing(u, v), dot(u, K_matrix<Scalar>() * v));
  }
  EXPECT_EQ(J_matrix<Scalar>() * K_matrix<Scalar>(), Mat3<Scalar>::identity());
}

TEST(JPairing, ChartWedgeIdentity) {
  Sampler s(32);
  Scalar r1 = s.scalar(), p2 = s.scalar(), q2 = s.scalar(), r2 = s.scalar();
  Vec<Scalar, 3> b1{Scalar(1), Scalar(0), r1}, b2{p2, q2, r2};
  Vec<Scalar, 3> expect{-(r1 * q2), r1 * p2 - r2, q2};
  EXPECT_EQ(cross(b1, b2), expect);
}

TEST(Residuals, BasePointAndZero) {
  PointHV b = base_point();
  EXPECT_TRUE(residuals(b).all());
  EXPECT_EQ(omega(b), Scalar(2));
  EXPECT_TRUE(residuals(PointHV{}).all());
  EXPECT_EQ(residuals(b).components().size(), 24u);
}

TEST(Residuals, BetaNegated) {
  PointHV b = base_point();
  b.beta = -b.beta;
  auto r = residuals(b);
  EXPECT_TRUE(r.e1_zero());
  EXPECT_TRUE(r.e2_zero());
  EXPECT_FALSE(r.e3_zero());
}

TEST(InZo, Examples) {
  PointHV b = base_point();
  EXPECT_TRUE(in_Zo(b));
  EXPECT_EQ(det(b.B), b.beta.pow(3) * b.alpha[0] * b.alpha[1] * b.alpha[2] * Scalar(1, 2));
  EXPECT_FALSE(in_Zo(PointHV{}));
  Sampler s(33);
  for (int k = 0; k < 50; ++k) EXPECT_TRUE(in_Zo(act(s.group_element(), b)));
  PointHV off = b;
  off.B[0][0] = 1;
  EXPECT_THROW(in_Zo(off), ContractViolation);
}

TEST(Residuals, GInvarianceOfZ) {
  Sampler s(34);
  for (int k = 0; k < 200; ++k) {
    PointHV p = (k % 2) ? act(s.group_element(), base_point()) : boundary_point(s);
    ASSERT_TRUE(residuals(p).all());
    EXPECT_TRUE(residuals(act(s.group_element(), p)).all());
  }
}

TEST(Residuals, E3AndInvertibleImpliesE1E2) {
  // Random points with E3 and det B != 0 are exactly Z-o points; start from
  // random Z-o points and perturb alpha, which breaks everything at once.
  Sampler s(35);
  for (int k = 0; k < 50; ++k) {
    PointHV p = act(s.group_element(), base_point());
    auto r = residuals(p);
    ASSERT_TRUE(r.e3_zero());
    ASSERT_FALSE(det(p.B).is_zero());
    EXPECT_TRUE(r.e1_zero());
    EXPECT_TRUE(r.e2_zero());
    PointHV bad = p;
    bad.alpha[0] += 1;
    EXPECT_FALSE(residuals(bad).e3_zero());
  }
}

TEST(Omega, TransformsByInverseDet) {
  Sampler s(36);
  for (int k = 0; k < 50; ++k) {
    PointHV p = s.point();
    GroupElement h = s.group_element();
    EXPECT_EQ(omega(act(h, p)), omega(p) / h.det_g());
  }
}

TEST(Witnesses, IndependenceOfE1E2) {
  PointHV w1 = witness_E1_not_E2();
  auto r1 = residuals(w1);
  EXPECT_TRUE(r1.e1_zero());
  EXPECT_FALSE(r1.e2_zero());
  EXPECT_TRUE(r1.e3_zero());
  EXPECT_EQ(rank3(w1.B), 1);
  EXPECT_TRUE(w1.beta.is_zero());
  for (const auto& a : w1.alpha) EXPECT_FALSE(a.is_zero());

  PointHV w2 = witness_E2_not_E1();
  auto r2 = residuals(w2);
  EXPECT_FALSE(r2.e1_zero());
  EXPECT_TRUE(r2.e2_zero());
  EXPECT_TRUE(r2.e3_zero());
  EXPECT_EQ(rank3(w2.B), 1);
}

TEST(Witnesses, SomeFSemiInvariantNonzero) {
  PointHV w = witness_E1_not_E2();
  bool any = false;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) any = any || !alpha_f_square(w, i, j).is_zero();
  EXPECT_TRUE(any);
}

TEST(SemiInvariant, FWeight) {
  Sampler s(37);
  for (int k = 0; k < 20; ++k) {
    PointHV p = s.point();
    GroupElement h = s.group_element();
    EXPECT_EQ(alpha_f_square(act(h, p), 0, 1), h.det_g().pow(-2) * alpha_f_square(p, 0, 1));
    EXPECT_EQ(f_semi_invariant(act(h, p), 1, 2), (-kTheta * 4).evaluate(h) * f_semi_invariant(p, 1, 2));
  }
}
