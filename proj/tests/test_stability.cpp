#include <gtest/gtest.h>

#include "d4vgit/samples.hpp"
#include "d4vgit/stability.hpp"

using namespace d4vgit;

TEST(Families, CertificatesMatchWeightTable) {
  auto fams = unstable_subset_certificates();
  EXPECT_EQ(fams.size(), 11u);
  for (const auto& f : fams) EXPECT_TRUE(family_certificate_valid(f)) << f.description;
  // documented examples
  EXPECT_EQ(fams[3].certificate, kMu);
  EXPECT_EQ(fams[10].certificate, kMu * 2 + lambda_(0) + lambda_(1) + lambda_(2));
  EXPECT_EQ(fams[4].description, "{a2=0, a3=0, p1=0}");
  EXPECT_EQ(fams[4].certificate, kMu + lambda_(0));
  // positive support of mu+lambda1 is exactly a2, a3, p1 (and x2, zero in the adapted basis)
  EXPECT_EQ(positive_support(kMu + lambda_(0)), (std::vector<std::size_t>{1, 2, 4, 14}));
  // {beta=0, B1=0} is certified by lambda1, not by mu+lambda1
  EXPECT_EQ(fams[0].certificate, lambda_(0));
  UnstableFamily wrong = fams[0];
  wrong.certificate = kMu + lambda_(0);
  EXPECT_FALSE(family_certificate_valid(wrong));
}

TEST(Theta, BasePointAndZeroX) {
  PointHV b = base_point();
  b.x = {Scalar(2), Scalar(3)};
  EXPECT_TRUE(semistable_theta(b).stable());
  b.x = {Scalar(0), Scalar(0)};
  auto v = semistable_theta(b);
  ASSERT_FALSE(v.stable());
  EXPECT_EQ(v.certificate->cocharacter, kZeroXCertificate);
  EXPECT_TRUE(verify_certificate(b, kTheta, *v.certificate));
}

TEST(Theta, ChartPointsStable) {
  Sampler s(51);
  for (int i = 0; i < 3; ++i)
    for (auto kind : {ChartKind::generic, ChartKind::beta_zero, ChartKind::alpha_j_zero}) {
      ChartPoint c = random_chart_point(s, i, kind);
      EXPECT_TRUE(semistable_theta(c.point).stable());
    }
}

TEST(Theta, BetaZeroB1ZeroUsesLambda1) {
  Sampler s(52);
  PointHV p = engineered_theta_unstable(s, 0);
  auto v = semistable_theta(p);
  ASSERT_FALSE(v.stable());
  EXPECT_TRUE(verify_certificate(p, kTheta, *v.certificate));
}

TEST(Theta, AgreesWithKing) {
  Sampler s(53);
  int stable = 0, unstable = 0;
  for (const PointHV& p : z_samples(s, 200)) {
    auto v = semistable_theta(p);
    EXPECT_EQ(v.stable(), king_stable(build_rep(p)));
    if (v.stable())
      ++stable;
    else
      EXPECT_TRUE(verify_certificate(p, kTheta, *v.certificate));
    if (!v.stable()) ++unstable;
  }
  EXPECT_GT(stable, 150);
  for (int n = 0; n < 120; ++n) {
    PointHV p = engineered_theta_unstable(s, n % kThetaUnstableFamilies);
    ASSERT_TRUE(in_Z(p));
    auto v = semistable_theta(p);
    EXPECT_FALSE(v.stable());
    EXPECT_FALSE(king_stable(build_rep(p)));
    ASSERT_TRUE(v.certificate);
    EXPECT_TRUE(verify_certificate(p, kTheta, *v.certificate)) << v.certificate->family;
  }
}

TEST(Theta, GInvariant) {
  Sampler s(54);
  for (int n = 0; n < 40; ++n) {
    PointHV p = n % 2 ? z_samples(s, 2)[1] : engineered_theta_unstable(s, n % kThetaUnstableFamilies);
    GroupElement h = s.group_element();
    EXPECT_EQ(semistable_theta(p).stable(), semistable_theta(act(h, p)).stable());
  }
}

TEST(Theta, OffZIsPrecondition) {
  PointHV p = base_point();
  p.beta = 2;
  EXPECT_THROW(semistable_theta(p), ContractViolation);
  EXPECT_THROW(semistable_minus_theta(witness_E1_not_E2()), ContractViolation);
}

TEST(MinusTheta, StableExactlyOnZo) {
  Sampler s(55);
  for (const PointHV& p : z_samples(s, 120)) {
    auto v = semistable_minus_theta(p);
    EXPECT_EQ(v.stable(), in_Zo(p));
    if (v.stable()) {
      ASSERT_TRUE(v.semi_invariant);
      EXPECT_FALSE(v.semi_invariant->is_zero());
    } else {
      EXPECT_TRUE(verify_certificate(p, -kTheta, *v.certificate));
    }
  }
  for (int n = 0; n < 40; ++n) {
    PointHV p = engineered_minus_theta_unstable(s, n % 4);
    ASSERT_TRUE(in_Z(p));
    auto v = semistable_minus_theta(p);
    ASSERT_FALSE(v.stable());
    EXPECT_TRUE(verify_certificate(p, -kTheta, *v.certificate)) << v.certificate->family;
  }
}

TEST(MinusTheta, AlphaTwoZero) {
  Sampler s(56);
  PointHV p = engineered_minus_theta_unstable(s, 1);
  auto v = semistable_minus_theta(p);
  ASSERT_FALSE(v.stable());
  EXPECT_EQ(v.certificate->cocharacter, -lambda_(1));
}

TEST(ProofBranches, BOneZeroConsequences) {
  Sampler s(57);
  for (int n = 0; n < 30; ++n) {
    // B1 = 0 on Z: engineered families with B1 = 0
    PointHV p = engineered_theta_unstable(s, n % 2 ? 0 : 4);
    PointHV a = in_basis(p, is_zero_vec(p.x) ? Mat2<Scalar>::identity() : adapted_basis(p.x));
    ASSERT_TRUE(is_zero_vec(a.B[0]));
    EXPECT_TRUE((a.beta * a.alpha[1] * a.p(1)).is_zero());
    EXPECT_TRUE((a.beta * a.alpha[2] * a.p(2)).is_zero());
  }
}
