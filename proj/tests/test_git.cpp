#include <gtest/gtest.h>

#include "d4vgit/equations.hpp"
#include "d4vgit/git.hpp"
#include "d4vgit/random.hpp"

using namespace d4vgit;

TEST(Act, IdentityAndGroupLaw) {
  Sampler s(21);
  for (int k = 0; k < 100; ++k) {
    PointHV p = s.point();
    GroupElement h1 = s.group_element(), h2 = s.group_element();
    EXPECT_EQ(act(GroupElement::identity(), p), p);
    EXPECT_EQ(act(h1, act(h2, p)), act(h1 * h2, p));
    EXPECT_EQ(act(h1.inverse(), act(h1, p)), p);
  }
}

TEST(Act, LambdaOne) {
  PointHV p = base_point();
  Scalar t(3);
  PointHV q = act(lambda_(0).at(t), p);
  EXPECT_EQ(q.alpha[0], p.alpha[0] / Scalar(9));
  EXPECT_EQ(q.alpha[1], p.alpha[1]);
  EXPECT_EQ(q.beta, t * p.beta);
  EXPECT_EQ(q.B[0], scale(t, p.B[0]));
  EXPECT_EQ(q.B[1], p.B[1]);
  EXPECT_EQ(q.B[2], p.B[2]);
}

TEST(Act, Mu) {
  Sampler s(22);
  PointHV p = s.point();
  Scalar t(5);
  PointHV q = act(kMu.at(t), p);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(q.alpha[i], t * p.alpha[i]);
    EXPECT_EQ(q.B[i][0], p.B[i][0]);
    EXPECT_EQ(q.B[i][1], p.B[i][1] / t);
    EXPECT_EQ(q.B[i][2], p.B[i][2] / (t * t));
  }
  EXPECT_EQ(q.beta, p.beta / (t * t));
}

TEST(Weights, TableMatchesPublished) {
  auto computed = weight_table();
  auto published = published_weight_table();
  auto corrected = corrected_weight_table();
  ASSERT_EQ(computed.size(), published.size());
  int mismatches = 0;
  for (std::size_t k = 0; k < computed.size(); ++k) {
    EXPECT_EQ(computed[k].weights, corrected[k]) << computed[k].name;
    for (std::size_t c = 0; c < 13; ++c) mismatches += computed[k].weights[c] != published[k][c];
    EXPECT_EQ(computed[k].weights, table_part(coordinate_weights(computed[k].cocharacter))) << computed[k].name;
  }
  EXPECT_EQ(mismatches, 1);
  EXPECT_EQ(computed[1].weights, (TableRow{0, -2, 0, 1, 0, 0, 0, 1, 1, 1, 0, 0, 0}));
  EXPECT_EQ(computed[6].weights, (TableRow{0, 0, 0, -1, 1, -1, -3, 1, -1, -3, 1, -1, -3}));
}

TEST(Weights, Linearity) {
  for (const auto& [name, l] : table_cocharacters()) {
    (void)name;
    WeightRow a = measured_weights(l), b = measured_weights(kMu), c = measured_weights(l + kMu);
    for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(c[k], a[k] + b[k]);
  }
}

TEST(Weights, BasisIndependent) {
  Sampler s(23);
  for (int k = 0; k < 5; ++k) {
    Mat2<Scalar> P = s.invertible2();
    for (const auto& [name, l] : table_cocharacters()) EXPECT_EQ(measured_weights(l, P), coordinate_weights(l)) << name;
  }
}

TEST(Pair, Examples) {
  EXPECT_EQ(pair(kTheta, lambda_(0)), 1);
  EXPECT_EQ(pair(kTheta, kMu), 1);
  EXPECT_EQ(pair(-kTheta, lambda_(0)), -1);
  for (const auto& [name, l] : table_cocharacters()) EXPECT_GT(pair(kTheta, l), 0) << name;
}

TEST(SemiInvariant, NegThetaWeight) {
  Sampler s(24);
  for (int k = 0; k < 50; ++k) {
    PointHV p = s.point();
    GroupElement h = s.group_element();
    EXPECT_EQ(neg_theta_semi_invariant(act(h, p)), (-kTheta).evaluate(h) * neg_theta_semi_invariant(p));
  }
}

TEST(Character, Evaluate) {
  GroupElement h({Scalar(2), Scalar(3), Scalar(5)}, mat2(Scalar(1), Scalar(1), Scalar(0), Scalar(7)));
  EXPECT_EQ(kTheta.evaluate(h), Scalar(2 * 3 * 5 * 7));
  EXPECT_EQ((-kTheta).evaluate(h), Scalar(1, 210));
}

TEST(AdaptedBasis, FirstColumnIsX) {
  Vec<Scalar, 2> x{Scalar(0), Scalar(3)};
  auto P = adapted_basis(x);
  EXPECT_EQ(column(P, 0), x);
  EXPECT_FALSE(det(P).is_zero());
  EXPECT_THROW(adapted_basis({Scalar(0), Scalar(0)}), ContractViolation);
}

TEST(GroupElement, RejectsSingular) {
  EXPECT_THROW(GroupElement({Scalar(0), Scalar(1), Scalar(1)}, Mat2<Scalar>::identity()), ContractViolation);
  EXPECT_THROW(GroupElement({Scalar(1), Scalar(1), Scalar(1)}, Mat2<Scalar>::zero()), ContractViolation);
}
