#include <gtest/gtest.h>

#include "d4vgit/random.hpp"
#include "d4vgit/s3.hpp"

using namespace d4vgit;

TEST(S3, BasePointIsEquivariant) {
  S3Point p = s3_base_point();
  auto R = s3_irrep();
  EXPECT_EQ(R.rotation * R.rotation * R.rotation, Mat2<Scalar>::identity());
  EXPECT_EQ(R.reflection * R.reflection, Mat2<Scalar>::identity());
  EXPECT_EQ(s3_act(R.rotation, p), p);
  EXPECT_EQ(s3_act(R.reflection, p), p);
}

TEST(S3, Residual) {
  EXPECT_TRUE(s3_relation_holds(s3_base_point()));
  EXPECT_EQ(det(s3_base_point().B), Scalar(54));
  EXPECT_TRUE(s3_relation_holds(S3Point{}));
  Sampler s(91);
  int nonzero = 0;
  for (int n = 0; n < 20; ++n) {
    S3Point q;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) q.B[r][c] = s.scalar();
    if (!s3_relation_holds(q)) ++nonzero;
  }
  EXPECT_EQ(nonzero, 20);
  // the relation is GL(U)-invariant
  for (int n = 0; n < 10; ++n) EXPECT_TRUE(s3_relation_holds(s3_act(s.invertible2(), s3_base_point())));
}

TEST(S3, StabilizerIsS3) {
  FiniteSubgroup G = s3_stabilizer(s3_base_point());
  ASSERT_EQ(G.size(), 6u);
  EXPECT_FALSE(G.abelian());
  EXPECT_EQ(G.count_of_order(3), 2);
  EXPECT_EQ(G.count_of_order(2), 3);
  EXPECT_EQ(classify(G), GroupType::symmetric3);
  // trivial center
  int central = 0;
  for (std::size_t a = 0; a < G.size(); ++a) {
    bool c = true;
    for (std::size_t b = 0; b < G.size(); ++b)
      if (G.table[a][b] != G.table[b][a]) c = false;
    central += c;
  }
  EXPECT_EQ(central, 1);
  auto R = s3_irrep();
  EXPECT_GE(G.index_of(detail::gl_only(R.rotation)), 0);
  EXPECT_GE(G.index_of(detail::gl_only(R.reflection)), 0);
}

TEST(S3, ConjugatedBasePoint) {
  Sampler s(92);
  FiniteSubgroup H = s3_stabilizer(s3_base_point());
  for (int n = 0; n < 8; ++n) {
    Mat2<Scalar> g = s.invertible2();
    FiniteSubgroup G = s3_stabilizer(s3_act(g, s3_base_point()));
    ASSERT_EQ(G.size(), 6u);
    for (const auto& h : H.elements) EXPECT_GE(G.index_of(detail::gl_only(g * h.g * inverse(g))), 0);
  }
}

TEST(S3, Preconditions) {
  EXPECT_THROW(s3_stabilizer(S3Point{}), ContractViolation);
  S3Point bad = s3_base_point();
  bad.B[0][0] = 5;
  EXPECT_THROW(s3_stabilizer(bad), ContractViolation);
}
