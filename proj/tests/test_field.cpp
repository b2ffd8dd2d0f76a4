#include <gtest/gtest.h>

#include "d4vgit/field.hpp"
#include "d4vgit/linalg.hpp"
#include "d4vgit/random.hpp"

using namespace d4vgit;

TEST(GaussQ, ParseAndFormat) {
  EXPECT_EQ(GaussQ::parse("1/2+3/4*i").str(), "1/2+3/4*i");
  EXPECT_EQ(GaussQ::parse("-2/4").str(), "-1/2");
  EXPECT_EQ(GaussQ::parse("i").str(), "1*i");
  EXPECT_EQ(GaussQ::parse("-i"), GaussQ(0, -1));
  EXPECT_EQ(GaussQ::parse("3-2*i"), GaussQ(3, -2));
  EXPECT_EQ(GaussQ::parse("-3/5*i"), GaussQ(0, mpq_class(-3, 5)));
  EXPECT_EQ(GaussQ::parse("0").str(), "0");
  EXPECT_THROW(GaussQ::parse("1/0"), ParseError);
  EXPECT_THROW(GaussQ::parse("abc"), ParseError);
  EXPECT_THROW(GaussQ::parse(""), ParseError);
}

TEST(GaussQ, RoundTrip) {
  Sampler s(7);
  for (int k = 0; k < 200; ++k) {
    Scalar x = s.scalar();
    EXPECT_EQ(Scalar::parse(x.str()), x);
  }
}

TEST(Scalar, FieldAxioms) {
  Sampler s(1);
  for (int k = 0; k < 1000; ++k) {
    Scalar a = s.scalar(), b = s.scalar(), c = s.scalar();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), Scalar(1));
    }
  }
  EXPECT_THROW(Scalar(0).inverse(), DivisionByZero);
}

TEST(AdjoinSqrt, Examples) {
  auto e = adjoin_sqrt(nullptr, Scalar(2));
  ASSERT_TRUE(e.field);
  EXPECT_TRUE((e.root * e.root - Scalar(2)).is_zero());

  auto m1 = adjoin_sqrt(nullptr, Scalar(-1));
  EXPECT_FALSE(m1.field);
  EXPECT_EQ(m1.root * m1.root, Scalar(-1));

  auto q = adjoin_sqrt(nullptr, Scalar(9, 4));
  EXPECT_FALSE(q.field);
  EXPECT_TRUE(q.root == Scalar(3, 2) || q.root == Scalar(-3, 2));

  EXPECT_THROW(adjoin_sqrt(nullptr, Scalar(0)), DegenerateExtension);
}

TEST(AdjoinSqrt, GaussianSquares) {
  // (1+2i)^2 = -3+4i
  auto e = adjoin_sqrt(nullptr, Scalar(GaussQ(-3, 4)));
  EXPECT_FALSE(e.field);
  EXPECT_EQ(e.root * e.root, Scalar(GaussQ(-3, 4)));
  // 2i = (1+i)^2
  auto f = adjoin_sqrt(nullptr, Scalar(GaussQ(0, 2)));
  EXPECT_FALSE(f.field);
}

TEST(Tower, NormDescentFindsSquares) {
  auto e2 = adjoin_sqrt(nullptr, Scalar(2));
  Scalar s2 = e2.root;
  // 3 + 2 sqrt2 = (1 + sqrt2)^2 is a square in Q(i, sqrt2)
  Scalar x = Scalar(3) + Scalar(2) * s2;
  auto r = sqrt_in_field(x);
  ASSERT_TRUE(r);
  EXPECT_EQ(*r * *r, x);
  // 3 is not a square in Q(i, sqrt2); sqrt(6) = sqrt2*sqrt3 not either
  EXPECT_FALSE(sqrt_in_field(Scalar(3).lifted_to(e2.field)));
  // -2 is: i*sqrt2
  auto m2 = sqrt_in_field(Scalar(-2).lifted_to(e2.field));
  ASSERT_TRUE(m2);
  EXPECT_EQ(*m2 * *m2, Scalar(-2));
  // adjoining sqrt(2) again returns the same field
  auto again = adjoin_sqrt(e2.field, Scalar(8));
  EXPECT_EQ(again.field, e2.field);
  // sqrt3 on top; then sqrt6 is already present
  auto e3 = adjoin_sqrt(e2.field, Scalar(3));
  EXPECT_NE(e3.field, e2.field);
  EXPECT_EQ(depth_of(e3.field), 2);
  auto r6 = sqrt_in_field(Scalar(6).lifted_to(e3.field));
  ASSERT_TRUE(r6);
  EXPECT_EQ(*r6 * *r6, Scalar(6));
}

TEST(Tower, Arithmetic) {
  Sampler s(3);
  Field f;
  Scalar g1 = sqrt_extending(Scalar(2), f);
  Scalar g2 = sqrt_extending(Scalar(GaussQ(1, 1)), f);
  Scalar g3 = sqrt_extending(Scalar(5), f);
  ASSERT_EQ(depth_of(f), 3);
  auto rnd = [&] { return s.scalar() + s.scalar() * g1 + s.scalar() * g2 + s.scalar() * g3 * g1; };
  for (int k = 0; k < 100; ++k) {
    Scalar x = rnd(), y = rnd();
    EXPECT_EQ((x + y) * (x - y), x * x - y * y);
    if (!x.is_zero()) {
      EXPECT_EQ(x * x.inverse(), Scalar(1));
    }
    auto r = sqrt_in_field(x * x);
    ASSERT_TRUE(r);
    EXPECT_EQ(*r * *r, x * x);
  }
}

TEST(Tower, DepthCap) {
  Field f;
  const long primes[] = {2, 3, 5, 7};
  for (long p : primes) sqrt_extending(Scalar(p), f);
  EXPECT_EQ(depth_of(f), 4);
  EXPECT_THROW(sqrt_extending(Scalar(11), f), ExtensionLimit);
}

TEST(Tower, UnrelatedTowersRejected) {
  auto a = adjoin_sqrt(nullptr, Scalar(2));
  auto b = adjoin_sqrt(nullptr, Scalar(3));
  EXPECT_THROW(a.root + b.root, FieldMismatch);
}

TEST(Roots, GaussianRational) {
  // (z - 1/2)(z + 2i)(z - 3) expanded
  std::vector<GaussQ> p = {GaussQ(0, 3), GaussQ(mpq_class(3, 2), -7), GaussQ(mpq_class(-7, 2), 2), GaussQ(1)};
  auto roots = gaussian_rational_roots(p);
  EXPECT_EQ(roots.size(), 3u);
  // z^2 - 2 has none
  EXPECT_TRUE(gaussian_rational_roots({GaussQ(-2), GaussQ(0), GaussQ(1)}).empty());
  // repeated root
  auto rr = gaussian_rational_roots({GaussQ(1), GaussQ(-2), GaussQ(1)});
  ASSERT_EQ(rr.size(), 1u);
  EXPECT_EQ(rr[0], GaussQ(1));
}

TEST(Linalg, SymSquare) {
  Mat2<Scalar> id = Mat2<Scalar>::identity();
  EXPECT_EQ(sym_square(id), Mat3<Scalar>::identity());
  Scalar t(5);
  Mat3<Scalar> expect = Mat3<Scalar>::zero();
  expect[0][0] = 1;
  expect[1][1] = t;
  expect[2][2] = t * t;
  EXPECT_EQ(sym_square(mat2(Scalar(1), Scalar(0), Scalar(0), t)), expect);

  Sampler s(11);
  for (int k = 0; k < 100; ++k) {
    Mat2<Scalar> g = s.invertible2(), h = s.invertible2();
    EXPECT_EQ(sym_square(g * h), sym_square(g) * sym_square(h));
    EXPECT_EQ(det(sym_square(g)), det(g).pow(3));
    // v^2 is equivariant
    Vec<Scalar, 2> v = {s.scalar(), s.scalar()};
    EXPECT_EQ(sym_square(g * v), sym_square(g) * sym_square(v));
  }
}

TEST(Linalg, AdjugateInverse) {
  Sampler s(12);
  for (int k = 0; k < 50; ++k) {
    Mat3<Scalar> m;
    for (auto& row : m.a)
      for (auto& c : row) c = s.scalar();
    EXPECT_EQ(adjugate(m) * m, det(m) * Mat3<Scalar>::identity());
    if (!det(m).is_zero()) {
      EXPECT_EQ(inverse(m) * m, Mat3<Scalar>::identity());
    }
  }
}
