#include <gtest/gtest.h>

#include "d4vgit/poly.hpp"
#include "d4vgit/random.hpp"

using namespace d4vgit;

namespace {

Poly random_poly(Sampler& s, const Ring& ring, int terms, int max_deg) {
  std::vector<std::pair<Exponent, Scalar>> t;
  for (int k = 0; k < terms; ++k) {
    Exponent e(ring->size());
    for (auto& x : e) x = static_cast<int>(s.integer(0, max_deg));
    t.emplace_back(e, s.scalar());
  }
  return Poly::from_terms(ring, t);
}

}  // namespace

TEST(Poly, SubstituteExamples) {
  Ring r = make_ring({"x", "y"});
  Poly x = Poly::var(r, "x"), y = Poly::var(r, "y");
  EXPECT_EQ(x.pow(2).substitute({{"x", y + 1}}), y * y + 2 * y + 1);

  Ring c = make_ring({"a2", "a3", "b", "p2", "p3", "q2", "r1", "r2"});
  Poly q2 = Poly::var(c, "q2"), b = Poly::var(c, "b"), a3 = Poly::var(c, "a3"), p3 = Poly::var(c, "p3");
  Poly target = b * a3 * p3;
  EXPECT_EQ(q2.substitute({{"q2", target}}), target);
  Poly r1 = Poly::var(c, "r1"), r2 = Poly::var(c, "r2"), p2 = Poly::var(c, "p2");
  EXPECT_TRUE((r2 + r1 * p2).substitute({{"r2", -(r1 * p2)}}).is_zero());

  EXPECT_THROW(x.substitute({{"z", y}}), UnknownVariable);
}

TEST(Poly, DivideExamples) {
  Ring r = make_ring({"a2", "a3", "b", "p2", "p3"});
  Poly a2 = Poly::var(r, "a2"), a3 = Poly::var(r, "a3"), p2 = Poly::var(r, "p2"), p3 = Poly::var(r, "p3");
  Poly n = 1 + a2 * p2.pow(2) + a3 * p3.pow(2);
  auto [q, rem] = n.divide_by(n);
  EXPECT_EQ(q, Poly(1));
  EXPECT_TRUE(rem.is_zero());
  auto [q2, rem2] = (a2 * p2.pow(2) * n).divide_by(n);
  EXPECT_EQ(q2, a2 * p2.pow(2));
  EXPECT_TRUE(rem2.is_zero());
  EXPECT_THROW(n.divide_by(Poly(0)), DivisionByZero);
}

TEST(Poly, Printing) {
  Ring r = make_ring({"a2", "a3", "b", "p2", "p3"});
  Poly a2 = Poly::var(r, "a2"), a3 = Poly::var(r, "a3"), p2 = Poly::var(r, "p2"), p3 = Poly::var(r, "p3");
  EXPECT_EQ((1 + a2 * p2.pow(2) + a3 * p3.pow(2)).str(), "1 + a2*p2^2 + a3*p3^2");
  EXPECT_EQ((Poly(Scalar(-1, 2)) * a2 - 3).str(), "-3 - 1/2*a2");
  EXPECT_EQ(Poly(0).str(), "0");
  EXPECT_EQ((Poly(Scalar::i()) * a2).str(), "i*a2");
}

TEST(Poly, GrlexLeading) {
  Ring r = make_ring({"a2", "a3", "b", "p2", "p3"});
  Poly a2 = Poly::var(r, "a2"), p3 = Poly::var(r, "p3"), p2 = Poly::var(r, "p2");
  // same degree: the larger variable wins
  EXPECT_EQ((a2 * a2 + p3 * p2).leading().first, (p3 * p2).leading().first);
  EXPECT_EQ((a2 * a2 * a2 + p3 * p2).leading().first, (a2 * a2 * a2).leading().first);
}

TEST(Poly, RingAxiomsAndDivisionIdentity) {
  Sampler s(5);
  Ring r = make_ring({"u", "v", "w"});
  for (int k = 0; k < 40; ++k) {
    Poly a = random_poly(s, r, 4, 2), b = random_poly(s, r, 4, 2), c = random_poly(s, r, 3, 2);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    if (b.is_zero()) continue;
    auto [q, rem] = a.divide_by(b);
    EXPECT_EQ(q * b + rem, a);
    const Exponent& lm = b.leading().first;
    for (const auto& [e, coef] : rem.terms()) {
      bool divisible = true;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < lm[i]) divisible = false;
      EXPECT_FALSE(divisible);
    }
  }
}

TEST(Poly, SubstituteIsHomomorphism) {
  Sampler s(6);
  Ring r = make_ring({"u", "v", "w"});
  for (int k = 0; k < 30; ++k) {
    Poly a = random_poly(s, r, 3, 2), b = random_poly(s, r, 3, 2);
    std::map<std::string, Poly> bind = {{"u", random_poly(s, r, 2, 1)}, {"w", random_poly(s, r, 2, 1)}};
    EXPECT_EQ((a * b).substitute(bind), a.substitute(bind) * b.substitute(bind));
    std::map<std::string, Scalar> at = {{"u", s.scalar()}, {"v", s.scalar()}, {"w", s.scalar()}};
    std::map<std::string, Scalar> at2 = at;
    at2["u"] = bind["u"].evaluate(at);
    at2["w"] = bind["w"].evaluate(at);
    EXPECT_EQ(a.substitute(bind).evaluate(at), a.evaluate(at2));
    // bindings free of u leave no u behind
    Poly only_v = a.substitute({{"u", Poly::var(r, "v") + 1}});
    for (const auto& [e, c] : only_v.terms()) EXPECT_EQ(e[0], 0);
  }
}
