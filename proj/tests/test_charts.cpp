#include <gtest/gtest.h>

#include "d4vgit/charts.hpp"
#include "d4vgit/samples.hpp"

using namespace d4vgit;

TEST(Normalize, AlreadyNormalizedIsIdentity) {
  Sampler s(61);
  for (int i = 0; i < 3; ++i) {
    ChartPoint c = random_chart_point(s, i);
    ChartPoint n = normalize(c.point, i);
    EXPECT_EQ(n.normalizer, GroupElement::identity());
    EXPECT_EQ(n.point, c.point);
  }
}

TEST(Normalize, BasePointGenericX) {
  PointHV b = base_point();
  b.x = {Scalar(3), Scalar(-2)};
  for (int i = 0; i < 3; ++i) {
    ChartPoint c = normalize(b, i);
    EXPECT_TRUE(chart_invariants_hold(c));
    EXPECT_EQ(act(c.normalizer, b), c.point);
  }
}

TEST(Normalize, StableSamplesAtWitnessingIndex) {
  Sampler s(62);
  for (const PointHV& p : z_samples(s, 120)) {
    auto v = semistable_theta(p);
    if (!v.stable()) continue;
    ChartPoint c = normalize(p, v.leg);
    EXPECT_TRUE(chart_invariants_hold(c));
    for (const auto& [name, ok] : chart_relations(c)) EXPECT_TRUE(ok) << name;
  }
}

TEST(Normalize, ResidualTorusFreedom) {
  Sampler s(63);
  for (int n = 0; n < 30; ++n) {
    int i = n % 3;
    ChartPoint c = random_chart_point(s, i);
    // a group element preserving the chart: move by random h
    GroupElement h = s.group_element();
    PointHV moved = act(h, c.point);
    ChartPoint d = normalize(moved, i);
    EXPECT_EQ(chart_invariants(d), chart_invariants(c));
    // and the residual torus acts without changing the invariants
    ChartPoint e = residual_torus_act(c, s.nonzero(), s.nonzero());
    EXPECT_TRUE(chart_invariants_hold(e));
    EXPECT_EQ(chart_invariants(e), chart_invariants(c));
  }
}

TEST(Normalize, Errors) {
  Sampler s(64);
  PointHV b = base_point();
  b.x = {Scalar(0), Scalar(0)};
  EXPECT_THROW(normalize(b, 0), NotInChart);
  PointHV off = base_point();
  off.beta = 3;
  EXPECT_THROW(normalize(off, 0), ContractViolation);
  // alpha_j = 0 chart point is not in chart j
  ChartPoint c = random_chart_point(s, 0, ChartKind::alpha_j_zero);
  EXPECT_THROW(normalize(c.point, 1), NotInChart);
  EXPECT_THROW(normalize(base_point(), 3), ContractViolation);
}

TEST(QuiverChart, RoundTrip) {
  Sampler s(65);
  for (int n = 0; n < 100; ++n) {
    int i = n % 3;
    ChartKind kind = n % 5 == 0 ? ChartKind::beta_zero : (n % 7 == 0 ? ChartKind::alpha_j_zero : ChartKind::generic);
    ChartPoint c = random_chart_point(s, i, kind);
    HatChart h = to_quiver_chart(c);
    EXPECT_TRUE(hat_valid(h));
    ChartPoint back = from_quiver_chart(h);
    EXPECT_EQ(back.point, c.point);
    EXPECT_EQ(to_quiver_chart(back), h);
  }
}

TEST(QuiverChart, HatRelations) {
  Sampler s(66);
  for (int n = 0; n < 50; ++n) {
    ChartPoint c = random_chart_point(s, n % 3);
    HatChart h = to_quiver_chart(c);
    Scalar bh = hat_beta(h);
    EXPECT_EQ(bh, c.beta() * Scalar(1, 2));
    EXPECT_EQ(h.q_j, bh * h.alpha_k * h.p_k);
    EXPECT_EQ(h.q_k, -(bh * h.alpha_j * h.p_j));
    EXPECT_EQ(h.omega, bh * bh * h.alpha_j * h.alpha_k);
    EXPECT_TRUE((h.alpha_j * h.p_j * h.q_j + h.alpha_k * h.p_k * h.q_k).is_zero());
  }
}

TEST(QuiverChart, CommutesWithBuildRep) {
  Sampler s(67);
  PointHV b = base_point();
  b.x = {Scalar(1), Scalar(4)};
  for (int i = 0; i < 3; ++i) EXPECT_EQ(to_quiver_chart(normalize(b, i)), quiver_chart_of(build_rep(b), i));
  for (int n = 0; n < 60; ++n) {
    PointHV p = z_samples(s, 2)[n % 2];
    auto v = semistable_theta(p);
    if (!v.stable()) continue;
    EXPECT_EQ(to_quiver_chart(normalize(p, v.leg)), quiver_chart_of(build_rep(p), v.leg));
  }
}

TEST(QuiverChart, TwoChartCompatibility) {
  Sampler s(68);
  int checked = 0;
  for (int n = 0; n < 40; ++n) {
    PointHV p = orbit_sample(s);
    std::vector<int> ok;
    for (int i = 0; i < 3; ++i) {
      try {
        normalize(p, i);
        ok.push_back(i);
      } catch (const NotInChart&) {
      }
    }
    for (std::size_t a = 0; a + 1 < ok.size(); ++a) {
      // chart a moved into chart b agrees with chart b up to the residual torus
      ChartPoint ca = normalize(p, ok[a]);
      ChartPoint cb = normalize(p, ok[a + 1]);
      ChartPoint cab = normalize(ca.point, ok[a + 1]);
      EXPECT_EQ(chart_invariants(cab), chart_invariants(cb));
      EXPECT_EQ(quiver_chart_of(build_rep(ca.point), ok[a + 1]), to_quiver_chart(cab));
      ++checked;
    }
  }
  EXPECT_GT(checked, 20);
}

TEST(Closure, AllRemaindersVanish) {
  for (int i = 0; i < 3; ++i) {
    ClosureReport r = chart_closure_check(i);
    EXPECT_EQ(r.components.size(), 24u);
    EXPECT_TRUE(r.ok()) << closure_report_text(r);
  }
  ClosureReport r = chart_closure_check(0);
  EXPECT_EQ(r.N.str(), "1 + a2*p2^2 + a3*p3^2");
  // E2[11] is B1 J^-1 B1 alpha1 - omega: zero after substitution
  EXPECT_TRUE(r.components[6].substituted.is_zero());
}
