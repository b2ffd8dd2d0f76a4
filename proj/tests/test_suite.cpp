#include <gtest/gtest.h>

#include "d4vgit/suite.hpp"

using namespace d4vgit;

TEST(Suite, UnknownIsUsageError) { EXPECT_THROW(run_suite("nope", 1), UsageError); }

TEST(Suite, ChartsIncludesClosure) {
  Report r = run_suite("charts", 7);
  const Check* c = r.find("charts.closure_1");
  ASSERT_NE(c, nullptr);
  EXPECT_TRUE(c->pass);
  EXPECT_NE(c->details.find("24/24"), std::string::npos);
  EXPECT_TRUE(r.all_pass()) << report_text(r);
}

TEST(Suite, OrbitIncludesOrderEight) {
  Report r = run_suite("orbit", 3);
  const Check* c = r.find("orbit.stabilizer_order_8");
  ASSERT_NE(c, nullptr);
  EXPECT_TRUE(c->pass) << c->details;
  EXPECT_TRUE(r.all_pass()) << report_text(r);
}

TEST(Suite, SortedAndDeterministic) {
  Report a = run_suite("examples", 5), b = run_suite("examples", 5);
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
  EXPECT_TRUE(std::is_sorted(a.checks.begin(), a.checks.end(), [](auto& x, auto& y) { return x.id < y.id; }));
  EXPECT_EQ(to_json(a)["summary"]["total"], a.checks.size());
}

TEST(Suite, EquationsQuiverStability) {
  for (const char* name : {"equations", "quiver", "stability"}) {
    Report r = run_suite(name, 11);
    EXPECT_TRUE(r.all_pass()) << report_text(r);
  }
}
