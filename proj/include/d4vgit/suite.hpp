#pragma once

// Seeded acceptance suites.  Every check reports pass/fail plus a short
// detail string; the report is sorted by check id and carries no timing or
// environment data, so equal seeds give byte-identical JSON.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "d4vgit/charts.hpp"
#include "d4vgit/equations.hpp"
#include "d4vgit/json_io.hpp"
#include "d4vgit/orbit.hpp"
#include "d4vgit/quiver.hpp"
#include "d4vgit/random.hpp"
#include "d4vgit/s3.hpp"
#include "d4vgit/samples.hpp"
#include "d4vgit/stability.hpp"
#include "d4vgit/toric.hpp"

namespace d4vgit {

struct Check {
  std::string id;
  bool pass = false;
  std::string details;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<Check> checks;

  int passed() const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; }));
  }
  int failed() const { return static_cast<int>(checks.size()) - passed(); }
  bool all_pass() const { return failed() == 0; }
  const Check* find(const std::string& id) const {
    for (const auto& c : checks)
      if (c.id == id) return &c;
    return nullptr;
  }
};

inline Json to_json(const Report& r) {
  Json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  Json cs = Json::array();
  for (const auto& c : r.checks) cs.push_back({{"id", c.id}, {"status", c.pass ? "pass" : "fail"}, {"details", c.details}});
  j["checks"] = cs;
  j["summary"] = {{"total", r.checks.size()}, {"passed", r.passed()}, {"failed", r.failed()}};
  return j;
}

inline std::string report_text(const Report& r) {
  std::string out;
  for (const auto& c : r.checks) out += std::string(c.pass ? "PASS " : "FAIL ") + c.id + "  " + c.details + "\n";
  out += r.suite + " (seed " + std::to_string(r.seed) + "): " + std::to_string(r.passed()) + "/" +
         std::to_string(r.checks.size()) + " passed\n";
  return out;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"equations", "stability", "quiver", "charts", "orbit", "examples", "all"};
  return names;
}

namespace detail {

/// Counts successes of a per-sample predicate; the first failure is kept for the details.
class Tally {
 public:
  void operator()(bool ok, const std::string& what = "") {
    ++total_;
    if (ok) {
      ++good_;
    } else if (first_bad_.empty()) {
      first_bad_ = what.empty() ? "sample " + std::to_string(total_ - 1) : what;
    }
  }
  bool ok() const { return good_ == total_ && total_ > 0; }
  std::string text(const std::string& noun = "samples") const {
    std::string s = std::to_string(good_) + "/" + std::to_string(total_) + " " + noun;
    if (!first_bad_.empty()) s += "; first failure: " + first_bad_;
    return s;
  }

 private:
  int total_ = 0, good_ = 0;
  std::string first_bad_;
};

class SuiteRunner {
 public:
  explicit SuiteRunner(std::vector<Check>& out) : out_(out) {}

  // body returns (pass, details); exceptions become failures
  void run(const std::string& id, const std::function<std::pair<bool, std::string>()>& body) {
    Check c{id, false, ""};
    try {
      auto [ok, details] = body();
      c.pass = ok;
      c.details = details;
    } catch (const std::exception& e) {
      c.details = std::string("exception: ") + e.what();
    }
    out_.push_back(std::move(c));
  }

 private:
  std::vector<Check>& out_;
};

// per-suite streams, so a suite gives the same checks alone or inside "all"
inline Sampler suite_sampler(std::uint64_t seed, std::uint64_t salt) {
  return Sampler(seed * 0x9e3779b97f4a7c15ULL + salt);
}

inline void equations_suite(std::uint64_t seed, std::vector<Check>& out) {
  SuiteRunner R(out);
  R.run("equations.weight_table", [] {
    auto computed = weight_table();
    auto published = published_weight_table();
    auto errata = published_weight_errata();
    int agree = 0, errata_ok = 0, other = 0;
    for (std::size_t k = 0; k < computed.size(); ++k)
      for (std::size_t c = 0; c < 13; ++c) {
        long w = computed[k].weights[c];
        if (w == published[k][c]) {
          ++agree;
          continue;
        }
        bool listed = false;
        for (const auto& e : errata)
          if (e.row == k && e.column == c && e.published == published[k][c] && e.corrected == w)
            listed = true;
        (listed ? errata_ok : other)++;
      }
    bool ok = computed.size() == 7 && other == 0 && errata_ok == static_cast<int>(errata.size());
    return std::pair{ok, std::to_string(agree) + "/91 entries verbatim, " + std::to_string(errata_ok) +
                             " documented erratum (mu+lambda1, beta: printed 0, computed -1)"};
  });
  R.run("equations.base_point", [] {
    PointHV b = base_point();
    bool res = residuals(b).all();
    bool zo = in_Zo(b);
    Scalar d = det(b.B);
    Scalar rhs = b.beta.pow(3) * b.alpha[0] * b.alpha[1] * b.alpha[2] * Scalar(1, 2);
    return std::pair{res && zo && d == rhs, "residuals 0: " + std::string(res ? "yes" : "no") + ", in Zo: " +
                                                std::string(zo ? "yes" : "no") + ", det B = " + d.str() +
                                                ", beta^3 a1a2a3/2 = " + rhs.str()};
  });
  R.run("equations.z_invariance", [seed] {
    Sampler s = suite_sampler(seed, 1);
    Tally t;
    for (int n = 0; n < 50; ++n) {
      PointHV p = z_samples(s, 2)[n % 2];
      t(in_Z(p) && in_Z(act(s.group_element(), p)));
    }
    return std::pair{t.ok(), t.text()};
  });
  R.run("equations.witness_E1_not_E2", [] {
    PointHV w = witness_E1_not_E2();
    auto r = residuals(w);
    bool pattern = r.e1_zero() && !r.e2_zero() && r.e3_zero();
    bool f = false;
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) f = f || !f_semi_invariant(w, i, j).is_zero();
    return std::pair{pattern && f, std::string("E1 = 0, E2 != 0, E3 = 0: ") + (pattern ? "yes" : "no") +
                                       "; nonvanishing -theta semi-invariant from f_ij: " + (f ? "yes" : "no")};
  });
  R.run("equations.witness_E2_not_E1", [] {
    PointHV w = witness_E2_not_E1();
    auto r = residuals(w);
    bool pattern = !r.e1_zero() && r.e2_zero() && r.e3_zero();
    return std::pair{pattern, std::string("E1 != 0, E2 = 0, E3 = 0: ") + (pattern ? "yes" : "no")};
  });
}

inline void stability_suite(std::uint64_t seed, std::vector<Check>& out) {
  SuiteRunner R(out);
  R.run("stability.family_certificates", [] {
    Tally t;
    for (const auto& f : unstable_subset_certificates()) t(family_certificate_valid(f), f.description);
    return std::pair{t.ok(), t.text("families")};
  });
  R.run("stability.theta_matches_king", [seed] {
    Sampler s = suite_sampler(seed, 2);
    Tally t;
    int stable = 0;
    for (const PointHV& p : z_samples(s, 200)) {
      auto v = semistable_theta(p);
      bool ok = v.stable() == king_stable(build_rep(p));
      if (!v.stable()) ok = ok && v.certificate && verify_certificate(p, kTheta, *v.certificate);
      stable += v.stable();
      t(ok);
    }
    return std::pair{t.ok(), t.text() + ", " + std::to_string(stable) + " stable"};
  });
  R.run("stability.theta_engineered_unstable", [seed] {
    Sampler s = suite_sampler(seed, 3);
    Tally t;
    for (int n = 0; n < 10 * kThetaUnstableFamilies; ++n) {
      int fam = n % kThetaUnstableFamilies;
      PointHV p = engineered_theta_unstable(s, fam);
      auto v = semistable_theta(p);
      bool ok = in_Z(p) && !v.stable() && !king_stable(build_rep(p)) && v.certificate &&
                verify_certificate(p, kTheta, *v.certificate);
      t(ok, "family " + std::to_string(fam));
    }
    return std::pair{t.ok(), t.text("engineered points (" + std::to_string(kThetaUnstableFamilies) + " families)")};
  });
  R.run("stability.minus_theta_zo", [seed] {
    Sampler s = suite_sampler(seed, 4);
    Tally t;
    int stable = 0;
    for (const PointHV& p : z_samples(s, 200)) {
      auto v = semistable_minus_theta(p);
      bool ok = v.stable() == in_Zo(p);
      if (v.stable())
        ok = ok && v.semi_invariant && !v.semi_invariant->is_zero() && !neg_theta_semi_invariant(p).is_zero();
      else
        ok = ok && v.certificate && verify_certificate(p, -kTheta, *v.certificate);
      stable += v.stable();
      t(ok);
    }
    return std::pair{t.ok(), t.text() + ", " + std::to_string(stable) + " stable"};
  });
  R.run("stability.minus_theta_engineered", [seed] {
    Sampler s = suite_sampler(seed, 5);
    Tally t;
    for (int n = 0; n < 40; ++n) {
      PointHV p = engineered_minus_theta_unstable(s, n % 4);
      auto v = semistable_minus_theta(p);
      t(in_Z(p) && !v.stable() && v.certificate && verify_certificate(p, -kTheta, *v.certificate));
    }
    return std::pair{t.ok(), t.text("points with some alpha_i = 0 or beta = 0")};
  });
  R.run("stability.semi_invariant_weight", [seed] {
    Sampler s = suite_sampler(seed, 6);
    Tally t;
    for (int n = 0; n < 100; ++n) {
      PointHV p = orbit_sample(s);
      GroupElement h = s.group_element();
      t(neg_theta_semi_invariant(act(h, p)) == (-kTheta).evaluate(h) * neg_theta_semi_invariant(p));
    }
    return std::pair{t.ok(), t.text("group elements")};
  });
}

inline void quiver_suite(std::uint64_t seed, std::vector<Check>& out) {
  SuiteRunner R(out);
  R.run("quiver.preprojective_on_Z", [seed] {
    Sampler s = suite_sampler(seed, 7);
    Tally t;
    for (int n = 0; n < 200; ++n) t(preprojective_residual(build_rep(orbit_sample(s))).all());
    for (int n = 0; n < 90; ++n) {
      const ChartKind kinds[3] = {ChartKind::generic, ChartKind::beta_zero, ChartKind::alpha_j_zero};
      PointHV p = chart_sample(s, n % 3, kinds[(n / 3) % 3]);
      p.x = {s.scalar(), s.scalar()};
      t(preprojective_residual(build_rep(p)).all());
    }
    return std::pair{t.ok(), t.text("points (200 orbit, 90 chart)")};
  });
  R.run("quiver.off_Z_identities", [seed] {
    Sampler s = suite_sampler(seed, 8);
    Tally t;
    for (int n = 0; n < 60; ++n) {
      PointHV p = s.point();
      auto res = preprojective_residual(build_rep(p));
      t(res.legs_zero() && area_form(res.central) == e1_at_x_squared(p, residuals(p)));
    }
    return std::pair{t.ok(), t.text("random points of H x V")};
  });
  R.run("quiver.equivariance", [seed] {
    Sampler s = suite_sampler(seed, 9);
    Tally t;
    for (int n = 0; n < 50; ++n) {
      PointHV p = s.point();
      GroupElement h = s.group_element();
      t(build_rep(act(h, p)) == transport(h, build_rep(p)));
    }
    return std::pair{t.ok(), t.text()};
  });
  R.run("quiver.witness_E2_not_E1", [] {
    PointHV w = witness_E2_not_E1();
    QuiverRep r = build_rep(w);
    auto res = preprojective_residual(r);
    bool ok = king_stable(r) && !res.all();
    return std::pair{ok, std::string("King-stable: ") + (king_stable(r) ? "yes" : "no") +
                             ", preprojective relations violated: " + (res.all() ? "no" : "yes")};
  });
}

inline void charts_suite(std::uint64_t seed, std::vector<Check>& out) {
  SuiteRunner R(out);
  for (int i = 0; i < 3; ++i) {
    R.run("charts.closure_" + std::to_string(i + 1), [i] {
      ClosureReport r = chart_closure_check(i);
      int zero = 0;
      for (const auto& c : r.components) zero += c.remainder.is_zero();
      return std::pair{r.ok() && r.components.size() == 24, std::to_string(zero) + "/" +
                                                                 std::to_string(r.components.size()) +
                                                                 " zero remainders mod N = " + r.N.str()};
    });
  }
  R.run("charts.quiver_round_trip", [seed] {
    Sampler s = suite_sampler(seed, 10);
    Tally t;
    for (int n = 0; n < 120; ++n) {
      ChartKind kind = n % 5 == 0 ? ChartKind::beta_zero : (n % 7 == 0 ? ChartKind::alpha_j_zero : ChartKind::generic);
      ChartPoint c = random_chart_point(s, n % 3, kind);
      HatChart h = to_quiver_chart(c);
      ChartPoint back = from_quiver_chart(h);
      t(hat_valid(h) && back.point == c.point && to_quiver_chart(back) == h);
    }
    return std::pair{t.ok(), t.text("chart points, both directions")};
  });
  R.run("charts.hat_system_collapse", [seed] {
    Sampler s = suite_sampler(seed, 11);
    Tally t;
    for (int n = 0; n < 100; ++n) {
      HatChart h = to_quiver_chart(random_chart_point(s, n % 3));
      Scalar bh = hat_beta(h);
      t(h.q_j == bh * h.alpha_k * h.p_k && h.q_k == -(bh * h.alpha_j * h.p_j) &&
        h.omega == bh * bh * h.alpha_j * h.alpha_k);
    }
    return std::pair{t.ok(), t.text("hat charts satisfy q-formula and omega^ = beta^2 a_j a_k")};
  });
  R.run("charts.normalize", [seed] {
    Sampler s = suite_sampler(seed, 12);
    Tally t;
    for (int n = 0; n < 60; ++n) {
      int i = n % 3;
      PointHV p = chart_sample(s, i);
      ChartPoint c = normalize(p, i);
      t(chart_invariants_hold(c) && in_Z(c.point));
    }
    return std::pair{t.ok(), t.text()};
  });
}

inline void orbit_suite(std::uint64_t seed, std::vector<Check>& out) {
  SuiteRunner R(out);
  R.run("orbit.stabilizer_order_8", [] {
    FiniteSubgroup G = stabilizer(base_point());
    bool ok = G.size() == 8 && G.count_of_order(2) == 1 && !G.abelian() && classify(G) == GroupType::quaternion;
    return std::pair{ok, "order " + std::to_string(G.size()) + ", " + std::to_string(G.count_of_order(2)) +
                             " element(s) of order 2, " + (G.abelian() ? "abelian" : "non-abelian") + ", " +
                             group_type_name(G)};
  });
  R.run("orbit.relaxed_order_16", [] {
    FiniteSubgroup G = stabilizer(base_point(), StabilizerMode::relaxed);
    return std::pair{G.size() == 16, "order " + std::to_string(G.size())};
  });
  R.run("orbit.base_point_from_irrep", [] {
    bool ok = same_z_part(base_point_from_irrep(), base_point());
    return std::pair{ok, std::string("irrep construction reproduces b*: ") + (ok ? "yes" : "no")};
  });
  R.run("orbit.conjugate_stabilizers", [seed] {
    Sampler s = suite_sampler(seed, 13);
    Tally t;
    for (int n = 0; n < 10; ++n) {
      PointHV p = orbit_sample(s);
      FiniteSubgroup G = stabilizer(p);
      t(G.size() == 8 && classify(G) == GroupType::quaternion);
    }
    return std::pair{t.ok(), t.text("orbit samples with quaternion stabilizer")};
  });
  R.run("orbit.connect", [seed] {
    Sampler s = suite_sampler(seed, 14);
    Tally t;
    for (int n = 0; n < 10; ++n) {
      PointHV p = orbit_sample(s), q = orbit_sample(s);
      ConnectResult c = connect(p, q);
      t(c.found() && same_z_part(act(*c.element, p), q), c.report);
    }
    return std::pair{t.ok(), t.text("pairs connected")};
  });
}

inline void examples_suite(std::uint64_t, std::vector<Check>& out) {
  SuiteRunner R(out);
  R.run("examples.an_resolution", [] {
    Tally t;
    for (long n = 2; n <= 5; ++n) {
      ToricFan F = an_quotient_fan(n, std::vector<long>(n - 1, 1));
      t(F.interior_rays() == n - 1 && F.smooth(), "A" + std::to_string(n - 1));
    }
    return std::pair{t.ok(), t.text("of A1..A4 with n-1 interior rays at chi = (1,...,1)")};
  });
  R.run("examples.an_orbifold", [] {
    Tally t;
    for (long n = 2; n <= 5; ++n) {
      ToricFan F = an_quotient_fan(n, std::vector<long>(n - 1, -1));
      t(F.cones.size() == 1 && F.multiplicities[0] == n && F.stabilizer_orders[0] == n, "A" + std::to_string(n - 1));
    }
    return std::pair{t.ok(), t.text("of A1..A4 with an order-n orbifold chart at chi = -(1,...,1)")};
  });
  R.run("examples.s3", [] {
    S3Point p = s3_base_point();
    bool res = s3_relation_holds(p);
    FiniteSubgroup G = s3_stabilizer(p);
    bool ok = res && G.size() == 6 && classify(G) == GroupType::symmetric3;
    return std::pair{ok, std::string("residual 0: ") + (res ? "yes" : "no") + ", stabilizer order " +
                             std::to_string(G.size()) + " (" + group_type_name(G) + ")"};
  });
}

}  // namespace detail

/// Runs a named suite.  Unknown names throw UsageError.
inline Report run_suite(const std::string& name, std::uint64_t seed) {
  using Fn = void (*)(std::uint64_t, std::vector<Check>&);
  const std::vector<std::pair<std::string, Fn>> table = {
      {"equations", detail::equations_suite}, {"stability", detail::stability_suite},
      {"quiver", detail::quiver_suite},       {"charts", detail::charts_suite},
      {"orbit", detail::orbit_suite},         {"examples", detail::examples_suite}};
  Report r;
  r.suite = name;
  r.seed = seed;
  bool known = false;
  for (const auto& [n, fn] : table)
    if (name == "all" || name == n) {
      fn(seed, r.checks);
      known = true;
    }
  if (!known) throw UsageError("unknown suite '" + name + "'");
  std::sort(r.checks.begin(), r.checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
  return r;
}

}  // namespace d4vgit
