// d4vgit command-line front end.
//
// Exit codes: 0 pass, 1 fail, 64 usage / unreadable input.
// `stability` uses 0 stable, 2 unstable, 3 precondition (point not on Z).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "d4vgit/d4vgit.hpp"

using namespace d4vgit;

namespace {

constexpr int kPass = 0, kFail = 1, kUnstable = 2, kPrecondition = 3, kUsage = 64;

struct Options {
  std::string point_file;
  bool json = false;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// no --point means b*
PointHV load_point(const Options& o) {
  if (o.point_file.empty()) return base_point();
  return point_from_json(parse_json_text(read_file(o.point_file)));
}

int emit(const Options& o, const Json& j, const std::string& text, int code) {
  if (o.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
  return code;
}

Json vec_json(const Vec<Scalar, 2>& v) { return Json::array({to_json(v[0]), to_json(v[1])}); }

Json rep_json(const QuiverRep& r) {
  Json j;
  j["E0"] = vec_json(r.E0);
  j["D0"] = vec_json(r.D0);
  for (int i = 0; i < 3; ++i) {
    j["D"].push_back(vec_json(r.D[i]));
    j["E"].push_back(vec_json(r.E[i]));
  }
  return j;
}

Json cocharacter_json(const Cocharacter& l) { return Json(std::vector<long>(l.c.begin(), l.c.end())); }

Json verdict_json(const StabilityVerdict& v, const Character& chi) {
  Json j;
  j["character"] = std::vector<long>(chi.theta.begin(), chi.theta.end());
  j["status"] = v.stable() ? "stable" : "unstable";
  if (v.stable()) {
    j["witness"] = v.witness;
    if (v.leg >= 0) j["leg"] = v.leg + 1;
    if (v.semi_invariant) j["semi_invariant"] = to_json(*v.semi_invariant);
  } else {
    const Certificate& c = *v.certificate;
    j["certificate"] = {{"family", c.family}, {"cocharacter", cocharacter_json(c.cocharacter)}, {"basis", to_json(c.basis)}};
  }
  return j;
}

Json group_json(const FiniteSubgroup& G) {
  Json j;
  j["order"] = G.size();
  j["type"] = group_type_name(G);
  j["abelian"] = G.abelian();
  j["element_orders"] = G.orders;
  j["table"] = G.table;
  for (const auto& h : G.elements) j["elements"].push_back(to_json(h));
  return j;
}

std::string group_text(const FiniteSubgroup& G) {
  std::string out = "order " + std::to_string(G.size()) + ", " + group_type_name(G) + "\n";
  for (std::size_t n = 0; n < G.size(); ++n)
    out += "  [" + std::to_string(n) + "] order " + std::to_string(G.orders[n]) + ": " + element_str(G.elements[n]) + "\n";
  return out + multiplication_table_text(G);
}

std::vector<long> parse_int_list(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("expected a comma-separated integer list, got '" + s + "'");
    }
  }
  return out;
}

int cmd_verify_point(const Options& o) {
  PointHV p = load_point(o);
  EquationResidual r = residuals(p);
  bool z = r.all();
  std::optional<bool> zo;
  if (z) zo = in_Zo(p);
  Json j;
  j["in_Z"] = z;
  j["in_Zo"] = zo ? Json(*zo) : Json(nullptr);
  j["E1_zero"] = r.e1_zero();
  j["E2_zero"] = r.e2_zero();
  j["E3_zero"] = r.e3_zero();
  for (const auto& c : r.components()) j["residuals"].push_back(to_json(c));
  std::string text = residual_report(r) + "in Z: " + (z ? "yes" : "no");
  if (zo) text += std::string(", in Zo: ") + (*zo ? "yes" : "no");
  return emit(o, j, text + "\n", z ? kPass : kFail);
}

int cmd_stability(const Options& o, const std::string& which) {
  Character chi = which == "theta" ? kTheta : -kTheta;
  PointHV p = load_point(o);
  StabilityVerdict v;
  try {
    v = which == "theta" ? semistable_theta(p) : semistable_minus_theta(p);
  } catch (const ContractViolation& e) {
    Json j = {{"status", "precondition"}, {"error", e.what()}};
    return emit(o, j, std::string("precondition failed: ") + e.what() + "\n", kPrecondition);
  }
  if (!v.stable() && !verify_certificate(p, chi, *v.certificate)) {
    std::cerr << "internal error: certificate does not verify\n";
    return kFail;
  }
  return emit(o, verdict_json(v, chi), verdict_report(v), v.stable() ? kPass : kUnstable);
}

int cmd_quiver_build(const Options& o) {
  PointHV p = load_point(o);
  QuiverRep r = build_rep(p);
  PreprojectiveResidual res = preprojective_residual(r);
  bool king = king_stable(r);
  Json j;
  j["rep"] = rep_json(r);
  j["preprojective"] = {{"legs_zero", res.legs_zero()}, {"central_zero", res.central_zero()}};
  j["king_stable"] = king;
  std::string text = rep_report(r) + "preprojective relations: " + (res.all() ? "hold" : "violated") +
                     "\nKing stable: " + (king ? "yes" : "no") + "\n";
  return emit(o, j, text, res.all() ? kPass : kFail);
}

int cmd_chart_normalize(const Options& o, int index) {
  PointHV p = load_point(o);
  ChartPoint c = normalize(p, index - 1);
  HatChart h = to_quiver_chart(c);
  bool ok = chart_invariants_hold(c);
  Json j;
  j["index"] = index;
  j["point"] = to_json(c.point);
  j["normalizer"] = to_json(c.normalizer);
  j["hat"] = {{"alpha_j", to_json(h.alpha_j)}, {"alpha_k", to_json(h.alpha_k)}, {"p_j", to_json(h.p_j)},
              {"q_j", to_json(h.q_j)},         {"p_k", to_json(h.p_k)},         {"q_k", to_json(h.q_k)},
              {"omega", to_json(h.omega)}};
  for (const auto& [name, holds] : chart_relations(c)) j["relations"][name] = holds;
  std::string text = "chart " + std::to_string(index) + " normal form:\n" + to_json(c.point).dump() +
                     "\nnormalizer: " + element_str(c.normalizer) + "\n";
  for (const auto& [name, holds] : chart_relations(c)) text += "  " + name + ": " + (holds ? "ok" : "FAIL") + "\n";
  return emit(o, j, text, ok ? kPass : kFail);
}

int cmd_chart_closure(const Options& o, int index) {
  ClosureReport r = chart_closure_check(index - 1);
  Json j;
  j["index"] = index;
  j["N"] = r.N.str();
  j["ok"] = r.ok();
  for (const auto& c : r.components)
    j["components"].push_back({{"name", c.name}, {"substituted", c.substituted.str()}, {"remainder", c.remainder.str()}});
  return emit(o, j, closure_report_text(r), r.ok() ? kPass : kFail);
}

int cmd_orbit_stabilizer(const Options& o, bool relaxed) {
  PointHV p = load_point(o);
  FiniteSubgroup G = stabilizer(p, relaxed ? StabilizerMode::relaxed : StabilizerMode::full);
  return emit(o, group_json(G), group_text(G), kPass);
}

int cmd_orbit_connect(const Options& o, const std::string& target) {
  PointHV p = load_point(o);
  PointHV q = point_from_json(parse_json_text(read_file(target)));
  ConnectResult c = connect(p, q);
  Json j;
  j["found"] = c.found();
  j["report"] = c.report;
  if (c.found()) j["element"] = to_json(*c.element);
  std::string text = c.report + "\n";
  if (c.found()) text += element_str(*c.element) + "\n";
  return emit(o, j, text, c.found() ? kPass : kFail);
}

int cmd_examples_an(const Options& o, long n, const std::string& chi_text) {
  if (n < 2) throw UsageError("--n must be at least 2");
  std::vector<long> chi = chi_text.empty() ? std::vector<long>(n - 1, 1) : parse_int_list(chi_text);
  ToricFan F = an_quotient_fan(n, chi);
  Json j;
  j["n"] = n;
  j["chi"] = chi;
  j["ray_labels"] = F.ray_labels;
  j["rays"] = F.rays;
  j["cones"] = F.cones;
  j["multiplicities"] = F.multiplicities;
  j["stabilizer_orders"] = F.stabilizer_orders;
  j["interior_rays"] = F.interior_rays();
  j["smooth"] = F.smooth();
  return emit(o, j, fan_report(F), F.empty() ? kFail : kPass);
}

int cmd_examples_s3(const Options& o) {
  S3Point p = o.point_file.empty() ? s3_base_point() : s3_point_from_json(parse_json_text(read_file(o.point_file)));
  bool rel = s3_relation_holds(p);
  if (!rel) {
    Json j = {{"relation", false}};
    return emit(o, j, "S3 relation does not hold\n", kFail);
  }
  FiniteSubgroup G = s3_stabilizer(p);
  Json j;
  j["relation"] = true;
  j["det_B"] = to_json(det(p.B));
  j["stabilizer"] = group_json(G);
  return emit(o, j, s3_report(p), kPass);
}

int cmd_suite(const Options& o, const std::string& name, std::uint64_t seed) {
  Report r = run_suite(name, seed);
  return emit(o, to_json(r), report_text(r), r.all_pass() ? kPass : kFail);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for the D4 GIT construction"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* c, bool point) {
    if (point) c->add_option("--point", o.point_file, "point JSON file ('-' for stdin; default: base point)");
    c->add_flag("--json", o.json, "machine-readable output");
  };

  auto* verify = app.add_subcommand("verify-point", "residuals of E1-E3 and Z / Zo membership");
  add_common(verify, true);

  std::string character = "theta";
  auto* stab = app.add_subcommand("stability", "theta or -theta semistability with certificate");
  add_common(stab, true);
  stab->add_option("--character", character, "theta | minus-theta")->check(CLI::IsMember({"theta", "minus-theta"}));

  auto* quiver = app.add_subcommand("quiver", "quiver representation of a point");
  quiver->require_subcommand(1);
  auto* quiver_build = quiver->add_subcommand("build", "build the framed D4 representation");
  add_common(quiver_build, true);

  int index = 1;
  auto* chart = app.add_subcommand("chart", "affine charts");
  chart->require_subcommand(1);
  auto* chart_norm = chart->add_subcommand("normalize", "normal form in chart --index");
  add_common(chart_norm, true);
  chart_norm->add_option("--index", index, "chart index 1..3")->check(CLI::Range(1, 3));
  auto* chart_close = chart->add_subcommand("closure-check", "symbolic closure of the chart relations");
  add_common(chart_close, false);
  chart_close->add_option("--index", index, "chart index 1..3")->check(CLI::Range(1, 3));

  bool relaxed = false;
  std::string target;
  auto* orbit = app.add_subcommand("orbit", "isotropy groups and orbit connection");
  orbit->require_subcommand(1);
  auto* orbit_stab = orbit->add_subcommand("stabilizer", "stabilizer of the Z-part of a point");
  add_common(orbit_stab, true);
  orbit_stab->add_flag("--relaxed", relaxed, "allow (alpha, beta) -> (-alpha, -beta)");
  auto* orbit_conn = orbit->add_subcommand("connect", "group element moving --point to --target");
  add_common(orbit_conn, true);
  orbit_conn->add_option("--target", target, "target point JSON file")->required();

  long n = 3;
  std::string chi;
  auto* examples = app.add_subcommand("examples", "toric A_n and the S3 example");
  examples->require_subcommand(1);
  auto* ex_an = examples->add_subcommand("an", "quotient fan of the A_{n-1} problem");
  add_common(ex_an, false);
  ex_an->add_option("--n", n, "cyclic group order");
  ex_an->add_option("--chi", chi, "character, comma separated (default 1,...,1)");
  auto* ex_s3 = examples->add_subcommand("s3", "S3 base point (or --point) and its stabilizer");
  add_common(ex_s3, true);

  std::string suite_name = "all";
  std::uint64_t seed = 42;
  auto* suite = app.add_subcommand("suite", "run an acceptance suite");
  add_common(suite, false);
  suite->add_option("name", suite_name, "equations | stability | quiver | charts | orbit | examples | all");
  suite->add_option("--seed", seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return kPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify_point(o);
    if (*stab) return cmd_stability(o, character);
    if (*quiver_build) return cmd_quiver_build(o);
    if (*chart_norm) return cmd_chart_normalize(o, index);
    if (*chart_close) return cmd_chart_closure(o, index);
    if (*orbit_stab) return cmd_orbit_stabilizer(o, relaxed);
    if (*orbit_conn) return cmd_orbit_connect(o, target);
    if (*ex_an) return cmd_examples_an(o, n, chi);
    if (*ex_s3) return cmd_examples_s3(o);
    if (*suite) return cmd_suite(o, suite_name, seed);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
