#pragma once

// Charts U_i of the theta-quotient and their quiver-side counterparts.
//
// Chart i (legs j, k with (i, j, k) cyclic) normalizes a theta-stable point
// to x = (1, 0), alpha_i = 1, B_i = (1, 0, r).  On Z the remaining
// coordinates then satisfy
//   2r = omega = beta^2 a_j a_k / 2,   r_j = -r p_j,   r_k = -r p_k,
//   q_j = beta a_k p_k,   q_k = -beta a_j p_j,
//   N = 1 + a_j p_j^2 + a_k p_k^2 = 0.
// The normalizer needs no square roots: with Q_i(x) = B_i . x^2,
//   g = [x | a_i Q_i(x) (B_i^x)^dual]^-1,  t_i = 1 / Q_i(x),  t_j = t_k = 1.
// What is left is the torus GL(L_j) x GL(L_k).

#include <array>
#include <map>
#include <string>
#include <vector>

#include "d4vgit/equations.hpp"
#include "d4vgit/git.hpp"
#include "d4vgit/poly.hpp"
#include "d4vgit/quiver.hpp"
#include "d4vgit/stability.hpp"

namespace d4vgit {

/// Legs (j, k) of chart i, 0-based, cyclic.
inline std::pair<int, int> chart_legs(int i) { return {(i + 1) % 3, (i + 2) % 3}; }

inline void check_chart_index(int i) {
  if (i < 0 || i > 2) throw ContractViolation("chart index must be 1, 2 or 3");
}

struct ChartPoint {
  int index = 0;         // 0-based chart index i
  PointHV point;         // normalized point
  GroupElement normalizer;  // point = act(normalizer, original)

  const Scalar& alpha_j() const { return point.alpha[chart_legs(index).first]; }
  const Scalar& alpha_k() const { return point.alpha[chart_legs(index).second]; }
  const Scalar& beta() const { return point.beta; }
  const Scalar& p_j() const { return point.B[chart_legs(index).first][0]; }
  const Scalar& q_j() const { return point.B[chart_legs(index).first][1]; }
  const Scalar& p_k() const { return point.B[chart_legs(index).second][0]; }
  const Scalar& q_k() const { return point.B[chart_legs(index).second][1]; }
  const Scalar& r() const { return point.B[index][2]; }
};

/// Names and truth values of the chart relations, in a fixed order.
inline std::vector<std::pair<std::string, bool>> chart_relations(const ChartPoint& c) {
  auto [j, k] = chart_legs(c.index);
  const PointHV& p = c.point;
  const Scalar& r = c.r();
  const Scalar& b = p.beta;
  std::vector<std::pair<std::string, bool>> out;
  out.emplace_back("x = (1,0)", p.x == Vec<Scalar, 2>{Scalar(1), Scalar(0)});
  out.emplace_back("alpha_i = 1", p.alpha[c.index] == Scalar(1));
  out.emplace_back("B_i = (1,0,r)", p.B[c.index][0] == Scalar(1) && p.B[c.index][1].is_zero());
  out.emplace_back("2r = omega", Scalar(2) * r == omega(p));
  out.emplace_back("omega = beta^2 a_j a_k / 2", omega(p) == b * b * p.alpha[j] * p.alpha[k] * Scalar(1, 2));
  out.emplace_back("r_j = -r p_j", p.B[j][2] == -(r * p.B[j][0]));
  out.emplace_back("r_k = -r p_k", p.B[k][2] == -(r * p.B[k][0]));
  out.emplace_back("q_j = beta a_k p_k", p.B[j][1] == b * p.alpha[k] * p.B[k][0]);
  out.emplace_back("q_k = -beta a_j p_j", p.B[k][1] == -(b * p.alpha[j] * p.B[j][0]));
  out.emplace_back("1 + a_j p_j^2 + a_k p_k^2 = 0",
                   (Scalar(1) + p.alpha[j] * p.B[j][0] * p.B[j][0] + p.alpha[k] * p.B[k][0] * p.B[k][0]).is_zero());
  out.emplace_back("(p_j, q_j) != 0", !(p.B[j][0].is_zero() && p.B[j][1].is_zero()));
  out.emplace_back("(p_k, q_k) != 0", !(p.B[k][0].is_zero() && p.B[k][1].is_zero()));
  return out;
}

inline bool chart_invariants_hold(const ChartPoint& c) {
  for (const auto& [name, ok] : chart_relations(c))
    if (!ok) return false;
  return true;
}

/// The normalizing group element for chart i, or NotInChart.
inline GroupElement chart_normalizer(const PointHV& p, int i) {
  check_chart_index(i);
  if (is_zero_vec(p.x)) throw NotInChart("x = 0");
  Scalar Q = dot(p.B[i], sym_square(p.x));
  if (p.alpha[i].is_zero() || Q.is_zero())
    throw NotInChart("x and the image of E_" + std::to_string(i + 1) + " do not span V");
  Vec<Scalar, 2> D = contract_form(p.B[i], p.x);
  Vec<Scalar, 2> y = scale(p.alpha[i] * Q, dual_vector(D));
  std::array<Scalar, 3> t{Scalar(1), Scalar(1), Scalar(1)};
  t[i] = Q.inverse();
  return GroupElement(t, inverse(from_columns(p.x, y)));
}

/// Normal form in chart i of a theta-stable point of Z x V.
inline ChartPoint normalize(const PointHV& p, int i) {
  check_chart_index(i);
  if (!in_Z(p)) throw ContractViolation("normalize expects a point of Z x V");
  StabilityVerdict v = semistable_theta(p);
  if (!v.stable()) throw NotInChart("point is theta-unstable");
  ChartPoint c;
  c.index = i;
  c.normalizer = chart_normalizer(p, i);
  c.point = act(c.normalizer, p);
  if (!chart_invariants_hold(c)) throw ContractViolation("chart relations failed after normalization");
  return c;
}

/// Functions invariant under the residual torus GL(L_j) x GL(L_k):
/// (a_j p_j^2, a_k p_k^2, beta^2 a_j a_k, beta a_j a_k p_j p_k).
inline std::array<Scalar, 4> chart_invariants(const ChartPoint& c) {
  const Scalar &aj = c.alpha_j(), &ak = c.alpha_k(), &pj = c.p_j(), &pk = c.p_k(), &b = c.beta();
  return {aj * pj * pj, ak * pk * pk, b * b * aj * ak, b * aj * ak * pj * pk};
}

/// Acts by the residual torus (t_j, t_k) on a chart point.
inline ChartPoint residual_torus_act(const ChartPoint& c, const Scalar& tj, const Scalar& tk) {
  auto [j, k] = chart_legs(c.index);
  std::array<Scalar, 3> t{Scalar(1), Scalar(1), Scalar(1)};
  t[j] = tj;
  t[k] = tk;
  GroupElement h(t, Mat2<Scalar>::identity());
  ChartPoint out = c;
  out.point = act(h, c.point);
  out.normalizer = h * c.normalizer;
  return out;
}

// ---------------------------------------------------------------------------
// Quiver side

/// Hat coordinates of the quiver chart V_i: D_j = (p^_j, q^_j),
/// E_j = a^_j (-q^_j, p^_j), D0 = (0, w^) with E0 = (1,0), D_i = (1,0), E_i = (0,1).
struct HatChart {
  int index = 0;
  Scalar alpha_j, alpha_k, p_j, q_j, p_k, q_k, omega;

  friend bool operator==(const HatChart&, const HatChart&) = default;
};

/// beta^ recovered from the middle central equation.
inline Scalar hat_beta(const HatChart& h) {
  Scalar u = h.alpha_k * h.p_k;
  if (!u.is_zero()) return h.q_j / u;
  Scalar w = h.alpha_j * h.p_j;
  if (!w.is_zero()) return -(h.q_k / w);
  throw ContractViolation("hat data violates the first central equation");
}

/// The three central-vertex equations
///   1 + a^_j p^_j^2 + a^_k p^_k^2 = 0,
///   a^_j p^_j q^_j + a^_k p^_k q^_k = 0,
///   a^_j q^_j^2 + a^_k q^_k^2 + w^ = 0.
inline std::array<Scalar, 3> hat_central_equations(const HatChart& h) {
  return {Scalar(1) + h.alpha_j * h.p_j * h.p_j + h.alpha_k * h.p_k * h.p_k,
          h.alpha_j * h.p_j * h.q_j + h.alpha_k * h.p_k * h.q_k,
          h.alpha_j * h.q_j * h.q_j + h.alpha_k * h.q_k * h.q_k + h.omega};
}

inline bool hat_valid(const HatChart& h) {
  for (const auto& e : hat_central_equations(h))
    if (!e.is_zero()) return false;
  if (h.p_j.is_zero() && h.q_j.is_zero()) return false;
  if (h.p_k.is_zero() && h.q_k.is_zero()) return false;
  return true;
}

/// p^ = p, q^ = q/2, a^ = a, w^ = omega/2 (so beta^ = beta/2).
inline HatChart to_quiver_chart(const ChartPoint& c) {
  if (!chart_invariants_hold(c)) throw ContractViolation("not a valid chart point");
  Scalar half(1, 2);
  return {c.index, c.alpha_j(), c.alpha_k(), c.p_j(), c.q_j() * half, c.p_k(), c.q_k() * half, omega(c.point) * half};
}

inline ChartPoint from_quiver_chart(const HatChart& h) {
  check_chart_index(h.index);
  if (!hat_valid(h)) throw ContractViolation("hat data violates the central equations");
  auto [j, k] = chart_legs(h.index);
  Scalar beta = Scalar(2) * hat_beta(h);
  ChartPoint c;
  c.index = h.index;
  PointHV& p = c.point;
  p.x = {Scalar(1), Scalar(0)};
  p.alpha[h.index] = 1;
  p.alpha[j] = h.alpha_j;
  p.alpha[k] = h.alpha_k;
  p.beta = beta;
  Scalar r = beta * beta * h.alpha_j * h.alpha_k * Scalar(1, 4);
  p.B[h.index] = {Scalar(1), Scalar(0), r};
  p.B[j] = {h.p_j, Scalar(2) * h.q_j, -(r * h.p_j)};
  p.B[k] = {h.p_k, Scalar(2) * h.q_k, -(r * h.p_k)};
  if (!chart_invariants_hold(c)) throw ContractViolation("hat data does not give a chart point");
  return c;
}

/// Quiver-side normalizer: g^-1 = [E0 | E_i / t_i] with t_i = 1 / (D_i E0).
inline GroupElement quiver_normalizer(const QuiverRep& r, int i) {
  check_chart_index(i);
  Scalar d = dot(r.D[i], r.E0);
  if (d.is_zero()) throw NotInChart("D_i E0 = 0");
  std::array<Scalar, 3> t{Scalar(1), Scalar(1), Scalar(1)};
  t[i] = d.inverse();
  Mat2<Scalar> ginv = from_columns(r.E0, scale(d, r.E[i]));
  if (det(ginv).is_zero()) throw NotInChart("E0 and E_i do not span V");
  return GroupElement(t, inverse(ginv));
}

/// Normalize a King-stable rep into chart i and read off its hat coordinates.
inline HatChart quiver_chart_of(const QuiverRep& rep, int i) {
  QuiverRep n = transport(quiver_normalizer(rep, i), rep);
  auto [j, k] = chart_legs(i);
  if (!(n.E0 == Vec<Scalar, 2>{Scalar(1), Scalar(0)}) || !(n.D[i] == Vec<Scalar, 2>{Scalar(1), Scalar(0)}) ||
      !(n.E[i] == Vec<Scalar, 2>{Scalar(0), Scalar(1)}))
    throw ContractViolation("quiver normalization failed");
  auto alpha_of = [](const Vec<Scalar, 2>& D, const Vec<Scalar, 2>& E) {
    if (!D[0].is_zero()) return E[1] / D[0];
    if (!D[1].is_zero()) return -(E[0] / D[1]);
    throw NotInChart("a leg map D vanishes");
  };
  HatChart h;
  h.index = i;
  h.p_j = n.D[j][0];
  h.q_j = n.D[j][1];
  h.p_k = n.D[k][0];
  h.q_k = n.D[k][1];
  h.alpha_j = alpha_of(n.D[j], n.E[j]);
  h.alpha_k = alpha_of(n.D[k], n.E[k]);
  if (!n.D0[0].is_zero()) throw ContractViolation("D0 is not of the form (0, w)");
  h.omega = n.D0[1];
  return h;
}

// ---------------------------------------------------------------------------
// Symbolic closure check

struct ClosureComponent {
  std::string name;
  Poly substituted;
  Poly quotient;
  Poly remainder;
};

struct ClosureReport {
  int index = 0;
  Poly N;
  std::vector<ClosureComponent> components;

  bool ok() const {
    for (const auto& c : components)
      if (!c.remainder.is_zero()) return false;
    return true;
  }
};

/// Substitute the chart relations into all 24 residual components of a
/// general chart-i point and divide each by N.  Variables, smallest first:
/// a_j < a_k < b < p_j < p_k (< q_j < q_k < r_i < r_j < r_k, all eliminated).
inline ClosureReport chart_closure_check(int i = 0) {
  check_chart_index(i);
  auto [j, k] = chart_legs(i);
  auto n = [](int m) { return std::to_string(m + 1); };
  Ring R = make_ring({"a" + n(j), "a" + n(k), "b", "p" + n(j), "p" + n(k), "q" + n(j), "q" + n(k), "r" + n(i),
                      "r" + n(j), "r" + n(k)});
  auto v = [&](const std::string& s) { return Poly::var(R, s); };
  Poly aj = v("a" + n(j)), ak = v("a" + n(k)), b = v("b"), pj = v("p" + n(j)), pk = v("p" + n(k));
  Poly qj = v("q" + n(j)), qk = v("q" + n(k)), ri = v("r" + n(i)), rj = v("r" + n(j)), rk = v("r" + n(k));

  BasicPoint<Poly> P;
  P.alpha[i] = Poly(R, Scalar(1));
  P.alpha[j] = aj;
  P.alpha[k] = ak;
  P.beta = b;
  P.B[i] = {Poly(R, Scalar(1)), Poly(R, Scalar(0)), ri};
  P.B[j] = {pj, qj, rj};
  P.B[k] = {pk, qk, rk};
  P.x = {Poly(R, Scalar(1)), Poly(R, Scalar(0))};

  Poly om = omega(P);
  std::map<std::string, Poly> first = {
      {"r" + n(j), -(ri * pj)}, {"r" + n(k), -(ri * pk)}, {"q" + n(j), b * ak * pk}, {"q" + n(k), -(b * aj * pj)}};
  std::map<std::string, Poly> second = {{"r" + n(i), om * Poly(Scalar(1, 2))}};

  ClosureReport rep;
  rep.index = i;
  rep.N = Poly(R, Scalar(1)) + aj * pj.pow(2) + ak * pk.pow(2);
  auto res = residuals(P);
  std::vector<std::pair<std::string, Poly>> comps;
  static const char* e1names[6] = {"11", "12", "13", "22", "23", "33"};
  for (int c = 0; c < 6; ++c) comps.emplace_back(std::string("E1[") + e1names[c] + "]", res.e1[c]);
  for (int a = 0; a < 3; ++a)
    for (int c = 0; c < 3; ++c) comps.emplace_back("E2[" + n(a) + n(c) + "]", res.e2[a][c]);
  for (int a = 0; a < 3; ++a)
    for (int c = 0; c < 3; ++c) comps.emplace_back("E3[" + n(a) + n(c) + "]", res.e3[a][c]);
  for (auto& [name, poly] : comps) {
    Poly s = poly.substitute(first).substitute(second);
    auto [q, r] = s.divide_by(rep.N);
    rep.components.push_back({name, s, q, r});
  }
  return rep;
}

inline std::string closure_report_text(const ClosureReport& r) {
  std::string out = "chart " + std::to_string(r.index + 1) + ", N = " + r.N.str() + "\n";
  for (const auto& c : r.components) {
    out += c.name + ": ";
    if (c.substituted.is_zero())
      out += "0 after substitution\n";
    else
      out += "quotient " + c.quotient.str() + ", remainder " + c.remainder.str() + "\n";
  }
  out += r.ok() ? "all remainders vanish\n" : "NONZERO REMAINDER\n";
  return out;
}

}  // namespace d4vgit
