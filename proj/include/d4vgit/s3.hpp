#pragma once

// The S3 example: B : Sym^2 U -> U + C with dim U = 2, subject to
//   B^T diag(b, 1) B = det(B) J,
// where b : U -> U^dual is the full polarization of the C-component of B.
//
// B is stored as a 3x3 matrix: rows (U_1, U_2, C), columns the basis
// (e1^2, e1e2, e2^2) of Sym^2 U.  g in GL(U) acts by
//   B -> diag(g, 1) B Sym^2(g)^-1.

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "d4vgit/equations.hpp"
#include "d4vgit/linalg.hpp"
#include "d4vgit/orbit.hpp"

namespace d4vgit {

struct S3Point {
  Mat3<Scalar> B = Mat3<Scalar>::zero();

  friend bool operator==(const S3Point&, const S3Point&) = default;
};

/// b(u, v) = B_C(u v + v u): [[2P, Q], [Q, 2R]] for B_C = (P, Q, R).
inline Mat2<Scalar> s3_inner_product(const S3Point& p) {
  const auto& c = p.B[2];
  return mat2(Scalar(2) * c[0], c[1], c[1], Scalar(2) * c[2]);
}

/// B^T diag(b, 1) B - det(B) J.
inline Mat3<Scalar> s3_residual(const S3Point& p) {
  Mat2<Scalar> b = s3_inner_product(p);
  Mat3<Scalar> D = Mat3<Scalar>::zero();
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) D[r][c] = b[r][c];
  D[2][2] = 1;
  return p.B.transpose() * D * p.B - det(p.B) * J_matrix<Scalar>();
}

inline bool s3_relation_holds(const S3Point& p) { return s3_residual(p) == Mat3<Scalar>::zero(); }

inline S3Point s3_act(const Mat2<Scalar>& g, const S3Point& p) {
  if (det(g).is_zero()) throw ContractViolation("g is singular");
  Mat3<Scalar> G = Mat3<Scalar>::zero();
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) G[r][c] = g[r][c];
  G[2][2] = 1;
  return {G * p.B * inverse(sym_square(g))};
}

/// The 2-dimensional irrep of S3 (permutation rep minus trivial) on the
/// basis (e1 - e2, e2 - e3): a 3-cycle and a transposition.
struct S3Irrep {
  Mat2<Scalar> rotation, reflection;
};

inline S3Irrep s3_irrep() {
  return {mat2(Scalar(0), Scalar(-1), Scalar(1), Scalar(-1)), mat2(Scalar(-1), Scalar(1), Scalar(0), Scalar(1))};
}

/// Equivariant maps Sym^2 U -> U + C form a 2-dim family l (U part) + m (C part);
/// the relation picks (l, m) = (1, -6) up to the GL(U) scaling.
inline S3Point s3_base_point() {
  S3Point p;
  p.B.a[0] = {Scalar(-1), Scalar(-2), Scalar(2)};
  p.B.a[1] = {Scalar(-2), Scalar(2), Scalar(1)};
  p.B.a[2] = {Scalar(-6), Scalar(6), Scalar(-6)};
  return p;
}

namespace detail {

/// Idempotents e of u -> B_U(u u): the lines where B_U(u u) is parallel to u
/// are the roots of det[B_U(u u), u]; each is rescaled so that B_U(e e) = e.
inline std::vector<Vec<Scalar, 2>> s3_idempotents(const S3Point& p) {
  const auto& B = p.B;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (!B[r][c].is_base()) throw DegeneratePoint("S3 stabilizer search needs a point over Q(i)");
  // det[B_U(u u), u] at u = (s, 1), low degree first
  std::vector<GaussQ> cubic = {B[0][2].base_value(), (B[0][1] - B[1][2]).base_value(),
                               (B[0][0] - B[1][1]).base_value(), (-B[1][0]).base_value()};
  if (std::all_of(cubic.begin(), cubic.end(), [](const GaussQ& z) { return z.is_zero(); }))
    throw DegeneratePoint("every line is invariant under u -> B_U(u u)");
  std::vector<Vec<Scalar, 2>> lines;
  for (const GaussQ& s : gaussian_rational_roots(cubic)) lines.push_back({Scalar(s), Scalar(1)});
  if (B[1][0].is_zero()) lines.push_back({Scalar(1), Scalar(0)});  // root at infinity
  if (lines.size() != 3) throw DegeneratePoint("the idempotent cubic does not split into 3 distinct lines over Q(i)");
  std::vector<Vec<Scalar, 2>> out;
  for (const auto& u : lines) {
    Vec<Scalar, 3> uu = sym_square(u);
    Vec<Scalar, 2> f{dot(B[0], uu), dot(B[1], uu)};
    Scalar c = u[0].is_zero() ? f[1] / u[1] : f[0] / u[0];
    if (c.is_zero()) throw DegeneratePoint("nilpotent direction");
    out.push_back(scale(c.inverse(), u));
  }
  return out;
}

inline GroupElement gl_only(const Mat2<Scalar>& g) { return GroupElement({Scalar(1), Scalar(1), Scalar(1)}, g); }

}  // namespace detail

/// Stabilizer in GL(U), embedded in G with trivial torus part.  Any element
/// permutes the three idempotents, and two of them form a basis, so the
/// search runs over the six permutations.
inline FiniteSubgroup s3_stabilizer(const S3Point& p) {
  if (!s3_relation_holds(p)) throw ContractViolation("S3 relation does not hold");
  if (det(p.B).is_zero()) throw ContractViolation("det B = 0");
  if (det(s3_inner_product(p)).is_zero()) throw ContractViolation("b is degenerate");
  auto e = detail::s3_idempotents(p);
  Mat2<Scalar> E = from_columns(e[0], e[1]);
  if (det(E).is_zero()) throw DegeneratePoint("idempotents are not independent");
  Mat2<Scalar> Einv = inverse(E);
  std::vector<GroupElement> elems;
  std::array<int, 3> perm{0, 1, 2};
  do {
    Mat2<Scalar> g = from_columns(e[perm[0]], e[perm[1]]) * Einv;
    if (det(g).is_zero()) continue;
    if (s3_act(g, p) == p) elems.push_back(detail::gl_only(g));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return make_subgroup(std::move(elems));
}

inline std::string s3_report(const S3Point& p) {
  std::string out = "B =\n" + to_string(p.B) + "\n";
  out += "residual: " + std::string(s3_relation_holds(p) ? "0" : "nonzero") + "\n";
  out += "det B = " + det(p.B).str() + "\n";
  FiniteSubgroup G = s3_stabilizer(p);
  out += "stabilizer: order " + std::to_string(G.size()) + ", " + group_type_name(G) + "\n";
  out += multiplication_table_text(G);
  return out;
}

}  // namespace d4vgit
