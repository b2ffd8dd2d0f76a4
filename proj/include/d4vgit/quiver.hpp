#pragma once

// The framed affine-D4 quiver with dimension vector (1; 2; 1, 1, 1):
//
//        C --E0--> V --D0--> C        (framing, D0 : V -> det-twisted line)
//        L_i --E_i--> V --D_i--> L_i  (legs, i = 1, 2, 3)
//
// Maps into V are column 2-vectors, maps out of V are covectors.

#include <array>
#include <string>

#include "d4vgit/equations.hpp"
#include "d4vgit/git.hpp"
#include "d4vgit/linalg.hpp"

namespace d4vgit {

template <class T>
struct BasicQuiverRep {
  Vec<T, 2> E0{T(0), T(0)};
  Vec<T, 2> D0{T(0), T(0)};  // covector
  std::array<Vec<T, 2>, 3> D{};  // covectors
  std::array<Vec<T, 2>, 3> E{};

  friend bool operator==(const BasicQuiverRep& a, const BasicQuiverRep& b) {
    return a.E0 == b.E0 && a.D0 == b.D0 && a.D == b.D && a.E == b.E;
  }
};

using QuiverRep = BasicQuiverRep<Scalar>;

/// (a, b)^dual = (-b, a): the fixed identification V^dual (x) det V = V.
template <class T>
Vec<T, 2> dual_vector(const Vec<T, 2>& c) {
  return {-c[1], c[0]};
}

/// Covector v -> B(x, v) of the half-polarization of (p, q, r).
template <class T>
Vec<T, 2> contract_form(const Vec<T, 3>& form, const Vec<T, 2>& x) {
  T half(Scalar(1, 2));
  return {form[0] * x[0] + form[1] * x[1] * half, form[1] * x[0] * half + form[2] * x[1]};
}

/// E0 = x, D0 = (omega/2) area(x, -), D_i = B_i(x, -), E_i = alpha_i D_i^dual.
template <class T>
BasicQuiverRep<T> build_rep(const BasicPoint<T>& p) {
  BasicQuiverRep<T> r;
  r.E0 = p.x;
  T half_omega = omega(p) * T(Scalar(1, 2));
  r.D0 = {-(half_omega * p.x[1]), half_omega * p.x[0]};
  for (int i = 0; i < 3; ++i) {
    r.D[i] = contract_form(p.B[i], p.x);
    r.E[i] = scale(p.alpha[i], dual_vector(r.D[i]));
  }
  return r;
}

template <class T>
Mat2<T> outer(const Vec<T, 2>& col, const Vec<T, 2>& row) {
  return mat2(col[0] * row[0], col[0] * row[1], col[1] * row[0], col[1] * row[1]);
}

template <class T>
struct BasicPreprojectiveResidual {
  std::array<T, 3> legs{T(0), T(0), T(0)};  // D_i E_i
  Mat2<T> central = Mat2<T>::zero();         // sum E_i D_i - E0 D0

  bool legs_zero() const {
    for (const auto& l : legs)
      if (!l.is_zero()) return false;
    return true;
  }
  bool central_zero() const {
    for (const auto& row : central.a)
      for (const auto& c : row)
        if (!c.is_zero()) return false;
    return true;
  }
  bool all() const { return legs_zero() && central_zero(); }
};

using PreprojectiveResidual = BasicPreprojectiveResidual<Scalar>;

template <class T>
BasicPreprojectiveResidual<T> preprojective_residual(const BasicQuiverRep<T>& r) {
  BasicPreprojectiveResidual<T> out;
  out.central = Mat2<T>::zero() - outer(r.E0, r.D0);
  for (int i = 0; i < 3; ++i) {
    out.legs[i] = dot(r.D[i], r.E[i]);
    out.central = out.central + outer(r.E[i], r.D[i]);
  }
  return out;
}

/// Coefficients (in v1^2, v1v2, v2^2) of the quadratic form v -> area(v, M v).
/// For trace-free M this determines M.
template <class T>
Vec<T, 3> area_form(const Mat2<T>& m) {
  // v1 (m10 v1 + m11 v2) - v2 (m00 v1 + m01 v2)
  return {m[1][0], m[1][1] - m[0][0], -m[0][1]};
}

/// The E1 residual contracted with x^2, corrected by the trace of the E2
/// residual.  On all of H x V this equals area_form(central residual); on Z
/// the correction term vanishes and it is E1 evaluated at x^2.
template <class T>
Vec<T, 3> e1_at_x_squared(const BasicPoint<T>& p, const BasicResidual<T>& res) {
  Vec<T, 3> sx = sym_square(p.x);
  Vec<T, 3> plain = res.e1_matrix() * sx;
  T tr = res.e2[0][0] + res.e2[1][1] + res.e2[2][2];
  return plain - scale(tr * T(Scalar(1, 2)), J_matrix<T>() * sx);
}

/// E1 contracted with x^2 without the trace correction (equal to the above on Z).
template <class T>
Vec<T, 3> e1_at_x_squared_plain(const BasicPoint<T>& p, const BasicResidual<T>& res) {
  return res.e1_matrix() * sym_square(p.x);
}

/// Generated from the framing vertex: every D_i != 0 and, for some i,
/// V is spanned by E0 and the image of E_i.
inline bool king_stable(const QuiverRep& r) {
  for (const auto& d : r.D)
    if (is_zero_vec(d)) return false;
  for (const auto& e : r.E)
    if (!det2(r.E0, e).is_zero()) return true;
  return false;
}

/// h . rep: E0 -> g E0, D0 -> D0 g^-1, D_i -> t_i D_i g^-1, E_i -> g E_i / t_i.
inline QuiverRep transport(const GroupElement& h, const QuiverRep& r) {
  Mat2<Scalar> ginv = inverse(h.g);
  QuiverRep out;
  out.E0 = h.g * r.E0;
  out.D0 = r.D0 * ginv;
  for (int i = 0; i < 3; ++i) {
    out.D[i] = scale(h.t[i], r.D[i] * ginv);
    out.E[i] = scale(h.t[i].inverse(), h.g * r.E[i]);
  }
  return out;
}

inline std::string rep_report(const QuiverRep& r) {
  auto v = [](const Vec<Scalar, 2>& x) { return "[" + x[0].str() + ", " + x[1].str() + "]"; };
  std::string out = "E0 = " + v(r.E0) + "\nD0 = " + v(r.D0) + "\n";
  for (int i = 0; i < 3; ++i) {
    out += "D" + std::to_string(i + 1) + " = " + v(r.D[i]) + "  E" + std::to_string(i + 1) + " = " + v(r.E[i]) + "\n";
  }
  return out;
}

}  // namespace d4vgit
