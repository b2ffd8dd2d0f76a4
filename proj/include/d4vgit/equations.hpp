#pragma once

// J, A, omega and the residuals of the three defining equations
//   (E1)  B^T A B        = omega J
//   (E2)  B J^-1 B^T A   = omega I
//   (E3)  cof(B)         = beta A B J^-1
// with omega = a1 a2 a3 beta^2 / 2.  cof(B) has row i = B_j x B_k for
// (i, j, k) cyclic, which is the fixed identification of wedge^2 Sym^2 V
// with Sym^2 V^dual (x) (det V)^3.
//
// The factor 1/2 in omega is forced: with omega = a1 a2 a3 beta^2 the
// determinants of (E2) and (E3) are incompatible and Z has no invertible
// points at all.

#include <array>
#include <string>
#include <vector>

#include "d4vgit/errors.hpp"
#include "d4vgit/git.hpp"
#include "d4vgit/linalg.hpp"

namespace d4vgit {

template <class T>
Mat3<T> J_matrix() {
  Mat3<T> j = Mat3<T>::zero();
  j[0][2] = T(1);
  j[1][1] = T(-2);
  j[2][0] = T(1);
  return j;
}

/// J^-1.
template <class T>
Mat3<T> K_matrix() {
  Mat3<T> k = Mat3<T>::zero();
  k[0][2] = T(1);
  k[1][1] = T(Scalar(-1, 2));
  k[2][0] = T(1);
  return k;
}

/// u J^-1 v^T = p_u r_v + r_u p_v - q_u q_v / 2.
template <class T>
T j_pairing(const Vec<T, 3>& u, const Vec<T, 3>& v) {
  return u[0] * v[2] + u[2] * v[0] - u[1] * v[1] * T(Scalar(1, 2));
}

template <class T>
T omega(const BasicPoint<T>& p) {
  return p.alpha[0] * p.alpha[1] * p.alpha[2] * p.beta * p.beta * T(Scalar(1, 2));
}

template <class T>
Mat3<T> A_matrix(const BasicPoint<T>& p) {
  Mat3<T> a = Mat3<T>::zero();
  for (int i = 0; i < 3; ++i) a[i][i] = p.alpha[i];
  return a;
}

template <class T>
struct BasicResidual {
  std::array<T, 6> e1;  // upper triangle (00,01,02,11,12,22) of B^T A B - omega J
  Mat3<T> e2;           // B J^-1 B^T A - omega I
  Mat3<T> e3;           // cof(B) - beta A B J^-1

  bool e1_zero() const {
    for (const auto& c : e1)
      if (!c.is_zero()) return false;
    return true;
  }
  bool e2_zero() const { return all_zero(e2); }
  bool e3_zero() const { return all_zero(e3); }
  bool all() const { return e1_zero() && e2_zero() && e3_zero(); }

  /// Flattened list of all 24 components, e1 first.
  std::vector<T> components() const {
    std::vector<T> out(e1.begin(), e1.end());
    for (const auto& m : {e2, e3})
      for (const auto& row : m.a) out.insert(out.end(), row.begin(), row.end());
    return out;
  }

  /// e1 as a full symmetric 3x3 matrix.
  Mat3<T> e1_matrix() const {
    Mat3<T> m;
    static constexpr int idx[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = e1[idx[i][j]];
    return m;
  }

 private:
  static bool all_zero(const Mat3<T>& m) {
    for (const auto& row : m.a)
      for (const auto& c : row)
        if (!c.is_zero()) return false;
    return true;
  }
};

using EquationResidual = BasicResidual<Scalar>;

template <class T>
BasicResidual<T> residuals(const BasicPoint<T>& p) {
  const Mat3<T>& B = p.B;
  Mat3<T> A = A_matrix(p), J = J_matrix<T>(), K = K_matrix<T>();
  T w = omega(p);
  BasicResidual<T> r;
  Mat3<T> m1 = B.transpose() * A * B - w * J;
  r.e1 = {m1[0][0], m1[0][1], m1[0][2], m1[1][1], m1[1][2], m1[2][2]};
  r.e2 = B * K * B.transpose() * A - w * Mat3<T>::identity();
  r.e3 = cofactor(B) - p.beta * (A * B * K);
  return r;
}

inline bool in_Z(const PointHV& p) { return residuals(p).all(); }

/// Z-o membership: alpha1 alpha2 alpha3 beta != 0.  Off Z this is a contract
/// violation.  On Z-o, det B = beta^3 a1 a2 a3 / 2 is checked as well.
inline bool in_Zo(const PointHV& p) {
  if (!in_Z(p)) throw ContractViolation("in_Zo called on a point that is not on Z");
  Scalar prod = p.alpha[0] * p.alpha[1] * p.alpha[2] * p.beta;
  if (prod.is_zero()) return false;
  Scalar d = det(p.B);
  if (d.is_zero() || !(d == prod * p.beta * p.beta * Scalar(1, 2)))
    throw ContractViolation("det B identity failed on Z-o");
  return true;
}

/// The base point b* of Z-o: alpha = (-4, 1, -1), beta = 1,
/// B = [[0,1,0],[1,0,1],[1,0,-1]], x = (1, 0).  omega = 2 = det B.
inline PointHV base_point() {
  PointHV p;
  p.alpha = {Scalar(-4), Scalar(1), Scalar(-1)};
  p.beta = 1;
  p.B[0] = {Scalar(0), Scalar(1), Scalar(0)};
  p.B[1] = {Scalar(1), Scalar(0), Scalar(1)};
  p.B[2] = {Scalar(1), Scalar(0), Scalar(-1)};
  p.x = {Scalar(1), Scalar(0)};
  return p;
}

/// f_ij = B_i J^-1 B_j.
inline Scalar f_pair(const PointHV& p, int i, int j) { return j_pairing(p.B[i], p.B[j]); }

/// (a1 a2 a3)^2 beta^2 det B; weight -theta.
inline Scalar neg_theta_semi_invariant(const PointHV& p) {
  Scalar a = p.alpha[0] * p.alpha[1] * p.alpha[2];
  return a * a * p.beta * p.beta * det(p.B);
}

/// a_i a_j f_ij^2; weight det^-2 only (not a power of -theta by itself).
inline Scalar alpha_f_square(const PointHV& p, int i, int j) {
  Scalar f = f_pair(p, i, j);
  return p.alpha[i] * p.alpha[j] * f * f;
}

/// (a1 a2 a3)^2 (a_i a_j f_ij^2)^5; weight 4(-theta).
inline Scalar f_semi_invariant(const PointHV& p, int i, int j) {
  Scalar a = p.alpha[0] * p.alpha[1] * p.alpha[2];
  return a * a * alpha_f_square(p, i, j).pow(5);
}

namespace detail {

inline PointHV rank_one_point(const std::array<Scalar, 3>& alpha, const Vec<Scalar, 3>& ell,
                              const Vec<Scalar, 3>& m) {
  PointHV p;
  p.alpha = alpha;
  p.beta = 0;
  for (int i = 0; i < 3; ++i) p.B[i] = scale(ell[i], m);
  p.x = {Scalar(1), Scalar(2)};
  return p;
}

}  // namespace detail

/// beta = 0, B = l (x) m with l isotropic for A: E1 and E3 hold, E2 fails.
inline PointHV witness_E1_not_E2() {
  return detail::rank_one_point({Scalar(1), Scalar(1), Scalar(1)}, {Scalar(1), Scalar::i(), Scalar(0)},
                                {Scalar(0), Scalar(1), Scalar(0)});
}

/// beta = 0, B = l (x) m with m = x^2 isotropic for J: E2 and E3 hold, E1 fails.
inline PointHV witness_E2_not_E1() {
  return detail::rank_one_point({Scalar(1), Scalar(1), Scalar(1)}, {Scalar(1), Scalar(1), Scalar(1)},
                                {Scalar(1), Scalar(0), Scalar(0)});
}

/// rank of a 3x3 matrix over the field.
inline int rank3(Mat3<Scalar> m) {
  int rank = 0;
  for (int col = 0; col < 3 && rank < 3; ++col) {
    int piv = -1;
    for (int r = rank; r < 3; ++r)
      if (!m[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    for (int r = 0; r < 3; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      Scalar f = m[r][col] / m[rank][col];
      for (int c = 0; c < 3; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

/// Human-readable residual report.
inline std::string residual_report(const EquationResidual& r) {
  auto list = [](const auto& begin, const auto& end) {
    std::string s = "[";
    for (auto it = begin; it != end; ++it) s += (it == begin ? "" : ", ") + it->str();
    return s + "]";
  };
  std::string out = "E1 " + std::string(r.e1_zero() ? "ok  " : "FAIL") + " " + list(r.e1.begin(), r.e1.end()) + "\n";
  out += "E2 " + std::string(r.e2_zero() ? "ok  " : "FAIL") + " " + to_string(r.e2) + "\n";
  out += "E3 " + std::string(r.e3_zero() ? "ok  " : "FAIL") + " " + to_string(r.e3) + "\n";
  return out;
}

}  // namespace d4vgit
