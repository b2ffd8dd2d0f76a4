#pragma once

// Points of H x V, the group G = (C*)^3 x GL2, its action, characters,
// cocharacters and weights.
//
// All lines are trivialized once.  A form B_i is stored as the coefficient
// row (p, q, r) of Q(v) = p v1^2 + q v1 v2 + r v2^2, i.e. against the basis
// (e1^2, e1e2, e2^2) of Sym^2 V with e1e2 = e1(x)e2 + e2(x)e1, so that
// Q(v) = B_i . sym_square(v).

#include <array>
#include <cstdint>
#include <string>

#include "d4vgit/errors.hpp"
#include "d4vgit/field.hpp"
#include "d4vgit/linalg.hpp"

namespace d4vgit {

template <class T>
struct BasicPoint {
  std::array<T, 3> alpha{T(0), T(0), T(0)};
  T beta{0};
  Mat3<T> B = Mat3<T>::zero();  // row i = (p_i, q_i, r_i)
  Vec<T, 2> x{T(0), T(0)};

  const T& p(int i) const { return B[i][0]; }
  const T& q(int i) const { return B[i][1]; }
  const T& r(int i) const { return B[i][2]; }

  friend bool operator==(const BasicPoint& a, const BasicPoint& b) {
    return a.alpha == b.alpha && a.beta == b.beta && a.B == b.B && a.x == b.x;
  }
};

using PointHV = BasicPoint<Scalar>;

/// (t1, t2, t3, g).
struct GroupElement {
  std::array<Scalar, 3> t{Scalar(1), Scalar(1), Scalar(1)};
  Mat2<Scalar> g = Mat2<Scalar>::identity();

  GroupElement() = default;
  GroupElement(std::array<Scalar, 3> t_, Mat2<Scalar> g_) : t(std::move(t_)), g(std::move(g_)) { validate(); }

  static GroupElement identity() { return {}; }

  void validate() const {
    for (const auto& ti : t)
      if (ti.is_zero()) throw ContractViolation("torus factor is zero");
    if (det(g).is_zero()) throw ContractViolation("g is singular");
  }

  Scalar det_g() const { return det(g); }

  GroupElement inverse() const {
    return GroupElement({t[0].inverse(), t[1].inverse(), t[2].inverse()}, d4vgit::inverse(g));
  }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    return GroupElement({a.t[0] * b.t[0], a.t[1] * b.t[1], a.t[2] * b.t[2]}, a.g * b.g);
  }
  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.t == b.t && a.g == b.g; }
};

/// L1^th1 L2^th2 L3^th3 (det V)^th4.
struct Character {
  std::array<long, 4> theta{0, 0, 0, 0};

  Character operator-() const { return {{-theta[0], -theta[1], -theta[2], -theta[3]}}; }
  Character operator*(long k) const { return {{k * theta[0], k * theta[1], k * theta[2], k * theta[3]}}; }
  friend bool operator==(const Character&, const Character&) = default;

  /// chi(h) = t1^th1 t2^th2 t3^th3 det(g)^th4.
  Scalar evaluate(const GroupElement& h) const {
    return h.t[0].pow(theta[0]) * h.t[1].pow(theta[1]) * h.t[2].pow(theta[2]) * h.det_g().pow(theta[3]);
  }

  std::string str() const {
    return "(" + std::to_string(theta[0]) + "," + std::to_string(theta[1]) + "," + std::to_string(theta[2]) + "," +
           std::to_string(theta[3]) + ")";
  }
};

inline const Character kTheta{{1, 1, 1, 1}};

/// (a1, a2, a3; w1, w2): t -> (t^a1, t^a2, t^a3, diag(t^w1, t^w2)) in a
/// basis (x, y) of V chosen by the caller.
struct Cocharacter {
  std::array<long, 5> c{0, 0, 0, 0, 0};

  long a(int i) const { return c[i]; }
  long w(int k) const { return c[3 + k]; }

  friend Cocharacter operator+(const Cocharacter& u, const Cocharacter& v) {
    Cocharacter r;
    for (int k = 0; k < 5; ++k) r.c[k] = u.c[k] + v.c[k];
    return r;
  }
  Cocharacter operator-() const { return {{-c[0], -c[1], -c[2], -c[3], -c[4]}}; }
  Cocharacter operator*(long k) const { return {{k * c[0], k * c[1], k * c[2], k * c[3], k * c[4]}}; }
  friend bool operator==(const Cocharacter&, const Cocharacter&) = default;

  /// The group element at parameter t, with V-basis given by the columns of P.
  GroupElement at(const Scalar& t, const Mat2<Scalar>& P = Mat2<Scalar>::identity()) const {
    Mat2<Scalar> d = mat2(t.pow(w(0)), Scalar(0), Scalar(0), t.pow(w(1)));
    return GroupElement({t.pow(a(0)), t.pow(a(1)), t.pow(a(2))}, P * d * inverse(P));
  }

  std::string str() const {
    return "(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]) + ";" +
           std::to_string(c[3]) + "," + std::to_string(c[4]) + ")";
  }
};

inline Cocharacter lambda_(int i) {
  Cocharacter l;
  l.c[i] = 1;
  return l;
}
inline const Cocharacter kMu{{0, 0, 0, 0, 1}};

inline long pair(const Character& chi, const Cocharacter& l) {
  return chi.theta[0] * l.c[0] + chi.theta[1] * l.c[1] + chi.theta[2] * l.c[2] + chi.theta[3] * (l.c[3] + l.c[4]);
}

/// alpha_i -> det(g) t_i^-2 alpha_i; beta -> t1 t2 t3 det(g)^-2 beta;
/// B_i -> t_i B_i o Sym^2(g)^-1; x -> g x.
inline PointHV act(const GroupElement& h, const PointHV& p) {
  Scalar d = h.det_g();
  Mat2<Scalar> ginv = inverse(h.g);
  Mat3<Scalar> s = sym_square(ginv);
  PointHV out;
  for (int i = 0; i < 3; ++i) {
    out.alpha[i] = d * h.t[i].pow(-2) * p.alpha[i];
    out.B[i] = scale(h.t[i], p.B[i] * s);
  }
  out.beta = h.t[0] * h.t[1] * h.t[2] * d.pow(-2) * p.beta;
  out.x = h.g * p.x;
  return out;
}

// ---------------------------------------------------------------------------
// Weights

/// Coordinate order of a weight row: a1 a2 a3 beta p1 q1 r1 p2 q2 r2 p3 q3 r3 x1 x2.
using WeightRow = std::array<long, 15>;
/// The first 13 entries, as laid out in the published weight table.
using TableRow = std::array<long, 13>;

inline constexpr std::array<const char*, 15> kCoordinateNames = {"a1", "a2", "a3", "beta", "p1", "q1", "r1", "p2",
                                                                 "q2", "r2", "p3", "q3", "r3", "x1", "x2"};

inline std::array<Scalar, 15> coordinates(const PointHV& p) {
  return {p.alpha[0], p.alpha[1], p.alpha[2], p.beta,    p.B[0][0], p.B[0][1], p.B[0][2], p.B[1][0],
          p.B[1][1],  p.B[1][2],  p.B[2][0],  p.B[2][1], p.B[2][2], p.x[0],    p.x[1]};
}

/// Weights computed from the closed form of the action.
inline WeightRow coordinate_weights(const Cocharacter& l) {
  long s = l.w(0) + l.w(1);
  WeightRow row{};
  for (int i = 0; i < 3; ++i) {
    row[i] = s - 2 * l.a(i);
    row[4 + 3 * i] = l.a(i) - 2 * l.w(0);
    row[5 + 3 * i] = l.a(i) - l.w(0) - l.w(1);
    row[6 + 3 * i] = l.a(i) - 2 * l.w(1);
  }
  row[3] = l.a(0) + l.a(1) + l.a(2) - 2 * s;
  row[13] = l.w(0);
  row[14] = l.w(1);
  return row;
}

namespace detail {

// k with q = 2^k exactly
inline long log2_exact(const Scalar& s) {
  const GaussQ& z = s.base_value();
  if (sgn(z.im()) != 0 || sgn(z.re()) <= 0) throw ContractViolation("weight probe is not a power of two");
  mpz_class num = z.re().get_num(), den = z.re().get_den();
  long k = 0;
  while (num > 1) {
    if (num % 2 != 0) throw ContractViolation("weight probe is not a power of two");
    num /= 2;
    ++k;
  }
  while (den > 1) {
    if (den % 2 != 0) throw ContractViolation("weight probe is not a power of two");
    den /= 2;
    --k;
  }
  return k;
}

}  // namespace detail

/// Weights measured by actually running act(): the point with all
/// coordinates 1 (in the basis given by the columns of P) is moved by the
/// cocharacter at t = 2 and each coordinate's ratio is read off as a power of 2.
inline WeightRow measured_weights(const Cocharacter& l, const Mat2<Scalar>& P = Mat2<Scalar>::identity()) {
  // coordinates relative to the basis P: transport by P^-1
  GroupElement to_std({Scalar(1), Scalar(1), Scalar(1)}, P);
  PointHV ones;
  for (int i = 0; i < 3; ++i) {
    ones.alpha[i] = 1;
    ones.B[i] = {Scalar(1), Scalar(1), Scalar(1)};
  }
  ones.beta = 1;
  ones.x = {Scalar(1), Scalar(1)};
  PointHV start = act(to_std, ones);
  PointHV moved = act(to_std.inverse(), act(l.at(Scalar(2), P), start));
  auto before = coordinates(ones);
  auto after = coordinates(moved);
  WeightRow row{};
  for (std::size_t k = 0; k < row.size(); ++k) row[k] = detail::log2_exact(after[k] / before[k]);
  return row;
}

inline TableRow table_part(const WeightRow& w) {
  TableRow t{};
  for (std::size_t k = 0; k < t.size(); ++k) t[k] = w[k];
  return t;
}

struct WeightTableEntry {
  std::string name;
  Cocharacter cocharacter;
  TableRow weights;
};

/// The seven rows lambda1..3, mu, mu+lambda1, mu+lambda1+lambda2, 2mu+sum lambda.
inline std::vector<std::pair<std::string, Cocharacter>> table_cocharacters() {
  Cocharacter l1 = lambda_(0), l2 = lambda_(1), l3 = lambda_(2);
  return {{"lambda1", l1},
          {"lambda2", l2},
          {"lambda3", l3},
          {"mu", kMu},
          {"mu+lambda1", kMu + l1},
          {"mu+lambda1+lambda2", kMu + l1 + l2},
          {"2mu+sum(lambda)", kMu * 2 + l1 + l2 + l3}};
}

/// Weight table computed by running the action (in the basis adapted to x = e1
/// unless another basis is supplied).
inline std::vector<WeightTableEntry> weight_table(const Mat2<Scalar>& P = Mat2<Scalar>::identity()) {
  std::vector<WeightTableEntry> out;
  for (const auto& [name, l] : table_cocharacters()) out.push_back({name, l, table_part(measured_weights(l, P))});
  return out;
}

/// The published table, transcribed literally.
inline std::vector<TableRow> published_weight_table() {
  return {
      {-2, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0},
      {0, -2, 0, 1, 0, 0, 0, 1, 1, 1, 0, 0, 0},
      {0, 0, -2, 1, 0, 0, 0, 0, 0, 0, 1, 1, 1},
      {1, 1, 1, -2, 0, -1, -2, 0, -1, -2, 0, -1, -2},
      {-1, 1, 1, 0, 1, 0, -1, 0, -1, -2, 0, -1, -2},
      {-1, -1, 1, 0, 1, 0, -1, 1, 0, -1, 0, -1, -2},
      {0, 0, 0, -1, 1, -1, -3, 1, -1, -3, 1, -1, -3},
  };
}

/// Entries of the published table that disagree with the action.  Row
/// mu+lambda1 prints beta's weight as 0; linearity with rows lambda1 and mu
/// (which match) forces -1.
struct TableErratum {
  std::size_t row;
  std::size_t column;
  long published;
  long corrected;
};

inline std::vector<TableErratum> published_weight_errata() { return {{4, 3, 0, -1}}; }

/// Published table with the errata applied.
inline std::vector<TableRow> corrected_weight_table() {
  auto t = published_weight_table();
  for (const auto& e : published_weight_errata()) t[e.row][e.column] = e.corrected;
  return t;
}

/// Basis (x, y) of V adapted to a nonzero x: y = e2 unless x is a multiple of e2.
inline Mat2<Scalar> adapted_basis(const Vec<Scalar, 2>& x) {
  if (x[0].is_zero() && x[1].is_zero()) throw ContractViolation("adapted basis needs x != 0");
  if (!x[0].is_zero()) return from_columns(x, Vec<Scalar, 2>{Scalar(0), Scalar(1)});
  return from_columns(x, Vec<Scalar, 2>{Scalar(1), Scalar(0)});
}

}  // namespace d4vgit
