#pragma once

// The quaternion base point of Z-o, finite stabilizers, and connecting
// group elements between points of Z-o.
//
// Everything here looks at the Z-part (alpha, beta, B) only; x is carried
// along by the action but ignored when comparing.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "d4vgit/equations.hpp"
#include "d4vgit/git.hpp"

namespace d4vgit {

inline bool same_z_part(const PointHV& a, const PointHV& b) {
  return a.alpha == b.alpha && a.beta == b.beta && a.B == b.B;
}

// ---------------------------------------------------------------------------
// The base point from the 2-dimensional irrep of Q

struct QuaternionIrrep {
  Mat2<Scalar> i, j, k;
};

/// i -> diag(i, -i), j -> antidiag(1, -1), k = ij.
inline QuaternionIrrep quaternion_irrep() {
  QuaternionIrrep r;
  r.i = mat2(Scalar::i(), Scalar(0), Scalar(0), -Scalar::i());
  r.j = mat2(Scalar(0), Scalar(1), Scalar(-1), Scalar(0));
  r.k = r.i * r.j;
  return r;
}

/// The three character lines of Sym^2 V: e1e2, e1^2 + e2^2, e1^2 - e2^2.
inline Mat3<Scalar> quaternion_character_forms() {
  Mat3<Scalar> B;
  B.a[0] = {Scalar(0), Scalar(1), Scalar(0)};
  B.a[1] = {Scalar(1), Scalar(0), Scalar(1)};
  B.a[2] = {Scalar(1), Scalar(0), Scalar(-1)};
  return B;
}

/// Solve for (alpha, beta) given B: E3 is linear in beta*alpha_i, and E1/E2
/// then hold for every beta, so beta = 1 is a normalization.
inline PointHV base_point_from_irrep() {
  PointHV p;
  p.B = quaternion_character_forms();
  p.beta = 1;
  Mat3<Scalar> C = cofactor(p.B);
  Mat3<Scalar> K = K_matrix<Scalar>();
  for (int i = 0; i < 3; ++i) {
    Vec<Scalar, 3> bk = p.B[i] * K;
    // C_i = beta alpha_i B_i K; read alpha_i off any nonzero entry
    std::optional<Scalar> a;
    for (int c = 0; c < 3; ++c)
      if (!bk[c].is_zero()) {
        a = C[i][c] / bk[c];
        break;
      }
    if (!a || !(C[i] == scale(*a, bk))) throw DegeneratePoint("E3 has no solution on the character forms");
    p.alpha[i] = *a;
  }
  p.x = {Scalar(1), Scalar(0)};
  if (!residuals(p).all()) throw DegeneratePoint("character forms do not give a point of Z");
  return p;
}

// ---------------------------------------------------------------------------
// Finite subgroups

enum class GroupType { trivial, cyclic, klein, quaternion, dihedral, elementary_abelian, abelian, symmetric3, other };

struct FiniteSubgroup {
  std::vector<GroupElement> elements;  // elements[0] is the identity
  std::vector<std::vector<int>> table;  // table[a][b] = index of elements[a] * elements[b]
  std::vector<int> orders;

  std::size_t size() const { return elements.size(); }

  int index_of(const GroupElement& h) const {
    for (std::size_t n = 0; n < elements.size(); ++n)
      if (elements[n] == h) return static_cast<int>(n);
    return -1;
  }

  bool abelian() const {
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = 0; b < a; ++b)
        if (table[a][b] != table[b][a]) return false;
    return true;
  }

  /// orders -> number of elements of that order
  std::map<int, int> order_profile() const {
    std::map<int, int> m;
    for (int o : orders) ++m[o];
    return m;
  }

  int count_of_order(int o) const {
    auto m = order_profile();
    auto it = m.find(o);
    return it == m.end() ? 0 : it->second;
  }
};

/// Multiplication table and element orders; throws if the set is not a group.
inline FiniteSubgroup make_subgroup(std::vector<GroupElement> elems) {
  auto id = GroupElement::identity();
  auto it = std::find(elems.begin(), elems.end(), id);
  if (it == elems.end()) throw ContractViolation("subgroup lacks the identity");
  std::iter_swap(elems.begin(), it);
  FiniteSubgroup G;
  G.elements = std::move(elems);
  std::size_t n = G.size();
  G.table.assign(n, std::vector<int>(n, -1));
  for (std::size_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::size_t b = 0; b < n; ++b) {
      int c = G.index_of(G.elements[a] * G.elements[b]);
      if (c < 0) throw ContractViolation("set is not closed under multiplication");
      G.table[a][b] = c;
      if (c == 0) has_inverse = true;
    }
    if (!has_inverse) throw ContractViolation("element without inverse");
  }
  G.orders.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    int o = 1, cur = static_cast<int>(a);
    while (cur != 0) {
      cur = G.table[cur][a];
      ++o;
    }
    G.orders[a] = o;
  }
  return G;
}

/// Closure of a generating set under products (the set must generate a finite group).
inline FiniteSubgroup close_subgroup(const std::vector<GroupElement>& gens, std::size_t limit = 1024) {
  std::vector<GroupElement> elems{GroupElement::identity()};
  for (std::size_t n = 0; n < elems.size(); ++n)
    for (const auto& g : gens) {
      GroupElement h = elems[n] * g;
      if (std::find(elems.begin(), elems.end(), h) == elems.end()) {
        elems.push_back(h);
        if (elems.size() > limit) throw ContractViolation("generated group is too large");
      }
    }
  return make_subgroup(std::move(elems));
}

/// Isomorphism type from order, commutativity and order profile.  Exact for order <= 8.
inline GroupType classify(const FiniteSubgroup& G) {
  int n = static_cast<int>(G.size());
  int maxo = *std::max_element(G.orders.begin(), G.orders.end());
  if (n == 1) return GroupType::trivial;
  if (maxo == n) return GroupType::cyclic;
  if (G.abelian()) {
    if (maxo == 2) return n == 4 ? GroupType::klein : GroupType::elementary_abelian;
    return GroupType::abelian;
  }
  if (n == 6) return GroupType::symmetric3;
  if (n == 8) return G.count_of_order(2) == 1 ? GroupType::quaternion : GroupType::dihedral;
  return GroupType::other;
}

inline std::string group_type_name(const FiniteSubgroup& G) {
  std::string n = std::to_string(G.size());
  switch (classify(G)) {
    case GroupType::trivial: return "trivial";
    case GroupType::cyclic: return "cyclic Z" + n;
    case GroupType::klein: return "Klein (Z2)^2";
    case GroupType::quaternion: return "quaternion Q8";
    case GroupType::dihedral: return "dihedral D4";
    case GroupType::elementary_abelian: return "elementary abelian of order " + n;
    case GroupType::abelian: return "abelian of order " + n;
    case GroupType::symmetric3: return "symmetric S3";
    case GroupType::other: break;
  }
  return "non-abelian of order " + n;
}

inline std::string element_str(const GroupElement& h) {
  return "t=(" + h.t[0].str() + ", " + h.t[1].str() + ", " + h.t[2].str() + ") g=" + to_string(h.g);
}

inline std::string multiplication_table_text(const FiniteSubgroup& G) {
  std::string out;
  for (std::size_t a = 0; a < G.size(); ++a)
    out += "g" + std::to_string(a) + " (order " + std::to_string(G.orders[a]) + "): " + element_str(G.elements[a]) + "\n";
  out += "\n   ";
  for (std::size_t b = 0; b < G.size(); ++b) out += " g" + std::to_string(b);
  out += "\n";
  for (std::size_t a = 0; a < G.size(); ++a) {
    out += "g" + std::to_string(a);
    for (std::size_t b = 0; b < G.size(); ++b) {
      std::string c = "g" + std::to_string(G.table[a][b]);
      out += std::string(c.size() < 4 ? 4 - c.size() : 1, ' ') + c;
    }
    out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Stabilizers

namespace detail {

/// h with Sym^2(h) proportional to S, if S is such a matrix.
inline std::optional<Mat2<Scalar>> sym_square_root_direction(const Mat3<Scalar>& S) {
  Scalar half(1, 2);
  Scalar aa = S[0][0], ab = S[0][1] * half, bb = S[0][2], ac = S[1][0], s11 = S[1][1], bd = S[1][2], cc = S[2][0],
         cd = S[2][1] * half, dd = S[2][2];
  // lambda * pivot * (a, b, c, d)
  std::optional<Mat2<Scalar>> h;
  if (!aa.is_zero()) {
    Scalar bc = ab * ac / aa;
    h = mat2(aa, ab, ac, s11 - bc);
  } else if (!dd.is_zero()) {
    Scalar bc = bd * cd / dd;
    h = mat2(s11 - bc, bd, cd, dd);
  } else if (!bb.is_zero()) {
    Scalar ad = ab * bd / bb;
    h = mat2(ab, bb, s11 - ad, bd);
  } else if (!cc.is_zero()) {
    Scalar ad = ac * cd / cc;
    h = mat2(ac, s11 - ad, cc, cd);
  }
  if (!h || det(*h).is_zero()) return std::nullopt;
  return h;
}

inline bool z_part_fixed_up_to_sign(const PointHV& p, const PointHV& q) {
  if (!(p.B == q.B)) return false;
  if (same_z_part(p, q)) return true;
  return q.alpha[0] == -p.alpha[0] && q.alpha[1] == -p.alpha[1] && q.alpha[2] == -p.alpha[2] && q.beta == -p.beta;
}

}  // namespace detail

enum class StabilizerMode {
  full,     // fix (alpha, beta, B)
  relaxed,  // fix B with torus part in {+-1}^3; (alpha, beta) may flip sign together
};

/// The stabilizer of p in G (Z-part only).  B-lines distinct forces Sym^2 g
/// diagonal in the B-basis; torus factors are then +-1 and g is recovered
/// from Sym^2 g up to sign.
inline FiniteSubgroup stabilizer(const PointHV& p, StabilizerMode mode = StabilizerMode::full) {
  if (!in_Z(p)) throw ContractViolation("stabilizer expects a point of Z");
  if (det(p.B).is_zero()) throw DegeneratePoint("B-lines are not distinct (det B = 0)");
  if (!in_Zo(p)) throw ContractViolation("stabilizer expects a point of Z-o");
  Mat3<Scalar> Binv = inverse(p.B);
  Field F = nullptr;
  std::vector<GroupElement> elems;
  for (int mask = 0; mask < 8; ++mask) {
    std::array<Scalar, 3> t;
    Mat3<Scalar> D = Mat3<Scalar>::zero();
    for (int i = 0; i < 3; ++i) {
      t[i] = (mask >> i) & 1 ? Scalar(-1) : Scalar(1);
      D[i][i] = t[i];
    }
    Mat3<Scalar> S = Binv * D * p.B;  // Sym^2(g^-1)
    auto h0 = detail::sym_square_root_direction(S);
    if (!h0) continue;
    Mat3<Scalar> S0 = sym_square(*h0);
    std::optional<Scalar> kappa;
    for (int r = 0; r < 3 && !kappa; ++r)
      for (int c = 0; c < 3; ++c)
        if (!S[r][c].is_zero()) {
          kappa = S0[r][c] / S[r][c];
          break;
        }
    if (!kappa || !(S0 == (*kappa) * S)) continue;
    Scalar c = sqrt_extending(kappa->inverse(), F);
    Mat2<Scalar> ginv = c * *h0;
    for (const Scalar& sign : {Scalar(1), Scalar(-1)}) {
      GroupElement h(t, inverse(sign * ginv));
      PointHV q = act(h, p);
      bool ok = mode == StabilizerMode::full ? same_z_part(p, q) : detail::z_part_fixed_up_to_sign(p, q);
      if (ok) elems.push_back(h);
    }
  }
  return make_subgroup(std::move(elems));
}

// ---------------------------------------------------------------------------
// Connecting points of Z-o

namespace detail {

/// Direct solve for h with act(h, p) = q on Z-o.  det g is forced
/// (d = det B^p beta^q / (det B^q beta^p)), t_i^2 = d a^p_i / a^q_i, beta
/// fixes t3 from t1 t2, and g^-1 is recovered from
/// Sym^2(g^-1) = (B^p)^-1 diag(1/t) B^q up to a square root.
inline std::optional<GroupElement> solve_connecting(const PointHV& p, const PointHV& q, Field& F, int max_depth) {
  Scalar d = det(p.B) * q.beta / (det(q.B) * p.beta);
  Scalar t1 = sqrt_extending(d * p.alpha[0] / q.alpha[0], F, max_depth);
  Scalar t2 = sqrt_extending(d * p.alpha[1] / q.alpha[1], F, max_depth);
  Mat3<Scalar> Binv = inverse(p.B);
  for (int mask = 0; mask < 4; ++mask) {
    Scalar s1 = mask & 1 ? -t1 : t1, s2 = mask & 2 ? -t2 : t2;
    Scalar s3 = d * d * q.beta / (p.beta * s1 * s2);
    std::array<Scalar, 3> t{s1, s2, s3};
    Mat3<Scalar> D = Mat3<Scalar>::zero();
    for (int i = 0; i < 3; ++i) D[i][i] = t[i].inverse();
    Mat3<Scalar> S = Binv * D * q.B;
    auto h0 = sym_square_root_direction(S);
    if (!h0) continue;
    std::optional<Scalar> kappa;
    Mat3<Scalar> S0 = sym_square(*h0);
    for (int r = 0; r < 3 && !kappa; ++r)
      for (int c = 0; c < 3; ++c)
        if (!S[r][c].is_zero()) {
          kappa = S0[r][c] / S[r][c];
          break;
        }
    if (!kappa || !(S0 == (*kappa) * S)) continue;
    Scalar c = sqrt_extending(kappa->inverse(), F, max_depth);
    GroupElement h(t, inverse(c * *h0));
    if (same_z_part(act(h, p), q)) return h;
    GroupElement h2(t, inverse(Scalar(-1) * c * *h0));
    if (same_z_part(act(h2, p), q)) return h2;
  }
  return std::nullopt;
}

}  // namespace detail

struct ConnectResult {
  std::optional<GroupElement> element;  // act(element, p) has the Z-part of q
  std::string report;

  bool found() const { return element.has_value(); }
};

/// Group element h with act(h, p) = q on Z-parts, over a quadratic tower of
/// depth <= 3 on top of the points' field.  Not-found means the tower cap was
/// hit, never that no element exists.
inline ConnectResult connect(const PointHV& p, const PointHV& q, int max_depth = kDefaultTowerDepth) {
  if (!in_Z(p) || !in_Z(q) || !in_Zo(p) || !in_Zo(q)) throw ContractViolation("connect expects points of Z-o");
  ConnectResult r;
  try {
    Field F = nullptr;
    auto h = detail::solve_connecting(p, q, F, max_depth);
    if (!h) throw ContractViolation("no connecting element although both points lie in Z-o");
    r.element = *h;
    r.report = "connected over a tower of depth " + std::to_string(depth_of(F));
  } catch (const ExtensionLimit& e) {
    r.report = std::string("not found: ") + e.what();
  }
  return r;
}

}  // namespace d4vgit
