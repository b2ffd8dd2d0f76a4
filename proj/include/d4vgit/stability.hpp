#pragma once

// Stability oracles for the characters theta = (1,1,1,1) and -theta on Z x V,
// with one-parameter-subgroup certificates for unstable points.
//
// A cocharacter destabilizes a point for chi when every coordinate of
// positive weight vanishes and pair(chi, lambda) > 0.  Cocharacters act in a
// basis of V given by the columns of `basis`; coordinates are read after
// moving the point into that basis.

#include <optional>
#include <string>
#include <vector>

#include "d4vgit/equations.hpp"
#include "d4vgit/git.hpp"
#include "d4vgit/quiver.hpp"

namespace d4vgit {

struct Certificate {
  Cocharacter cocharacter;
  Mat2<Scalar> basis = Mat2<Scalar>::identity();
  std::string family;  // which unstable family it came from
};

enum class Status { stable, unstable };

struct StabilityVerdict {
  Status status = Status::unstable;
  std::optional<Certificate> certificate;  // unstable only
  // stable only: the condition-(iii) leg index, or the semi-invariant value
  int leg = -1;
  std::optional<Scalar> semi_invariant;
  std::string witness;

  bool stable() const { return status == Status::stable; }
};

/// p expressed in the basis given by the columns of P (so x becomes P^-1 x).
inline PointHV in_basis(const PointHV& p, const Mat2<Scalar>& P) {
  return act(GroupElement({Scalar(1), Scalar(1), Scalar(1)}, inverse(P)), p);
}

/// Every coordinate with positive weight vanishes and pair(chi, lambda) > 0.
inline bool verify_certificate(const PointHV& p, const Character& chi, const Certificate& c) {
  if (pair(chi, c.cocharacter) <= 0) return false;
  if (det(c.basis).is_zero()) return false;
  auto coords = coordinates(in_basis(p, c.basis));
  WeightRow w = coordinate_weights(c.cocharacter);
  for (std::size_t k = 0; k < w.size(); ++k)
    if (w[k] > 0 && !coords[k].is_zero()) return false;
  return true;
}

/// Coordinates (by index into kCoordinateNames) with positive weight.
inline std::vector<std::size_t> positive_support(const Cocharacter& l) {
  std::vector<std::size_t> out;
  WeightRow w = coordinate_weights(l);
  for (std::size_t k = 0; k < w.size(); ++k)
    if (w[k] > 0) out.push_back(k);
  return out;
}

// ---------------------------------------------------------------------------
// The unstable families and their certificates.

struct UnstableFamily {
  std::string description;
  std::vector<std::size_t> vanishing;  // coordinate indices
  Cocharacter certificate;
};

namespace detail {

inline std::size_t alpha_index(int i) { return static_cast<std::size_t>(i); }
inline std::size_t p_index(int i) { return static_cast<std::size_t>(4 + 3 * i); }
constexpr std::size_t kBetaIndex = 3;

}  // namespace detail

/// The five families (with permutations) of points destabilized by the rows
/// of the weight table, in the basis adapted to x.
inline std::vector<UnstableFamily> unstable_subset_certificates() {
  using detail::alpha_index;
  using detail::p_index;
  std::vector<UnstableFamily> out;
  auto n = [](int i) { return std::to_string(i + 1); };
  for (int i = 0; i < 3; ++i) {
    std::vector<std::size_t> v = {detail::kBetaIndex, p_index(i), p_index(i) + 1, p_index(i) + 2};
    out.push_back({"{beta=0, B" + n(i) + "=0}", v, lambda_(i)});
  }
  out.push_back({"{a1=0, a2=0, a3=0}", {0, 1, 2}, kMu});
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    int lo = std::min(j, k), hi = std::max(j, k);
    out.push_back({"{a" + n(lo) + "=0, a" + n(hi) + "=0, p" + n(i) + "=0}",
                   {alpha_index(lo), alpha_index(hi), p_index(i)},
                   kMu + lambda_(i)});
  }
  for (int k = 2; k >= 0; --k) {
    int i = (k + 1) % 3, j = (k + 2) % 3;
    int lo = std::min(i, j), hi = std::max(i, j);
    out.push_back({"{a" + n(k) + "=0, p" + n(lo) + "=0, p" + n(hi) + "=0}",
                   {alpha_index(k), p_index(lo), p_index(hi)},
                   kMu + lambda_(lo) + lambda_(hi)});
  }
  out.push_back({"{p1=0, p2=0, p3=0}", {p_index(0), p_index(1), p_index(2)}, kMu * 2 + lambda_(0) + lambda_(1) + lambda_(2)});
  return out;
}

/// Every positive-weight coordinate of the family's certificate lies in its
/// vanishing set (x2 vanishes automatically in the adapted basis), and the certificate pairs positively with theta.
inline bool family_certificate_valid(const UnstableFamily& f) {
  if (pair(kTheta, f.certificate) <= 0) return false;
  for (std::size_t k : positive_support(f.certificate)) {
    if (k == 14) continue;      // x2 = 0 in the basis adapted to x
    if (k == 13) return false;  // x1 = 1 there
    if (std::find(f.vanishing.begin(), f.vanishing.end(), k) == f.vanishing.end()) return false;
  }
  return true;
}

/// Certificate for x = 0: t -> (t, t, t, t id_V).
inline const Cocharacter kZeroXCertificate{{1, 1, 1, 1, 1}};

inline void require_on_Z(const PointHV& p) {
  if (!in_Z(p)) throw ContractViolation("stability oracles are defined on Z x V only");
}

/// theta-stability via condition (iii): every B_i^x != 0 and V is spanned by
/// x and the image of alpha_i (B_i^x)^dual for some i.  In the basis adapted
/// to x that reads (p_i, q_i) != 0 for all i and alpha_i p_i != 0 for some i.
inline StabilityVerdict semistable_theta(const PointHV& p) {
  require_on_Z(p);
  StabilityVerdict v;
  if (is_zero_vec(p.x)) {
    v.certificate = Certificate{kZeroXCertificate, Mat2<Scalar>::identity(), "{x=0}"};
    return v;
  }
  Mat2<Scalar> P = adapted_basis(p.x);
  PointHV a = in_basis(p, P);
  bool legs_nonzero = true;
  for (int i = 0; i < 3; ++i)
    if (a.p(i).is_zero() && a.q(i).is_zero()) legs_nonzero = false;
  if (legs_nonzero) {
    for (int i = 0; i < 3; ++i) {
      if (!(a.alpha[i] * a.p(i)).is_zero()) {
        v.status = Status::stable;
        v.leg = i;
        v.witness = "condition (iii) at leg " + std::to_string(i + 1);
        return v;
      }
    }
  }
  for (const auto& f : unstable_subset_certificates()) {
    Certificate c{f.certificate, P, f.description};
    if (verify_certificate(p, kTheta, c)) {
      v.certificate = c;
      return v;
    }
  }
  throw ContractViolation("unstable point on Z with no weight-table certificate");
}

/// Basis whose first vector spans the kernel of l, where the nonzero
/// rank-one row m of B is c l^2.
inline Mat2<Scalar> isotropic_line_basis(const Vec<Scalar, 3>& m) {
  const Scalar &p = m[0], &q = m[1], &r = m[2];
  if (!(q * q - Scalar(4) * p * r).is_zero()) throw ContractViolation("form is not a perfect square");
  Vec<Scalar, 2> u;
  if (!p.is_zero())
    u = {-q, Scalar(2) * p};
  else
    u = {Scalar(1), Scalar(0)};
  return adapted_basis(u);
}

/// -theta: stable exactly on Z-o x V, witnessed by (a1 a2 a3)^2 beta^2 det B.
/// Unstable points are destabilized by -lambda_i when alpha_i = 0, and
/// otherwise (beta = 0) by (0,0,0;-1,0) in a basis adapted to the isotropic
/// line of the rank-one B.
inline StabilityVerdict semistable_minus_theta(const PointHV& p) {
  require_on_Z(p);
  StabilityVerdict v;
  if (in_Zo(p)) {
    v.status = Status::stable;
    v.semi_invariant = neg_theta_semi_invariant(p);
    v.witness = "(a1 a2 a3)^2 beta^2 det B = " + v.semi_invariant->str();
    return v;
  }
  for (int i = 0; i < 3; ++i) {
    if (p.alpha[i].is_zero()) {
      v.certificate = Certificate{-lambda_(i), Mat2<Scalar>::identity(), "{a" + std::to_string(i + 1) + "=0}"};
      return v;
    }
  }
  // beta = 0 with all alpha nonzero: B has rank <= 1 with J-isotropic image
  Mat2<Scalar> basis = Mat2<Scalar>::identity();
  for (int i = 0; i < 3; ++i) {
    if (!is_zero_vec(p.B[i])) {
      basis = isotropic_line_basis(p.B[i]);
      break;
    }
  }
  v.certificate = Certificate{Cocharacter{{0, 0, 0, -1, 0}}, basis, "{beta=0}"};
  if (!verify_certificate(p, -kTheta, *v.certificate))
    throw ContractViolation("beta = 0 point without isotropic-line certificate");
  return v;
}

inline StabilityVerdict verdict_for(const Character& chi, const PointHV& p) {
  if (chi == kTheta) return semistable_theta(p);
  if (chi == -kTheta) return semistable_minus_theta(p);
  throw ContractViolation("only theta and -theta are supported");
}

inline std::string verdict_report(const StabilityVerdict& v) {
  if (v.stable()) return "stable: " + v.witness + "\n";
  const Certificate& c = *v.certificate;
  return "unstable: family " + c.family + ", cocharacter " + c.cocharacter.str() + " in basis " + to_string(c.basis) +
         "\n";
}

}  // namespace d4vgit
