#pragma once

// Seeded generators of points of Z x V: orbit samples of b*, chart samples
// (including points off Z-o), and engineered members of each unstable family.

#include <string>
#include <vector>

#include "d4vgit/charts.hpp"
#include "d4vgit/equations.hpp"
#include "d4vgit/random.hpp"
#include "d4vgit/stability.hpp"

namespace d4vgit {

/// h . b* with an independent random x.
inline PointHV orbit_sample(Sampler& s) {
  PointHV p = act(s.group_element(), base_point());
  p.x = {s.scalar(), s.scalar()};
  return p;
}

enum class ChartKind { generic, beta_zero, alpha_j_zero };

/// A valid chart point of chart i.
inline ChartPoint random_chart_point(Sampler& s, int i, ChartKind kind = ChartKind::generic) {
  for (;;) {
    HatChart h;
    h.index = i;
    Scalar aj = kind == ChartKind::alpha_j_zero ? Scalar(0) : s.nonzero();
    Scalar pj = s.nonzero(), pk = s.nonzero();
    Scalar ak = -(Scalar(1) + aj * pj * pj) / (pk * pk);
    if (ak.is_zero()) continue;
    Scalar bhat = kind == ChartKind::beta_zero ? Scalar(0) : s.nonzero();
    h.alpha_j = aj;
    h.alpha_k = ak;
    h.p_j = pj;
    h.p_k = pk;
    h.q_j = bhat * ak * pk;
    h.q_k = -(bhat * aj * pj);
    h.omega = bhat * bhat * aj * ak;
    return from_quiver_chart(h);
  }
}

/// A chart point moved by a random group element.
inline PointHV chart_sample(Sampler& s, int i, ChartKind kind = ChartKind::generic) {
  return act(s.group_element(), random_chart_point(s, i, kind).point);
}

/// The standard mix: orbit samples and chart samples of every kind.
inline std::vector<PointHV> z_samples(Sampler& s, int count) {
  std::vector<PointHV> out;
  const ChartKind kinds[3] = {ChartKind::generic, ChartKind::beta_zero, ChartKind::alpha_j_zero};
  for (int n = 0; n < count; ++n) {
    if (n % 2 == 0)
      out.push_back(orbit_sample(s));
    else
      out.push_back(chart_sample(s, (n / 2) % 3, kinds[(n / 6) % 3]));
  }
  return out;
}

namespace detail {

// c (u1 v1 + u2 v2)^2
inline Vec<Scalar, 3> square_form(const Scalar& c, const Scalar& u1, const Scalar& u2) {
  return {c * u1 * u1, Scalar(2) * c * u1 * u2, c * u2 * u2};
}

inline PointHV rank_one(const std::array<Scalar, 3>& alpha, const Scalar& beta, const Vec<Scalar, 3>& ell,
                        const Vec<Scalar, 3>& m) {
  PointHV p;
  p.alpha = alpha;
  p.beta = beta;
  for (int i = 0; i < 3; ++i) p.B[i] = scale(ell[i], m);
  p.x = {Scalar(1), Scalar(0)};
  return p;
}

}  // namespace detail

/// Number of engineered theta-unstable families: the 11 weight-table subsets and x = 0.
inline constexpr int kThetaUnstableFamilies = 12;

/// A point of Z x V in the given theta-unstable family (index into
/// unstable_subset_certificates(), or 11 for x = 0), moved by a random element of G.
inline PointHV engineered_theta_unstable(Sampler& s, int family) {
  PointHV p;
  if (family < 3) {  // beta = 0, B_i = 0: l A-isotropic with l_i = 0, m a square
    int i = family, j = (i + 1) % 3, k = (i + 2) % 3;
    std::array<Scalar, 3> alpha{};
    Vec<Scalar, 3> ell{Scalar(0), Scalar(0), Scalar(0)};
    ell[j] = s.nonzero();
    ell[k] = s.nonzero();
    alpha[i] = s.scalar();
    alpha[j] = s.nonzero();
    alpha[k] = -(alpha[j] * ell[j] * ell[j]) / (ell[k] * ell[k]);
    p = detail::rank_one(alpha, Scalar(0), ell, detail::square_form(s.nonzero(), s.scalar(), s.scalar()));
  } else if (family == 3) {  // alpha = 0: any beta, any rank-one B
    p = detail::rank_one({Scalar(0), Scalar(0), Scalar(0)}, s.scalar(), {s.scalar(), s.scalar(), s.scalar()},
                         {s.scalar(), s.scalar(), s.scalar()});
  } else if (family < 7) {  // a_j = a_k = 0, p_i = 0: B_i = 0, B_j, B_k proportional
    int i = family - 4;
    std::array<Scalar, 3> alpha{Scalar(0), Scalar(0), Scalar(0)};
    alpha[i] = s.scalar();
    Vec<Scalar, 3> ell{s.scalar(), s.scalar(), s.scalar()};
    ell[i] = 0;
    p = detail::rank_one(alpha, s.scalar(), ell, {s.scalar(), s.scalar(), s.scalar()});
  } else if (family < 10) {  // a_k = 0, p_i = p_j = 0: beta = 0, m = c y^2, l isotropic on legs i, j
    int k = 2 - (family - 7);
    int i = (k + 1) % 3, j = (k + 2) % 3;
    std::array<Scalar, 3> alpha{};
    Vec<Scalar, 3> ell{};
    alpha[k] = 0;
    ell[k] = s.scalar();
    ell[i] = s.nonzero();
    ell[j] = s.nonzero();
    alpha[i] = s.nonzero();
    alpha[j] = -(alpha[i] * ell[i] * ell[i]) / (ell[j] * ell[j]);
    p = detail::rank_one(alpha, Scalar(0), ell, {Scalar(0), Scalar(0), s.nonzero()});
  } else if (family == 10) {  // p = 0: beta = 0, m = c y^2, l A-isotropic
    std::array<Scalar, 3> alpha{s.nonzero(), s.nonzero(), Scalar(0)};
    Vec<Scalar, 3> ell{s.nonzero(), s.nonzero(), s.nonzero()};
    alpha[2] = -(alpha[0] * ell[0] * ell[0] + alpha[1] * ell[1] * ell[1]) / (ell[2] * ell[2]);
    p = detail::rank_one(alpha, Scalar(0), ell, {Scalar(0), Scalar(0), s.nonzero()});
  } else {  // x = 0
    p = orbit_sample(s);
    p.x = {Scalar(0), Scalar(0)};
    return p;
  }
  return act(s.group_element(), p);
}

/// A point of Z x V outside Z-o: kind 0..2 has alpha_{kind} = 0, kind 3 has
/// beta = 0 with all alpha nonzero.
inline PointHV engineered_minus_theta_unstable(Sampler& s, int kind) {
  if (kind < 3) {
    // alpha_kind = 0 and rank-one B: take alpha = 0 on one leg, isotropic l on the others, beta = 0
    int i = kind, j = (i + 1) % 3, k = (i + 2) % 3;
    std::array<Scalar, 3> alpha{};
    Vec<Scalar, 3> ell{};
    alpha[i] = 0;
    ell[i] = s.scalar();
    ell[j] = s.nonzero();
    ell[k] = s.nonzero();
    alpha[j] = s.nonzero();
    alpha[k] = -(alpha[j] * ell[j] * ell[j]) / (ell[k] * ell[k]);
    PointHV p = detail::rank_one(alpha, Scalar(0), ell, detail::square_form(s.nonzero(), s.scalar(), s.scalar()));
    p.x = {s.scalar(), s.scalar()};
    return act(s.group_element(), p);
  }
  std::array<Scalar, 3> alpha{s.nonzero(), s.nonzero(), Scalar(0)};
  Vec<Scalar, 3> ell{s.nonzero(), s.nonzero(), s.nonzero()};
  for (;;) {
    alpha[2] = -(alpha[0] * ell[0] * ell[0] + alpha[1] * ell[1] * ell[1]) / (ell[2] * ell[2]);
    if (!alpha[2].is_zero()) break;
    ell[0] = s.nonzero();
  }
  PointHV p = detail::rank_one(alpha, Scalar(0), ell, detail::square_form(s.nonzero(), s.scalar(), Scalar(1)));
  p.x = {s.scalar(), s.scalar()};
  return act(s.group_element(), p);
}

}  // namespace d4vgit
