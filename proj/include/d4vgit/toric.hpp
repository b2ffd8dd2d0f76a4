#pragma once

// Torus GIT for the cyclic groups: a torus with integer weight matrix W
// (k x N, column j = weight of coordinate j) acting on C^N.
//
// Presentations of C_n-rep (U_i the character i, U_0 = U_n = C):
//   minimal:   C* on (B, x, y) with weights (-n, 1, n-1);
//   redundant: (C*)^{n-1} = prod GL(U_i) on (B_1..B_{n-1}, x, y) with
//     B_i in Hom(U_i U_i, U_{i-1} U_{i+1}), weight e_{i-1} - 2 e_i + e_{i+1},
//     x in U_1 (weight e_1), y in U_{n-1} (weight e_{n-1});
//   literal:   B_i : U_1 U_i -> U_{i+1} (i <= n-2), B_{n-1} : U_1 U_{n-1} -> C.
// The literal list also presents C_n-rep, but its Gale dual has repeated
// rays for n >= 4, so its quotients are not the minimal resolution; the
// redundant one is the Cox presentation (u_{i-1} - 2 u_i + u_{i+1} = 0).
// Quotient fans come from the Gale dual of W.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "d4vgit/errors.hpp"
#include "d4vgit/field.hpp"

namespace d4vgit {

struct ToricGITProblem {
  std::vector<std::vector<long>> weights;  // k rows, N columns
  std::vector<std::string> labels;         // one per coordinate

  std::size_t rank() const { return weights.size(); }
  std::size_t coords() const { return weights.empty() ? 0 : weights[0].size(); }
  std::vector<long> weight(std::size_t j) const {
    std::vector<long> w;
    for (const auto& row : weights) w.push_back(row[j]);
    return w;
  }
  void validate() const {
    if (weights.empty()) throw ContractViolation("torus of rank 0");
    for (const auto& row : weights)
      if (row.size() != coords()) throw ContractViolation("ragged weight matrix");
    if (rank() > coords()) throw ContractViolation("torus rank exceeds the number of coordinates");
    if (labels.size() != coords()) throw ContractViolation("one label per coordinate");
  }
};

inline ToricGITProblem an_minimal_problem(long n) {
  if (n < 2) throw ContractViolation("n must be at least 2");
  return {{{-n, 1, n - 1}}, {"B", "x", "y"}};
}

inline ToricGITProblem an_redundant_problem(long n) {
  if (n < 2) throw ContractViolation("n must be at least 2");
  std::size_t k = static_cast<std::size_t>(n - 1), N = k + 2;
  ToricGITProblem P;
  P.weights.assign(k, std::vector<long>(N, 0));
  for (std::size_t i = 0; i < k; ++i) {
    P.weights[i][i] = -2;
    if (i > 0) P.weights[i - 1][i] = 1;
    if (i + 1 < k) P.weights[i + 1][i] = 1;
    P.labels.push_back("B" + std::to_string(i + 1));
  }
  P.weights[0][k] = 1;
  P.weights[k - 1][k + 1] = 1;
  P.labels.push_back("x");
  P.labels.push_back("y");
  return P;
}

inline ToricGITProblem an_literal_problem(long n) {
  if (n < 2) throw ContractViolation("n must be at least 2");
  std::size_t k = static_cast<std::size_t>(n - 1), N = k + 2;
  ToricGITProblem P;
  P.weights.assign(k, std::vector<long>(N, 0));
  for (std::size_t i = 0; i + 1 < k; ++i) {  // B_{i+1}: e_{i+2} - e_1 - e_{i+1}
    P.weights[i + 1][i] += 1;
    P.weights[0][i] -= 1;
    P.weights[i][i] -= 1;
  }
  P.weights[0][k - 1] -= 1;
  P.weights[k - 1][k - 1] -= 1;
  P.weights[0][k] = 1;
  P.weights[k - 1][k + 1] = 1;
  for (std::size_t i = 0; i < k; ++i) P.labels.push_back("B" + std::to_string(i + 1));
  P.labels.push_back("x");
  P.labels.push_back("y");
  return P;
}

namespace detail {

using QMat = std::vector<std::vector<mpq_class>>;

/// Solve A c = b exactly (A has independent columns); nullopt if inconsistent.
inline std::optional<std::vector<mpq_class>> solve_independent(QMat A, std::vector<mpq_class> b) {
  std::size_t rows = A.size(), cols = A.empty() ? 0 : A[0].size();
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && A[p][c] == 0) ++p;
    if (p == rows) return std::nullopt;  // dependent columns
    std::swap(A[p], A[r]);
    std::swap(b[p], b[r]);
    for (std::size_t q = 0; q < rows; ++q) {
      if (q == r || A[q][c] == 0) continue;
      mpq_class f = A[q][c] / A[r][c];
      for (std::size_t cc = c; cc < cols; ++cc) A[q][cc] -= f * A[r][cc];
      b[q] -= f * b[r];
    }
    pivots.push_back(c);
    ++r;
  }
  if (r < cols) return std::nullopt;
  for (std::size_t q = r; q < rows; ++q)
    if (b[q] != 0) return std::nullopt;
  std::vector<mpq_class> c(cols);
  for (std::size_t q = 0; q < r; ++q) c[pivots[q]] = b[q] / A[q][pivots[q]];
  return c;
}

inline QMat columns_of(const ToricGITProblem& P, const std::vector<std::size_t>& cols) {
  QMat A(P.rank(), std::vector<mpq_class>(cols.size()));
  for (std::size_t i = 0; i < P.rank(); ++i)
    for (std::size_t c = 0; c < cols.size(); ++c) A[i][c] = P.weights[i][cols[c]];
  return A;
}

inline std::vector<std::size_t> bits(unsigned long mask) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; mask; ++j, mask >>= 1)
    if (mask & 1) out.push_back(j);
  return out;
}

/// chi = sum c_j w_j with c_j >= 0 over independent columns (nullopt if none).
inline std::optional<std::vector<std::size_t>> cone_witness(const ToricGITProblem& P, const std::vector<long>& chi,
                                                            const std::vector<std::size_t>& support,
                                                            std::size_t max_size) {
  std::vector<mpq_class> b(chi.begin(), chi.end());
  if (std::all_of(chi.begin(), chi.end(), [](long v) { return v == 0; })) return std::vector<std::size_t>{};
  std::size_t m = support.size();
  for (unsigned long mask = 1; mask < (1UL << m); ++mask) {
    auto idx = bits(mask);
    if (idx.size() > max_size) continue;
    std::vector<std::size_t> cols;
    for (auto t : idx) cols.push_back(support[t]);
    auto c = solve_independent(columns_of(P, cols), b);
    if (c && std::all_of(c->begin(), c->end(), [](const mpq_class& v) { return v >= 0; })) return cols;
  }
  return std::nullopt;
}

inline void check_character(const ToricGITProblem& P, const std::vector<long>& chi) {
  P.validate();
  if (chi.size() != P.rank()) throw ContractViolation("character has the wrong length");
}

}  // namespace detail

/// chi lies in the rational cone spanned by the weights of the nonzero coordinates.
inline bool an_semistable(const ToricGITProblem& P, const std::vector<long>& chi, const std::vector<Scalar>& point) {
  detail::check_character(P, chi);
  if (point.size() != P.coords()) throw ContractViolation("point has the wrong length");
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < point.size(); ++j)
    if (!point[j].is_zero()) support.push_back(j);
  return detail::cone_witness(P, chi, support, P.rank()).has_value();
}

/// Hilbert-Mumford by brute force: some integer lambda in [-bound, bound]^k
/// with <w_j, lambda> >= 0 on the support and <chi, lambda> < 0.
inline std::optional<std::vector<long>> an_destabilizing_1ps(const ToricGITProblem& P, const std::vector<long>& chi,
                                                            const std::vector<Scalar>& point, long bound = 3) {
  detail::check_character(P, chi);
  std::size_t k = P.rank();
  std::vector<long> lam(k, -bound);
  for (;;) {
    long pc = 0;
    for (std::size_t i = 0; i < k; ++i) pc += chi[i] * lam[i];
    if (pc < 0) {
      bool ok = true;
      for (std::size_t j = 0; j < P.coords() && ok; ++j) {
        if (point[j].is_zero()) continue;
        long s = 0;
        for (std::size_t i = 0; i < k; ++i) s += P.weights[i][j] * lam[i];
        if (s < 0) ok = false;
      }
      if (ok) return lam;
    }
    std::size_t i = 0;
    while (i < k && lam[i] == bound) lam[i++] = -bound;
    if (i == k) return std::nullopt;
    ++lam[i];
  }
}

/// Throws WallCharacter if chi lies in a cone of weights of rank < k.
inline void check_generic(const ToricGITProblem& P, const std::vector<long>& chi) {
  detail::check_character(P, chi);
  std::vector<std::size_t> all(P.coords());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
  std::string chis;
  for (std::size_t i = 0; i < chi.size(); ++i) chis += (i ? "," : "") + std::to_string(chi[i]);
  if (std::all_of(chi.begin(), chi.end(), [](long v) { return v == 0; }))
    throw WallCharacter("chi = 0 lies on every wall");
  if (P.rank() == 1) return;
  auto w = detail::cone_witness(P, chi, all, P.rank() - 1);
  if (!w) return;
  std::string names;
  for (auto j : *w) names += (names.empty() ? "" : ", ") + P.labels[j];
  throw WallCharacter("chi = (" + chis + ") is a nonnegative combination of the weights of {" + names +
                      "}, of rank < " + std::to_string(P.rank()) + "; generic chi must avoid these cones");
}

// ---------------------------------------------------------------------------
// Gale duality and quotient fans

namespace detail {

using ZMat = std::vector<std::vector<mpz_class>>;

/// Integer basis of the kernel of W (k x N), via unimodular column operations.
inline ZMat integer_kernel(const std::vector<std::vector<long>>& W, std::size_t N) {
  std::size_t k = W.size();
  ZMat M(k + N, std::vector<mpz_class>(N));  // [W; U]
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < N; ++j) M[i][j] = W[i][j];
  for (std::size_t j = 0; j < N; ++j) M[k + j][j] = 1;
  auto colop = [&](std::size_t a, std::size_t b, const mpz_class& f) {  // col_a -= f col_b
    for (auto& row : M) row[a] -= f * row[b];
  };
  auto swapcol = [&](std::size_t a, std::size_t b) {
    for (auto& row : M) std::swap(row[a], row[b]);
  };
  std::size_t col = 0;
  for (std::size_t i = 0; i < k && col < N; ++i) {
    for (;;) {
      // smallest nonzero |entry| in row i among columns >= col goes to col
      std::size_t best = N;
      for (std::size_t j = col; j < N; ++j)
        if (M[i][j] != 0 && (best == N || abs(M[i][j]) < abs(M[i][best]))) best = j;
      if (best == N) break;
      swapcol(col, best);
      bool done = true;
      for (std::size_t j = col + 1; j < N; ++j) {
        if (M[i][j] == 0) continue;
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), M[i][j].get_mpz_t(), M[i][col].get_mpz_t());
        colop(j, col, f);
        if (M[i][j] != 0) done = false;
      }
      if (done) {
        ++col;
        break;
      }
    }
  }
  ZMat K(N, std::vector<mpz_class>(N - col));
  for (std::size_t j = 0; j < N; ++j)
    for (std::size_t c = col; c < N; ++c) K[j][c - col] = M[k + j][c];
  return K;
}

inline long to_long(const mpz_class& z) {
  if (!z.fits_slong_p()) throw ContractViolation("integer overflow in fan computation");
  return z.get_si();
}

inline long det2(const std::array<long, 2>& u, const std::array<long, 2>& v) { return u[0] * v[1] - u[1] * v[0]; }

inline long ext_gcd(long a, long b, long& x, long& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return a >= 0 ? a : -a;
  }
  long x1, y1;
  long g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace detail

/// Rays of the Gale dual: row j is the image of coordinate j (requires N - k = 2).
inline std::vector<std::array<long, 2>> gale_dual_rays(const ToricGITProblem& P) {
  P.validate();
  auto K = detail::integer_kernel(P.weights, P.coords());
  if (K.empty() || K[0].size() != 2) throw ContractViolation("quotient is not a surface (N - rank W != 2)");
  std::vector<std::array<long, 2>> rays;
  for (const auto& row : K) rays.push_back({detail::to_long(row[0]), detail::to_long(row[1])});
  return rays;
}

struct ToricFan {
  std::vector<std::string> ray_labels;
  std::vector<std::array<long, 2>> rays;  // normalized: first ray (0,1), second (m, r) with 1 <= r <= m
  std::vector<std::array<int, 2>> cones;  // maximal cones in chain order
  std::vector<long> multiplicities;       // |det| of each cone
  std::vector<long> stabilizer_orders;    // order of the generic torus stabilizer over each cone

  bool empty() const { return cones.empty(); }
  bool smooth() const {
    return std::all_of(multiplicities.begin(), multiplicities.end(), [](long m) { return m == 1; });
  }
  /// Rays shared by two maximal cones (exceptional curves).
  int interior_rays() const {
    int n = 0;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      int c = 0;
      for (const auto& cone : cones) c += (cone[0] == static_cast<int>(r)) + (cone[1] == static_cast<int>(r));
      if (c == 2) ++n;
    }
    return n;
  }
};

/// The GIT quotient of C^N by the torus at a generic chi, as a 2-dimensional fan.
inline ToricFan quotient_fan(const ToricGITProblem& P, const std::vector<long>& chi) {
  check_generic(P, chi);
  auto v = gale_dual_rays(P);
  std::size_t N = P.coords();
  // maximal cones: pairs I whose complement's weights contain chi
  std::vector<std::array<std::size_t, 2>> pairs;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a + 1; b < N; ++b) {
      std::vector<std::size_t> rest;
      for (std::size_t j = 0; j < N; ++j)
        if (j != a && j != b) rest.push_back(j);
      if (detail::cone_witness(P, chi, rest, P.rank())) pairs.push_back({a, b});
    }
  ToricFan F;
  if (pairs.empty()) return F;
  // walk the chain of cones from an end
  auto count = [&](std::size_t r) {
    int c = 0;
    for (const auto& p : pairs) c += (p[0] == r) + (p[1] == r);
    return c;
  };
  std::size_t start = pairs[0][0];
  for (const auto& p : pairs)
    for (std::size_t r : p)
      if (count(r) == 1) {
        start = r;
        goto found;
      }
found:
  std::vector<std::size_t> order{start};
  std::vector<bool> used(pairs.size(), false);
  for (;;) {
    std::size_t cur = order.back();
    bool ext = false;
    for (std::size_t c = 0; c < pairs.size(); ++c) {
      if (used[c] || (pairs[c][0] != cur && pairs[c][1] != cur)) continue;
      used[c] = true;
      std::size_t nxt = pairs[c][0] == cur ? pairs[c][1] : pairs[c][0];
      if (nxt != order.front()) order.push_back(nxt);
      ext = true;
      break;
    }
    if (!ext) break;
  }
  // lattice change: first ray -> (0,1), second -> (m, r) with m > 0, 1 <= r <= m
  std::array<long, 2> u0 = v[order[0]], u1 = v[order[1]];
  long x, y;
  long g = detail::ext_gcd(u0[0], u0[1], x, y);  // x u00 + y u01 = g
  if (g != 1) throw ContractViolation("Gale dual ray is not primitive");
  // M = [[u01, -u00], [x, y]] sends u0 to (0, 1), det M = 1
  std::array<std::array<long, 2>, 2> M{{{u0[1], -u0[0]}, {x, y}}};
  auto apply = [&](const std::array<long, 2>& w) {
    return std::array<long, 2>{M[0][0] * w[0] + M[0][1] * w[1], M[1][0] * w[0] + M[1][1] * w[1]};
  };
  std::array<long, 2> w1 = apply(u1);
  if (w1[0] < 0) {  // reflect x -> -x
    M[0][0] = -M[0][0];
    M[0][1] = -M[0][1];
    w1 = apply(u1);
  }
  long m = w1[0];
  if (m == 0) throw ContractViolation("degenerate cone");
  long shift = (w1[1] - 1) / m;  // want 1 <= r <= m
  if (w1[1] - 1 < 0 && (w1[1] - 1) % m != 0) --shift;
  M[1][0] -= shift * M[0][0];
  M[1][1] -= shift * M[0][1];
  for (std::size_t r : order) {
    F.ray_labels.push_back(P.labels[r]);
    F.rays.push_back(apply(v[r]));
  }
  for (std::size_t c = 0; c + 1 < order.size() || (c + 1 == order.size() && pairs.size() == order.size()); ++c) {
    std::size_t a = order[c], b = order[(c + 1) % order.size()];
    if (std::find_if(pairs.begin(), pairs.end(), [&](const auto& p) {
          return (p[0] == a && p[1] == b) || (p[0] == b && p[1] == a);
        }) == pairs.end())
      continue;
    int ia = static_cast<int>(c), ib = static_cast<int>((c + 1) % order.size());
    F.cones.push_back({ia, ib});
    F.multiplicities.push_back(std::abs(detail::det2(F.rays[ia], F.rays[ib])));
    // stabilizer of a point with exactly the complement nonzero: |det W_rest|
    std::vector<std::size_t> rest;
    for (std::size_t j = 0; j < N; ++j)
      if (j != a && j != b) rest.push_back(j);
    detail::QMat A = detail::columns_of(P, rest);
    // determinant by elimination
    mpq_class d = 1;
    std::size_t k = A.size();
    for (std::size_t col = 0; col < k; ++col) {
      std::size_t p = col;
      while (p < k && A[p][col] == 0) ++p;
      if (p == k) {
        d = 0;
        break;
      }
      if (p != col) {
        std::swap(A[p], A[col]);
        d = -d;
      }
      d *= A[col][col];
      for (std::size_t q = col + 1; q < k; ++q) {
        mpq_class f = A[q][col] / A[col][col];
        for (std::size_t cc = col; cc < k; ++cc) A[q][cc] -= f * A[col][cc];
      }
    }
    F.stabilizer_orders.push_back(detail::to_long(abs(d.get_num())));
  }
  return F;
}

/// Redundant presentation of A_{n-1}; chi has n - 1 entries.
inline ToricFan an_quotient_fan(long n, const std::vector<long>& chi) {
  return quotient_fan(an_redundant_problem(n), chi);
}

/// Generic chambers of a rank-one problem: the signs carried by some weight.
inline std::vector<long> rank_one_chambers(const ToricGITProblem& P) {
  P.validate();
  if (P.rank() != 1) throw ContractViolation("rank-one problems only");
  std::vector<long> out;
  const auto& w = P.weights[0];
  if (std::any_of(w.begin(), w.end(), [](long v) { return v > 0; })) out.push_back(1);
  if (std::any_of(w.begin(), w.end(), [](long v) { return v < 0; })) out.push_back(-1);
  return out;
}

inline std::string fan_report(const ToricFan& F) {
  if (F.empty()) return "empty quotient\n";
  std::string out = "rays:\n";
  for (std::size_t r = 0; r < F.rays.size(); ++r)
    out += "  " + F.ray_labels[r] + ": (" + std::to_string(F.rays[r][0]) + ", " + std::to_string(F.rays[r][1]) + ")\n";
  out += "maximal cones:\n";
  for (std::size_t c = 0; c < F.cones.size(); ++c)
    out += "  {" + F.ray_labels[F.cones[c][0]] + ", " + F.ray_labels[F.cones[c][1]] +
           "} multiplicity " + std::to_string(F.multiplicities[c]) + ", stabilizer order " +
           std::to_string(F.stabilizer_orders[c]) + "\n";
  out += "interior rays: " + std::to_string(F.interior_rays()) + (F.smooth() ? ", smooth\n" : ", orbifold\n");
  return out;
}

}  // namespace d4vgit
