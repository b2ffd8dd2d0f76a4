#pragma once

// Exact arithmetic over the Gaussian rationals Q(i) and over towers of
// quadratic extensions Q(i)(s1)(s2)... with s_k^2 = d_k.
//
// An element at tower depth k is stored as 2^k Gaussian-rational
// coefficients.  Bit j of a coefficient index selects s_{j+1}; equivalently
// the element is a + b*s_k with a, b at depth k-1 (a = lower half of the
// coefficients, b = upper half).  Since every d_k is a non-square at the
// previous level, {1, s_k} is a basis and the representation is unique, so
// zero testing is a coefficient scan.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "d4vgit/errors.hpp"

namespace d4vgit {

/// a + b*i with a, b rational.
class GaussQ {
 public:
  GaussQ() = default;
  GaussQ(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
  GaussQ(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {  // NOLINT
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussQ i() { return GaussQ(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }

  friend GaussQ operator+(const GaussQ& a, const GaussQ& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
  friend GaussQ operator-(const GaussQ& a, const GaussQ& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
  friend GaussQ operator*(const GaussQ& a, const GaussQ& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  GaussQ operator-() const { return {-re_, -im_}; }
  GaussQ conj() const { return {re_, -im_}; }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussQ inverse() const {
    if (is_zero()) throw DivisionByZero();
    mpq_class n = norm();
    return {re_ / n, -im_ / n};
  }
  friend GaussQ operator/(const GaussQ& a, const GaussQ& b) { return a * b.inverse(); }

  GaussQ& operator+=(const GaussQ& o) { return *this = *this + o; }
  GaussQ& operator-=(const GaussQ& o) { return *this = *this - o; }
  GaussQ& operator*=(const GaussQ& o) { return *this = *this * o; }

  friend bool operator==(const GaussQ& a, const GaussQ& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  /// "a/b+c/d*i" with zero parts dropped; "0" for zero.
  std::string str() const {
    if (is_zero()) return "0";
    if (sgn(im_) == 0) return re_.get_str();
    std::string imag = im_.get_str() + "*i";
    if (sgn(re_) == 0) return imag;
    return re_.get_str() + (sgn(im_) > 0 ? "+" : "") + imag;
  }

  static GaussQ parse(std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const GaussQ& z) { return os << z.str(); }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

namespace detail {

inline mpq_class parse_rational(std::string_view s) {
  std::string t(s);
  if (t.empty()) throw ParseError("empty rational");
  if (t[0] == '+') t.erase(0, 1);
  for (std::size_t k = 0; k < t.size(); ++k) {
    char ch = t[k];
    bool ok = (ch >= '0' && ch <= '9') || ch == '/' || (ch == '-' && k == 0);
    if (!ok) throw ParseError("bad rational '" + std::string(s) + "'");
  }
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw ParseError("bad rational '" + std::string(s) + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  q.canonicalize();
  return q;
}

inline mpq_class parse_imag_coefficient(std::string_view s) {
  // s is the text before "*i" or before a bare "i"
  if (s.empty() || s == "+") return 1;
  if (s == "-") return -1;
  return parse_rational(s);
}

}  // namespace detail

inline GaussQ GaussQ::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s.push_back(ch);
  if (s.empty()) throw ParseError("empty scalar");
  if (s.back() != 'i') return GaussQ(detail::parse_rational(s));
  // split real and imaginary parts at the last sign that is not leading
  std::size_t cut = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      cut = k;
      break;
    }
  }
  std::string_view real_part, imag_part;
  if (cut == std::string::npos) {
    imag_part = std::string_view(s).substr(0, s.size() - 1);
  } else {
    real_part = std::string_view(s).substr(0, cut);
    imag_part = std::string_view(s).substr(cut, s.size() - 1 - cut);
  }
  if (!imag_part.empty() && imag_part.back() == '*') imag_part.remove_suffix(1);
  mpq_class re = real_part.empty() ? mpq_class(0) : detail::parse_rational(real_part);
  return GaussQ(re, detail::parse_imag_coefficient(imag_part));
}

class Scalar;
struct FieldNode;

/// A field in a quadratic tower over Q(i); nullptr denotes Q(i) itself.
using Field = std::shared_ptr<const FieldNode>;

inline int depth_of(const Field& f);

/// Element of Q(i) or of a quadratic tower over it.  Immutable value type.
class Scalar {
 public:
  Scalar() : coeffs_{GaussQ(0)} {}
  Scalar(long v) : coeffs_{GaussQ(v)} {}                   // NOLINT(google-explicit-constructor)
  Scalar(GaussQ v) : coeffs_{std::move(v)} {}              // NOLINT(google-explicit-constructor)
  Scalar(const mpq_class& v) : coeffs_{GaussQ(v)} {}       // NOLINT(google-explicit-constructor)
  Scalar(long num, long den) : coeffs_{GaussQ(mpq_class(num, den))} {
    if (den == 0) throw DivisionByZero();
  }
  Scalar(Field field, std::vector<GaussQ> coeffs);

  static Scalar i() { return Scalar(GaussQ::i()); }
  static Scalar parse(std::string_view s) { return Scalar(GaussQ::parse(s)); }

  const Field& field() const { return field_; }
  int depth() const { return depth_of(field_); }
  const std::vector<GaussQ>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const GaussQ& c) { return c.is_zero(); });
  }
  explicit operator bool() const { return !is_zero(); }

  /// True when the element lies in Q(i) (all tower coefficients vanish).
  bool is_base() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const GaussQ& c) { return c.is_zero(); });
  }
  const GaussQ& base_value() const {
    if (!is_base()) throw ContractViolation("scalar is not in Q(i)");
    return coeffs_[0];
  }

  Scalar lifted_to(const Field& target) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  Scalar operator-() const {
    std::vector<GaussQ> c(coeffs_.size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = -coeffs_[k];
    return Scalar(field_, std::move(c));
  }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const;
  Scalar pow(long e) const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return (a - b).is_zero(); }

  /// Base-level string "a/b+c/d*i"; tower elements print as "[c0, c1, ...]".
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  Field field_;
  std::vector<GaussQ> coeffs_;

  // a + b*s at this scalar's depth, with a and b at the parent level
  std::pair<Scalar, Scalar> split() const;
  static Scalar join(const Field& f, const Scalar& a, const Scalar& b);
  friend Scalar sqrt_generator(const Field& f);
};

/// One level of a quadratic tower: parent(s) with s^2 = d.
struct FieldNode {
  Field parent;
  Scalar d;
  int depth = 0;
};

inline int depth_of(const Field& f) { return f ? f->depth : 0; }

inline bool is_ancestor_or_same(const Field& anc, const Field& f) {
  for (const FieldNode* p = f.get();; p = p->parent.get()) {
    if (p == anc.get()) return true;
    if (p == nullptr) return false;
  }
}

/// Smallest of the two fields containing both; they must be nested.
inline Field common_field(const Field& a, const Field& b) {
  if (a == b) return a;
  if (is_ancestor_or_same(a, b)) return b;
  if (is_ancestor_or_same(b, a)) return a;
  throw FieldMismatch("scalars live in unrelated quadratic towers");
}

inline Scalar::Scalar(Field field, std::vector<GaussQ> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != (std::size_t{1} << depth_of(field_)))
    throw ContractViolation("coefficient count does not match tower depth");
}

inline Scalar Scalar::lifted_to(const Field& target) const {
  if (target == field_) return *this;
  if (!is_ancestor_or_same(field_, target)) throw FieldMismatch("cannot lift scalar into a non-extension");
  std::vector<GaussQ> c = coeffs_;
  c.resize(std::size_t{1} << depth_of(target), GaussQ(0));
  return Scalar(target, std::move(c));
}

inline std::pair<Scalar, Scalar> Scalar::split() const {
  const Field& parent = field_->parent;
  std::size_t half = coeffs_.size() / 2;
  return {Scalar(parent, std::vector<GaussQ>(coeffs_.begin(), coeffs_.begin() + half)),
          Scalar(parent, std::vector<GaussQ>(coeffs_.begin() + half, coeffs_.end()))};
}

inline Scalar Scalar::join(const Field& f, const Scalar& a, const Scalar& b) {
  std::vector<GaussQ> c = a.lifted_to(f->parent).coeffs_;
  const auto& hi = b.lifted_to(f->parent).coeffs_;
  c.insert(c.end(), hi.begin(), hi.end());
  return Scalar(f, std::move(c));
}

inline Scalar operator+(const Scalar& a, const Scalar& b) {
  Field f = common_field(a.field_, b.field_);
  Scalar x = a.lifted_to(f), y = b.lifted_to(f);
  for (std::size_t k = 0; k < x.coeffs_.size(); ++k) x.coeffs_[k] += y.coeffs_[k];
  return x;
}

inline Scalar operator-(const Scalar& a, const Scalar& b) {
  Field f = common_field(a.field_, b.field_);
  Scalar x = a.lifted_to(f), y = b.lifted_to(f);
  for (std::size_t k = 0; k < x.coeffs_.size(); ++k) x.coeffs_[k] -= y.coeffs_[k];
  return x;
}

inline Scalar operator*(const Scalar& a, const Scalar& b) {
  Field f = common_field(a.field_, b.field_);
  if (!f) return Scalar(a.coeffs_[0] * b.coeffs_[0]);
  Scalar x = a.lifted_to(f), y = b.lifted_to(f);
  if (y.is_base()) {
    for (auto& c : x.coeffs_) c *= y.coeffs_[0];
    return x;
  }
  if (x.is_base()) {
    for (auto& c : y.coeffs_) c *= x.coeffs_[0];
    return y;
  }
  auto [a0, a1] = x.split();
  auto [b0, b1] = y.split();
  return Scalar::join(f, a0 * b0 + a1 * b1 * f->d, a0 * b1 + a1 * b0);
}

inline Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_base()) {
    std::vector<GaussQ> c(coeffs_.size(), GaussQ(0));
    c[0] = coeffs_[0].inverse();
    return Scalar(field_, std::move(c));
  }
  auto [a, b] = split();
  Scalar n = a * a - b * b * field_->d;  // nonzero since d is not a square below
  Scalar ninv = n.inverse();
  return join(field_, a * ninv, -(b * ninv));
}

inline Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result = Scalar(1).lifted_to(field_), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

inline std::string Scalar::str() const {
  if (is_base()) return coeffs_[0].str();
  std::string out = "[";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) out += ", ";
    out += coeffs_[k].str();
  }
  return out + "]";
}

/// The generator s of the top level of f (s^2 = f->d).
inline Scalar sqrt_generator(const Field& f) {
  if (!f) throw ContractViolation("Q(i) has no tower generator");
  std::vector<GaussQ> c(std::size_t{1} << f->depth, GaussQ(0));
  c[c.size() / 2] = GaussQ(1);
  return Scalar(f, std::move(c));
}

namespace detail {

inline std::optional<mpz_class> isqrt_exact(const mpz_class& n) {
  if (sgn(n) < 0) return std::nullopt;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (r * r != n) return std::nullopt;
  return r;
}

inline std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  auto n = isqrt_exact(q.get_num());
  auto d = isqrt_exact(q.get_den());
  if (!n || !d) return std::nullopt;
  return mpq_class(*n, *d);
}

inline std::optional<GaussQ> gauss_sqrt(const GaussQ& z) {
  if (z.is_zero()) return GaussQ(0);
  if (sgn(z.im()) == 0) {
    if (sgn(z.re()) > 0) {
      if (auto r = rational_sqrt(z.re())) return GaussQ(*r);
      return std::nullopt;
    }
    if (auto r = rational_sqrt(-z.re())) return GaussQ(0, *r);
    return std::nullopt;
  }
  // (u + v i)^2 = z  =>  u^2 = (re + |z|)/2, v = im / (2u)
  auto m = rational_sqrt(z.norm());
  if (!m) return std::nullopt;
  auto u = rational_sqrt((z.re() + *m) / 2);
  if (!u || sgn(*u) == 0) return std::nullopt;
  mpq_class v = z.im() / (2 * *u);
  return GaussQ(*u, v);
}

}  // namespace detail

/// A square root of x inside x's own field, if one exists.  Square testing
/// descends through the tower via norms: (u + v s)^2 = x forces
/// N(x) = (u^2 - d v^2)^2.
inline std::optional<Scalar> sqrt_in_field(const Scalar& x) {
  if (x.is_zero()) return x;
  const Field& f = x.field();
  if (!f) {
    if (auto r = detail::gauss_sqrt(x.coeffs()[0])) return Scalar(*r);
    return std::nullopt;
  }
  Scalar s = sqrt_generator(f);
  const Field& parent = f->parent;
  std::vector<GaussQ> lo(x.coeffs().begin(), x.coeffs().begin() + x.coeffs().size() / 2);
  std::vector<GaussQ> hi(x.coeffs().begin() + x.coeffs().size() / 2, x.coeffs().end());
  Scalar a(parent, lo), b(parent, hi);
  if (b.is_zero()) {
    if (auto u = sqrt_in_field(a)) return u->lifted_to(f);
    if (auto v = sqrt_in_field(a / f->d)) return v->lifted_to(f) * s;
    return std::nullopt;
  }
  auto n = sqrt_in_field(a * a - b * b * f->d);
  if (!n) return std::nullopt;
  for (const Scalar& cand : {(a + *n) / Scalar(2), (a - *n) / Scalar(2)}) {
    auto u = sqrt_in_field(cand);
    if (!u || u->is_zero()) continue;
    Scalar v = b / (Scalar(2) * *u);
    Scalar root = u->lifted_to(f) + v.lifted_to(f) * s;
    if (root * root == x) return root;
  }
  return std::nullopt;
}

/// Result of adjoining a square root: the (possibly unchanged) field and a root in it.
struct Extension {
  Field field;
  Scalar root;
};

constexpr int kDefaultTowerDepth = 4;

/// Field containing `base` and a square root of d.  If d is already a square
/// in base, base is returned unchanged together with the existing root.
inline Extension adjoin_sqrt(const Field& base, const Scalar& d, int max_depth = kDefaultTowerDepth) {
  Scalar dd = d.lifted_to(common_field(base, d.field()));
  if (dd.field() != base) throw FieldMismatch("radicand does not live in the base field");
  if (dd.is_zero()) throw DegenerateExtension("cannot adjoin the square root of zero");
  if (auto r = sqrt_in_field(dd)) return {base, *r};
  if (depth_of(base) + 1 > max_depth)
    throw ExtensionLimit("quadratic tower depth cap (" + std::to_string(max_depth) + ") exceeded");
  auto node = std::make_shared<FieldNode>();
  node->parent = base;
  node->d = dd;
  node->depth = depth_of(base) + 1;
  Field f = std::move(node);
  return {f, sqrt_generator(f)};
}

/// Square root of x, growing `field` when needed.  x must live in a subfield of `field`.
inline Scalar sqrt_extending(const Scalar& x, Field& field, int max_depth = kDefaultTowerDepth) {
  Scalar y = x.lifted_to(common_field(field, x.field()));
  if (y.field() != field) field = y.field();
  if (y.is_zero()) return y;
  Extension e = adjoin_sqrt(field, y, max_depth);
  field = e.field;
  return e.root;
}

/// Generators d_1..d_k of a tower, bottom first.
inline std::vector<Scalar> tower_generators(const Field& f) {
  std::vector<Scalar> gens;
  for (const FieldNode* p = f.get(); p; p = p->parent.get()) gens.push_back(p->d);
  std::reverse(gens.begin(), gens.end());
  return gens;
}

// ---------------------------------------------------------------------------
// Roots of univariate polynomials over Q(i) that lie in Q(i).

namespace detail {

using GPoly = std::vector<GaussQ>;  // low degree first

inline void trim(GPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline GaussQ eval(const GPoly& p, const GaussQ& z) {
  GaussQ acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
  return acc;
}

inline GPoly derivative(const GPoly& p) {
  GPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * GaussQ(static_cast<long>(k)));
  return d;
}

inline GPoly poly_mod(GPoly a, const GPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    GaussQ f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
    trim(a);
  }
  return a;
}

inline GPoly poly_div_exact(GPoly a, const GPoly& b) {
  GPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, GaussQ(0));
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    GaussQ f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
    trim(a);
  }
  return q;
}

inline GPoly poly_gcd(GPoly a, GPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    GPoly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace detail

/// Distinct roots in Q(i) of a polynomial with Q(i) coefficients (low degree
/// first).  Candidates come from a floating-point root finder on the
/// square-free part; every returned root is verified exactly, and a root
/// r of a Gaussian-integer polynomial with leading coefficient c has c*r in
/// Z[i], which is what makes the rounding step exact for moderate heights.
inline std::vector<GaussQ> gaussian_rational_roots(std::vector<GaussQ> coeffs) {
  using detail::GPoly;
  GPoly p = std::move(coeffs);
  detail::trim(p);
  if (p.empty()) throw ContractViolation("zero polynomial has every root");
  std::vector<GaussQ> roots;
  if (p.size() == 1) return roots;
  if (p[0].is_zero()) {
    roots.emplace_back(0);
    while (!p.empty() && p[0].is_zero()) p.erase(p.begin());
  }
  GPoly g = detail::poly_gcd(p, detail::derivative(p));
  if (g.size() > 1) p = detail::poly_div_exact(p, g);
  std::size_t n = p.size() - 1;
  if (n == 0) return roots;
  // scale to Gaussian-integer coefficients
  mpz_class lcm = 1;
  for (const auto& c : p) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.re().get_den_mpz_t());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.im().get_den_mpz_t());
  }
  for (auto& c : p) c = c * GaussQ(mpq_class(lcm));
  const GaussQ lead = p.back();

  using cplx = std::complex<long double>;
  std::vector<cplx> a(n + 1);
  cplx lc(lead.re().get_d(), lead.im().get_d());
  for (std::size_t k = 0; k <= n; ++k) a[k] = cplx(p[k].re().get_d(), p[k].im().get_d()) / lc;
  auto evalc = [&](cplx z) {
    cplx acc = 0;
    for (std::size_t k = n + 1; k-- > 0;) acc = acc * z + a[k];
    return acc;
  };
  std::vector<cplx> z(n);
  const cplx seed(0.4L, 0.9L);
  z[0] = 1;
  for (std::size_t k = 1; k < n; ++k) z[k] = z[k - 1] * seed;
  for (int iter = 0; iter < 2000; ++iter) {
    long double delta = 0;
    for (std::size_t k = 0; k < n; ++k) {
      cplx den = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) den *= (z[k] - z[j]);
      cplx step = evalc(z[k]) / den;
      z[k] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-30L) break;
  }
  for (const cplx& r : z) {
    cplx w = r * lc;
    for (long dr = -1; dr <= 1; ++dr) {
      for (long di = -1; di <= 1; ++di) {
        mpz_class gr(std::lround(static_cast<double>(w.real())) + dr);
        mpz_class gi(std::lround(static_cast<double>(w.imag())) + di);
        GaussQ cand = GaussQ(mpq_class(gr), mpq_class(gi)) / lead;
        if (detail::eval(p, cand).is_zero() &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
    }
  }
  return roots;
}

}  // namespace d4vgit
