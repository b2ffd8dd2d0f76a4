#pragma once

// Sparse multivariate polynomials over Scalar.
//
// Variables live in a PolyRing: an ordered list of names, listed from the
// smallest to the largest variable.  The monomial order is graded
// lexicographic: total degree first, ties broken by the exponent of the
// largest variable, then the next largest, and so on.  For the chart ring
// (a2, a3, b, p2, p3) this makes p3 the largest variable.
//
// A Poly built from a bare number has no ring; it adopts the ring of the
// first polynomial it is combined with.

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "d4vgit/errors.hpp"
#include "d4vgit/field.hpp"

namespace d4vgit {

class PolyRing {
 public:
  explicit PolyRing(std::vector<std::string> vars) : vars_(std::move(vars)) {
    for (std::size_t k = 0; k < vars_.size(); ++k)
      for (std::size_t j = 0; j < k; ++j)
        if (vars_[j] == vars_[k]) throw ContractViolation("duplicate variable '" + vars_[k] + "'");
  }

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t size() const { return vars_.size(); }

  std::size_t index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw UnknownVariable("unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - vars_.begin());
  }
  bool has(const std::string& name) const { return std::find(vars_.begin(), vars_.end(), name) != vars_.end(); }

 private:
  std::vector<std::string> vars_;
};

using Ring = std::shared_ptr<const PolyRing>;

inline Ring make_ring(std::vector<std::string> vars) { return std::make_shared<const PolyRing>(std::move(vars)); }

using Exponent = std::vector<int>;

/// Strict "a comes after b" in grlex; used to keep terms sorted descending.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da > db;
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t k = n; k-- > 0;) {
      int ea = k < a.size() ? a[k] : 0;
      int eb = k < b.size() ? b[k] : 0;
      if (ea != eb) return ea > eb;
    }
    return false;
  }
};

class Poly {
 public:
  using Terms = std::map<Exponent, Scalar, GrlexGreater>;

  Poly() = default;
  Poly(long c) : Poly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(const Scalar& c) {            // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.emplace(Exponent{}, c);
  }
  Poly(Ring ring, const Scalar& c) : ring_(std::move(ring)) {
    if (!c.is_zero()) terms_.emplace(Exponent(ring_ ? ring_->size() : 0, 0), c);
  }

  static Poly var(const Ring& ring, const std::string& name) {
    Exponent e(ring->size(), 0);
    e[ring->index(name)] = 1;
    Poly p;
    p.ring_ = ring;
    p.terms_.emplace(std::move(e), Scalar(1));
    return p;
  }

  /// Term-by-term constructor; zero coefficients are dropped.
  static Poly from_terms(const Ring& ring, const std::vector<std::pair<Exponent, Scalar>>& terms) {
    Poly p;
    p.ring_ = ring;
    for (const auto& [e, c] : terms) {
      if (e.size() != ring->size()) throw ContractViolation("exponent length does not match ring");
      p.add_term(e, c);
    }
    return p;
  }

  const Ring& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (int e : terms_.begin()->first)
      if (e) return false;
    return true;
  }
  Scalar constant_term() const {
    for (const auto& [e, c] : terms_)
      if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; })) return c;
    return Scalar(0);
  }

  int total_degree() const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (int e : terms_.begin()->first) d += e;
    return d;
  }

  /// Leading (exponent, coefficient) in grlex.
  const std::pair<const Exponent, Scalar>& leading() const {
    if (terms_.empty()) throw ContractViolation("zero polynomial has no leading term");
    return *terms_.begin();
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a.with_ring(unify(a, b));
    for (const auto& [e, c] : b.with_ring(r.ring_).terms_) r.add_term(e, c);
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a.with_ring(unify(a, b));
    for (const auto& [e, c] : b.with_ring(r.ring_).terms_) r.add_term(e, -c);
    return r;
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Ring ring = unify(a, b);
    Poly x = a.with_ring(ring), y = b.with_ring(ring);
    Poly r;
    r.ring_ = ring;
    for (const auto& [ea, ca] : x.terms_)
      for (const auto& [eb, cb] : y.terms_) {
        Exponent e(ea.size());
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  /// Division by a nonzero constant only.
  friend Poly operator/(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (!b.is_constant()) throw ContractViolation("polynomial division needs divide_by");
    Scalar inv = b.constant_term().inverse();
    Poly r = a;
    for (auto& [e, c] : r.terms_) c *= inv;
    return r;
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly pow(int e) const {
    if (e < 0) throw ContractViolation("negative polynomial power");
    Poly r(ring_, Scalar(1)), base = *this;
    while (e) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return (a - b).is_zero(); }

  /// Replace bound variables by polynomials (simultaneously).
  Poly substitute(const std::map<std::string, Poly>& bindings) const;

  /// Evaluate with every variable bound to a scalar.
  Scalar evaluate(const std::map<std::string, Scalar>& values) const;

  /// p = q*n + r with no monomial of r divisible by the leading monomial of n.
  std::pair<Poly, Poly> divide_by(const Poly& n) const;

  std::string str() const;

 private:
  Ring ring_;
  Terms terms_;

  void add_term(const Exponent& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  static Ring unify(const Poly& a, const Poly& b) {
    if (!a.ring_) return b.ring_;
    if (!b.ring_ || a.ring_ == b.ring_) return a.ring_;
    if (a.ring_->vars() == b.ring_->vars()) return a.ring_;
    throw ContractViolation("polynomials from different rings");
  }

  Poly with_ring(const Ring& ring) const {
    if (ring_ == ring || !ring) return *this;
    Poly r;
    r.ring_ = ring;
    for (const auto& [e, c] : terms_) {
      Exponent x = e;
      x.resize(ring->size(), 0);
      r.terms_.emplace(std::move(x), c);
    }
    return r;
  }
};

inline Poly Poly::substitute(const std::map<std::string, Poly>& bindings) const {
  if (bindings.empty()) return *this;
  if (!ring_) return *this;
  std::vector<std::pair<std::size_t, const Poly*>> bound;
  for (const auto& [name, value] : bindings) bound.emplace_back(ring_->index(name), &value);
  Poly result(ring_, Scalar(0));
  // cache powers of each bound value
  std::map<std::pair<std::size_t, int>, Poly> powers;
  auto power_of = [&](std::size_t slot, int e) -> const Poly& {
    auto key = std::make_pair(slot, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    return powers.emplace(key, bound[slot].second->pow(e)).first->second;
  };
  for (const auto& [e, c] : terms_) {
    Exponent rest = e;
    for (const auto& [idx, value] : bound) rest[idx] = 0;
    Poly term;
    term.ring_ = ring_;
    term.terms_.emplace(rest, c);
    for (std::size_t s = 0; s < bound.size(); ++s) {
      int k = e[bound[s].first];
      if (k) term *= power_of(s, k);
    }
    result += term;
  }
  return result;
}

inline Scalar Poly::evaluate(const std::map<std::string, Scalar>& values) const {
  if (!ring_) return constant_term();
  std::vector<Scalar> vals(ring_->size());
  std::vector<bool> have(ring_->size(), false);
  for (const auto& [name, v] : values) {
    std::size_t k = ring_->index(name);
    vals[k] = v;
    have[k] = true;
  }
  Scalar acc(0);
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (!e[k]) continue;
      if (!have[k]) throw UnknownVariable("no value for '" + ring_->vars()[k] + "'");
      t *= vals[k].pow(e[k]);
    }
    acc += t;
  }
  return acc;
}

inline std::pair<Poly, Poly> Poly::divide_by(const Poly& n) const {
  if (n.is_zero()) throw DivisionByZero("division by the zero polynomial");
  Ring ring = unify(*this, n);
  Poly p = with_ring(ring);
  Poly divisor = n.with_ring(ring);
  std::size_t nv = ring ? ring->size() : 0;
  Exponent lm = divisor.leading().first;
  lm.resize(nv, 0);
  Scalar lc_inv = divisor.leading().second.inverse();
  Poly q(ring, Scalar(0)), r(ring, Scalar(0));
  q.ring_ = r.ring_ = ring;
  while (!p.is_zero()) {
    Exponent e = p.terms_.begin()->first;
    Scalar c = p.terms_.begin()->second;
    e.resize(nv, 0);
    bool divisible = true;
    for (std::size_t k = 0; k < nv; ++k)
      if (e[k] < lm[k]) divisible = false;
    if (divisible) {
      Exponent qe(nv);
      for (std::size_t k = 0; k < nv; ++k) qe[k] = e[k] - lm[k];
      Poly t;
      t.ring_ = ring;
      t.terms_.emplace(qe, c * lc_inv);
      q += t;
      p -= t * divisor;
    } else {
      Poly t;
      t.ring_ = ring;
      t.terms_.emplace(e, c);
      r += t;
      p -= t;
    }
  }
  return {q, r};
}

namespace detail {

inline std::string coefficient_text(const Scalar& c, bool& negative) {
  negative = false;
  if (c.is_base()) {
    const GaussQ& z = c.base_value();
    if (sgn(z.im()) == 0) {
      negative = sgn(z.re()) < 0;
      return negative ? mpq_class(-z.re()).get_str() : z.re().get_str();
    }
    if (sgn(z.re()) == 0) {
      negative = sgn(z.im()) < 0;
      mpq_class a = negative ? mpq_class(-z.im()) : z.im();
      return a == 1 ? std::string("i") : a.get_str() + "*i";
    }
  }
  return "(" + c.str() + ")";
}

}  // namespace detail

/// Terms in ascending grlex order, e.g. "1 + a2*p2^2 + a3*p3^2".
inline std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (!e[k]) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->vars()[k];
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    bool neg = false;
    std::string coef = detail::coefficient_text(c, neg);
    std::string body;
    if (mono.empty())
      body = coef;
    else if (coef == "1")
      body = mono;
    else
      body = coef + "*" + mono;
    if (first)
      out += neg ? "-" + body : body;
    else
      out += neg ? " - " + body : " + " + body;
    first = false;
  }
  return out;
}

}  // namespace d4vgit
