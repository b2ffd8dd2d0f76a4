#pragma once

// Small fixed-size vectors and matrices over any commutative ring type T
// (Scalar for points, Poly for symbolic checks).

#include <array>
#include <cstddef>
#include <string>

#include "d4vgit/errors.hpp"
#include "d4vgit/field.hpp"

namespace d4vgit {

template <class T, std::size_t N>
using Vec = std::array<T, N>;

template <class T, std::size_t R, std::size_t C>
struct Mat {
  std::array<std::array<T, C>, R> a{};

  static constexpr std::size_t rows = R;
  static constexpr std::size_t cols = C;

  std::array<T, C>& operator[](std::size_t i) { return a[i]; }
  const std::array<T, C>& operator[](std::size_t i) const { return a[i]; }

  static Mat zero() {
    Mat m;
    for (auto& row : m.a) row.fill(T(0));
    return m;
  }
  static Mat identity() {
    static_assert(R == C);
    Mat m = zero();
    for (std::size_t i = 0; i < R; ++i) m.a[i][i] = T(1);
    return m;
  }

  Mat<T, C, R> transpose() const {
    Mat<T, C, R> t;
    for (std::size_t i = 0; i < R; ++i)
      for (std::size_t j = 0; j < C; ++j) t[j][i] = a[i][j];
    return t;
  }

  friend bool operator==(const Mat& x, const Mat& y) {
    for (std::size_t i = 0; i < R; ++i)
      for (std::size_t j = 0; j < C; ++j)
        if (!(x[i][j] == y[i][j])) return false;
    return true;
  }
};

template <class T>
using Mat2 = Mat<T, 2, 2>;
template <class T>
using Mat3 = Mat<T, 3, 3>;

template <class T, std::size_t R, std::size_t C>
Mat<T, R, C> operator+(const Mat<T, R, C>& x, const Mat<T, R, C>& y) {
  Mat<T, R, C> m;
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) m[i][j] = x[i][j] + y[i][j];
  return m;
}

template <class T, std::size_t R, std::size_t C>
Mat<T, R, C> operator-(const Mat<T, R, C>& x, const Mat<T, R, C>& y) {
  Mat<T, R, C> m;
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) m[i][j] = x[i][j] - y[i][j];
  return m;
}

template <class T, std::size_t R, std::size_t C>
Mat<T, R, C> operator*(const T& s, const Mat<T, R, C>& x) {
  Mat<T, R, C> m;
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) m[i][j] = s * x[i][j];
  return m;
}

template <class T, std::size_t R, std::size_t K, std::size_t C>
Mat<T, R, C> operator*(const Mat<T, R, K>& x, const Mat<T, K, C>& y) {
  Mat<T, R, C> m;
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) {
      T acc(0);
      for (std::size_t k = 0; k < K; ++k) acc += x[i][k] * y[k][j];
      m[i][j] = acc;
    }
  return m;
}

template <class T, std::size_t R, std::size_t C>
Vec<T, R> operator*(const Mat<T, R, C>& x, const Vec<T, C>& v) {
  Vec<T, R> out;
  for (std::size_t i = 0; i < R; ++i) {
    T acc(0);
    for (std::size_t k = 0; k < C; ++k) acc += x[i][k] * v[k];
    out[i] = acc;
  }
  return out;
}

// row vector times matrix
template <class T, std::size_t R, std::size_t C>
Vec<T, C> operator*(const Vec<T, R>& v, const Mat<T, R, C>& x) {
  Vec<T, C> out;
  for (std::size_t j = 0; j < C; ++j) {
    T acc(0);
    for (std::size_t k = 0; k < R; ++k) acc += v[k] * x[k][j];
    out[j] = acc;
  }
  return out;
}

template <class T, std::size_t N>
Vec<T, N> operator+(const Vec<T, N>& x, const Vec<T, N>& y) {
  Vec<T, N> out;
  for (std::size_t k = 0; k < N; ++k) out[k] = x[k] + y[k];
  return out;
}

template <class T, std::size_t N>
Vec<T, N> operator-(const Vec<T, N>& x, const Vec<T, N>& y) {
  Vec<T, N> out;
  for (std::size_t k = 0; k < N; ++k) out[k] = x[k] - y[k];
  return out;
}

template <class T, std::size_t N>
Vec<T, N> scale(const T& s, const Vec<T, N>& x) {
  Vec<T, N> out;
  for (std::size_t k = 0; k < N; ++k) out[k] = s * x[k];
  return out;
}

template <class T, std::size_t N>
T dot(const Vec<T, N>& x, const Vec<T, N>& y) {
  T acc(0);
  for (std::size_t k = 0; k < N; ++k) acc += x[k] * y[k];
  return acc;
}

template <class T, std::size_t N>
bool is_zero_vec(const Vec<T, N>& x) {
  for (const auto& c : x)
    if (!c.is_zero()) return false;
  return true;
}

template <class T>
Vec<T, 3> cross(const Vec<T, 3>& u, const Vec<T, 3>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

template <class T>
T det(const Mat2<T>& m) {
  return m[0][0] * m[1][1] - m[0][1] * m[1][0];
}

template <class T>
T det(const Mat3<T>& m) {
  return dot(m[0], cross(m[1], m[2]));
}

template <class T>
Mat2<T> adjugate(const Mat2<T>& m) {
  Mat2<T> r;
  r[0][0] = m[1][1];
  r[0][1] = -m[0][1];
  r[1][0] = -m[1][0];
  r[1][1] = m[0][0];
  return r;
}

/// Cofactor matrix: row i is the cross product of the other two rows (cyclic).
template <class T>
Mat3<T> cofactor(const Mat3<T>& m) {
  Mat3<T> c;
  c[0] = cross(m[1], m[2]);
  c[1] = cross(m[2], m[0]);
  c[2] = cross(m[0], m[1]);
  return c;
}

template <class T>
Mat3<T> adjugate(const Mat3<T>& m) {
  return cofactor(m).transpose();
}

template <class T, std::size_t N>
Mat<T, N, N> inverse(const Mat<T, N, N>& m) {
  T d = det(m);
  if (d.is_zero()) throw DivisionByZero("matrix is singular");
  T dinv = T(1) / d;
  return dinv * adjugate(m);
}

/// 2-vector and 2x2 matrix shorthands.
template <class T>
Mat2<T> mat2(T a, T b, T c, T d) {
  Mat2<T> m;
  m[0] = {a, b};
  m[1] = {c, d};
  return m;
}

template <class T>
Mat2<T> from_columns(const Vec<T, 2>& c0, const Vec<T, 2>& c1) {
  return mat2(c0[0], c1[0], c0[1], c1[1]);
}

template <class T>
Vec<T, 2> column(const Mat2<T>& m, std::size_t j) {
  return {m[0][j], m[1][j]};
}

template <class T>
T det2(const Vec<T, 2>& u, const Vec<T, 2>& v) {
  return u[0] * v[1] - u[1] * v[0];
}

/// Action of g on Sym^2 V in the ordered basis (e1^2, e1e2, e2^2), where
/// e1e2 = e1(x)e2 + e2(x)e1.  Column j is the image of the j-th basis vector.
template <class T>
Mat3<T> sym_square(const Mat2<T>& g) {
  const T& a = g[0][0];
  const T& b = g[0][1];
  const T& c = g[1][0];
  const T& d = g[1][1];
  Mat3<T> s;
  s[0] = {a * a, T(2) * a * b, b * b};
  s[1] = {a * c, a * d + b * c, b * d};
  s[2] = {c * c, T(2) * c * d, d * d};
  return s;
}

/// Coordinates of v^2 = v (x) v in (e1^2, e1e2, e2^2).
template <class T>
Vec<T, 3> sym_square(const Vec<T, 2>& v) {
  return {v[0] * v[0], v[0] * v[1], v[1] * v[1]};
}

template <class T, std::size_t R, std::size_t C>
std::string to_string(const Mat<T, R, C>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < R; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < C; ++j) {
      if (j) out += ", ";
      out += m[i][j].str();
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace d4vgit
