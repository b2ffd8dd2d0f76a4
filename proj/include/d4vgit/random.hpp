#pragma once

// Seeded sampling of small-height Gaussian rationals and derived objects.

#include <cstdint>
#include <random>

#include "d4vgit/field.hpp"
#include "d4vgit/git.hpp"
#include "d4vgit/linalg.hpp"

namespace d4vgit {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, long height = 5) : rng_(seed), height_(height) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  mpq_class rational() {
    long num = integer(-height_, height_);
    long den = integer(1, height_);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  /// Gaussian rational; roughly a third of the samples are real.
  Scalar scalar() {
    if (integer(0, 2) == 0) return Scalar(rational());
    return Scalar(GaussQ(rational(), rational()));
  }

  Scalar nonzero() {
    for (;;) {
      Scalar s = scalar();
      if (!s.is_zero()) return s;
    }
  }

  Mat2<Scalar> mat2() {
    Mat2<Scalar> m;
    for (auto& row : m.a)
      for (auto& c : row) c = scalar();
    return m;
  }

  Mat2<Scalar> invertible2() {
    for (;;) {
      Mat2<Scalar> m = mat2();
      if (!det(m).is_zero()) return m;
    }
  }

  GroupElement group_element() { return GroupElement({nonzero(), nonzero(), nonzero()}, invertible2()); }

  PointHV point() {
    PointHV p;
    for (int i = 0; i < 3; ++i) {
      p.alpha[i] = scalar();
      p.B[i] = {scalar(), scalar(), scalar()};
    }
    p.beta = scalar();
    p.x = {scalar(), scalar()};
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  long height_;
};

}  // namespace d4vgit
