#pragma once

#include <cstdint>
#include <random>

#include "galorb/galilean.hpp"

namespace galorb {

/**
 * Seeded generator of small random rationals and structured matrices.
 *
 * Only the raw engine output is used (no std distributions), so a seed gives
 * the same stream on every platform. `scale` bounds numerators and
 * denominators; shrinking it gives simpler counterexamples.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed, long scale = 3) : eng_(seed), scale_(scale < 1 ? 1 : scale) {}

  long scale() const { return scale_; }

  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(eng_() % span);
  }

  bool coin() { return (eng_() & 1u) != 0; }

  Rational rational() { return Rational(integer(-scale_, scale_), integer(1, scale_)); }

  Rational nonzero() {
    for (;;) {
      Rational r = rational();
      if (!r.is_zero()) return r;
    }
  }

  Mat matrix(std::size_t r, std::size_t c) {
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rational();
    return m;
  }

  Mat vector(std::size_t d) { return matrix(d, 1); }

  Mat nonzero_vector(std::size_t d) {
    for (;;) {
      Mat v = vector(d);
      if (!v.is_zero()) return v;
    }
  }

  Mat invertible(std::size_t d) {
    for (;;) {
      Mat m = matrix(d, d);
      if (!determinant(m).is_zero()) return m;
    }
  }

  /// Random element of o(gram): X = gram⁻¹ S with S skew-symmetric.
  Mat skew(const Mat& gram) {
    std::size_t d = gram.rows();
    Mat s(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) {
        s(i, j) = rational();
        s(j, i) = -s(i, j);
      }
    return inverse(gram) * s;
  }

  /// Random element of O(gram): Cayley transform of a random skew map, sometimes times a reflection.
  Mat orthogonal(const Mat& gram) {
    std::size_t d = gram.rows();
    Mat id = Mat::identity(d);
    Mat p;
    for (;;) {
      Mat a = skew(gram);
      auto inv = try_inverse(id - a);
      if (!inv) continue;
      p = *inv * (id + a);
      break;
    }
    if (d > 0 && coin()) {
      for (;;) {
        Mat u = nonzero_vector(d);
        Rational q = (u.transpose() * gram * u)(0, 0);
        if (q.is_zero()) continue;
        p = (id - (Rational(2) / q) * (u * (u.transpose() * gram))) * p;
        break;
      }
    }
    return p;
  }

 private:
  std::mt19937_64 eng_;
  long scale_;
};

/// K̃ block of a FULL space.
inline Mat gram_tilde_of(const InnerProductSpace& s) { return s.gram.block(1, 1, s.n(), s.n()); }

/// Stabilizer element of O(V,K) fixing e_{n+2}, assembled from P̃ ∈ O(K̃) and d̃.
inline Mat stabilizer_orthogonal(const InnerProductSpace& s, const Mat& pt, const Mat& dt) {
  std::size_t n = s.n();
  Mat kt = gram_tilde_of(s);
  Mat p(n + 2, n + 2);
  p(0, 0) = 1;
  p.set_block(1, 0, dt);
  p.set_block(1, 1, pt);
  p(n + 1, 0) = -(dt.transpose() * kt * dt)(0, 0) / Rational(2);
  p.set_block(n + 1, 1, -(dt.transpose() * kt * pt));
  p(n + 1, n + 1) = 1;
  return p;
}

inline GroupElement random_group(Rng& rng, const InnerProductSpace& s) {
  return make_group(s, rng.orthogonal(s.gram), rng.vector(s.dim));
}

inline AlgebraElement random_algebra(Rng& rng, const InnerProductSpace& s) {
  return make_algebra(s, rng.skew(s.gram), rng.vector(s.dim));
}

inline GroupElement random_stabilizer_group(Rng& rng, const InnerProductSpace& s) {
  std::size_t n = s.n();
  Mat P = stabilizer_orthogonal(s, rng.orthogonal(gram_tilde_of(s)), rng.vector(n));
  Mat p = rng.vector(s.dim);
  p[0] = 0;
  return make_group(s, P, p);
}

inline AlgebraElement random_stabilizer_algebra(Rng& rng, const InnerProductSpace& s) {
  std::size_t n = s.n();
  Mat X(s.dim, s.dim);
  X.set_block(1, 1, rng.skew(gram_tilde_of(s)));
  Mat dt(s.dim, 1);
  dt.set_block(1, 0, rng.vector(n));
  X += lift(s, dt, Mat::unit(s.dim, s.dim - 1));
  Mat x = rng.vector(s.dim);
  x[0] = 0;
  return make_algebra(s, X, x);
}

}  // namespace galorb
