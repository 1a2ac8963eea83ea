#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "galorb/matrix.hpp"

namespace galorb {

enum class SpaceKind { TILDE, FULL, EXTENDED };

/**
 * Finite-dimensional rational space with a symmetric Gram matrix.
 *
 * FULL spaces have basis e1, e2..e_{n+1}, e_{n+2} with e1, e_{n+2} a hyperbolic
 * pair; EXTENDED spaces prepend a kernel vector e0.
 */
struct InnerProductSpace {
  std::size_t dim = 0;
  Mat gram;
  SpaceKind kind = SpaceKind::TILDE;

  /// n such that the FULL space has dimension n + 2.
  std::size_t n() const {
    switch (kind) {
      case SpaceKind::TILDE: return dim;
      case SpaceKind::FULL: return dim - 2;
      case SpaceKind::EXTENDED: return dim - 3;
    }
    return dim;
  }

  friend bool operator==(const InnerProductSpace& a, const InnerProductSpace& b) {
    return a.dim == b.dim && a.kind == b.kind && a.gram == b.gram;
  }
};

struct SignatureReport {
  std::size_t positives = 0, negatives = 0, zeros = 0;
  friend bool operator==(const SignatureReport&, const SignatureReport&) = default;
};

struct SpaceChain {
  InnerProductSpace tilde, full, extended;
};

/// Checks gram_tilde and builds the spaces Ṽ, V, V∨ with Gram matrices K̃, K, K∨.
inline SpaceChain build_chain(std::size_t n, const Mat& gram_tilde) {
  if (gram_tilde.rows() != n || gram_tilde.cols() != n)
    fail(ErrorCode::DimensionMismatch, "gram_tilde must be " + std::to_string(n) + "x" + std::to_string(n));
  if (!is_symmetric(gram_tilde)) fail(ErrorCode::InvalidArgument, "gram_tilde is not symmetric");
  if (!try_inverse(gram_tilde)) fail(ErrorCode::InvalidArgument, "gram_tilde is singular");
  if (!(gram_tilde * gram_tilde == Mat::identity(n)))
    fail(ErrorCode::InvalidArgument, "gram_tilde is not involutive (gram_tilde^2 != I)");

  Mat k(n + 2, n + 2);
  k(0, n + 1) = 1;
  k(n + 1, 0) = 1;
  k.set_block(1, 1, gram_tilde);
  Mat kv(n + 3, n + 3);
  kv.set_block(1, 1, k);
  return {{n, gram_tilde, SpaceKind::TILDE}, {n + 2, k, SpaceKind::FULL}, {n + 3, kv, SpaceKind::EXTENDED}};
}

/// The FULL space V for K̃ = I_n.
inline InnerProductSpace standard_space(std::size_t n) { return build_chain(n, Mat::identity(n)).full; }

/// Space with an arbitrary symmetric Gram (used for subspaces); kind TILDE.
inline InnerProductSpace make_space(const Mat& gram) {
  if (!is_symmetric(gram)) fail(ErrorCode::InvalidArgument, "Gram matrix is not symmetric");
  return {gram.rows(), gram, SpaceKind::TILDE};
}

inline void check_vector(const InnerProductSpace& s, const Mat& u) {
  if (u.rows() != s.dim || u.cols() != 1)
    fail(ErrorCode::DimensionMismatch,
         "expected a column vector of length " + std::to_string(s.dim));
}

inline void check_square(const InnerProductSpace& s, const Mat& m) {
  if (m.rows() != s.dim || m.cols() != s.dim)
    fail(ErrorCode::DimensionMismatch, "expected a " + std::to_string(s.dim) + "x" + std::to_string(s.dim) + " matrix");
}

/// u* = uᵀK.
inline Mat star(const InnerProductSpace& s, const Mat& u) {
  check_vector(s, u);
  return u.transpose() * s.gram;
}

/// The form K(u, v) = uᵀKv.
inline Rational form(const InnerProductSpace& s, const Mat& u, const Mat& v) {
  check_vector(s, u);
  check_vector(s, v);
  return (u.transpose() * s.gram * v)(0, 0);
}

/// L_{u,v} = u ⊗ v* − v ⊗ u*.
inline Mat lift(const InnerProductSpace& s, const Mat& u, const Mat& v) {
  return u * star(s, v) - v * star(s, u);
}

inline bool is_orthogonal(const InnerProductSpace& s, const Mat& p) {
  check_square(s, p);
  if (!(p.transpose() * s.gram * p == s.gram)) return false;
  if (s.kind == SpaceKind::EXTENDED && !(p.col(0) == Mat::unit(s.dim, 0))) return false;
  return true;
}

inline bool is_skew_adjoint(const InnerProductSpace& s, const Mat& x) {
  check_square(s, x);
  if (!(x.transpose() * s.gram + s.gram * x).is_zero()) return false;
  if (s.kind == SpaceKind::EXTENDED && !x.col(0).is_zero()) return false;
  return true;
}

/// QᵀGQ = D with D diagonal and Q invertible.
struct Congruence {
  Mat Q;
  std::vector<Rational> diagonal;
};

/**
 * Symmetric Gaussian congruence. Zero pivots are repaired by adding a column
 * with a nonzero off-diagonal entry, which makes the diagonal entry 2G(i,j).
 */
inline Congruence diagonalize(const Mat& g) {
  if (!is_symmetric(g)) fail(ErrorCode::InvalidArgument, "diagonalize: matrix is not symmetric");
  std::size_t n = g.rows();
  Mat a = g;
  Mat q = Mat::identity(n);
  // Simultaneous column op (on q and a) and matching row op on a.
  auto add_col = [&](std::size_t dst, std::size_t src, const Rational& f) {
    for (std::size_t i = 0; i < n; ++i) a(i, dst) += f * a(i, src);
    for (std::size_t j = 0; j < n; ++j) a(dst, j) += f * a(src, j);
    for (std::size_t i = 0; i < n; ++i) q(i, dst) += f * q(i, src);
  };
  auto swap_idx = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
    for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(q(k, i), q(k, j));
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, p).is_zero()) ++p;
    if (p == n) {
      bool repaired = false;
      for (std::size_t i = k; i < n && !repaired; ++i)
        for (std::size_t j = i + 1; j < n && !repaired; ++j)
          if (!a(i, j).is_zero()) {
            add_col(i, j, Rational(1));
            p = i;
            repaired = true;
          }
      if (!repaired) break;
    }
    swap_idx(k, p);
    for (std::size_t j = k + 1; j < n; ++j) {
      if (a(k, j).is_zero()) continue;
      add_col(j, k, -a(k, j) / a(k, k));
    }
  }
  Congruence c{q, {}};
  for (std::size_t i = 0; i < n; ++i) c.diagonal.push_back(a(i, i));
  return c;
}

inline SignatureReport signature_of(const Mat& gram) {
  SignatureReport r;
  for (const auto& d : diagonalize(gram).diagonal) {
    if (d.sign() > 0) ++r.positives;
    else if (d.sign() < 0) ++r.negatives;
    else ++r.zeros;
  }
  return r;
}

inline SignatureReport signature(const InnerProductSpace& s) { return signature_of(s.gram); }

/// Reflection x ↦ x − 2K(x,u)/K(u,u)·u in an anisotropic vector u.
inline Mat reflection(const InnerProductSpace& s, const Mat& u) {
  Rational q = form(s, u, u);
  if (q.is_zero()) fail(ErrorCode::InvalidArgument, "reflection in an isotropic vector");
  return Mat::identity(s.dim) - (Rational(2) / q) * (u * star(s, u));
}

/**
 * An isometry of a FULL space sending the nonzero isotropic vector y to e_{n+2}.
 *
 * Built from at most two reflections: for isotropic a, b with K(a,b) ≠ 0 the
 * reflection in a − b swaps them. An intermediate isotropic vector w with
 * K(y,w) ≠ 0 and K(w,e_{n+2}) ≠ 0 is used when y ⊥ e_{n+2}.
 */
inline Mat witt_map(const InnerProductSpace& s, const Mat& y) {
  if (s.kind != SpaceKind::FULL) fail(ErrorCode::InvalidArgument, "witt_map requires a FULL space");
  check_vector(s, y);
  if (y.is_zero()) fail(ErrorCode::InvalidArgument, "witt_map: y is zero");
  if (!form(s, y, y).is_zero()) fail(ErrorCode::InvalidArgument, "witt_map: y is not isotropic");

  const std::size_t d = s.dim;
  const Mat e = Mat::unit(d, d - 1), e1 = Mat::unit(d, 0);
  auto swap_to = [&](const Mat& a, const Mat& b) -> Mat {
    if (a == b) return Mat::identity(d);
    return reflection(s, a - b);
  };

  Mat p;
  if (!form(s, y, e).is_zero()) {
    p = swap_to(y, e);
  } else {
    Mat w;
    if (!form(s, y, e1).is_zero()) {
      w = e1;
    } else {
      // hyperbolic partner z' of y, then w = e1 + t z' + r y isotropic with K(y,w) = t
      std::size_t i = 0;
      Mat ky = s.gram * y;
      while (ky[i].is_zero()) ++i;
      Mat z = Mat::unit(d, i) * (Rational(1) / ky[i]);
      Mat zp = z - (form(s, z, z) / Rational(2)) * y;
      Rational t = (Rational(1) + zp[0]).is_zero() ? Rational(2) : Rational(1);
      Rational r = -form(s, e1, zp);
      w = e1 + t * zp + r * y;
    }
    p = swap_to(w, e) * swap_to(y, w);
  }
  if (!is_orthogonal(s, p) || !(p * y == e))
    fail(ErrorCode::InvalidArgument, "witt_map: internal self-check failed");
  return p;
}

/// Basis (columns) of {v in span(T) : K(s, v) = 0 for s in span(S)}.
inline Mat orthogonal_complement(const Mat& gram, const Mat& sub, const Mat& within) {
  if (sub.cols() == 0) return within;
  Mat c = nullspace(sub.transpose() * gram * within);
  return within * c;
}

}  // namespace galorb
