#pragma once

#include <vector>

#include "galorb/inner_product.hpp"

namespace galorb {

/// Element (P, p*) of O(V∨,K∨) in semidirect coordinates; p is stored as a vector.
struct GroupElement {
  InnerProductSpace space;
  Mat P;
  Mat p;
};

/// Element (X, x*) of o(V∨,K∨) in semidirect coordinates.
struct AlgebraElement {
  InnerProductSpace space;
  Mat X;
  Mat x;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.space == b.space && a.X == b.X && a.x == b.x;
  }
};

struct StabilizerFlag {
  bool in_group_stabilizer = false;
  bool in_algebra_stabilizer = false;
};

namespace detail {

inline void check_full(const InnerProductSpace& s) {
  if (s.kind != SpaceKind::FULL) fail(ErrorCode::InvalidArgument, "expected a FULL space");
}

inline void check_same(const InnerProductSpace& a, const InnerProductSpace& b) {
  if (!(a == b)) fail(ErrorCode::DimensionMismatch, "elements live on different spaces");
}

/// Vector whose star is the given row: K⁻¹ rowᵀ = K rowᵀ because K² = I.
inline Mat unstar(const InnerProductSpace& s, const Mat& row) { return s.gram * row.transpose(); }

}  // namespace detail

inline GroupElement make_group(const InnerProductSpace& s, const Mat& P, const Mat& p) {
  detail::check_full(s);
  check_vector(s, p);
  if (!is_orthogonal(s, P)) fail(ErrorCode::InvalidArgument, "P is not K-orthogonal");
  return {s, P, p};
}

inline AlgebraElement make_algebra(const InnerProductSpace& s, const Mat& X, const Mat& x) {
  detail::check_full(s);
  check_vector(s, x);
  if (!is_skew_adjoint(s, X)) fail(ErrorCode::InvalidArgument, "X is not K-skew-adjoint");
  return {s, X, x};
}

inline GroupElement group_identity(const InnerProductSpace& s) {
  return make_group(s, Mat::identity(s.dim), Mat(s.dim, 1));
}

inline AlgebraElement algebra_zero(const InnerProductSpace& s) {
  return make_algebra(s, Mat(s.dim, s.dim), Mat(s.dim, 1));
}

/// (P, p*)·(P̄, p̄*) = (P P̄, p* P̄ + p̄*).
inline GroupElement compose(const GroupElement& g, const GroupElement& h) {
  detail::check_same(g.space, h.space);
  Mat row = star(g.space, g.p) * h.P + star(h.space, h.p);
  return {g.space, g.P * h.P, detail::unstar(g.space, row)};
}

/// (P, p*)⁻¹ = (P⁻¹, −(Pp)*).
inline GroupElement inverse(const GroupElement& g) { return {g.space, inverse(g.P), -(g.P * g.p)}; }

/// Block matrix [[1, p*], [0, P]] acting on V∨.
inline Mat embed_group(const GroupElement& g) {
  std::size_t d = g.space.dim;
  Mat m(d + 1, d + 1);
  m(0, 0) = 1;
  m.set_block(0, 1, star(g.space, g.p));
  m.set_block(1, 1, g.P);
  return m;
}

/// Block matrix [[0, x*], [0, X]] acting on V∨.
inline Mat embed_algebra(const AlgebraElement& a) {
  std::size_t d = a.space.dim;
  Mat m(d + 1, d + 1);
  m.set_block(0, 1, star(a.space, a.x));
  m.set_block(1, 1, a.X);
  return m;
}

/// Inverse of embed_algebra for matrices of the right block shape.
inline AlgebraElement unembed_algebra(const InnerProductSpace& s, const Mat& m) {
  std::size_t d = s.dim;
  if (m.rows() != d + 1 || m.cols() != d + 1) fail(ErrorCode::DimensionMismatch, "unembed: wrong size");
  if (!m.col(0).is_zero()) fail(ErrorCode::InvalidArgument, "unembed: first column must vanish");
  return {s, m.block(1, 1, d, d), detail::unstar(s, m.block(0, 1, 1, d))};
}

inline GroupElement unembed_group(const InnerProductSpace& s, const Mat& m) {
  std::size_t d = s.dim;
  if (m.rows() != d + 1 || m.cols() != d + 1) fail(ErrorCode::DimensionMismatch, "unembed: wrong size");
  if (!(m.col(0) == Mat::unit(d + 1, 0))) fail(ErrorCode::InvalidArgument, "unembed: first column must be e0");
  return {s, m.block(1, 1, d, d), detail::unstar(s, m.block(0, 1, 1, d))};
}

/// Lie bracket, pulled back from the matrix commutator.
inline AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b) {
  detail::check_same(a.space, b.space);
  Mat ea = embed_algebra(a), eb = embed_algebra(b);
  return unembed_algebra(a.space, ea * eb - eb * ea);
}

/// Ad_(P,p*)(X, x*) = (P X P⁻¹, −(P X p)* + (P x)*).
inline AlgebraElement ad(const GroupElement& g, const AlgebraElement& a) {
  detail::check_same(g.space, a.space);
  Mat pinv = inverse(g.P);
  return {a.space, g.P * a.X * pinv, -(g.P * a.X * g.p) + g.P * a.x};
}

/// Twisted adjoint (P X P⁻¹ + L_{Pp,Px}, (Px)*).
inline AlgebraElement twisted_ad(const GroupElement& g, const AlgebraElement& a) {
  detail::check_same(g.space, a.space);
  Mat px = g.P * a.x;
  return {a.space, g.P * a.X * inverse(g.P) + lift(a.space, g.P * g.p, px), px};
}

/// ½ tr(X X̄) + x̄ᵀ K x.
inline Rational pairing(const AlgebraElement& a, const AlgebraElement& b) {
  detail::check_same(a.space, b.space);
  return (a.X * b.X).trace() / Rational(2) + form(a.space, b.x, a.x);
}

inline StabilizerFlag stabilizer_flags(const GroupElement& g) {
  std::size_t d = g.space.dim;
  StabilizerFlag f;
  f.in_group_stabilizer = g.P.col(d - 1) == Mat::unit(d, d - 1) && g.p[0].is_zero();
  return f;
}

inline StabilizerFlag stabilizer_flags(const AlgebraElement& a) {
  std::size_t d = a.space.dim;
  StabilizerFlag f;
  f.in_algebra_stabilizer = a.X.col(d - 1).is_zero() && a.x[0].is_zero();
  return f;
}

/**
 * Gal_n matrix [[1, p̃*, p_{n+2}], [0, P̃, d̃], [0, 0, 1]] of a stabilizer element,
 * where d̃ and P̃ are the middle blocks of the first column and of P.
 */
inline Mat gal_matrix(const GroupElement& g) {
  if (!stabilizer_flags(g).in_group_stabilizer)
    fail(ErrorCode::InvalidArgument, "gal_matrix: element is not in the stabilizer of e_{n+2}");
  std::size_t n = g.space.n();
  Mat kt = g.space.gram.block(1, 1, n, n);
  Mat m(n + 2, n + 2);
  m(0, 0) = 1;
  m.set_block(0, 1, g.p.block(1, 0, n, 1).transpose() * kt);
  m(0, n + 1) = g.p[n + 1];
  m.set_block(1, 1, g.P.block(1, 1, n, n));
  m.set_block(1, n + 1, g.P.block(1, 0, n, 1));
  m(n + 1, n + 1) = 1;
  return m;
}

/// Lie algebra analogue [[0, x̃*, x_{n+2}], [0, X̃, d̃], [0, 0, 0]].
inline Mat gal_algebra_matrix(const AlgebraElement& a) {
  if (!stabilizer_flags(a).in_algebra_stabilizer)
    fail(ErrorCode::InvalidArgument, "gal_algebra_matrix: element is not in the stabilizer subalgebra");
  std::size_t n = a.space.n();
  Mat kt = a.space.gram.block(1, 1, n, n);
  Mat m(n + 2, n + 2);
  m.set_block(0, 1, a.x.block(1, 0, n, 1).transpose() * kt);
  m(0, n + 1) = a.x[n + 1];
  m.set_block(1, 1, a.X.block(1, 1, n, n));
  m.set_block(1, n + 1, a.X.block(1, 0, n, 1));
  return m;
}

namespace detail {

/// Rows encoding XᵀK + KX = 0 on the row-major entries of X (d² unknowns).
inline Mat skew_constraints(const InnerProductSpace& s) {
  std::size_t d = s.dim;
  Mat c(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        c(i * d + j, k * d + i) += s.gram(k, j);  // (Xᵀ)_{ik} K_{kj}
        c(i * d + j, k * d + j) += s.gram(i, k);  // K_{ik} X_{kj}
      }
  return c;
}

inline std::vector<AlgebraElement> basis_from_kernel(const InnerProductSpace& s, const Mat& constraints) {
  std::size_t d = s.dim;
  Mat ker = nullspace(constraints);
  std::vector<AlgebraElement> out;
  for (std::size_t k = 0; k < ker.cols(); ++k) {
    Mat X(d, d), x(d, 1);
    for (std::size_t i = 0; i < d * d; ++i) X(i / d, i % d) = ker(i, k);
    for (std::size_t i = 0; i < d; ++i) x[i] = ker(d * d + i, k);
    out.push_back(make_algebra(s, X, x));
  }
  return out;
}

}  // namespace detail

/// Basis of o(V∨,K∨) from the exact kernel of the membership constraints.
inline std::vector<AlgebraElement> algebra_basis(const InnerProductSpace& s) {
  detail::check_full(s);
  std::size_t d = s.dim;
  Mat c = hcat(detail::skew_constraints(s), Mat(d * d, d));
  return detail::basis_from_kernel(s, c);
}

/// Basis of the stabilizer subalgebra of e_{n+2}: additionally X e_{n+2} = 0 and x₁ = 0.
inline std::vector<AlgebraElement> stabilizer_basis(const InnerProductSpace& s) {
  detail::check_full(s);
  std::size_t d = s.dim;
  Mat c = hcat(detail::skew_constraints(s), Mat(d * d, d));
  Mat extra(d + 1, d * d + d);
  for (std::size_t i = 0; i < d; ++i) extra(i, i * d + (d - 1)) = 1;
  extra(d, d * d) = 1;
  return detail::basis_from_kernel(s, vcat(c, extra));
}

}  // namespace galorb
