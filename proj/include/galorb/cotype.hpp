#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "galorb/galilean.hpp"
#include "galorb/polynomial.hpp"
#include "galorb/summand.hpp"

namespace galorb {

/// Special tuple (V, Y, y; K): a K-skew-adjoint Y and a marked vector y.
struct SpecialTuple {
  InnerProductSpace space;
  Mat Y;
  Mat y;

  friend bool operator==(const SpecialTuple& a, const SpecialTuple& b) {
    return a.space == b.space && a.Y == b.Y && a.y == b.y;
  }
};

/// Data (P, p, v, v0) of an equivalence of special tuples.
struct EquivalenceWitness {
  Mat P;
  Mat p;
  Mat v;
  Rational v0;
};

/// Plain pair (W, Z; G) with Z skew-adjoint for the Gram G of W.
struct TypePair {
  InnerProductSpace space;
  Mat Z;
};

inline SpecialTuple make_tuple(const InnerProductSpace& s, const Mat& Y, const Mat& y) {
  if (s.kind != SpaceKind::FULL) fail(ErrorCode::InvalidArgument, "special tuples live on a FULL space");
  check_vector(s, y);
  if (!is_skew_adjoint(s, Y)) fail(ErrorCode::InvalidArgument, "Y is not K-skew-adjoint");
  return {s, Y, y};
}

inline TypePair make_type_pair(const Mat& gram, const Mat& Z) {
  InnerProductSpace s = make_space(gram);
  if (!is_skew_adjoint(s, Z)) fail(ErrorCode::InvalidArgument, "Z is not skew-adjoint for the Gram matrix");
  if (!try_inverse(gram)) fail(ErrorCode::InvalidArgument, "Gram matrix of the type is degenerate");
  return {s, Z};
}

inline EquivalenceWitness identity_witness(const InnerProductSpace& s) {
  return {Mat::identity(s.dim), Mat(s.dim, 1), Mat(s.dim, 1), Rational()};
}

namespace detail {

inline Mat e_last(const InnerProductSpace& s) { return Mat::unit(s.dim, s.dim - 1); }
inline Mat e_first(const InnerProductSpace& s) { return Mat::unit(s.dim, 0); }

/// Middle block (coordinates 2..n+1) of a vector of V.
inline Mat middle(const InnerProductSpace& s, const Mat& v) { return v.block(1, 0, s.n(), 1); }

/// Vector of V with zero border coordinates and the given middle block.
inline Mat embed_middle(const InnerProductSpace& s, const Mat& vt) {
  Mat v(s.dim, 1);
  v.set_block(1, 0, vt);
  return v;
}

inline Mat embed_middle_op(const InnerProductSpace& s, const Mat& xt) {
  Mat m(s.dim, s.dim);
  m.set_block(1, 1, xt);
  return m;
}

inline Mat gram_tilde(const InnerProductSpace& s) { return s.gram.block(1, 1, s.n(), s.n()); }

inline Rational tilde_form(const InnerProductSpace& s, const Mat& a, const Mat& b) {
  return (a.transpose() * gram_tilde(s) * b)(0, 0);
}

/// K̃-orthogonal projector of Ṽ onto the complement of the span of the given pairwise orthogonal anisotropic vectors.
inline Mat compress_projector(const InnerProductSpace& s, const std::vector<Mat>& vs) {
  Mat kt = gram_tilde(s);
  Mat pi = Mat::identity(s.n());
  for (const auto& v : vs) pi -= (Rational(1) / tilde_form(s, v, v)) * (v * (v.transpose() * kt));
  return pi;
}

}  // namespace detail

/// Y′ = P(Y + L_{p,y})P⁻¹ − L_{v,e_{n+2}},  y′ = Py + v0·e_{n+2}.
inline SpecialTuple apply_equivalence(const SpecialTuple& t, const EquivalenceWitness& w) {
  const auto& s = t.space;
  check_vector(s, w.p);
  check_vector(s, w.v);
  if (!is_orthogonal(s, w.P)) fail(ErrorCode::InvalidArgument, "witness P is not K-orthogonal");
  Mat e = detail::e_last(s);
  if (!(w.P * e == e)) fail(ErrorCode::InvalidArgument, "witness P does not fix e_{n+2}");
  if (!w.p[0].is_zero()) fail(ErrorCode::InvalidArgument, "witness p has nonzero e1 coefficient");
  Mat Y = w.P * (t.Y + lift(s, w.p, t.y)) * inverse(w.P) - lift(s, w.v, e);
  Mat y = w.P * t.y + w.v0 * e;
  return {s, Y, y};
}

/// The parameter y1 (e1 coefficient of y).
inline Rational parameter(const SpecialTuple& t) { return t.y[0]; }

struct Standardized {
  SpecialTuple tuple;
  EquivalenceWitness witness;
};

/**
 * Case y1 ≠ 0: boost by d̃ = −ỹ/y1 and shift by v0 so that y′ = y1·e1.
 */
inline Standardized standardize_case1(const SpecialTuple& t) {
  const auto& s = t.space;
  Rational y1 = parameter(t);
  if (y1.is_zero()) fail(ErrorCode::InvalidArgument, "standardize_case1: parameter y1 is zero");
  std::size_t n = s.n();
  Mat dt = detail::middle(s, t.y) * (-Rational(1) / y1);
  Mat pt = Mat::identity(n);
  Mat P(s.dim, s.dim);
  {
    Mat kt = detail::gram_tilde(s);
    P(0, 0) = 1;
    P.set_block(1, 0, dt);
    P.set_block(1, 1, pt);
    P(n + 1, 0) = -(dt.transpose() * kt * dt)(0, 0) / Rational(2);
    P.set_block(n + 1, 1, -(dt.transpose() * kt * pt));
    P(n + 1, n + 1) = 1;
  }
  Rational v0 = -y1 * detail::tilde_form(s, dt, dt) / Rational(2) - t.y[n + 1];
  EquivalenceWitness w{P, Mat(s.dim, 1), Mat(s.dim, 1), v0};
  SpecialTuple out = apply_equivalence(t, w);
  if (!(out.y == y1 * detail::e_first(s)))
    throw std::logic_error("standardize_case1: self-check failed");
  return {out, w};
}

/// (Ṽ, Ỹ; K̃) of a standardized case-1 tuple.
inline TypePair associated_pair(const SpecialTuple& t) {
  const auto& s = t.space;
  Rational y1 = parameter(t);
  if (y1.is_zero() || !(t.y == y1 * detail::e_first(s)))
    fail(ErrorCode::InvalidArgument, "associated_pair: tuple is not standardized (y must be y1*e1, y1 != 0)");
  std::size_t n = s.n();
  return make_type_pair(detail::gram_tilde(s), t.Y.block(1, 1, n, n));
}

struct NonaffineSplit {
  int epsilon = 1;
  Rational alpha_sq;
  TypePair complement;  ///< (y^⊥, reduced Y restricted), coordinates in `basis`
  Mat basis;            ///< columns: basis of y^⊥ in V after the v0 shift
  Rational mu;          ///< K̃(ẽ, ẽ) for ẽ the middle block of Y e_{n+2}; zero when ẽ = 0
};

namespace detail {

/// Coordinates of Y restricted to an invariant subspace with basis columns B.
inline Mat restrict_operator(const Mat& Y, const Mat& B) {
  if (B.cols() == 0) return Mat();
  return coordinates(B, Y * B);
}

}  // namespace detail

/**
 * Subcase y1 = 0, yᵀKy ≠ 0.
 *
 * After y ↦ ỹ (shift by v0), write Y e_{n+2} = −a e_{n+2} + ẽ. The quantity
 * K̃(ẽ, ỹ) is invariant; the split below requires it to vanish. The gauge
 * removes the L_{e1,e}, L_{b̃,e} parts and every L_{ỹ,·}, L_{ẽ,·} part of the
 * middle block, leaving the canonical operator L_{ẽ,e1} + Π X̃ Π.
 */
inline NonaffineSplit classify_nonaffine(const SpecialTuple& t) {
  const auto& s = t.space;
  if (!parameter(t).is_zero()) fail(ErrorCode::InvalidArgument, "classify_nonaffine: parameter y1 is nonzero");
  if (t.y.is_zero()) fail(ErrorCode::InvalidArgument, "classify_nonaffine: y is zero");
  Rational q = form(s, t.y, t.y);
  if (q.is_zero()) fail(ErrorCode::InvalidArgument, "classify_nonaffine: y is isotropic (affine tuple)");
  std::size_t n = s.n();
  Mat yt = detail::middle(s, t.y);
  Mat et = detail::middle(s, t.Y * detail::e_last(s));
  Mat xt = t.Y.block(1, 1, n, n);
  Rational coupling = detail::tilde_form(s, et, yt);
  if (!coupling.is_zero())
    fail(ErrorCode::NonaffineScope,
         "nonaffine tuple with K(Y e_{n+2}, y) != 0: the core is not among the catalog cotypes");
  Rational mu = detail::tilde_form(s, et, et);
  if (!et.is_zero() && mu.is_zero())
    fail(ErrorCode::NonaffineScope, "nonaffine tuple with nonzero isotropic Y e_{n+2} component");

  std::vector<Mat> removed{yt};
  Mat yred(s.dim, s.dim);
  if (!et.is_zero()) {
    removed.push_back(et);
    yred += lift(s, detail::embed_middle(s, et), detail::e_first(s));
  }
  Mat pi = detail::compress_projector(s, removed);
  yred += detail::embed_middle_op(s, pi * xt * pi);

  // basis of ỹ^⊥: e1, the K̃-complement of ỹ in Ṽ, e_{n+2}
  Mat tilde_perp = orthogonal_complement(detail::gram_tilde(s), yt, Mat::identity(n));
  Mat basis = detail::e_first(s);
  for (std::size_t j = 0; j < tilde_perp.cols(); ++j) basis = hcat(basis, detail::embed_middle(s, tilde_perp.col(j)));
  basis = hcat(basis, detail::e_last(s));

  NonaffineSplit out;
  out.epsilon = q.sign();
  out.alpha_sq = abs(q);
  out.mu = mu;
  out.basis = basis;
  out.complement = make_type_pair(basis.transpose() * s.gram * basis, detail::restrict_operator(yred, basis));
  return out;
}

/**
 * Subcase y1 = 0, y ≠ 0, yᵀKy = 0: returns a tuple with y = e_{n+2}.
 *
 * For y ∈ span{e_{n+2}} this is the equivalence y ↦ y + v0 e_{n+2}. Otherwise
 * Y is conjugated by witt_map(y), which is an isometry of (V, K) but in general
 * not an element of the stabilizer.
 */
inline SpecialTuple standardize_affine(const SpecialTuple& t) {
  const auto& s = t.space;
  if (!parameter(t).is_zero()) fail(ErrorCode::InvalidArgument, "standardize_affine: parameter y1 is nonzero");
  if (t.y.is_zero()) fail(ErrorCode::InvalidArgument, "standardize_affine: y is zero");
  if (!form(s, t.y, t.y).is_zero()) fail(ErrorCode::InvalidArgument, "standardize_affine: y is not isotropic");
  Mat e = detail::e_last(s);
  if (detail::middle(s, t.y).is_zero()) {
    EquivalenceWitness w = identity_witness(s);
    w.v0 = Rational(1) - t.y[s.dim - 1];
    return apply_equivalence(t, w);
  }
  Mat P = witt_map(s, t.y);
  return {s, P * t.Y * inverse(P), e};
}

/// A type summand together with the basis (columns) of its block.
struct TypeBlock {
  Summand summand;
  Mat basis;
};

namespace detail {

inline Summand type_summand(SummandKind kind, int index, std::map<std::string, Rational> moduli = {}) {
  const CatalogEntry* e = find_entry(kind, index);
  if (!e) throw std::logic_error("type_summand: no catalog entry");
  return {kind, e->dim, index, std::move(moduli)};
}

/// Some v in span(B) with h(v, v) ≠ 0, for the symmetric form h(u, v) = uᵀ H v; nullopt if h vanishes on span(B).
inline std::optional<Mat> anisotropic_in(const Mat& H, const Mat& B) {
  auto h = [&](const Mat& u, const Mat& v) { return (u.transpose() * H * v)(0, 0); };
  for (std::size_t i = 0; i < B.cols(); ++i)
    if (!h(B.col(i), B.col(i)).is_zero()) return B.col(i);
  for (std::size_t i = 0; i < B.cols(); ++i)
    for (std::size_t j = i + 1; j < B.cols(); ++j)
      if (!h(B.col(i), B.col(j)).is_zero()) return B.col(i) + B.col(j);
  return std::nullopt;
}

inline bool spans_invariant(const Mat& Z, const Mat& B) { return rank(hcat(B, Z * B)) == B.cols(); }

}  // namespace detail

/**
 * Splits (W, Z; G) into catalog indecomposables and returns their blocks.
 *
 * Eigenvalues c of Z² must be rational. For c ≠ 0 the generalized eigenspace
 * must be semisimple and splits into planes span{w, Zw}; for c = 0 the
 * nilpotent part may contain Δ₂⁻ blocks span{w, Zw, Z²w} and a kernel that
 * is diagonalized by congruence.
 */
inline std::vector<TypeBlock> decompose_type_blocks(const TypePair& tp) {
  const Mat& G = tp.space.gram;
  const Mat& Z = tp.Z;
  const std::size_t d = tp.space.dim;
  if (!is_skew_adjoint(tp.space, Z)) fail(ErrorCode::InvalidArgument, "decompose_type: Z is not skew-adjoint");
  std::vector<TypeBlock> blocks;
  if (d == 0) return blocks;
  if (!try_inverse(G)) fail(ErrorCode::InvalidArgument, "decompose_type: Gram matrix is degenerate");

  Mat S = Z * Z;
  auto roots = rational_roots(Poly(charpoly(S)));
  int found = 0;
  for (const auto& r : roots) found += r.second;
  if (found != static_cast<int>(d))
    fail(ErrorCode::UnsupportedType, "decompose_type: an eigenvalue of Z^2 is irrational (not representable)");

  auto form_on = [&](const Mat& u, const Mat& v) { return (u.transpose() * G * v)(0, 0); };

  for (const auto& [c, mult] : roots) {
    Mat shifted = S - c * Mat::identity(d);
    Mat cur = nullspace(power(shifted, static_cast<unsigned>(mult)));
    if (!c.is_zero()) {
      if (!(shifted * cur).is_zero())
        fail(ErrorCode::UnsupportedType,
             "decompose_type: Z^2 is not semisimple at eigenvalue " + c.str() + " (nontrivial Jordan block)");
      while (cur.cols() > 0) {
        auto w = detail::anisotropic_in(G, cur);
        if (!w) throw std::logic_error("decompose_type: degenerate eigenspace");
        Mat block = hcat(*w, Z * *w);
        Rational g = form_on(*w, *w);
        if (c.sign() > 0) {
          blocks.push_back({detail::type_summand(SummandKind::TYPE_DELTA0_RP, 1, {{"zeta_sq", c}}), block});
        } else {
          if (g.sign() < 0)
            fail(ErrorCode::UnsupportedType,
                 "decompose_type: elliptic block on a negative definite plane (index 2) is not in the catalog");
          blocks.push_back({detail::type_summand(SummandKind::TYPE_DELTA0_IP, 0, {{"beta_sq", -c}}), block});
        }
        cur = orthogonal_complement(G, block, cur);
      }
      continue;
    }

    // nilpotent part
    if (!(power(Z, 3) * cur).is_zero())
      fail(ErrorCode::UnsupportedType, "decompose_type: nilpotent part has height > 3");
    Mat H = G * S;  // h(u, v) = G(u, Z²v), symmetric
    while (!(S * cur).is_zero()) {
      auto w = detail::anisotropic_in(H, cur);
      if (!w) throw std::logic_error("decompose_type: degenerate nilpotent part");
      Rational b = form_on(*w, S * *w);
      if (b.sign() > 0)
        fail(ErrorCode::UnsupportedType, "decompose_type: nilpotent block of index 2 (Delta_2^+) is not in the catalog");
      Mat block = hcat(hcat(*w, Z * *w), S * *w);
      blocks.push_back({detail::type_summand(SummandKind::TYPE_DELTA2_MINUS_0, 1), block});
      cur = orthogonal_complement(G, block, cur);
    }
    if (!(Z * cur).is_zero())
      fail(ErrorCode::UnsupportedType, "decompose_type: nilpotent blocks of height 2 are not in the catalog");
    if (cur.cols() > 0) {
      Congruence cg = diagonalize(cur.transpose() * G * cur);
      for (std::size_t i = 0; i < cur.cols(); ++i) {
        int sgn = cg.diagonal[i].sign();
        if (sgn == 0) throw std::logic_error("decompose_type: degenerate kernel");
        blocks.push_back({detail::type_summand(SummandKind::TYPE_DELTA0_SIGN0, sgn > 0 ? 0 : 1), cur * cg.Q.col(i)});
      }
    }
  }

  // re-verify the splitting
  std::size_t total = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Mat& B = blocks[i].basis;
    total += B.cols();
    Mat gb = B.transpose() * G * B;
    if (determinant(gb).is_zero()) throw std::logic_error("decompose_type: degenerate block");
    if (!detail::spans_invariant(Z, B)) throw std::logic_error("decompose_type: block is not invariant");
    if (static_cast<int>(signature_of(gb).negatives) != blocks[i].summand.index)
      throw std::logic_error("decompose_type: block index disagrees with catalog");
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      if (!(B.transpose() * G * blocks[j].basis).is_zero())
        throw std::logic_error("decompose_type: blocks are not orthogonal");
  }
  if (total != d) throw std::logic_error("decompose_type: blocks do not fill the space");
  return blocks;
}

inline std::vector<Summand> decompose_type(const TypePair& tp) {
  std::vector<Summand> out;
  for (auto& b : decompose_type_blocks(tp)) out.push_back(std::move(b.summand));
  std::sort(out.begin(), out.end());
  return out;
}

/// Gauge-reduced data of a tuple whose y lies in span{e_{n+2}}.
struct AffineInvariants {
  int core_dim = 2;          ///< 2 for ∇₂(0,0), 3 for ∇₃⁺(0)
  Rational mu;               ///< K̃(ẽ, ẽ), zero when ẽ = 0
  bool coupling_zero = true; ///< ẽ = 0
  std::size_t reduced_rank = 0;
  std::vector<Rational> reduced_charpoly;  ///< of the compressed middle block

  friend bool operator==(const AffineInvariants&, const AffineInvariants&) = default;
};

namespace detail {

struct AffineReduction {
  AffineInvariants inv;
  Mat yred;           ///< canonical gauge representative
  TypePair remainder; ///< type part left after splitting off the core
};

inline AffineReduction reduce_affine(const SpecialTuple& t) {
  const auto& s = t.space;
  std::size_t n = s.n();
  Mat et = middle(s, t.Y * e_last(s));
  Mat xt = t.Y.block(1, 1, n, n);
  AffineReduction r;
  r.inv.mu = tilde_form(s, et, et);
  r.inv.coupling_zero = et.is_zero();
  if (!et.is_zero() && r.inv.mu.sign() <= 0)
    fail(ErrorCode::AffineScope,
         r.inv.mu.is_zero() ? "affine tuple with isotropic nonzero coupling vector: core outside the catalog"
                            : "affine tuple with negative coupling norm: core outside the catalog");
  Mat kt = gram_tilde(s);
  Mat comp = Mat::identity(n);
  Mat pi = Mat::identity(n);
  r.yred = Mat(s.dim, s.dim);
  if (!et.is_zero()) {
    r.inv.core_dim = 3;
    pi = compress_projector(s, {et});
    comp = orthogonal_complement(kt, et, Mat::identity(n));
    r.yred += lift(s, embed_middle(s, et), e_first(s));
  }
  Mat xr = pi * xt * pi;
  r.yred += embed_middle_op(s, xr);
  r.inv.reduced_rank = rank(r.yred);
  r.inv.reduced_charpoly = charpoly(xr);
  Mat z = comp.cols() ? restrict_operator(xr, comp) : Mat();
  r.remainder = make_type_pair(comp.transpose() * kt * comp, z);
  return r;
}

}  // namespace detail

/// Invariants of a standardized affine tuple (y = e_{n+2}) under the residual gauge.
inline AffineInvariants affine_invariants(const SpecialTuple& t) {
  if (!(t.y == detail::e_last(t.space)))
    fail(ErrorCode::InvalidArgument, "affine_invariants: tuple is not standardized (y must be e_{n+2})");
  return detail::reduce_affine(t).inv;
}

/**
 * Canonical decomposition: exactly one cotype followed by types, canonically sorted.
 */
inline Decomposition classify(const SpecialTuple& t) {
  const auto& s = t.space;
  Decomposition d;
  Rational y1 = parameter(t);
  if (!y1.is_zero()) {
    Standardized st = standardize_case1(t);
    d.summands.push_back({SummandKind::COTYPE_NABLA2_Y1, 2, 0, {{"y1", y1}}});
    for (auto& x : decompose_type(associated_pair(st.tuple))) d.summands.push_back(x);
  } else if (!detail::middle(s, t.y).is_zero()) {
    if (form(s, t.y, t.y).is_zero())
      fail(ErrorCode::AffineScope, "affine tuple with y outside span{e_{n+2}} requires an isotropic vector in the tilde space");
    NonaffineSplit ns = classify_nonaffine(t);
    Summand c{SummandKind::COTYPE_NONAFFINE_EPS, 1, ns.epsilon > 0 ? 0 : 1,
              {{"alpha_sq", ns.alpha_sq}, {"eps", Rational(ns.epsilon)}}};
    if (!ns.mu.is_zero()) c.moduli["mu"] = ns.mu;
    d.summands.push_back(c);
    for (auto& x : decompose_type(ns.complement)) d.summands.push_back(x);
  } else {
    detail::AffineReduction r = detail::reduce_affine(t);
    if (r.inv.core_dim == 3)
      d.summands.push_back({SummandKind::COTYPE_AFFINE_NABLA3, 3, 1, {{"mu", r.inv.mu}}});
    else
      d.summands.push_back({SummandKind::COTYPE_AFFINE_NABLA2, 2, 1, {}});
    for (auto& x : decompose_type(r.remainder)) d.summands.push_back(x);
  }
  d.canonicalize();
  if (d.total_dim() != static_cast<int>(s.dim)) throw std::logic_error("classify: dimensions do not add up");
  return d;
}

inline bool equivalent(const SpecialTuple& a, const SpecialTuple& b) {
  if (!(a.space == b.space)) fail(ErrorCode::DimensionMismatch, "equivalent: tuples live on different spaces");
  return classify(a) == classify(b);
}

}  // namespace galorb
