#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace galorb;

namespace {

Summand D0p() { return {SummandKind::TYPE_DELTA0_SIGN0, 1, 0, {}}; }
Summand D0m() { return {SummandKind::TYPE_DELTA0_SIGN0, 1, 1, {}}; }
Summand D2m() { return {SummandKind::TYPE_DELTA2_MINUS_0, 3, 1, {}}; }
Summand IP(Rational b) { return {SummandKind::TYPE_DELTA0_IP, 2, 0, {{"beta_sq", b}}}; }
Summand RP(Rational z) { return {SummandKind::TYPE_DELTA0_RP, 2, 1, {{"zeta_sq", z}}}; }

Decomposition sorted(std::vector<Summand> s) {
  Decomposition d{std::move(s)};
  d.canonicalize();
  return d;
}

/// Y = X̃ (middle block) + L_{ẽ,e1} + a L_{e1,e} + L_{b̃,e}, built without library helpers.
Mat build_Y(const InnerProductSpace& s, const Mat& xt, const Mat& et, const Rational& a, const Mat& bt) {
  std::size_t n = s.n(), d = s.dim;
  auto embed = [&](const Mat& v) {
    Mat out(d, 1);
    for (std::size_t i = 0; i < n; ++i) out[i + 1] = v[i];
    return out;
  };
  Mat e1 = Mat::unit(d, 0), e = Mat::unit(d, d - 1);
  Mat Y(d, d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) Y(i + 1, j + 1) = xt(i, j);
  Y += lift(s, embed(et), e1) + a * lift(s, e1, e) + lift(s, embed(bt), e);
  return Y;
}

Rational dot(const Mat& a, const Mat& b) { return (a.transpose() * b)(0, 0); }

/// ω with cross(ω) = xt for a 3x3 antisymmetric matrix.
Mat axis(const Mat& xt) { return Mat::column({xt(2, 1), xt(0, 2), xt(1, 0)}); }

class CotypeOracle : public ::testing::Test {
 protected:
  InnerProductSpace s = standard_space(3);
  Rng rng{777};

  Mat random_antisym() { return oracle::cross(rng.rational(), rng.rational(), rng.rational()); }
};

}  // namespace

TEST(DecomposeType, EllipticRotation) {
  TypePair tp = make_type_pair(Mat::identity(3), oracle::cross(1, 1, 0));
  EXPECT_EQ(decompose_type(tp), (std::vector<Summand>{IP(2), D0p()}));
}

TEST(DecomposeType, HyperbolicBoost) {
  TypePair tp = make_type_pair(Mat{{1, 0}, {0, -1}}, Mat{{0, 2}, {2, 0}});
  EXPECT_EQ(decompose_type(tp), (std::vector<Summand>{RP(4)}));
}

TEST(DecomposeType, ZeroOperatorCountsSigns) {
  TypePair tp = make_type_pair(Mat{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}, Mat(3, 3));
  EXPECT_EQ(decompose_type(tp), (std::vector<Summand>{D0p(), D0m(), D0m()}));
  TypePair h = make_type_pair(Mat{{0, 1}, {1, 0}}, Mat(2, 2));
  EXPECT_EQ(decompose_type(h), (std::vector<Summand>{D0p(), D0m()}));
}

TEST(DecomposeType, NilpotentHeightThree) {
  // basis f1, f2, f3 with f1, f3 hyperbolic; Z = L_{f2,f1}
  Mat g{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
  InnerProductSpace w = make_space(g);
  Mat z = lift(w, Mat::unit(3, 1), Mat::unit(3, 0));
  EXPECT_EQ(decompose_type(make_type_pair(g, z)), (std::vector<Summand>{D2m()}));

  Mat gneg{{0, 0, 1}, {0, -1, 0}, {1, 0, 0}};
  Mat zneg = lift(make_space(gneg), Mat::unit(3, 1), Mat::unit(3, 0));
  try {
    decompose_type(make_type_pair(gneg, zneg));
    ADD_FAILURE() << "expected UNSUPPORTED_TYPE";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedType);
  }
}

TEST(DecomposeType, UnsupportedShapes) {
  auto code = [](const Mat& g, const Mat& z) {
    try {
      decompose_type(make_type_pair(g, z));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  // Z² = 0 on H ⊕ H: L_{f1, g1} with f1, g1 isotropic and orthogonal
  Mat hh{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
  Mat z = lift(make_space(hh), Mat::unit(4, 0), Mat::unit(4, 2));
  EXPECT_EQ(code(hh, z), ErrorCode::UnsupportedType);
  // irrational eigenvalues of Z²
  Mat path{{0, -1, 0, 0}, {1, 0, -1, 0}, {0, 1, 0, -1}, {0, 0, 1, 0}};
  EXPECT_EQ(code(Mat::identity(4), path), ErrorCode::UnsupportedType);
  // rotation on a negative definite plane
  EXPECT_EQ(code(Rational(-1) * Mat::identity(2), Mat{{0, -1}, {1, 0}}), ErrorCode::UnsupportedType);
}

TEST(DecomposeType, RepeatedEllipticEigenvalue) {
  Mat z = direct_sum(Mat{{0, -2}, {2, 0}}, Mat{{0, -2}, {2, 0}});
  EXPECT_EQ(decompose_type(make_type_pair(Mat::identity(4), z)), (std::vector<Summand>{IP(4), IP(4)}));
}

TEST(DecomposeType, BlocksAreOrthogonalInvariantAndFill) {
  Rng rng(31);
  for (int t = 0; t < 30; ++t) {
    Mat q = rng.orthogonal(Mat::identity(3));
    Mat z = q * oracle::cross(rng.rational(), rng.rational(), rng.rational()) * inverse(q);
    auto blocks = decompose_type_blocks(make_type_pair(Mat::identity(3), z));
    std::size_t total = 0;
    for (const auto& b : blocks) total += b.basis.cols();
    EXPECT_EQ(total, 3u);
  }
}

TEST(Classify, ExampleTuples) {
  InnerProductSpace s1 = standard_space(1);
  Mat zero(3, 3);
  Decomposition d = classify(make_tuple(s1, zero, Mat::column({0, 1, 0})));
  EXPECT_EQ(d, sorted({{SummandKind::COTYPE_NONAFFINE_EPS, 1, 0, {{"alpha_sq", 1}, {"eps", 1}}}, D0p(), D0m()}));

  Decomposition affine = sorted({{SummandKind::COTYPE_AFFINE_NABLA2, 2, 1, {}}, D0p()});
  EXPECT_EQ(classify(make_tuple(s1, zero, Mat::column({0, 0, 1}))), affine);
  EXPECT_EQ(classify(make_tuple(s1, zero, Mat::column({0, 0, -5}))), affine);
  EXPECT_EQ(classify(make_tuple(s1, zero, Mat(3, 1))), affine);

  Decomposition p = classify(make_tuple(s1, zero, Mat::column({-2, 3, 7})));
  EXPECT_EQ(p, sorted({{SummandKind::COTYPE_NABLA2_Y1, 2, 0, {{"y1", -2}}}, D0p()}));
}

TEST(Classify, IndefiniteParameterCase) {
  InnerProductSpace s = build_chain(2, Mat{{1, 0}, {0, -1}}).full;
  Mat Y = build_Y(s, Mat{{0, 1}, {1, 0}}, Mat(2, 1), 0, Mat(2, 1));
  Decomposition d = classify(make_tuple(s, Y, Mat::column({3, 0, 0, 0})));
  EXPECT_EQ(d, sorted({{SummandKind::COTYPE_NABLA2_Y1, 2, 0, {{"y1", 3}}}, RP(1)}));
}

TEST(Classify, ScopeErrors) {
  InnerProductSpace s1 = standard_space(1);
  auto code = [](const SpecialTuple& t) {
    try {
      classify(t);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  // nonaffine with K(Y e, y) ≠ 0
  Mat Y = build_Y(s1, Mat(1, 1), Mat::column({1}), 0, Mat(1, 1));
  EXPECT_EQ(code(make_tuple(s1, Y, Mat::column({0, 1, 0}))), ErrorCode::NonaffineScope);
  // isotropic y off the e_{n+2} axis
  InnerProductSpace s2 = build_chain(2, Mat{{1, 0}, {0, -1}}).full;
  EXPECT_EQ(code(make_tuple(s2, Mat(4, 4), Mat::column({0, 1, 1, 0}))), ErrorCode::AffineScope);
  // affine with negative coupling norm
  Mat Y2 = build_Y(s2, Mat(2, 2), Mat::column({0, 1}), 0, Mat(2, 1));
  EXPECT_EQ(code(make_tuple(s2, Y2, Mat::column({0, 0, 0, 1}))), ErrorCode::AffineScope);
}

TEST_F(CotypeOracle, ParameterCaseMatchesAxisFormula) {
  for (int t = 0; t < 40; ++t) {
    Mat xt = t % 5 == 0 ? Mat(3, 3) : random_antisym();
    Rational y1 = rng.nonzero();
    Mat Y = build_Y(s, xt, rng.vector(3), rng.rational(), rng.vector(3));
    Decomposition d = classify(make_tuple(s, Y, y1 * Mat::unit(5, 0)));
    Mat w = axis(xt);
    std::vector<Summand> expect{{SummandKind::COTYPE_NABLA2_Y1, 2, 0, {{"y1", y1}}}};
    if (w.is_zero()) expect.insert(expect.end(), {D0p(), D0p(), D0p()});
    else expect.insert(expect.end(), {IP(dot(w, w)), D0p()});
    EXPECT_EQ(d, sorted(expect));
  }
}

TEST_F(CotypeOracle, NonaffineMatchesProjectionFormula) {
  for (int t = 0; t < 40; ++t) {
    Mat xt = random_antisym();
    Mat yt = rng.nonzero_vector(3);
    Mat et = t % 2 ? Mat(3, 1) : rng.vector(3);
    et = et - (dot(et, yt) / dot(yt, yt)) * yt;  // K̃(ẽ, ỹ) = 0
    Mat y(5, 1);
    y.set_block(1, 0, yt);
    y[4] = rng.rational();
    Mat Y = build_Y(s, xt, et, rng.rational(), rng.vector(3));
    Decomposition d = classify(make_tuple(s, Y, y));

    Summand cot{SummandKind::COTYPE_NONAFFINE_EPS, 1, 0, {{"alpha_sq", dot(yt, yt)}, {"eps", 1}}};
    std::vector<Summand> expect;
    if (et.is_zero()) {
      Rational b = dot(axis(xt), yt);
      b = b * b / dot(yt, yt);
      expect = {cot, D0p(), D0m()};
      if (b.is_zero()) expect.insert(expect.end(), {D0p(), D0p()});
      else expect.push_back(IP(b));
    } else {
      cot.moduli["mu"] = dot(et, et);
      expect = {cot, D2m(), D0p()};
    }
    EXPECT_EQ(d, sorted(expect)) << "trial " << t;
  }
}

TEST_F(CotypeOracle, AffineMatchesProjectionFormula) {
  for (int t = 0; t < 40; ++t) {
    Mat xt = random_antisym();
    Mat et = t % 2 ? Mat(3, 1) : rng.nonzero_vector(3);
    Mat y(5, 1);
    y[4] = t % 3 ? rng.nonzero() : Rational();
    Mat Y = build_Y(s, xt, et, rng.rational(), rng.vector(3));
    Decomposition d = classify(make_tuple(s, Y, y));

    std::vector<Summand> expect;
    Rational b;
    if (et.is_zero()) {
      expect = {{SummandKind::COTYPE_AFFINE_NABLA2, 2, 1, {}}};
      b = dot(axis(xt), axis(xt));
      if (b.is_zero()) expect.insert(expect.end(), {D0p(), D0p(), D0p()});
      else expect.insert(expect.end(), {IP(b), D0p()});
    } else {
      expect = {{SummandKind::COTYPE_AFFINE_NABLA3, 3, 1, {{"mu", dot(et, et)}}}};
      b = dot(axis(xt), et);
      b = b * b / dot(et, et);
      if (b.is_zero()) expect.insert(expect.end(), {D0p(), D0p()});
      else expect.push_back(IP(b));
    }
    EXPECT_EQ(d, sorted(expect)) << "trial " << t;
  }
}

TEST(Standardize, CaseOneWitnessReproducesTheTuple) {
  Rng rng(41);
  for (std::size_t n : {1u, 3u}) {
    InnerProductSpace s = standard_space(n);
    for (int t = 0; t < 20; ++t) {
      SpecialTuple tup = random_tuple(rng, s, TupleCase::Parameter);
      Standardized st = standardize_case1(tup);
      EXPECT_EQ(st.tuple.y, parameter(tup) * Mat::unit(s.dim, 0));
      EXPECT_EQ(apply_equivalence(tup, st.witness), st.tuple);
      EXPECT_EQ(associated_pair(st.tuple).Z, st.tuple.Y.block(1, 1, n, n));
    }
  }
  EXPECT_THROW(standardize_case1(make_tuple(standard_space(1), Mat(3, 3), Mat::column({0, 1, 0}))), Error);
}

TEST(Standardize, AffineAxisShift) {
  InnerProductSpace s = standard_space(2);
  SpecialTuple t = make_tuple(s, Mat(4, 4), Mat::column({0, 0, 0, -3}));
  EXPECT_EQ(standardize_affine(t).y, Mat::unit(4, 3));
  EXPECT_THROW(standardize_affine(make_tuple(s, Mat(4, 4), Mat::column({1, 0, 0, 0}))), Error);
  EXPECT_THROW(standardize_affine(make_tuple(s, Mat(4, 4), Mat::column({0, 1, 0, 0}))), Error);
}

TEST(Equivalence, WitnessValidation) {
  InnerProductSpace s = standard_space(1);
  SpecialTuple t = make_tuple(s, Mat(3, 3), Mat::column({1, 0, 0}));
  EquivalenceWitness w = identity_witness(s);
  w.p[0] = 1;
  EXPECT_THROW(apply_equivalence(t, w), Error);
  w = identity_witness(s);
  w.P = Mat{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};  // orthogonal but moves e_{n+2}
  EXPECT_THROW(apply_equivalence(t, w), Error);
}

TEST(Equivalence, RandomWitnessesPreserveTheDecomposition) {
  Rng rng(51);
  for (std::size_t n : {1u, 2u, 3u}) {
    InnerProductSpace s = standard_space(n);
    for (TupleCase c : kAllCases)
      for (int t = 0; t < 10; ++t) {
        SpecialTuple a = random_tuple(rng, s, c);
        SpecialTuple b = apply_equivalence(a, random_witness(rng, s));
        EXPECT_TRUE(equivalent(a, b)) << case_name(c) << " n=" << n;
        Decomposition d = classify(a);
        EXPECT_EQ(d.total_dim(), static_cast<int>(n + 2));
        bool parameter_cotype = d.summands[0].kind == SummandKind::COTYPE_NABLA2_Y1;
        EXPECT_EQ(d.total_index(), parameter_cotype ? 0 : 1);
        EXPECT_EQ(d.cotype_count(), 1u);
      }
  }
}

TEST(Equivalence, DistinctParametersAreInequivalent) {
  InnerProductSpace s = standard_space(1);
  SpecialTuple a = make_tuple(s, Mat(3, 3), Mat::column({1, 0, 0}));
  SpecialTuple b = make_tuple(s, Mat(3, 3), Mat::column({2, 0, 0}));
  EXPECT_FALSE(equivalent(a, b));
  EXPECT_THROW(equivalent(a, make_tuple(standard_space(2), Mat(4, 4), Mat(4, 1))), Error);
}
