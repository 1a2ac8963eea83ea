#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace galorb;

namespace {

constexpr int kTrials = 25;

class Galilean : public ::testing::TestWithParam<std::size_t> {
 protected:
  InnerProductSpace s = standard_space(GetParam());
  Rng rng{1000 + GetParam()};
};

}  // namespace

TEST_P(Galilean, GroupLaws) {
  GroupElement id = group_identity(s);
  for (int t = 0; t < kTrials; ++t) {
    GroupElement a = random_group(rng, s), b = random_group(rng, s), c = random_group(rng, s);
    GroupElement ab_c = compose(compose(a, b), c), a_bc = compose(a, compose(b, c));
    EXPECT_EQ(ab_c.P, a_bc.P);
    EXPECT_EQ(ab_c.p, a_bc.p);
    GroupElement e = compose(a, inverse(a));
    EXPECT_EQ(e.P, id.P);
    EXPECT_EQ(e.p, id.p);
    e = compose(inverse(a), a);
    EXPECT_EQ(e.P, id.P);
    EXPECT_EQ(e.p, id.p);
  }
}

TEST_P(Galilean, EmbeddingIsTheBlockMatrix) {
  for (int t = 0; t < kTrials; ++t) {
    GroupElement g = random_group(rng, s);
    Mat e = embed_group(g);
    EXPECT_EQ(e(0, 0), Rational(1));
    EXPECT_EQ(e.block(0, 1, 1, s.dim), star(s, g.p));
    EXPECT_TRUE(e.block(1, 0, s.dim, 1).is_zero());
    EXPECT_EQ(e.block(1, 1, s.dim, s.dim), g.P);
    GroupElement back = unembed_group(s, e);
    EXPECT_EQ(back.P, g.P);
    EXPECT_EQ(back.p, g.p);

    AlgebraElement a = random_algebra(rng, s);
    Mat m = embed_algebra(a);
    EXPECT_TRUE(m.block(0, 0, s.dim + 1, 1).is_zero());
    EXPECT_EQ(m.block(0, 1, 1, s.dim), star(s, a.x));
    EXPECT_EQ(unembed_algebra(s, m), a);
  }
}

TEST_P(Galilean, BracketMatchesSemidirectFormula) {
  for (int t = 0; t < kTrials; ++t) {
    AlgebraElement a = random_algebra(rng, s), b = random_algebra(rng, s), c = random_algebra(rng, s);
    EXPECT_EQ(bracket(a, b), oracle::bracket(a, b));
    // Jacobi
    AlgebraElement j1 = bracket(a, bracket(b, c)), j2 = bracket(b, bracket(c, a)), j3 = bracket(c, bracket(a, b));
    EXPECT_TRUE((j1.X + j2.X + j3.X).is_zero());
    EXPECT_TRUE((j1.x + j2.x + j3.x).is_zero());
  }
}

TEST_P(Galilean, AdjointFormula) {
  for (int t = 0; t < kTrials; ++t) {
    GroupElement g = random_group(rng, s);
    AlgebraElement a = random_algebra(rng, s);
    Mat pinv = inverse(g.P);
    AlgebraElement r = ad(g, a);
    EXPECT_EQ(r.X, g.P * a.X * pinv);
    EXPECT_EQ(r.x, g.P * a.x - g.P * a.X * g.p);
  }
}

TEST_P(Galilean, TwistedAdjointIsThePairingTranspose) {
  // ⟨Ãd_g a | b⟩ = ⟨a | Ad_{g⁻¹} b⟩ on the whole stabilizer basis
  auto basis = stabilizer_basis(s);
  for (int t = 0; t < 10; ++t) {
    GroupElement g = random_group(rng, s);
    AlgebraElement a = random_algebra(rng, s);
    AlgebraElement ta = twisted_ad(g, a);
    for (const auto& b : basis) EXPECT_EQ(pairing(ta, b), pairing(a, ad(inverse(g), b)));
  }
}

TEST_P(Galilean, PairingFormula) {
  for (int t = 0; t < kTrials; ++t) {
    AlgebraElement a = random_algebra(rng, s), b = random_algebra(rng, s);
    Rational expected = (a.X * b.X).trace() / Rational(2) + (b.x.transpose() * s.gram * a.x)(0, 0);
    EXPECT_EQ(pairing(a, b), expected);
  }
}

TEST_P(Galilean, StabilizerFlagsAndGalMatrices) {
  for (int t = 0; t < kTrials; ++t) {
    GroupElement g = random_stabilizer_group(rng, s), h = random_stabilizer_group(rng, s);
    EXPECT_TRUE(stabilizer_flags(g).in_group_stabilizer);
    EXPECT_TRUE(stabilizer_flags(compose(g, h)).in_group_stabilizer);
    EXPECT_EQ(gal_matrix(compose(g, h)), gal_matrix(g) * gal_matrix(h));
    AlgebraElement a = random_stabilizer_algebra(rng, s), b = random_stabilizer_algebra(rng, s);
    EXPECT_TRUE(stabilizer_flags(a).in_algebra_stabilizer);
    Mat A = gal_algebra_matrix(a), B = gal_algebra_matrix(b);
    EXPECT_EQ(gal_algebra_matrix(bracket(a, b)), A * B - B * A);
  }
  GroupElement g = random_group(rng, s);
  if (!stabilizer_flags(g).in_group_stabilizer) {
    EXPECT_THROW(gal_matrix(g), Error);
  }
}

TEST_P(Galilean, BasisDimensions) {
  std::size_t n = GetParam();
  EXPECT_EQ(algebra_basis(s).size(), 3 * n + 3 + oracle::skew_dimension(Mat::identity(n)));
  EXPECT_EQ(stabilizer_basis(s).size(), 1 + 2 * n + oracle::skew_dimension(Mat::identity(n)));
  for (const auto& b : stabilizer_basis(s)) EXPECT_TRUE(stabilizer_flags(b).in_algebra_stabilizer);
}

INSTANTIATE_TEST_SUITE_P(Dimensions, Galilean, ::testing::Values(1u, 2u, 3u));

TEST(GalileanExamples, GalMatrixOfAKnownBoost) {
  // n = 1: P̃ = 1, d̃ = 2 gives P = [[1,0,0],[2,1,0],[-2,-2,1]]
  InnerProductSpace s = standard_space(1);
  Mat P{{1, 0, 0}, {2, 1, 0}, {-2, -2, 1}};
  GroupElement g = make_group(s, P, Mat::column({0, 3, 5}));
  EXPECT_EQ(gal_matrix(g), (Mat{{1, 3, 5}, {0, 1, 2}, {0, 0, 1}}));
}

TEST(GalileanExamples, IndefiniteFormBasisSize) {
  InnerProductSpace s = build_chain(2, Mat{{1, 0}, {0, -1}}).full;
  EXPECT_EQ(algebra_basis(s).size(), 3u * 2 + 3 + 1);
  EXPECT_EQ(stabilizer_basis(s).size(), 1u + 4 + 1);
}

TEST(GalileanExamples, RejectsInvalidElements) {
  InnerProductSpace s = standard_space(1);
  EXPECT_THROW(make_group(s, Mat{{1, 0, 0}, {0, 2, 0}, {0, 0, 1}}, Mat(3, 1)), Error);
  EXPECT_THROW(make_algebra(s, Mat{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}, Mat(3, 1)), Error);
  EXPECT_THROW(make_algebra(s, Mat(3, 3), Mat(2, 1)), Error);
  EXPECT_THROW(bracket(algebra_zero(s), algebra_zero(standard_space(2))), Error);
}
