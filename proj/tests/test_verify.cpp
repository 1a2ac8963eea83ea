#include <gtest/gtest.h>

#include "galorb/galorb.hpp"

using namespace galorb;

TEST(Verify, SuitesAreDeterministic) {
  for (const char* name : {"facts", "invariance"}) {
    SuiteFn f = find_suite(name);
    ASSERT_NE(f, nullptr);
    SuiteResult a = f(5, 4), b = f(5, 4);
    EXPECT_EQ(a.checks, b.checks);
    EXPECT_EQ(a.failures, b.failures);
  }
  EXPECT_EQ(find_suite("nope"), nullptr);
}

TEST(Verify, IdentitySuitesPass) {
  for (const char* name : {"facts", "claims", "adjoint", "gal", "dims", "invariance", "prop6", "atlas"}) {
    SuiteResult r = find_suite(name)(2024, 8);
    EXPECT_TRUE(r.passed()) << name << ": " << (r.failures.empty() ? "" : r.failures[0]);
    EXPECT_GT(r.checks, 0) << name;
  }
}

TEST(Verify, FailingChecksAreShrunkAndReported) {
  SuiteResult r("demo");
  run_checks(r, 9, 5,
             {{"always_fails", [](Rng& g, const InnerProductSpace&) -> std::optional<std::string> {
                 return "entry bound " + std::to_string(g.scale());
               }}},
             {1});
  ASSERT_EQ(r.failures.size(), 4u);
  EXPECT_NE(r.failures[0].find("scale 1"), std::string::npos);
  EXPECT_NE(r.failures[0].find("entry bound 1"), std::string::npos);
  EXPECT_NE(r.failures[3].find("2 further failing trials"), std::string::npos);
}

TEST(Verify, ExceptionsBecomeFailures) {
  SuiteResult r("demo");
  run_checks(r, 1, 1,
             {{"throws", [](Rng&, const InnerProductSpace&) -> std::optional<std::string> {
                 fail(ErrorCode::InvalidArgument, "boom");
               }}},
             {1});
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_NE(r.failures[0].find("boom"), std::string::npos);
}

TEST(Verify, AnnihilatorShape) {
  for (std::size_t n : {1u, 2u, 3u}) {
    auto ann = stabilizer_annihilator(standard_space(n));
    EXPECT_EQ(ann.size(), n + 2);
    for (const auto& a : ann) EXPECT_TRUE(has_annihilator_shape(a));
  }
  // a generic element is not of that shape
  Rng rng(3);
  EXPECT_FALSE(has_annihilator_shape(random_algebra(rng, standard_space(3))));
}

TEST(Verify, SearchFindsPlantedEquivalences) {
  Rng rng(71);
  InnerProductSpace s = standard_space(3);
  std::vector<Mat> sample{Mat::identity(3), rng.orthogonal(Mat::identity(3))};
  for (int t = 0; t < 5; ++t) {
    SpecialTuple a = random_standard_case1(rng, s, Rational(2));
    SpecialTuple b = apply_equivalence(a, case1_witness(rng, s, sample[static_cast<std::size_t>(t % 2)]));
    auto w = search_case1_equivalence(a, b, sample);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(apply_equivalence(a, *w), b);
  }
  SpecialTuple a = random_standard_case1(rng, s, Rational(1));
  SpecialTuple c = random_standard_case1(rng, s, Rational(3));
  EXPECT_FALSE(search_case1_equivalence(a, c, sample).has_value());
}

TEST(Verify, Prop6Report) {
  Prop6Report r = run_prop6(42, 12);
  EXPECT_EQ(r.pairs, 12);
  EXPECT_EQ(r.in_sample + r.hidden + r.independent, 12);
  EXPECT_EQ(r.soundness_violations, 0);
  EXPECT_EQ(r.in_sample_disagreements, 0);
}
