#include <gtest/gtest.h>

#include "galorb/galorb.hpp"

using namespace galorb;
using io::json;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Json, TupleRoundTrip) {
  Rng rng(61);
  for (std::size_t n : {1u, 3u}) {
    InnerProductSpace s = standard_space(n);
    SpecialTuple t = random_tuple(rng, s, TupleCase::Parameter);
    json j = io::to_json(t);
    EXPECT_EQ(io::tuple_from_json(j), t);
    EXPECT_EQ(io::tuple_from_json(json::parse(j.dump())), t);
  }
}

TEST(Json, GroupAndAlgebraRoundTrip) {
  Rng rng(62);
  InnerProductSpace s = build_chain(2, Mat{{1, 0}, {0, -1}}).full;
  GroupElement g = random_group(rng, s);
  GroupElement g2 = io::group_from_json(io::to_json(g));
  EXPECT_EQ(g2.P, g.P);
  EXPECT_EQ(g2.p, g.p);
  AlgebraElement a = random_algebra(rng, s);
  EXPECT_EQ(io::algebra_from_json(io::to_json(a)), a);
}

TEST(Json, DecompositionAndAtlasRoundTrip) {
  OrbitAtlas a = enumerate(5, 1);
  annotate(a, gal3_table());
  EXPECT_EQ(io::atlas_from_json(io::to_json(a)), a);
  Decomposition d = classify(make_tuple(standard_space(1), Mat(3, 3), Mat::column({0, 2, 0})));
  EXPECT_EQ(io::decomposition_from_json(io::to_json(d)), d);
}

TEST(Json, CanonicalTextIsStable) {
  Decomposition d = classify(make_tuple(standard_space(1), Mat(3, 3), Mat::column({-3, 0, 1})));
  EXPECT_EQ(io::to_json(d).dump(),
            R"({"summands":[{"kind":"COTYPE_NABLA2_Y1","dim":2,"index":0,"moduli":{"y1":"-3"}},)"
            R"({"kind":"TYPE_DELTA0_SIGN0","dim":1,"index":0,"moduli":{}}]})");
  EXPECT_EQ(io::vector_to_json(Mat::column({Rational(1, 2), Rational(-4)})).dump(), R"(["1/2","-4"])");
}

TEST(Json, AcceptsIntegersAndNestedVectors) {
  json j = json::parse(R"({"n":1,"Y":[[0,0,0],[0,0,0],[0,0,0]],"y":[[1],["2/3"],[0]]})");
  SpecialTuple t = io::tuple_from_json(j);
  EXPECT_EQ(t.y, Mat::column({1, Rational(2, 3), 0}));
  EXPECT_EQ(t.space, standard_space(1));
}

TEST(Json, ErrorsCarryTheirPath) {
  json bad = json::parse(R"({"n":1,"Y":[["0","0","0"],["0","1/0","0"],["0","0","0"]],"y":["0","1","0"]})");
  EXPECT_EQ(code_of([&] { io::tuple_from_json(bad); }), ErrorCode::Parse);
  EXPECT_NE(message_of([&] { io::tuple_from_json(bad); }).find("$.Y[1][1]"), std::string::npos);

  json missing = json::parse(R"({"n":1,"Y":[["0","0","0"],["0","0","0"],["0","0","0"]]})");
  EXPECT_NE(message_of([&] { io::tuple_from_json(missing); }).find("missing key 'y'"), std::string::npos);

  json ragged = json::parse(R"({"n":1,"Y":[["0","0","0"],["0","0"],["0","0","0"]],"y":["0","0","0"]})");
  EXPECT_NE(message_of([&] { io::tuple_from_json(ragged); }).find("$.Y[1]"), std::string::npos);

  json shape = json::parse(R"({"n":2,"Y":[["0","0","0"],["0","0","0"],["0","0","0"]],"y":["0","0","0"]})");
  EXPECT_EQ(code_of([&] { io::tuple_from_json(shape); }), ErrorCode::DimensionMismatch);

  json gram = json::parse(R"({"n":1,"gram_tilde":[["2"]],"Y":[["0","0","0"],["0","0","0"],["0","0","0"]],"y":["0","0","0"]})");
  EXPECT_NE(message_of([&] { io::tuple_from_json(gram); }).find("gram_tilde"), std::string::npos);

  json notskew = json::parse(R"({"n":1,"Y":[["1","0","0"],["0","0","0"],["0","0","0"]],"y":["0","0","0"]})");
  EXPECT_EQ(code_of([&] { io::tuple_from_json(notskew); }), ErrorCode::InvalidArgument);

  EXPECT_EQ(code_of([] { io::parse_text("{", "t"); }), ErrorCode::Parse);
  json unknown = json::parse(R"({"summands":[{"kind":"NOPE","dim":1,"index":0}]})");
  EXPECT_NE(message_of([&] { io::decomposition_from_json(unknown); }).find("$.summands[0].kind"), std::string::npos);
}

TEST(Json, Moduli) {
  auto m = io::moduli_from_json(json::parse(R"([{"mu":"4"},{}])"));
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m[0].at("mu"), Rational(4));
  EXPECT_TRUE(m[1].empty());
  EXPECT_EQ(code_of([] { io::moduli_from_json(json::parse(R"({"mu":"4"})")); }), ErrorCode::Parse);
}

TEST(Json, ErrorPayload) {
  json j = io::error_json(Error(ErrorCode::AffineScope, "outside"));
  EXPECT_EQ(j.dump(), R"({"error":"AFFINE_SCOPE","message":"outside"})");
}
