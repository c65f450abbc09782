#include <random>
#include <string>

#include <gtest/gtest.h>

#include "rectpierce/exact.hpp"
#include "rectpierce/igraph.hpp"
#include "rectpierce/instance.hpp"
#include "test_support.hpp"

namespace rectpierce {
namespace {

using testing::R;
using testing::S;

TEST(ParseInstanceTest, UnitSquare) {
  const Instance inst = parse_instance(R"({"rects":[{"id":0,"x":[0,1],"y":[0,1]}]})");
  ASSERT_EQ(inst.size(), 1u);
  EXPECT_EQ(inst[0], R(0, "0", "1", "0", "1"));
  EXPECT_FALSE(inst.r_declared());
}

TEST(ParseInstanceTest, RationalCoordinates) {
  const Instance inst = parse_instance(R"({"rects":[{"id":0,"x":[0,"1/2"],"y":[0,"1/2"]}]})");
  EXPECT_EQ(inst[0].width(), S("1/2"));
  EXPECT_EQ(inst[0].height(), S("1/2"));
}

TEST(ParseInstanceTest, Errors) {
  auto message = [](const std::string& text) {
    try {
      parse_instance(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message(R"({"rects":[{"id":0,"x":[1,1],"y":[0,1]}]})").find("rect 0"), std::string::npos);
  EXPECT_NE(message(R"({"rects":[{"id":0,"x":[0,1],"y":[0,1]},{"id":0,"x":[0,1],"y":[0,1]}]})")
                .find("duplicate"),
            std::string::npos);
  EXPECT_NE(message(R"({"rects":[{"id":0,"x":[0,"1/0"],"y":[0,1]}]})").find("rect 0"),
            std::string::npos);
  EXPECT_NE(message(R"({"rects":[{"id":1,"x":[0,1],"y":[0,1]}]})").find("rect 1"), std::string::npos);
  EXPECT_NE(message(R"({"rects":[{"id":0,"x":[0,1.5],"y":[0,1]}]})"), "no error");
  EXPECT_NE(message(R"({"rects":[{"id":0,"x":[0,3],"y":[0,1]}], "r": 2})"), "no error");
  EXPECT_NE(message(R"({"rect":[]})"), "no error");
  EXPECT_NE(message("not json"), "no error");
}

TEST(ParseInstanceTest, DeclaredRatio) {
  EXPECT_EQ(parse_instance(R"({"r":2.2,"rects":[{"id":0,"x":[0,11],"y":[0,5]}]})").r_declared(), S("11/5"));
  EXPECT_EQ(parse_instance(R"({"r":1.5e1,"rects":[]})").r_declared(), S("15"));
  const Instance inst = parse_instance(R"({"r":"5/2","rects":[{"id":0,"x":[0,5],"y":[0,2]}]})");
  ASSERT_TRUE(inst.r_declared());
  EXPECT_EQ(*inst.r_declared(), S("5/2"));
}

TEST(InstanceProperty, SerializeParseRoundTrip) {
  std::mt19937_64 gen(5);
  for (int i = 0; i < 200; ++i) {
    const Instance inst = testing::random_family(gen, 1 + i % 9);
    const std::string text = serialize_instance(inst);
    const Instance back = parse_instance(text);
    ASSERT_EQ(back, inst);
    ASSERT_EQ(serialize_instance(back), text);
  }
}

TEST(FamilyRatioTest, Examples) {
  EXPECT_EQ(family_ratio(testing::make_instance({R(0, "0", "1", "0", "1"), R(0, "0", "3", "0", "1")})),
            S("3"));
  EXPECT_EQ(family_ratio(testing::make_instance({R(0, "0", "1", "0", "1")})), S("1"));
  EXPECT_EQ(family_ratio(testing::make_instance({R(0, "0", "5", "0", "2"), R(0, "0", "1", "0", "1")})),
            S("5/2"));
  EXPECT_THROW(family_ratio(Instance()), std::invalid_argument);
}

TEST(GenerateRandomTest, SingleSquareWhenRatioIsOne) {
  for (std::uint64_t seed : {0ull, 1ull, 99ull}) {
    GeneratorConfig cfg;
    cfg.n = 1;
    cfg.r_max = 1;
    cfg.seed = seed;
    const Instance inst = generate_random(cfg);
    ASSERT_EQ(inst.size(), 1u);
    EXPECT_EQ(aspect_ratio(inst[0]), S("1"));
  }
}

TEST(GenerateRandomTest, Deterministic) {
  GeneratorConfig cfg;
  cfg.n = 50;
  cfg.r_max = 3;
  cfg.seed = 7;
  EXPECT_EQ(serialize_instance(generate_random(cfg)), serialize_instance(generate_random(cfg)));
  GeneratorConfig other = cfg;
  other.seed = 8;
  EXPECT_NE(generate_random(cfg), generate_random(other));
}

TEST(GenerateRandomTest, RespectsRatioBound) {
  GeneratorConfig cfg;
  cfg.n = 200;
  cfg.r_max = S("5/2");
  cfg.seed = 1;
  const Instance inst = generate_random(cfg);
  EXPECT_LE(family_ratio(inst), S("5/2"));
}

TEST(GenerateRandomTest, GridAndWindowInvariants) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GeneratorConfig cfg;
    cfg.n = 40;
    cfg.r_max = S("7/3");
    cfg.window = 30;
    cfg.side_min = S("1/2");
    cfg.side_max = 6;
    cfg.resolution = 100;
    cfg.seed = seed;
    const Instance inst = generate_random(cfg);
    ASSERT_EQ(inst.size(), 40u);
    for (const Rect& r : inst.rects()) {
      EXPECT_EQ(r.id(), &r - inst.rects().data());
      EXPECT_LE(aspect_ratio(r), cfg.r_max);
      EXPECT_GE(shorter_side(r), cfg.side_min);
      EXPECT_LE(shorter_side(r), cfg.side_max);
      EXPECT_GE(r.x_lo(), S("0"));
      EXPECT_LE(r.x_hi(), cfg.window);
      EXPECT_GE(r.y_lo(), S("0"));
      EXPECT_LE(r.y_hi(), cfg.window);
      for (const Scalar& v : {r.x_lo(), r.x_hi(), r.y_lo(), r.y_hi()}) {
        EXPECT_TRUE((v * Scalar(100)).is_integer()) << v;
      }
    }
  }
}

TEST(GenerateRandomTest, RejectsInfeasibleConfigs) {
  GeneratorConfig cfg;
  cfg.side_max = 200;
  EXPECT_THROW(generate_random(cfg), std::invalid_argument);
  cfg = {};
  cfg.n = 0;
  EXPECT_THROW(generate_random(cfg), std::invalid_argument);
  cfg = {};
  cfg.r_max = S("1/2");
  EXPECT_THROW(generate_random(cfg), std::invalid_argument);
}

TEST(GenerateStructuredTest, DisjointGridHasFullIndependence) {
  const Instance inst = generate_structured(StructuredKind::kDisjointGrid, 4);
  EXPECT_EQ(exact_nu(inst).nu, 4u);
}

TEST(GenerateStructuredTest, CliqueHasDepthN) {
  const Instance inst = generate_structured(StructuredKind::kCommonPointClique, 5);
  EXPECT_EQ(max_depth_omega(inst).omega, 5u);
}

TEST(GenerateStructuredTest, ChainEdgesByPairEvaluation) {
  const Instance inst = generate_structured(StructuredKind::kChain, 3);
  std::vector<std::pair<RectId, RectId>> edges;
  for (RectId a = 0; a < 3; ++a) {
    for (RectId b = a + 1; b < 3; ++b) {
      if (intersects(inst[a], inst[b])) edges.emplace_back(a, b);
    }
  }
  EXPECT_EQ(edges, (std::vector<std::pair<RectId, RectId>>{{0, 1}, {1, 2}}));
}

TEST(GenerateStructuredTest, KindNames) {
  EXPECT_EQ(parse_structured_kind("chain"), StructuredKind::kChain);
  EXPECT_EQ(parse_structured_kind("disjoint_grid"), StructuredKind::kDisjointGrid);
  EXPECT_EQ(parse_structured_kind("common_point_clique"), StructuredKind::kCommonPointClique);
  EXPECT_FALSE(parse_structured_kind("random"));
}

}  // namespace
}  // namespace rectpierce
