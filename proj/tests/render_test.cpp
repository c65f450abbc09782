#include <regex>
#include <string>

#include <gtest/gtest.h>

#include "rectpierce/render.hpp"
#include "test_support.hpp"

namespace rectpierce {
namespace {

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
  return n;
}

TEST(RenderSvgTest, SingleSquare) {
  const std::string svg =
      render_svg(testing::make_instance({testing::R(0, "0", "1", "0", "1")}));
  EXPECT_EQ(count(svg, "<rect "), 1u);
  EXPECT_EQ(count(svg, "<circle "), 0u);
  EXPECT_NE(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\""), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(RenderSvgTest, OneDotPerTransversalPoint) {
  GeneratorConfig cfg;
  cfg.n = 20;
  cfg.r_max = 3;
  cfg.window = 20;
  cfg.seed = 9;
  const Instance inst = generate_random(cfg);
  const PiercingResult res = construct_transversal(inst);
  const std::string svg = render_svg(inst, res);
  EXPECT_EQ(count(svg, "<rect "), inst.size());
  EXPECT_EQ(count(svg, "<circle "), res.transversal.size());
  EXPECT_EQ(svg, render_svg(inst, res));
}

TEST(RenderSvgTest, FillsFollowColourIndices) {
  const Instance inst = generate_structured(StructuredKind::kChain, 4);
  const Coloring c = greedy_degeneracy_coloring(build_graph_bruteforce(inst));
  RenderStyle style;
  style.palette = {"#aa0000", "#00bb00"};
  const std::string svg = render_svg(inst, c, style);
  const std::regex rect_re(R"re(data-id="(\d+)"[^>]*data-color="(\d+)" fill="([^"]+)")re");
  std::size_t seen = 0;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), rect_re); it != std::sregex_iterator(); ++it) {
    const auto id = std::stoul((*it)[1]);
    const auto colour = std::stoul((*it)[2]);
    EXPECT_EQ(colour, c.colors[id]);
    EXPECT_EQ((*it)[3], style.palette[colour % 2]);
    ++seen;
  }
  EXPECT_EQ(seen, inst.size());
}

TEST(RenderSvgTest, PGridLinesForPivots) {
  // One 3x1 pivot needs two interior cell lines.
  const Instance inst = testing::make_instance(
      {testing::R(0, "0", "3", "0", "1"), testing::R(1, "10", "13", "10", "13")});
  const std::string svg = render_svg(inst, construct_transversal(inst));
  EXPECT_EQ(count(svg, "class=\"p-grid\""), 2u);
}

}  // namespace
}  // namespace rectpierce
