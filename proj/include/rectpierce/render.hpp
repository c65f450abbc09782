#pragma once

#include <string>
#include <variant>
#include <vector>

#include "rectpierce/color.hpp"
#include "rectpierce/instance.hpp"
#include "rectpierce/pierce.hpp"

namespace rectpierce {

struct RenderStyle {
  int canvas = 800;  // pixels per side
  int margin = 20;
  double point_radius = 4.0;
  std::string stroke = "#333333";
  std::string point_fill = "#d62728";
  // Colour i uses palette[i % size].
  std::vector<std::string> palette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#9467bd", "#8c564b",
                                      "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8"};
};

using Overlay = std::variant<std::monostate, PiercingResult, Coloring>;

/// SVG 1.1 figure. Each rectangle is one <rect>; a piercing overlay adds one
/// <circle> per transversal point and dotted P-grid cell lines inside every
/// pivot; a colouring overlay fills rectangles by palette index. Exact
/// coordinates become floats only here.
std::string render_svg(const Instance& inst, const Overlay& overlay = {},
                       const RenderStyle& style = {});

}  // namespace rectpierce
