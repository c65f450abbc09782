#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rectpierce/igraph.hpp"

namespace rectpierce {

struct Coloring {
  std::vector<std::size_t> colors;  // indexed by rect id
  std::size_t num_colors = 0;
  DegeneracyOrder order_used;
};

/// Colours vertices in reverse degeneracy order, each with the smallest
/// colour unused by its already-coloured neighbours. Uses at most
/// degeneracy + 1 colours.
Coloring greedy_degeneracy_coloring(const IntersectionGraph& g);

/// True iff adjacent vertices differ, num_colors == 1 + max colour, and
/// every colour in 0..num_colors-1 is used. Throws std::invalid_argument on
/// a size mismatch.
bool validate_coloring(const IntersectionGraph& g, const Coloring& c);

/// {"colors": [...], "num_colors": k}
std::string serialize_coloring(const Coloring& c);
/// Throws ParseError. The order is not part of the file format and comes
/// back empty.
Coloring parse_coloring(std::string_view json_text);

}  // namespace rectpierce
