#include "rectpierce/color.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace rectpierce {

using nlohmann::json;

Coloring greedy_degeneracy_coloring(const IntersectionGraph& g) {
  constexpr std::size_t kUncolored = static_cast<std::size_t>(-1);
  Coloring c;
  c.order_used = degeneracy_order(g);
  c.colors.assign(g.size(), kUncolored);

  std::vector<bool> taken;
  for (auto it = c.order_used.order.rbegin(); it != c.order_used.order.rend(); ++it) {
    const RectId v = *it;
    taken.assign(g.degree(v) + 1, false);
    for (RectId u : g.neighbors(v)) {
      if (c.colors[u] != kUncolored && c.colors[u] < taken.size()) taken[c.colors[u]] = true;
    }
    const auto free = std::find(taken.begin(), taken.end(), false);
    c.colors[v] = static_cast<std::size_t>(free - taken.begin());
    c.num_colors = std::max(c.num_colors, c.colors[v] + 1);
  }
  return c;
}

bool validate_coloring(const IntersectionGraph& g, const Coloring& c) {
  if (c.colors.size() != g.size()) {
    throw std::invalid_argument("validate_coloring: " + std::to_string(c.colors.size()) +
                                " colours for " + std::to_string(g.size()) + " vertices");
  }
  if (g.size() == 0) return c.num_colors == 0;
  std::vector<bool> used(c.num_colors, false);
  for (RectId v = 0; v < g.size(); ++v) {
    if (c.colors[v] >= c.num_colors) return false;
    used[c.colors[v]] = true;
    for (RectId u : g.neighbors(v)) {
      if (c.colors[u] == c.colors[v]) return false;
    }
  }
  return std::all_of(used.begin(), used.end(), [](bool b) { return b; });
}

std::string serialize_coloring(const Coloring& c) {
  json doc = {{"colors", c.colors}, {"num_colors", c.num_colors}};
  return doc.dump(2) + "\n";
}

Coloring parse_coloring(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("colors") || !doc["colors"].is_array() ||
      !doc.contains("num_colors") || !doc["num_colors"].is_number_unsigned()) {
    throw ParseError("coloring must have a \"colors\" array and an integer \"num_colors\"");
  }
  Coloring c;
  for (const json& v : doc["colors"]) {
    if (!v.is_number_unsigned()) throw ParseError("coloring: colours must be non-negative integers");
    c.colors.push_back(v.get<std::size_t>());
  }
  c.num_colors = doc["num_colors"].get<std::size_t>();
  return c;
}

}  // namespace rectpierce
