#include "rectpierce/pierce.hpp"

#include <algorithm>
#include <utility>

#include "rectpierce/json_io.hpp"

namespace rectpierce {

using nlohmann::json;

const Rect& select_min_rect(std::span<const Rect> remaining) {
  if (remaining.empty()) throw std::invalid_argument("select_min_rect: empty family");
  const Rect* best = &remaining.front();
  Scalar best_side = shorter_side(*best);
  for (const Rect& r : remaining.subspan(1)) {
    Scalar side = shorter_side(r);
    if (side < best_side || (side == best_side && r.id() < best->id())) {
      best = &r;
      best_side = std::move(side);
    }
  }
  return *best;
}

std::size_t segments_per_side(const Rect& pivot) {
  const std::int64_t k = (longer_side(pivot) / shorter_side(pivot)).ceil();
  return static_cast<std::size_t>(std::max<std::int64_t>(1, k));
}

std::vector<Point> build_p_grid(const Rect& pivot) {
  const std::size_t k = segments_per_side(pivot);
  const bool tall = pivot.width() < pivot.height();
  const Scalar step = longer_side(pivot) / Scalar(static_cast<std::int64_t>(k));

  std::vector<Point> points;
  points.reserve(2 * (k + 1));
  for (const Scalar& edge : {tall ? pivot.x_lo() : pivot.y_lo(), tall ? pivot.x_hi() : pivot.y_hi()}) {
    const Scalar& start = tall ? pivot.y_lo() : pivot.x_lo();
    for (std::size_t j = 0; j <= k; ++j) {
      Scalar along = start + step * Scalar(static_cast<std::int64_t>(j));
      points.push_back(tall ? Point{edge, std::move(along)} : Point{std::move(along), edge});
    }
  }
  return points;
}

std::optional<Point> helly_point(std::span<const Rect> family) {
  if (family.empty()) throw std::invalid_argument("helly_point: empty family");
  Box common{family[0].x_lo(), family[0].x_hi(), family[0].y_lo(), family[0].y_hi()};
  for (const Rect& r : family.subspan(1)) {
    common.x_lo = max(common.x_lo, r.x_lo());
    common.x_hi = min(common.x_hi, r.x_hi());
    common.y_lo = max(common.y_lo, r.y_lo());
    common.y_hi = min(common.y_hi, r.y_hi());
    if (common.x_hi < common.x_lo || common.y_hi < common.y_lo) return std::nullopt;
  }
  return Point{common.x_lo, common.y_lo};
}

namespace {

// Smallest (a, b) by id with a < b and the two rectangles disjoint.
std::pair<RectId, RectId> first_disjoint_pair(std::vector<Rect> family) {
  std::sort(family.begin(), family.end(), [](const Rect& p, const Rect& q) { return p.id() < q.id(); });
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!intersects(family[i], family[j])) return {family[i].id(), family[j].id()};
    }
  }
  throw ConstructionError("family without a common point has no disjoint pair");
}

}  // namespace

PiercingResult construct_transversal(const Instance& inst) {
  if (inst.empty()) throw std::invalid_argument("construct_transversal: empty instance");
  std::vector<Rect> remaining(inst.rects().begin(), inst.rects().end());
  PiercingResult result;

  for (std::size_t step = 0; !remaining.empty(); ++step) {
    if (auto common = helly_point(remaining)) {
      TraceStep trace{step, StepKind::kHelly, std::nullopt, 1, {}};
      for (const Rect& r : remaining) trace.removed.push_back(r.id());
      result.transversal.push_back(*common);
      result.certificate.push_back(select_min_rect(remaining).id());
      result.trace.push_back(std::move(trace));
      break;
    }

    const Rect pivot = select_min_rect(remaining);
    const std::vector<Rect> family = remaining;
    const std::vector<Point> grid = build_p_grid(pivot);
    result.k_per_side = std::max(result.k_per_side, grid.size() / 2 - 1);

    TraceStep trace{step, StepKind::kEps, pivot.id(), grid.size(), {}};
    std::vector<Rect> survivors;
    for (const Rect& r : remaining) {
      const bool pierced = std::any_of(grid.begin(), grid.end(),
                                       [&](const Point& p) { return contains_point(r, p); });
      if (pierced != intersects(r, pivot)) {
        throw ConstructionError("step " + std::to_string(step) + ": rect " +
                                std::to_string(r.id()) +
                                (pierced ? " pierced by the grid but disjoint from pivot "
                                         : " meets pivot but misses the grid of pivot ") +
                                std::to_string(pivot.id()));
      }
      if (pierced) {
        trace.removed.push_back(r.id());
      } else {
        survivors.push_back(r);
      }
    }
    result.transversal.insert(result.transversal.end(), grid.begin(), grid.end());
    result.trace.push_back(std::move(trace));
    remaining = std::move(survivors);
    if (remaining.empty()) {
      const auto [a, b] = first_disjoint_pair(family);
      result.certificate.push_back(a);
      result.certificate.push_back(b);
    } else {
      result.certificate.push_back(pivot.id());
    }
  }
  return result;
}

std::string serialize_piercing(const PiercingResult& res) {
  json points = json::array();
  for (const Point& p : res.transversal) points.push_back(point_to_json(p));
  json trace = json::array();
  for (const TraceStep& t : res.trace) {
    trace.push_back({{"step", t.step},
                     {"kind", t.kind == StepKind::kEps ? "eps" : "helly"},
                     {"rect", t.rect ? json(*t.rect) : json(nullptr)},
                     {"added", t.added},
                     {"removed", t.removed}});
  }
  json doc = {{"points", std::move(points)},
              {"certificate", res.certificate},
              {"k_per_side", res.k_per_side},
              {"trace", std::move(trace)}};
  return doc.dump(2) + "\n";
}

namespace {

std::vector<RectId> id_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + ": expected an array of ids");
  std::vector<RectId> ids;
  for (const json& v : j) {
    if (!v.is_number_unsigned()) throw ParseError(what + ": ids must be non-negative integers");
    ids.push_back(v.get<RectId>());
  }
  return ids;
}

const json& field(const json& obj, const char* name, const std::string& where) {
  if (!obj.is_object() || !obj.contains(name)) {
    throw ParseError(where + ": missing field \"" + name + "\"");
  }
  return obj[name];
}

}  // namespace

PiercingResult parse_piercing(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  PiercingResult res;
  const json& points = field(doc, "points", "piercing result");
  if (!points.is_array()) throw ParseError("piercing result: \"points\" must be an array");
  for (const json& p : points) {
    try {
      res.transversal.push_back(point_from_json(p));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("piercing result point: ") + e.what());
    }
  }
  res.certificate = id_list(field(doc, "certificate", "piercing result"), "certificate");
  const json& k = field(doc, "k_per_side", "piercing result");
  if (!k.is_number_unsigned() || k.get<std::size_t>() == 0) {
    throw ParseError("piercing result: \"k_per_side\" must be a positive integer");
  }
  res.k_per_side = k.get<std::size_t>();
  const json& trace = field(doc, "trace", "piercing result");
  if (!trace.is_array()) throw ParseError("piercing result: \"trace\" must be an array");
  for (const json& jt : trace) {
    const std::string where = "trace entry";
    TraceStep t;
    const json& step = field(jt, "step", where);
    const json& added = field(jt, "added", where);
    if (!step.is_number_unsigned() || !added.is_number_unsigned()) {
      throw ParseError(where + ": \"step\" and \"added\" must be non-negative integers");
    }
    t.step = step.get<std::size_t>();
    t.added = added.get<std::size_t>();
    const json& kind = field(jt, "kind", where);
    if (kind == "eps") {
      t.kind = StepKind::kEps;
    } else if (kind == "helly") {
      t.kind = StepKind::kHelly;
    } else {
      throw ParseError(where + ": \"kind\" must be \"eps\" or \"helly\"");
    }
    const json& rect = field(jt, "rect", where);
    if (rect.is_number_unsigned()) {
      t.rect = rect.get<RectId>();
    } else if (!rect.is_null()) {
      throw ParseError(where + ": \"rect\" must be an id or null");
    }
    t.removed = id_list(field(jt, "removed", where), "trace removed");
    res.trace.push_back(std::move(t));
  }
  return res;
}

}  // namespace rectpierce
