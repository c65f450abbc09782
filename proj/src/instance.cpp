#include "rectpierce/instance.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "rectpierce/json_io.hpp"

namespace rectpierce {

using nlohmann::json;

namespace {

// Exact value of a JSON float's shortest round-trip text, e.g. "2.2" -> 11/5.
Scalar decimal_to_scalar(const std::string& text) {
  const auto e = text.find_first_of("eE");
  std::string mantissa = text.substr(0, e);
  long exponent = e == std::string::npos ? 0 : std::stol(text.substr(e + 1));
  if (const auto dot = mantissa.find('.'); dot != std::string::npos) {
    exponent -= static_cast<long>(mantissa.size() - dot - 1);
    mantissa.erase(dot, 1);
  }
  mpq_class value{mpz_class(mantissa)};
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  if (exponent >= 0) {
    value *= scale;
  } else {
    value /= scale;
  }
  value.canonicalize();
  return Scalar(value);
}

}  // namespace

Instance::Instance(std::vector<Rect> rects, std::optional<Scalar> r_declared)
    : rects_(std::move(rects)), r_declared_(std::move(r_declared)) {
  for (std::size_t i = 0; i < rects_.size(); ++i) {
    if (rects_[i].id() != i) {
      throw GeometryError("rect " + std::to_string(rects_[i].id()) + ": expected id " +
                          std::to_string(i) + " (ids must be 0..n-1 in order)");
    }
  }
  if (r_declared_) {
    if (*r_declared_ < Scalar(1)) throw GeometryError("declared ratio bound below 1");
    for (const Rect& r : rects_) {
      if (aspect_ratio(r) > *r_declared_) {
        throw GeometryError("rect " + std::to_string(r.id()) + ": aspect ratio " +
                            aspect_ratio(r).to_string() + " exceeds declared bound " +
                            r_declared_->to_string());
      }
    }
  }
}

Scalar family_ratio(const Instance& inst) {
  if (inst.empty()) throw std::invalid_argument("family_ratio: empty instance");
  Scalar best = aspect_ratio(inst[0]);
  for (const Rect& r : inst.rects()) best = max(best, aspect_ratio(r));
  return best;
}

namespace {

std::pair<Scalar, Scalar> parse_interval(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) {
    throw ParseError(where + ": expected a [lo, hi] pair");
  }
  try {
    return {scalar_from_json(j[0]), scalar_from_json(j[1])};
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
}

}  // namespace

Instance parse_instance(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rects") || !doc["rects"].is_array()) {
    throw ParseError("instance must be an object with a \"rects\" array");
  }

  std::optional<Scalar> r_declared;
  if (doc.contains("r") && !doc["r"].is_null()) {
    const json& r = doc["r"];
    try {
      if (r.is_number_float()) {
        r_declared = decimal_to_scalar(r.dump());
      } else {
        r_declared = scalar_from_json(r);
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("field \"r\": ") + e.what());
    }
  }

  std::vector<Rect> rects;
  std::set<std::int64_t> seen;
  std::size_t position = 0;
  for (const json& jr : doc["rects"]) {
    std::string where = "rects[" + std::to_string(position) + "]";
    if (!jr.is_object() || !jr.contains("id") || !jr["id"].is_number_integer()) {
      throw ParseError(where + ": missing integer \"id\"");
    }
    auto id = jr["id"].get<std::int64_t>();
    where = "rect " + std::to_string(id);
    if (id < 0) throw ParseError(where + ": negative id");
    if (!seen.insert(id).second) throw ParseError(where + ": duplicate id");
    if (static_cast<std::size_t>(id) != position) {
      throw ParseError(where + ": rects must appear in id order 0..n-1");
    }
    if (!jr.contains("x") || !jr.contains("y")) {
      throw ParseError(where + ": missing \"x\" or \"y\"");
    }
    auto [x_lo, x_hi] = parse_interval(jr["x"], where + " x");
    auto [y_lo, y_hi] = parse_interval(jr["y"], where + " y");
    try {
      rects.emplace_back(static_cast<RectId>(id), x_lo, x_hi, y_lo, y_hi);
    } catch (const GeometryError& e) {
      throw ParseError(e.what());
    }
    ++position;
  }
  try {
    return Instance(std::move(rects), std::move(r_declared));
  } catch (const GeometryError& e) {
    throw ParseError(e.what());
  }
}

std::string serialize_instance(const Instance& inst) {
  json doc = json::object();
  if (inst.r_declared()) doc["r"] = scalar_to_json(*inst.r_declared());
  json rects = json::array();
  for (const Rect& r : inst.rects()) {
    rects.push_back({{"id", r.id()},
                     {"x", {scalar_to_json(r.x_lo()), scalar_to_json(r.x_hi())}},
                     {"y", {scalar_to_json(r.y_lo()), scalar_to_json(r.y_hi())}}});
  }
  doc["rects"] = std::move(rects);
  return doc.dump(2) + "\n";
}

namespace {

// Uniform integer in [0, range) by rejection on raw 64-bit draws.
std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t range) {
  std::uint64_t threshold = (0 - range) % range;
  for (;;) {
    std::uint64_t draw = gen();
    if (draw >= threshold) return draw % range;
  }
}

std::int64_t uniform_in(std::mt19937_64& gen, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  uniform_below(gen, static_cast<std::uint64_t>(hi - lo) + 1));
}

}  // namespace

Instance generate_random(const GeneratorConfig& cfg) {
  if (cfg.n == 0) throw std::invalid_argument("generator: n must be positive");
  if (cfg.resolution <= 0) throw std::invalid_argument("generator: resolution must be positive");
  if (cfg.r_max < Scalar(1)) throw std::invalid_argument("generator: r_max must be >= 1");
  if (!(Scalar(0) < cfg.side_min) || cfg.side_max < cfg.side_min) {
    throw std::invalid_argument("generator: need 0 < side_min <= side_max");
  }
  if (cfg.window < cfg.side_max) {
    throw std::invalid_argument("generator: side_max exceeds window");
  }

  const Scalar q(cfg.resolution);
  const std::int64_t window_units = (cfg.window * q).floor();
  const std::int64_t s_lo = (cfg.side_min * q).ceil();
  const std::int64_t s_hi = (cfg.side_max * q).floor();
  const std::int64_t t_hi = (cfg.r_max * q).floor();
  if (s_lo > s_hi) {
    throw std::invalid_argument("generator: no grid value in [side_min, side_max]");
  }

  std::mt19937_64 gen(cfg.seed);
  std::vector<Rect> rects;
  rects.reserve(cfg.n);
  for (std::size_t i = 0; i < cfg.n; ++i) {
    const std::int64_t s = uniform_in(gen, s_lo, s_hi);
    const std::int64_t t = uniform_in(gen, cfg.resolution, t_hi);
    const std::int64_t longer =
        std::min((Scalar(s) * Scalar(t) / q).floor(), window_units);
    const bool tall = uniform_below(gen, 2) == 1;
    const std::int64_t w = tall ? s : longer;
    const std::int64_t h = tall ? longer : s;
    const std::int64_t x0 = uniform_in(gen, 0, window_units - w);
    const std::int64_t y0 = uniform_in(gen, 0, window_units - h);
    rects.emplace_back(i, Scalar(x0, cfg.resolution), Scalar(x0 + w, cfg.resolution),
                       Scalar(y0, cfg.resolution), Scalar(y0 + h, cfg.resolution));
  }
  return Instance(std::move(rects), cfg.r_max);
}

std::optional<StructuredKind> parse_structured_kind(std::string_view name) {
  if (name == "disjoint_grid") return StructuredKind::kDisjointGrid;
  if (name == "common_point_clique") return StructuredKind::kCommonPointClique;
  if (name == "chain") return StructuredKind::kChain;
  return std::nullopt;
}

Instance generate_structured(StructuredKind kind, std::size_t n) {
  if (n == 0) throw std::invalid_argument("generate_structured: n must be positive");
  std::vector<Rect> rects;
  rects.reserve(n);
  const auto cols = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  for (std::size_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::int64_t>(i);
    switch (kind) {
      case StructuredKind::kDisjointGrid: {
        const Scalar x(2 * (k % cols));
        const Scalar y(2 * (k / cols));
        rects.emplace_back(i, x, x + 1, y, y + 1);
        break;
      }
      case StructuredKind::kCommonPointClique: {
        // Every square [d, d+1]^2 with 0 <= d < 1 contains (1, 1).
        const Scalar d(k, static_cast<std::int64_t>(n));
        rects.emplace_back(i, d, d + 1, d, d + 1);
        break;
      }
      case StructuredKind::kChain: {
        // Side 3, stride 2: neighbours overlap by 1, next-but-one are 1 apart.
        const Scalar x(2 * k);
        rects.emplace_back(i, x, x + 3, Scalar(0), Scalar(3));
        break;
      }
    }
  }
  return Instance(std::move(rects));
}

}  // namespace rectpierce
